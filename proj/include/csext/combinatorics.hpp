#pragma once

// Partition and weight combinatorics: orders, conjugation, regularity,
// the complete-splittability indices chi and psi, big partitions/weights
// and the node-moving constructions hat (weights) and tilde (partitions).

#include <compare>
#include <cstddef>
#include <optional>
#include <ostream>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace csext {

/// A prime characteristic. Residues are stored in bytes, so p < 256.
class Prime {
 public:
  explicit Prime(int value);
  int value() const noexcept { return value_; }
  operator int() const noexcept { return value_; }

  friend bool operator==(Prime, Prime) = default;

 private:
  int value_;
};

bool is_prime(int n) noexcept;

/// Hypotheses whose failure puts a query outside the range of the closed forms.
enum class ScopeReason {
  NotPRestricted,
  NotCompletelySplittable,
  OrderHypothesisFails,
  NotPRegular,
  CharTwo,
  NonDominant,
  NotBig,
};

const char* to_string(ScopeReason reason) noexcept;

/// Thrown by combinatorial constructions when their input lies outside the
/// class they are defined on (e.g. hat of a weight that is not big).
class ScopeViolation : public std::domain_error {
 public:
  ScopeViolation(ScopeReason reason, const std::string& what)
      : std::domain_error(what), reason_(reason) {}
  ScopeReason reason() const noexcept { return reason_; }

 private:
  ScopeReason reason_;
};

/// Weakly decreasing list of positive integers; trailing zeros are implicit.
class Partition {
 public:
  Partition() = default;
  /// Accepts trailing zeros and strips them; rejects negative or increasing input.
  explicit Partition(std::vector<int> parts);
  Partition(std::initializer_list<int> parts) : Partition(std::vector<int>(parts)) {}

  const std::vector<int>& parts() const noexcept { return parts_; }
  int height() const noexcept { return static_cast<int>(parts_.size()); }
  int degree() const noexcept;
  bool empty() const noexcept { return parts_.empty(); }
  /// 1-based; zero past the height.
  int part(int i) const noexcept;

  std::string to_string() const;

  friend bool operator==(const Partition&, const Partition&) = default;
  friend auto operator<=>(const Partition&, const Partition&) = default;

 private:
  std::vector<int> parts_;
};

/// Element of X(n): an integer n-tuple.
class Weight {
 public:
  Weight() = default;
  explicit Weight(std::vector<int> entries) : entries_(std::move(entries)) {}
  Weight(std::initializer_list<int> entries) : entries_(entries) {}

  const std::vector<int>& entries() const noexcept { return entries_; }
  int rank() const noexcept { return static_cast<int>(entries_.size()); }
  /// 1-based.
  int entry(int i) const { return entries_.at(static_cast<std::size_t>(i - 1)); }
  long long sum() const noexcept;
  bool is_dominant() const noexcept;
  Weight shifted(int c) const;

  std::string to_string() const;

  friend bool operator==(const Weight&, const Weight&) = default;
  friend auto operator<=>(const Weight&, const Weight&) = default;

 private:
  std::vector<int> entries_;
};

std::ostream& operator<<(std::ostream& os, const Partition& lambda);
std::ostream& operator<<(std::ostream& os, const Weight& lambda);

struct RemovableRows {
  std::vector<int> rows;  // 1-based, increasing
  std::optional<int> smallest;
  std::optional<int> largest;
};

// --- partitions ---------------------------------------------------------

Partition conjugate(const Partition& lambda);
/// Prefix-sum test applied literally (degrees may differ).
bool dominates(const Partition& lambda, const Partition& mu);
bool is_p_regular(const Partition& lambda, Prime p);
/// lambda_1 - lambda_h + h, and 0 for the zero partition.
int chi(const Partition& lambda);
bool is_cs_partition(const Partition& lambda, Prime p);
/// Beta-set test: some beta >= p with beta - p not in the set.
bool has_rim_p_hook(const Partition& lambda, Prime p);
bool is_big_partition(const Partition& lambda, Prime p);
/// Realized as conjugate(hat(pad(conjugate(lambda), degree))).
Partition tilde(const Partition& lambda, Prime p);

// --- weights ------------------------------------------------------------

/// mu <= lambda in the root order: equal sums and nonnegative prefix sums of lambda - mu.
bool weight_leq(const Weight& mu, const Weight& lambda);
bool weight_less(const Weight& mu, const Weight& lambda);
bool is_p_restricted(const Weight& lambda, Prime p);
RemovableRows removable_rows(const Weight& lambda);
int psi(const Weight& lambda);
bool is_cs_weight(const Weight& lambda, Prime p);
bool is_big_weight(const Weight& lambda, Prime p);
Weight hat(const Weight& lambda, Prime p);

/// Subtracts lambda_n from both weights.
std::pair<Weight, Weight> normalize_pair(const Weight& lambda, const Weight& mu);

// --- conversions ----------------------------------------------------------

/// (a)_m: truncate to m entries or pad with zeros. Throws if a nonzero entry
/// would be dropped.
std::vector<int> pad(std::span<const int> a, std::size_t m);
Weight pad(const Partition& lambda, int n);
/// Nonnegative dominant weight viewed as a partition.
Partition as_partition(const Weight& lambda);

// --- enumeration ----------------------------------------------------------

/// Reverse-lexicographic: (m), (m-1,1), ...
std::vector<Partition> enum_partitions(int m);
/// Lambda^+(n, m) in lexicographic order.
std::vector<Weight> enum_dominant_weights(int n, int m);

}  // namespace csext
