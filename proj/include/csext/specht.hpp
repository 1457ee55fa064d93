#pragma once

// Brute-force Specht modules over GF(p).
//
// S^lambda is realized inside the tabloid permutation module M^lambda,
// spanned by the standard polytabloids. The symmetric group acts through the
// adjacent transpositions s_1..s_{m-1}; the invariant form on M^lambda
// (tabloids orthonormal) restricts to the Gram matrix of S^lambda, whose
// kernel is rad S^lambda and whose image is D^lambda.

#include <cstdint>
#include <functional>
#include <map>
#include <memory>
#include <mutex>
#include <stdexcept>
#include <unordered_map>
#include <vector>

#include "csext/combinatorics.hpp"
#include "csext/fp_matrix.hpp"

namespace csext {

inline constexpr int kDefaultDegreeCap = 7;
inline constexpr int kMaxDegreeCap = 8;

class CapExceeded : public std::length_error {
 public:
  using std::length_error::length_error;
};

/// Rows of a Young tableau; entries are 1..m.
struct Tableau {
  Partition shape;
  std::vector<std::vector<int>> rows;

  int degree() const noexcept { return shape.degree(); }
  bool is_standard() const;
  /// Row index (0-based) of each entry, indexed by entry - 1.
  std::vector<std::uint8_t> row_of() const;
  /// Tableau with entries i and i+1 exchanged.
  Tableau swapped(int i) const;

  friend bool operator==(const Tableau&, const Tableau&) = default;
};

/// The tabloids of a shape, in lexicographic order of their row_of vectors.
class TabloidIndex {
 public:
  explicit TabloidIndex(const Partition& shape);

  const Partition& shape() const noexcept { return shape_; }
  std::size_t size() const noexcept { return tabloids_.size(); }
  const std::vector<std::uint8_t>& row_of(std::size_t k) const { return tabloids_[k]; }
  std::size_t find(const std::vector<std::uint8_t>& row_of) const;
  /// Image of each tabloid under the transposition (i, i+1).
  std::vector<std::size_t> transposition(int i) const;

 private:
  static std::uint64_t key(const std::vector<std::uint8_t>& row_of);

  Partition shape_;
  std::vector<std::vector<std::uint8_t>> tabloids_;
  std::unordered_map<std::uint64_t, std::size_t> lookup_;
};

/// A Sigma_m-module given by the matrices of s_1..s_{m-1}.
struct SymRep {
  Prime p{2};
  int degree = 0;
  std::size_t dim = 0;
  std::vector<FpMatrix> gens;

  /// s_i^2 = 1, braid and far-commutation relations, checked exactly.
  bool satisfies_relations() const;

  friend bool operator==(const SymRep&, const SymRep&) = default;
};

struct SpechtData {
  Partition shape;
  Prime p;
  std::vector<Tableau> std_tableaux;
  FpMatrix basis;  // tabloids x dim, standard polytabloids as columns
  FpMatrix gram;
  SymRep rep;

  friend bool operator==(const SpechtData&, const SpechtData&) = default;
};

struct HomSpace {
  std::size_t dim = 0;
  std::vector<FpMatrix> basis;  // each W.dim x V.dim
};

void check_degree_cap(int degree, int cap);

/// Number of standard tableaux by the hook-length formula.
std::uint64_t hook_length_count(const Partition& lambda);

std::vector<Tableau> standard_tableaux(const Partition& lambda, int cap = kDefaultDegreeCap);
TabloidIndex tabloid_basis(const Partition& lambda, int cap = kDefaultDegreeCap);

/// e_t = sum over the column group C_t of sgn(sigma) {sigma t}.
FpVector polytabloid(const Tableau& t, const TabloidIndex& tabloids, Prime p);
FpVector polytabloid(const Tableau& t, Prime p, int cap = kDefaultDegreeCap);

/// Permutation matrix of s_i (1 <= i < m) on M^lambda.
FpMatrix gen_action_on_tabloids(const Partition& lambda, int i, Prime p, int cap = kDefaultDegreeCap);

SpechtData specht_data(const Partition& lambda, Prime p, int cap = kDefaultDegreeCap);

std::size_t rad_dim(const SpechtData& s);
std::size_t rad_dim(const Partition& lambda, Prime p, int cap = kDefaultDegreeCap);
/// Basis of rad S^lambda in polytabloid coordinates (dim x rad_dim).
FpMatrix radical_basis(const SpechtData& s);
SymRep rad_subrep(const SpechtData& s);
SymRep rad_subrep(const Partition& lambda, Prime p, int cap = kDefaultDegreeCap);

/// D^mu = S^mu / rad S^mu. Throws std::invalid_argument unless mu is p-regular.
SymRep simple_head(const SpechtData& s);
SymRep simple_head(const Partition& mu, Prime p, int cap = kDefaultDegreeCap);

/// Hom_{Sigma_m}(V, W): all X with X A_i = B_i X.
HomSpace hom_space(const SymRep& v, const SymRep& w);

std::size_t hom_rad_to_simple(const Partition& lambda, const Partition& mu, Prime p, int cap = kDefaultDegreeCap);

/// Whether some homomorphism S^nu -> S^lambda has image exactly rad S^lambda.
/// False when the radical is zero.
bool image_equals_rad(const SpechtData& source, const SpechtData& target);
bool image_equals_rad(const Partition& nu, const Partition& lambda, Prime p, int cap = kDefaultDegreeCap);

/// Memoizes SpechtData per (shape, p). Safe for concurrent use; each entry
/// is computed once.
class SpechtCache {
 public:
  using Loader = std::function<std::shared_ptr<const SpechtData>(const Partition&, Prime)>;

  explicit SpechtCache(int cap = kDefaultDegreeCap);

  std::shared_ptr<const SpechtData> get(const Partition& lambda, Prime p);
  int cap() const noexcept { return cap_; }
  std::size_t size() const;

  /// Hook used by the on-disk store: called instead of specht_data.
  void set_loader(Loader loader) { loader_ = std::move(loader); }

 private:
  struct Entry;
  int cap_;
  Loader loader_;
  mutable std::mutex mu_;
  std::map<std::pair<int, std::vector<int>>, std::shared_ptr<Entry>> entries_;
};

}  // namespace csext
