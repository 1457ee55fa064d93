#include "csext/combinatorics.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <unordered_set>

namespace csext {

bool is_prime(int n) noexcept {
  if (n < 2) return false;
  for (int d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

Prime::Prime(int value) : value_(value) {
  if (!is_prime(value)) throw std::invalid_argument("not a prime: " + std::to_string(value));
  if (value > 251) throw std::invalid_argument("prime too large for byte residues: " + std::to_string(value));
}

const char* to_string(ScopeReason reason) noexcept {
  switch (reason) {
    case ScopeReason::NotPRestricted: return "NotPRestricted";
    case ScopeReason::NotCompletelySplittable: return "NotCompletelySplittable";
    case ScopeReason::OrderHypothesisFails: return "OrderHypothesisFails";
    case ScopeReason::NotPRegular: return "NotPRegular";
    case ScopeReason::CharTwo: return "CharTwo";
    case ScopeReason::NonDominant: return "NonDominant";
    case ScopeReason::NotBig: return "NotBig";
  }
  return "Unknown";
}

namespace {

template <class Seq>
std::string tuple_string(const Seq& xs) {
  std::ostringstream os;
  os << '(';
  for (std::size_t k = 0; k < xs.size(); ++k) {
    if (k) os << ',';
    os << xs[k];
  }
  os << ')';
  return os.str();
}

void require_dominant(const Weight& lambda) {
  if (!lambda.is_dominant())
    throw ScopeViolation(ScopeReason::NonDominant, "weight is not dominant: " + lambda.to_string());
}

void require_p_restricted(const Weight& lambda, Prime p) {
  if (!is_p_restricted(lambda, p))
    throw ScopeViolation(ScopeReason::NotPRestricted,
                         lambda.to_string() + " is not " + std::to_string(p.value()) + "-restricted");
}

}  // namespace

// --- Partition / Weight -----------------------------------------------------

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
  while (!parts_.empty() && parts_.back() == 0) parts_.pop_back();
  for (std::size_t k = 0; k < parts_.size(); ++k) {
    if (parts_[k] < 0) throw std::invalid_argument("negative part in partition");
    if (k > 0 && parts_[k] > parts_[k - 1])
      throw std::invalid_argument("partition parts must be weakly decreasing");
  }
}

int Partition::degree() const noexcept { return std::accumulate(parts_.begin(), parts_.end(), 0); }

int Partition::part(int i) const noexcept {
  return (i >= 1 && i <= height()) ? parts_[static_cast<std::size_t>(i - 1)] : 0;
}

std::string Partition::to_string() const { return tuple_string(parts_); }

long long Weight::sum() const noexcept {
  return std::accumulate(entries_.begin(), entries_.end(), 0LL);
}

bool Weight::is_dominant() const noexcept {
  return std::is_sorted(entries_.begin(), entries_.end(), std::greater<>());
}

Weight Weight::shifted(int c) const {
  std::vector<int> out(entries_);
  for (int& x : out) x += c;
  return Weight(std::move(out));
}

std::string Weight::to_string() const { return tuple_string(entries_); }

std::ostream& operator<<(std::ostream& os, const Partition& lambda) { return os << lambda.to_string(); }
std::ostream& operator<<(std::ostream& os, const Weight& lambda) { return os << lambda.to_string(); }

// --- partitions -----------------------------------------------------------

Partition conjugate(const Partition& lambda) {
  std::vector<int> out(static_cast<std::size_t>(lambda.part(1)), 0);
  for (int row : lambda.parts())
    for (int c = 0; c < row; ++c) ++out[static_cast<std::size_t>(c)];
  return Partition(std::move(out));
}

bool dominates(const Partition& lambda, const Partition& mu) {
  const int len = std::max(lambda.height(), mu.height());
  long long a = 0, b = 0;
  for (int i = 1; i <= len; ++i) {
    a += lambda.part(i);
    b += mu.part(i);
    if (a < b) return false;
  }
  return true;
}

bool is_p_regular(const Partition& lambda, Prime p) {
  const auto& xs = lambda.parts();
  std::size_t run = 0;
  for (std::size_t k = 0; k < xs.size(); ++k) {
    run = (k > 0 && xs[k] == xs[k - 1]) ? run + 1 : 1;
    if (run >= static_cast<std::size_t>(p.value())) return false;
  }
  return true;
}

int chi(const Partition& lambda) {
  if (lambda.empty()) return 0;
  const int h = lambda.height();
  return lambda.part(1) - lambda.part(h) + h;
}

bool is_cs_partition(const Partition& lambda, Prime p) { return chi(lambda) <= p.value(); }

bool has_rim_p_hook(const Partition& lambda, Prime p) {
  const int h = lambda.height();
  std::unordered_set<int> beta;
  for (int i = 1; i <= h; ++i) beta.insert(lambda.part(i) + h - i);
  for (int b : beta)
    if (b >= p.value() && !beta.contains(b - p.value())) return true;
  return false;
}

bool is_big_partition(const Partition& lambda, Prime p) {
  return is_cs_partition(lambda, p) && lambda.height() >= 2 && has_rim_p_hook(lambda, p);
}

Partition tilde(const Partition& lambda, Prime p) {
  if (!is_big_partition(lambda, p))
    throw ScopeViolation(ScopeReason::NotBig, lambda.to_string() + " is not a big partition");
  if (!is_p_regular(lambda, p))
    throw ScopeViolation(ScopeReason::NotPRegular, lambda.to_string() + " is not p-regular");
  const Weight w = pad(conjugate(lambda), lambda.degree());
  return conjugate(as_partition(hat(w, p)));
}

// --- weights --------------------------------------------------------------

bool weight_leq(const Weight& mu, const Weight& lambda) {
  if (mu.rank() != lambda.rank()) throw std::invalid_argument("weight_leq: rank mismatch");
  long long prefix = 0;
  for (int i = 1; i <= lambda.rank(); ++i) {
    prefix += static_cast<long long>(lambda.entry(i)) - mu.entry(i);
    if (prefix < 0) return false;
  }
  return prefix == 0;
}

bool weight_less(const Weight& mu, const Weight& lambda) { return mu != lambda && weight_leq(mu, lambda); }

bool is_p_restricted(const Weight& lambda, Prime p) {
  require_dominant(lambda);
  for (int i = 1; i < lambda.rank(); ++i)
    if (lambda.entry(i) - lambda.entry(i + 1) >= p.value()) return false;
  return true;
}

RemovableRows removable_rows(const Weight& lambda) {
  require_dominant(lambda);
  RemovableRows out;
  for (int r = 1; r < lambda.rank(); ++r)
    if (lambda.entry(r) > lambda.entry(r + 1)) out.rows.push_back(r);
  if (!out.rows.empty()) {
    out.smallest = out.rows.front();
    out.largest = out.rows.back();
  }
  return out;
}

int psi(const Weight& lambda) {
  const RemovableRows rr = removable_rows(lambda);
  if (rr.rows.empty()) return 0;
  const int i = *rr.smallest, j = *rr.largest;
  return j - i + lambda.entry(i) - lambda.entry(j + 1);
}

bool is_cs_weight(const Weight& lambda, Prime p) {
  require_p_restricted(lambda, p);
  return psi(lambda) <= p.value();
}

bool is_big_weight(const Weight& lambda, Prime p) {
  require_p_restricted(lambda, p);
  const RemovableRows rr = removable_rows(lambda);
  if (rr.rows.empty()) return false;
  const int i = *rr.smallest, j = *rr.largest, n = lambda.rank();
  const int drop = lambda.entry(i) - lambda.entry(j + 1);
  const bool splittable = j - i + drop <= p.value();
  return splittable && drop > 1 && j - 1 + drop >= p.value() && i - drop + p.value() + 1 <= n;
}

Weight hat(const Weight& lambda, Prime p) {
  if (!is_big_weight(lambda, p))
    throw ScopeViolation(ScopeReason::NotBig, lambda.to_string() + " is not a big weight");
  const RemovableRows rr = removable_rows(lambda);
  const int i = *rr.smallest, j = *rr.largest;
  const int drop = lambda.entry(i) - lambda.entry(j + 1);
  // Subtract alpha_{a,b} for a = j + drop - p - 1 + k, b = j + k.
  const int moves = i - j - drop + p.value() + 1;
  std::vector<int> out(lambda.entries());
  for (int k = 1; k <= moves; ++k) {
    const int from = j + drop - p.value() - 1 + k;
    const int to = j + k;
    --out[static_cast<std::size_t>(from - 1)];
    ++out[static_cast<std::size_t>(to - 1)];
  }
  return Weight(std::move(out));
}

std::pair<Weight, Weight> normalize_pair(const Weight& lambda, const Weight& mu) {
  if (lambda.rank() != mu.rank()) throw std::invalid_argument("normalize_pair: rank mismatch");
  if (lambda.rank() == 0) return {lambda, mu};
  require_dominant(lambda);
  const int shift = -lambda.entry(lambda.rank());
  return {lambda.shifted(shift), mu.shifted(shift)};
}

// --- conversions ------------------------------------------------------------

std::vector<int> pad(std::span<const int> a, std::size_t m) {
  for (std::size_t k = m; k < a.size(); ++k)
    if (a[k] != 0)
      throw std::invalid_argument("pad: nonzero entry at position " + std::to_string(k + 1) +
                                  " exceeds length " + std::to_string(m));
  std::vector<int> out(a.begin(), a.begin() + static_cast<std::ptrdiff_t>(std::min(m, a.size())));
  out.resize(m, 0);
  return out;
}

Weight pad(const Partition& lambda, int n) {
  if (n < 0) throw std::invalid_argument("pad: negative length");
  return Weight(pad(std::span<const int>(lambda.parts()), static_cast<std::size_t>(n)));
}

Partition as_partition(const Weight& lambda) {
  require_dominant(lambda);
  if (lambda.rank() > 0 && lambda.entry(lambda.rank()) < 0)
    throw std::invalid_argument("as_partition: negative entry in " + lambda.to_string());
  return Partition(lambda.entries());
}

// --- enumeration ----------------------------------------------------------

namespace {

void partitions_rec(int remaining, int max_part, std::vector<int>& cur, std::vector<Partition>& out) {
  if (remaining == 0) {
    out.emplace_back(cur);
    return;
  }
  for (int part = std::min(remaining, max_part); part >= 1; --part) {
    cur.push_back(part);
    partitions_rec(remaining - part, part, cur, out);
    cur.pop_back();
  }
}

}  // namespace

std::vector<Partition> enum_partitions(int m) {
  if (m < 0) throw std::invalid_argument("enum_partitions: negative degree");
  std::vector<Partition> out;
  std::vector<int> cur;
  partitions_rec(m, m, cur, out);
  return out;
}

std::vector<Weight> enum_dominant_weights(int n, int m) {
  if (n < 0 || m < 0) throw std::invalid_argument("enum_dominant_weights: negative argument");
  std::vector<Weight> out;
  for (const Partition& lambda : enum_partitions(m))
    if (lambda.height() <= n) out.push_back(pad(lambda, n));
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace csext
