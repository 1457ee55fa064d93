#pragma once

// Test-only reference computations. Each one reaches its answer by a route
// that shares no code with the library path it checks.

#include <algorithm>
#include <cstdint>
#include <map>
#include <numeric>
#include <set>
#include <vector>

#include "csext/combinatorics.hpp"
#include "csext/fp_matrix.hpp"
#include "csext/specht.hpp"

namespace oracle {

using i64 = long long;

/// Rank of an integer matrix mod p by plain Gaussian elimination on int64.
inline std::size_t rank_mod(std::vector<std::vector<i64>> a, int p) {
  std::size_t rank = 0;
  const std::size_t rows = a.size(), cols = rows ? a[0].size() : 0;
  for (auto& row : a)
    for (auto& x : row) x = ((x % p) + p) % p;
  for (std::size_t c = 0; c < cols && rank < rows; ++c) {
    std::size_t piv = rank;
    while (piv < rows && a[piv][c] == 0) ++piv;
    if (piv == rows) continue;
    std::swap(a[piv], a[rank]);
    i64 inv = 1;
    while (a[rank][c] * inv % p != 1) ++inv;
    for (auto& x : a[rank]) x = x * inv % p;
    for (std::size_t r = 0; r < rows; ++r) {
      if (r == rank || a[r][c] == 0) continue;
      const i64 f = a[r][c];
      for (std::size_t k = 0; k < cols; ++k) a[r][k] = ((a[r][k] - f * a[rank][k]) % p + p) % p;
    }
    ++rank;
  }
  return rank;
}

/// mu <= lambda by breadth-first search over sums of positive roots alpha_{i,j}.
inline bool weight_leq_bfs(const csext::Weight& mu, const csext::Weight& lambda, int box) {
  const int n = lambda.rank();
  std::vector<int> target(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) target[static_cast<std::size_t>(i)] = lambda.entries()[static_cast<std::size_t>(i)] - mu.entries()[static_cast<std::size_t>(i)];
  std::set<std::vector<int>> seen{std::vector<int>(static_cast<std::size_t>(n), 0)};
  std::vector<std::vector<int>> frontier{std::vector<int>(static_cast<std::size_t>(n), 0)};
  while (!frontier.empty()) {
    std::vector<std::vector<int>> next;
    for (const auto& v : frontier) {
      if (v == target) return true;
      for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
          auto w = v;
          ++w[static_cast<std::size_t>(i)];
          --w[static_cast<std::size_t>(j)];
          if (std::any_of(w.begin(), w.end(), [&](int x) { return x > box || x < -box; })) continue;
          if (seen.insert(w).second) next.push_back(std::move(w));
        }
    }
    frontier = std::move(next);
  }
  return false;
}

/// Standard tableaux counted by repeatedly removing the cell holding the
/// largest entry (a corner).
inline std::uint64_t count_standard(std::vector<int> shape) {
  static std::map<std::vector<int>, std::uint64_t> memo;
  while (!shape.empty() && shape.back() == 0) shape.pop_back();
  if (shape.empty()) return 1;
  if (auto it = memo.find(shape); it != memo.end()) return it->second;
  std::uint64_t total = 0;
  for (std::size_t r = 0; r < shape.size(); ++r) {
    const bool corner = r + 1 == shape.size() || shape[r + 1] < shape[r];
    if (!corner) continue;
    auto smaller = shape;
    --smaller[r];
    total += count_standard(smaller);
  }
  return memo[shape] = total;
}

/// Integer Gram matrix of the standard polytabloids, built by filtering all
/// of Sigma_m for column-preserving permutations and hashing tabloids as
/// sorted row sets.
inline std::vector<std::vector<i64>> integer_gram(const csext::Partition& shape) {
  const int m = shape.degree();
  std::vector<std::vector<std::vector<int>>> tableaux;
  {
    // Standard tableaux: all fillings from permutations, kept when standard.
    std::vector<int> perm(static_cast<std::size_t>(m));
    std::iota(perm.begin(), perm.end(), 1);
    do {
      std::vector<std::vector<int>> rows;
      std::size_t pos = 0;
      for (int part : shape.parts()) {
        rows.emplace_back(perm.begin() + static_cast<std::ptrdiff_t>(pos), perm.begin() + static_cast<std::ptrdiff_t>(pos + static_cast<std::size_t>(part)));
        pos += static_cast<std::size_t>(part);
      }
      bool standard = true;
      for (std::size_t r = 0; r < rows.size() && standard; ++r)
        for (std::size_t c = 0; c < rows[r].size() && standard; ++c) {
          if (c > 0 && rows[r][c] < rows[r][c - 1]) standard = false;
          if (r > 0 && rows[r][c] < rows[r - 1][c]) standard = false;
        }
      if (standard) tableaux.push_back(rows);
    } while (std::next_permutation(perm.begin(), perm.end()));
  }

  using Tabloid = std::vector<std::set<int>>;
  std::vector<std::map<Tabloid, i64>> polys;
  std::vector<int> sigma(static_cast<std::size_t>(m + 1));
  for (const auto& t : tableaux) {
    std::vector<int> column_of(static_cast<std::size_t>(m + 1));
    for (const auto& row : t)
      for (std::size_t c = 0; c < row.size(); ++c) column_of[static_cast<std::size_t>(row[c])] = static_cast<int>(c);
    std::map<Tabloid, i64> poly;
    std::vector<int> perm(static_cast<std::size_t>(m));
    std::iota(perm.begin(), perm.end(), 1);
    do {
      bool keeps_columns = true;
      for (int x = 1; x <= m && keeps_columns; ++x)
        keeps_columns = column_of[static_cast<std::size_t>(x)] == column_of[static_cast<std::size_t>(perm[static_cast<std::size_t>(x - 1)])];
      if (!keeps_columns) continue;
      int inversions = 0;
      for (int a = 0; a < m; ++a)
        for (int b = a + 1; b < m; ++b)
          if (perm[static_cast<std::size_t>(a)] > perm[static_cast<std::size_t>(b)]) ++inversions;
      Tabloid tab;
      for (const auto& row : t) {
        std::set<int> moved;
        for (int x : row) moved.insert(perm[static_cast<std::size_t>(x - 1)]);
        tab.push_back(moved);
      }
      poly[tab] += inversions % 2 ? -1 : 1;
    } while (std::next_permutation(perm.begin(), perm.end()));
    polys.push_back(poly);
  }

  std::vector<std::vector<i64>> gram(polys.size(), std::vector<i64>(polys.size(), 0));
  for (std::size_t a = 0; a < polys.size(); ++a)
    for (std::size_t b = 0; b < polys.size(); ++b)
      for (const auto& [tab, coeff] : polys[a])
        if (auto it = polys[b].find(tab); it != polys[b].end()) gram[a][b] += coeff * it->second;
  return gram;
}

/// Hom_{Sigma_m}(V, W) dimension from the full Kronecker system
/// (A_i^T (x) I - I (x) B_i) vec(X) = 0.
inline std::size_t hom_dim_kronecker(const csext::SymRep& v, const csext::SymRep& w) {
  const std::size_t dv = v.dim, dw = w.dim;
  const int p = v.p.value();
  if (dv == 0 || dw == 0) return 0;
  std::vector<std::vector<i64>> eqs;
  for (std::size_t g = 0; g < v.gens.size(); ++g) {
    const auto& a = v.gens[g];
    const auto& b = w.gens[g];
    for (std::size_t r = 0; r < dw; ++r)
      for (std::size_t c = 0; c < dv; ++c) {
        std::vector<i64> eq(dw * dv, 0);
        for (std::size_t k = 0; k < dv; ++k) eq[r * dv + k] += a(k, c);
        for (std::size_t k = 0; k < dw; ++k) eq[k * dv + c] -= b(r, k);
        eqs.push_back(std::move(eq));
      }
  }
  return dw * dv - (eqs.empty() ? 0 : rank_mod(eqs, p));
}

}  // namespace oracle
