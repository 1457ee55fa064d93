#pragma once

// Dense exact linear algebra over the prime field GF(p).

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "csext/combinatorics.hpp"

namespace csext {

using FpVector = std::vector<std::uint8_t>;

/// Row-major dense matrix with entries reduced mod p.
class FpMatrix {
 public:
  FpMatrix(Prime p, std::size_t rows, std::size_t cols);
  /// Entries are reduced mod p (negative values allowed).
  FpMatrix(Prime p, std::size_t rows, std::size_t cols, std::span<const long long> values);
  FpMatrix(Prime p, std::initializer_list<std::initializer_list<long long>> rows);

  static FpMatrix identity(Prime p, std::size_t n);
  static FpMatrix from_columns(Prime p, std::size_t rows, std::span<const FpVector> columns);

  Prime prime() const noexcept { return p_; }
  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  bool empty() const noexcept { return rows_ == 0 || cols_ == 0; }

  std::uint8_t operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }
  std::uint8_t& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  void set(std::size_t r, std::size_t c, long long value);

  std::span<const std::uint8_t> row(std::size_t r) const { return {data_.data() + r * cols_, cols_}; }
  std::span<std::uint8_t> row(std::size_t r) { return {data_.data() + r * cols_, cols_}; }
  FpVector column(std::size_t c) const;
  const std::vector<std::uint8_t>& data() const noexcept { return data_; }

  FpMatrix transpose() const;
  /// Multiplies every entry by c in place.
  FpMatrix& scale(std::uint8_t c);
  bool is_zero() const noexcept;

  friend bool operator==(const FpMatrix& a, const FpMatrix& b) noexcept {
    return a.p_.value() == b.p_.value() && a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

 private:
  Prime p_;
  std::size_t rows_;
  std::size_t cols_;
  std::vector<std::uint8_t> data_;
};

FpMatrix operator*(const FpMatrix& a, const FpMatrix& b);
FpVector operator*(const FpMatrix& a, const FpVector& x);
FpMatrix operator+(const FpMatrix& a, const FpMatrix& b);
FpMatrix operator-(const FpMatrix& a, const FpMatrix& b);
FpMatrix hstack(const FpMatrix& a, const FpMatrix& b);
FpMatrix vstack(const FpMatrix& a, const FpMatrix& b);

std::uint8_t inverse_mod(std::uint8_t a, Prime p);

/// Reduced row echelon form; pivots are the first nonzero in column order.
struct Echelon {
  FpMatrix reduced;
  std::vector<std::size_t> pivot_cols;  // one per nonzero row of `reduced`
};

Echelon rref(FpMatrix a);
std::size_t rank(const FpMatrix& a);
/// Basis of {x : A x = 0} as columns (cols x (cols - rank)).
FpMatrix nullspace(const FpMatrix& a);
/// Basis of the column space as columns, taken from A's own pivot columns.
FpMatrix column_basis(const FpMatrix& a);

/// Solves B c = v for a fixed B with linearly independent columns.
class SpanSolver {
 public:
  /// Throws std::invalid_argument if the columns of B are dependent.
  explicit SpanSolver(FpMatrix basis);

  std::optional<FpVector> solve(const FpVector& v) const;
  /// Solves column by column; nullopt if any column lies outside the span.
  std::optional<FpMatrix> solve(const FpMatrix& v) const;

  const FpMatrix& basis() const noexcept { return basis_; }

 private:
  FpMatrix basis_;
  std::vector<std::size_t> pivot_rows_;  // rows of B forming an invertible square block
  FpMatrix block_inverse_;
};

std::optional<FpVector> solve_in_span(const FpMatrix& basis, const FpVector& v);

/// Inverse of a square matrix, or nullopt if singular.
std::optional<FpMatrix> inverse(const FpMatrix& a);

/// Incrementally maintained echelon basis of a subspace of GF(p)^n.
class SubspaceBuilder {
 public:
  SubspaceBuilder(Prime p, std::size_t ambient);

  /// Adds v if it is outside the current span; returns whether it was added.
  bool add(const FpVector& v);
  bool contains(const FpVector& v) const;
  std::size_t dim() const noexcept { return pivots_.size(); }
  /// Echelon basis as the rows of a dim x ambient matrix.
  FpMatrix basis() const;

 private:
  FpVector reduce(FpVector v) const;

  Prime p_;
  std::size_t ambient_;
  std::vector<FpVector> rows_;  // echelon rows, leading entry 1
  std::vector<std::size_t> pivots_;
};

}  // namespace csext
