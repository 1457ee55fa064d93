#include "csext/fp_matrix.hpp"

#include <algorithm>
#include <stdexcept>

#include "csext/kernels.hpp"

namespace csext {

namespace {

std::uint8_t reduce(long long value, int p) {
  long long r = value % p;
  if (r < 0) r += p;
  return static_cast<std::uint8_t>(r);
}

std::uint8_t neg(std::uint8_t a, int p) { return a == 0 ? 0 : static_cast<std::uint8_t>(p - a); }

void require_same_field(const FpMatrix& a, const FpMatrix& b) {
  if (a.prime().value() != b.prime().value()) throw std::invalid_argument("matrices over different fields");
}

}  // namespace

FpMatrix::FpMatrix(Prime p, std::size_t rows, std::size_t cols)
    : p_(p), rows_(rows), cols_(cols), data_(rows * cols, 0) {}

FpMatrix::FpMatrix(Prime p, std::size_t rows, std::size_t cols, std::span<const long long> values)
    : FpMatrix(p, rows, cols) {
  if (values.size() != rows * cols) throw std::invalid_argument("FpMatrix: value count does not match shape");
  std::transform(values.begin(), values.end(), data_.begin(), [&](long long v) { return reduce(v, p); });
}

FpMatrix::FpMatrix(Prime p, std::initializer_list<std::initializer_list<long long>> rows)
    : FpMatrix(p, rows.size(), rows.size() ? rows.begin()->size() : 0) {
  std::size_t r = 0;
  for (const auto& row : rows) {
    if (row.size() != cols_) throw std::invalid_argument("FpMatrix: ragged initializer");
    std::size_t c = 0;
    for (long long v : row) set(r, c++, v);
    ++r;
  }
}

FpMatrix FpMatrix::identity(Prime p, std::size_t n) {
  FpMatrix out(p, n, n);
  for (std::size_t k = 0; k < n; ++k) out(k, k) = 1;
  return out;
}

FpMatrix FpMatrix::from_columns(Prime p, std::size_t rows, std::span<const FpVector> columns) {
  FpMatrix out(p, rows, columns.size());
  for (std::size_t c = 0; c < columns.size(); ++c) {
    if (columns[c].size() != rows) throw std::invalid_argument("from_columns: column length mismatch");
    for (std::size_t r = 0; r < rows; ++r) out(r, c) = columns[c][r];
  }
  return out;
}

void FpMatrix::set(std::size_t r, std::size_t c, long long value) { (*this)(r, c) = reduce(value, p_); }

FpVector FpMatrix::column(std::size_t c) const {
  FpVector out(rows_);
  for (std::size_t r = 0; r < rows_; ++r) out[r] = (*this)(r, c);
  return out;
}

FpMatrix FpMatrix::transpose() const {
  FpMatrix out(p_, cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) out(c, r) = (*this)(r, c);
  return out;
}

FpMatrix& FpMatrix::scale(std::uint8_t c) {
  kernels::active().scale(data_.data(), c, data_.size(), static_cast<std::uint8_t>(p_.value()));
  return *this;
}

bool FpMatrix::is_zero() const noexcept {
  return std::all_of(data_.begin(), data_.end(), [](std::uint8_t x) { return x == 0; });
}

FpMatrix operator*(const FpMatrix& a, const FpMatrix& b) {
  require_same_field(a, b);
  if (a.cols() != b.rows()) throw std::invalid_argument("matrix product: shape mismatch");
  const auto& k = kernels::active();
  const auto p = static_cast<std::uint8_t>(a.prime().value());
  FpMatrix out(a.prime(), a.rows(), b.cols());
  if (b.cols() == 0) return out;
  for (std::size_t i = 0; i < a.rows(); ++i) {
    std::uint8_t* dst = out.row(i).data();
    for (std::size_t j = 0; j < a.cols(); ++j)
      if (const std::uint8_t c = a(i, j)) k.axpy(dst, b.row(j).data(), c, b.cols(), p);
  }
  return out;
}

FpVector operator*(const FpMatrix& a, const FpVector& x) {
  if (a.cols() != x.size()) throw std::invalid_argument("matrix-vector product: shape mismatch");
  const auto& k = kernels::active();
  const auto p = static_cast<std::uint8_t>(a.prime().value());
  FpVector out(a.rows());
  for (std::size_t i = 0; i < a.rows(); ++i) out[i] = k.dot(a.row(i).data(), x.data(), x.size(), p);
  return out;
}

FpMatrix operator+(const FpMatrix& a, const FpMatrix& b) {
  require_same_field(a, b);
  if (a.rows() != b.rows() || a.cols() != b.cols()) throw std::invalid_argument("matrix sum: shape mismatch");
  FpMatrix out = a;
  const auto p = static_cast<std::uint8_t>(a.prime().value());
  for (std::size_t r = 0; r < a.rows(); ++r) kernels::active().axpy(out.row(r).data(), b.row(r).data(), 1, a.cols(), p);
  return out;
}

FpMatrix operator-(const FpMatrix& a, const FpMatrix& b) {
  require_same_field(a, b);
  if (a.rows() != b.rows() || a.cols() != b.cols()) throw std::invalid_argument("matrix difference: shape mismatch");
  FpMatrix out = a;
  const auto p = static_cast<std::uint8_t>(a.prime().value());
  for (std::size_t r = 0; r < a.rows(); ++r)
    kernels::active().axpy(out.row(r).data(), b.row(r).data(), static_cast<std::uint8_t>(p - 1), a.cols(), p);
  return out;
}

FpMatrix hstack(const FpMatrix& a, const FpMatrix& b) {
  require_same_field(a, b);
  if (a.rows() != b.rows()) throw std::invalid_argument("hstack: row count mismatch");
  FpMatrix out(a.prime(), a.rows(), a.cols() + b.cols());
  for (std::size_t r = 0; r < a.rows(); ++r) {
    std::copy(a.row(r).begin(), a.row(r).end(), out.row(r).begin());
    std::copy(b.row(r).begin(), b.row(r).end(), out.row(r).begin() + static_cast<std::ptrdiff_t>(a.cols()));
  }
  return out;
}

FpMatrix vstack(const FpMatrix& a, const FpMatrix& b) {
  require_same_field(a, b);
  if (a.cols() != b.cols()) throw std::invalid_argument("vstack: column count mismatch");
  FpMatrix out(a.prime(), a.rows() + b.rows(), a.cols());
  for (std::size_t r = 0; r < a.rows(); ++r) std::copy(a.row(r).begin(), a.row(r).end(), out.row(r).begin());
  for (std::size_t r = 0; r < b.rows(); ++r) std::copy(b.row(r).begin(), b.row(r).end(), out.row(a.rows() + r).begin());
  return out;
}

std::uint8_t inverse_mod(std::uint8_t a, Prime p) {
  if (a % p.value() == 0) throw std::domain_error("inverse_mod: zero has no inverse");
  // a^(p-2) by square-and-multiply.
  unsigned result = 1, base = a % p.value();
  for (int e = p.value() - 2; e > 0; e >>= 1) {
    if (e & 1) result = result * base % p.value();
    base = base * base % p.value();
  }
  return static_cast<std::uint8_t>(result);
}

Echelon rref(FpMatrix a) {
  const auto& k = kernels::active();
  const auto p = static_cast<std::uint8_t>(a.prime().value());
  std::vector<std::size_t> pivots;
  std::size_t lead = 0;
  for (std::size_t col = 0; col < a.cols() && lead < a.rows(); ++col) {
    std::size_t r = lead;
    while (r < a.rows() && a(r, col) == 0) ++r;
    if (r == a.rows()) continue;
    if (r != lead) std::swap_ranges(a.row(r).begin(), a.row(r).end(), a.row(lead).begin());
    // Entries left of `col` in the pivot row are already zero.
    const std::size_t tail = a.cols() - col;
    k.scale(a.row(lead).data() + col, inverse_mod(a(lead, col), a.prime()), tail, p);
    const std::uint8_t* src = a.row(lead).data() + col;
    for (std::size_t other = 0; other < a.rows(); ++other) {
      if (other == lead) continue;
      if (const std::uint8_t c = a(other, col)) k.axpy(a.row(other).data() + col, src, neg(c, p), tail, p);
    }
    pivots.push_back(col);
    ++lead;
  }
  return Echelon{std::move(a), std::move(pivots)};
}

std::size_t rank(const FpMatrix& a) { return rref(a).pivot_cols.size(); }

FpMatrix nullspace(const FpMatrix& a) {
  const Echelon e = rref(a);
  std::vector<bool> is_pivot(a.cols(), false);
  for (std::size_t c : e.pivot_cols) is_pivot[c] = true;
  const int p = a.prime().value();
  std::vector<FpVector> basis;
  for (std::size_t free = 0; free < a.cols(); ++free) {
    if (is_pivot[free]) continue;
    FpVector v(a.cols(), 0);
    v[free] = 1;
    for (std::size_t r = 0; r < e.pivot_cols.size(); ++r) v[e.pivot_cols[r]] = neg(e.reduced(r, free), p);
    basis.push_back(std::move(v));
  }
  return FpMatrix::from_columns(a.prime(), a.cols(), basis);
}

FpMatrix column_basis(const FpMatrix& a) {
  const Echelon e = rref(a);
  std::vector<FpVector> cols;
  cols.reserve(e.pivot_cols.size());
  for (std::size_t c : e.pivot_cols) cols.push_back(a.column(c));
  return FpMatrix::from_columns(a.prime(), a.rows(), cols);
}

std::optional<FpMatrix> inverse(const FpMatrix& a) {
  if (a.rows() != a.cols()) throw std::invalid_argument("inverse: matrix not square");
  const std::size_t n = a.rows();
  const Echelon e = rref(hstack(a, FpMatrix::identity(a.prime(), n)));
  if (e.pivot_cols.size() < n || (n > 0 && e.pivot_cols[n - 1] != n - 1)) return std::nullopt;
  FpMatrix out(a.prime(), n, n);
  for (std::size_t r = 0; r < n; ++r)
    std::copy(e.reduced.row(r).begin() + static_cast<std::ptrdiff_t>(n), e.reduced.row(r).end(), out.row(r).begin());
  return out;
}

// --- SpanSolver -------------------------------------------------------------

SpanSolver::SpanSolver(FpMatrix basis)
    : basis_(std::move(basis)), block_inverse_(basis_.prime(), 0, 0) {
  // Independent rows of B are the pivot columns of B^T.
  const Echelon e = rref(basis_.transpose());
  if (e.pivot_cols.size() != basis_.cols())
    throw std::invalid_argument("SpanSolver: basis columns are linearly dependent");
  pivot_rows_ = e.pivot_cols;
  FpMatrix block(basis_.prime(), basis_.cols(), basis_.cols());
  for (std::size_t r = 0; r < pivot_rows_.size(); ++r)
    std::copy(basis_.row(pivot_rows_[r]).begin(), basis_.row(pivot_rows_[r]).end(), block.row(r).begin());
  block_inverse_ = *inverse(block);
}

std::optional<FpVector> SpanSolver::solve(const FpVector& v) const {
  if (v.size() != basis_.rows()) throw std::invalid_argument("SpanSolver::solve: vector length mismatch");
  FpVector restricted(pivot_rows_.size());
  for (std::size_t r = 0; r < pivot_rows_.size(); ++r) restricted[r] = v[pivot_rows_[r]];
  FpVector coeffs = block_inverse_ * restricted;
  if (basis_ * coeffs != v) return std::nullopt;
  return coeffs;
}

std::optional<FpMatrix> SpanSolver::solve(const FpMatrix& v) const {
  std::vector<FpVector> cols;
  cols.reserve(v.cols());
  for (std::size_t c = 0; c < v.cols(); ++c) {
    auto x = solve(v.column(c));
    if (!x) return std::nullopt;
    cols.push_back(std::move(*x));
  }
  return FpMatrix::from_columns(v.prime(), basis_.cols(), cols);
}

std::optional<FpVector> solve_in_span(const FpMatrix& basis, const FpVector& v) { return SpanSolver(basis).solve(v); }

// --- SubspaceBuilder ----------------------------------------------------------

SubspaceBuilder::SubspaceBuilder(Prime p, std::size_t ambient) : p_(p), ambient_(ambient) {}

FpVector SubspaceBuilder::reduce(FpVector v) const {
  if (v.size() != ambient_) throw std::invalid_argument("SubspaceBuilder: vector length mismatch");
  const auto& k = kernels::active();
  const auto p = static_cast<std::uint8_t>(p_.value());
  for (std::size_t r = 0; r < rows_.size(); ++r)
    if (const std::uint8_t c = v[pivots_[r]]) k.axpy(v.data(), rows_[r].data(), neg(c, p), ambient_, p);
  return v;
}

bool SubspaceBuilder::contains(const FpVector& v) const {
  const FpVector r = reduce(v);
  return std::all_of(r.begin(), r.end(), [](std::uint8_t x) { return x == 0; });
}

FpMatrix SubspaceBuilder::basis() const {
  FpMatrix out(p_, rows_.size(), ambient_);
  for (std::size_t r = 0; r < rows_.size(); ++r) std::copy(rows_[r].begin(), rows_[r].end(), out.row(r).begin());
  return out;
}

bool SubspaceBuilder::add(const FpVector& v) {
  FpVector r = reduce(v);
  const auto it = std::find_if(r.begin(), r.end(), [](std::uint8_t x) { return x != 0; });
  if (it == r.end()) return false;
  const auto pivot = static_cast<std::size_t>(it - r.begin());
  kernels::active().scale(r.data(), inverse_mod(*it, p_), ambient_, static_cast<std::uint8_t>(p_.value()));
  rows_.push_back(std::move(r));
  pivots_.push_back(pivot);
  return true;
}

}  // namespace csext
