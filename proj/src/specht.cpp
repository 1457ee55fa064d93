#include "csext/specht.hpp"

#include <algorithm>
#include <numeric>
#include <random>

#include "csext/kernels.hpp"

namespace csext {

void check_degree_cap(int degree, int cap) {
  if (cap > kMaxDegreeCap)
    throw CapExceeded("degree cap " + std::to_string(cap) + " exceeds the supported maximum " +
                      std::to_string(kMaxDegreeCap));
  if (degree > cap)
    throw CapExceeded("degree " + std::to_string(degree) + " exceeds the configured cap " + std::to_string(cap));
}

std::uint64_t hook_length_count(const Partition& lambda) {
  const Partition conj = conjugate(lambda);
  // m! / prod(hooks), accumulated as a ratio of exact integers.
  std::uint64_t numer = 1;
  for (int k = 2; k <= lambda.degree(); ++k) numer *= static_cast<std::uint64_t>(k);
  std::uint64_t denom = 1;
  for (int r = 1; r <= lambda.height(); ++r)
    for (int c = 1; c <= lambda.part(r); ++c)
      denom *= static_cast<std::uint64_t>(lambda.part(r) - c + conj.part(c) - r + 1);
  return numer / denom;
}

// --- Tableau ------------------------------------------------------------------

bool Tableau::is_standard() const {
  for (std::size_t r = 0; r < rows.size(); ++r)
    for (std::size_t c = 0; c < rows[r].size(); ++c) {
      if (c > 0 && rows[r][c] <= rows[r][c - 1]) return false;
      if (r > 0 && rows[r][c] <= rows[r - 1][c]) return false;
    }
  return true;
}

std::vector<std::uint8_t> Tableau::row_of() const {
  std::vector<std::uint8_t> out(static_cast<std::size_t>(degree()));
  for (std::size_t r = 0; r < rows.size(); ++r)
    for (int x : rows[r]) out[static_cast<std::size_t>(x - 1)] = static_cast<std::uint8_t>(r);
  return out;
}

Tableau Tableau::swapped(int i) const {
  Tableau out = *this;
  for (auto& row : out.rows)
    for (int& x : row) {
      if (x == i)
        x = i + 1;
      else if (x == i + 1)
        x = i;
    }
  return out;
}

// --- TabloidIndex -------------------------------------------------------------

namespace {

void tabloids_rec(std::vector<int>& room, std::vector<std::uint8_t>& cur, std::size_t m,
                  std::vector<std::vector<std::uint8_t>>& out) {
  if (cur.size() == m) {
    out.push_back(cur);
    return;
  }
  for (std::size_t r = 0; r < room.size(); ++r) {
    if (room[r] == 0) continue;
    --room[r];
    cur.push_back(static_cast<std::uint8_t>(r));
    tabloids_rec(room, cur, m, out);
    cur.pop_back();
    ++room[r];
  }
}

}  // namespace

TabloidIndex::TabloidIndex(const Partition& shape) : shape_(shape) {
  std::vector<int> room(shape.parts());
  std::vector<std::uint8_t> cur;
  tabloids_rec(room, cur, static_cast<std::size_t>(shape.degree()), tabloids_);
  lookup_.reserve(tabloids_.size());
  for (std::size_t k = 0; k < tabloids_.size(); ++k) lookup_.emplace(key(tabloids_[k]), k);
}

std::uint64_t TabloidIndex::key(const std::vector<std::uint8_t>& row_of) {
  std::uint64_t k = 0;
  for (std::uint8_t r : row_of) k = (k << 4) | r;
  return k;
}

std::size_t TabloidIndex::find(const std::vector<std::uint8_t>& row_of) const {
  const auto it = lookup_.find(key(row_of));
  if (it == lookup_.end()) throw std::invalid_argument("TabloidIndex::find: not a tabloid of this shape");
  return it->second;
}

std::vector<std::size_t> TabloidIndex::transposition(int i) const {
  if (i < 1 || i >= shape_.degree()) throw std::out_of_range("transposition index out of range");
  std::vector<std::size_t> image(size());
  for (std::size_t k = 0; k < size(); ++k) {
    std::vector<std::uint8_t> moved = tabloids_[k];
    std::swap(moved[static_cast<std::size_t>(i - 1)], moved[static_cast<std::size_t>(i)]);
    image[k] = find(moved);
  }
  return image;
}

// --- SymRep -----------------------------------------------------------------

bool SymRep::satisfies_relations() const {
  if (degree < 0 || gens.size() != static_cast<std::size_t>(std::max(degree - 1, 0))) return false;
  if (gens.empty()) return true;
  const FpMatrix one = FpMatrix::identity(p, dim);
  for (const FpMatrix& g : gens)
    if (g.rows() != dim || g.cols() != dim || !(g * g == one)) return false;
  for (std::size_t i = 0; i + 1 < gens.size(); ++i)
    if (!(gens[i] * gens[i + 1] * gens[i] == gens[i + 1] * gens[i] * gens[i + 1])) return false;
  for (std::size_t i = 0; i < gens.size(); ++i)
    for (std::size_t j = i + 2; j < gens.size(); ++j)
      if (!(gens[i] * gens[j] == gens[j] * gens[i])) return false;
  return true;
}

// --- tableaux and polytabloids ----------------------------------------------

namespace {

void standard_rec(const Partition& shape, int next, Tableau& cur, std::vector<Tableau>& out) {
  if (next > shape.degree()) {
    out.push_back(cur);
    return;
  }
  for (int r = 0; r < shape.height(); ++r) {
    const auto len = static_cast<int>(cur.rows[static_cast<std::size_t>(r)].size());
    if (len == shape.part(r + 1)) continue;
    if (r > 0 && static_cast<int>(cur.rows[static_cast<std::size_t>(r - 1)].size()) <= len) continue;
    cur.rows[static_cast<std::size_t>(r)].push_back(next);
    standard_rec(shape, next + 1, cur, out);
    cur.rows[static_cast<std::size_t>(r)].pop_back();
  }
}

int permutation_sign(const std::vector<int>& perm) {
  int inversions = 0;
  for (std::size_t a = 0; a < perm.size(); ++a)
    for (std::size_t b = a + 1; b < perm.size(); ++b)
      if (perm[a] > perm[b]) ++inversions;
  return inversions % 2 ? -1 : 1;
}

// All (row assignment, sign) pairs of one column: entry col[k] ends up in row perm[k].
struct ColumnTerm {
  std::vector<int> rows;
  int sign;
};

std::vector<ColumnTerm> column_terms(std::size_t height) {
  std::vector<int> perm(height);
  std::iota(perm.begin(), perm.end(), 0);
  std::vector<ColumnTerm> out;
  do {
    out.push_back({perm, permutation_sign(perm)});
  } while (std::next_permutation(perm.begin(), perm.end()));
  return out;
}

}  // namespace

std::vector<Tableau> standard_tableaux(const Partition& lambda, int cap) {
  check_degree_cap(lambda.degree(), cap);
  Tableau cur{lambda, std::vector<std::vector<int>>(static_cast<std::size_t>(lambda.height()))};
  std::vector<Tableau> out;
  standard_rec(lambda, 1, cur, out);
  if (out.size() != hook_length_count(lambda))
    throw std::logic_error("standard tableau count disagrees with the hook-length formula for " + lambda.to_string());
  return out;
}

TabloidIndex tabloid_basis(const Partition& lambda, int cap) {
  check_degree_cap(lambda.degree(), cap);
  return TabloidIndex(lambda);
}

FpVector polytabloid(const Tableau& t, const TabloidIndex& tabloids, Prime p) {
  if (t.shape != tabloids.shape()) throw std::invalid_argument("polytabloid: tableau shape differs from tabloid index");
  const Partition conj = conjugate(t.shape);
  std::vector<std::vector<int>> columns(static_cast<std::size_t>(conj.height()));
  for (std::size_t c = 0; c < columns.size(); ++c)
    for (int r = 0; r < conj.part(static_cast<int>(c) + 1); ++r)
      columns[c].push_back(t.rows[static_cast<std::size_t>(r)][c]);

  std::vector<std::vector<ColumnTerm>> terms;
  for (const auto& col : columns) terms.push_back(column_terms(col.size()));

  std::vector<long long> acc(tabloids.size(), 0);
  std::vector<std::uint8_t> row_of = t.row_of();
  // Depth-first over the product of column groups.
  auto rec = [&](auto&& self, std::size_t c, int sign) -> void {
    if (c == columns.size()) {
      acc[tabloids.find(row_of)] += sign;
      return;
    }
    for (const ColumnTerm& term : terms[c]) {
      for (std::size_t k = 0; k < columns[c].size(); ++k)
        row_of[static_cast<std::size_t>(columns[c][k] - 1)] = static_cast<std::uint8_t>(term.rows[k]);
      self(self, c + 1, sign * term.sign);
    }
  };
  rec(rec, 0, 1);

  FpVector out(tabloids.size());
  for (std::size_t k = 0; k < acc.size(); ++k) {
    long long r = acc[k] % p.value();
    out[k] = static_cast<std::uint8_t>(r < 0 ? r + p.value() : r);
  }
  return out;
}

FpVector polytabloid(const Tableau& t, Prime p, int cap) { return polytabloid(t, tabloid_basis(t.shape, cap), p); }

FpMatrix gen_action_on_tabloids(const Partition& lambda, int i, Prime p, int cap) {
  const TabloidIndex tabloids = tabloid_basis(lambda, cap);
  const std::vector<std::size_t> image = tabloids.transposition(i);
  FpMatrix out(p, tabloids.size(), tabloids.size());
  for (std::size_t k = 0; k < image.size(); ++k) out(image[k], k) = 1;
  return out;
}

// --- Specht modules -----------------------------------------------------------

SpechtData specht_data(const Partition& lambda, Prime p, int cap) {
  const int m = lambda.degree();
  std::vector<Tableau> tableaux = standard_tableaux(lambda, cap);
  const TabloidIndex tabloids = tabloid_basis(lambda, cap);
  const std::size_t dim = tableaux.size();

  std::vector<FpVector> columns;
  columns.reserve(dim);
  for (const Tableau& t : tableaux) columns.push_back(polytabloid(t, tabloids, p));
  FpMatrix basis = FpMatrix::from_columns(p, tabloids.size(), columns);

  FpMatrix gram = basis.transpose() * basis;

  // sigma e_t = e_{sigma t}: permute tabloid coordinates, then straighten by
  // solving against the standard basis.
  const SpanSolver straighten(basis);
  SymRep rep{p, m, dim, {}};
  for (int i = 1; i < m; ++i) {
    const std::vector<std::size_t> image = tabloids.transposition(i);
    std::vector<FpVector> moved;
    moved.reserve(dim);
    for (const FpVector& col : columns) {
      FpVector v(col.size());
      for (std::size_t k = 0; k < col.size(); ++k) v[image[k]] = col[k];
      auto coeffs = straighten.solve(v);
      if (!coeffs) throw std::logic_error("Specht module not closed under s_" + std::to_string(i));
      moved.push_back(std::move(*coeffs));
    }
    rep.gens.push_back(FpMatrix::from_columns(p, dim, moved));
  }
  return SpechtData{lambda, p, std::move(tableaux), std::move(basis), std::move(gram), std::move(rep)};
}

FpMatrix radical_basis(const SpechtData& s) { return nullspace(s.gram); }

std::size_t rad_dim(const SpechtData& s) { return s.rep.dim - rank(s.gram); }

std::size_t rad_dim(const Partition& lambda, Prime p, int cap) { return rad_dim(specht_data(lambda, p, cap)); }

namespace {

// Action on the subspace spanned by the columns of `sub` (assumed invariant).
SymRep restrict_to(const SymRep& rep, const FpMatrix& sub) {
  SymRep out{rep.p, rep.degree, sub.cols(), {}};
  const SpanSolver solver(sub);
  for (const FpMatrix& g : rep.gens) {
    auto r = solver.solve(g * sub);
    if (!r) throw std::logic_error("restrict_to: subspace is not invariant");
    out.gens.push_back(std::move(*r));
  }
  return out;
}

}  // namespace

SymRep rad_subrep(const SpechtData& s) { return restrict_to(s.rep, radical_basis(s)); }

SymRep rad_subrep(const Partition& lambda, Prime p, int cap) { return rad_subrep(specht_data(lambda, p, cap)); }

SymRep simple_head(const SpechtData& s) {
  if (!is_p_regular(s.shape, s.p))
    throw std::invalid_argument("simple_head: " + s.shape.to_string() + " is not " + std::to_string(s.p.value()) +
                                "-regular");
  // The quotient map is x -> P x, where the rows of P span the row space of
  // the Gram matrix (kernel = radical). Q P = P A gives the induced action.
  const Echelon e = rref(s.gram);
  const std::size_t k = e.pivot_cols.size();
  FpMatrix proj(s.p, k, s.rep.dim);
  for (std::size_t r = 0; r < k; ++r)
    std::copy(e.reduced.row(r).begin(), e.reduced.row(r).end(), proj.row(r).begin());
  const SpanSolver solver(proj.transpose());
  SymRep out{s.p, s.rep.degree, k, {}};
  for (const FpMatrix& g : s.rep.gens) {
    auto qt = solver.solve((proj * g).transpose());
    if (!qt) throw std::logic_error("simple_head: radical is not invariant");
    out.gens.push_back(qt->transpose());
  }
  return out;
}

SymRep simple_head(const Partition& mu, Prime p, int cap) {
  if (!is_p_regular(mu, p))
    throw std::invalid_argument("simple_head: " + mu.to_string() + " is not " + std::to_string(p.value()) +
                                "-regular");
  return simple_head(specht_data(mu, p, cap));
}

// --- Hom spaces -------------------------------------------------------------

HomSpace hom_space(const SymRep& v, const SymRep& w) {
  if (v.degree != w.degree) throw std::invalid_argument("hom_space: modules for different symmetric groups");
  if (v.dim == 0 || w.dim == 0) return {};
  if (v.p != w.p) throw std::invalid_argument("hom_space: modules over different fields");
  const Prime p = v.p;

  // Spin a generating set of V. A homomorphism is fixed by the images of the
  // seeds; phi(b) for every spun basis vector b is linear in those images.
  struct Spun {
    FpVector vec;
    std::size_t seed;   // seed block for seeds
    int via_gen = -1;   // generator index for derived vectors
    std::size_t parent = 0;
  };
  std::vector<Spun> spun;
  std::size_t seeds = 0;
  SubspaceBuilder span(p, v.dim);
  for (std::size_t unit = 0; unit < v.dim && span.dim() < v.dim; ++unit) {
    FpVector e(v.dim, 0);
    e[unit] = 1;
    if (!span.add(e)) continue;
    spun.push_back({e, seeds++, -1, 0});
    for (std::size_t cur = spun.size() - 1; cur < spun.size(); ++cur)
      for (std::size_t g = 0; g < v.gens.size(); ++g) {
        FpVector next = v.gens[g] * spun[cur].vec;
        if (span.add(next)) spun.push_back({std::move(next), 0, static_cast<int>(g), cur});
      }
  }

  const std::size_t unknowns = seeds * w.dim;
  // phi(b_k) = images[k] * y, with y the stacked seed images.
  std::vector<FpMatrix> images;
  images.reserve(spun.size());
  for (const Spun& s : spun) {
    if (s.via_gen < 0) {
      FpMatrix block(p, w.dim, unknowns);
      for (std::size_t r = 0; r < w.dim; ++r) block(r, s.seed * w.dim + r) = 1;
      images.push_back(std::move(block));
    } else {
      images.push_back(w.gens[static_cast<std::size_t>(s.via_gen)] * images[s.parent]);
    }
  }

  std::vector<FpVector> spun_cols;
  for (const Spun& s : spun) spun_cols.push_back(s.vec);
  const FpMatrix change = FpMatrix::from_columns(p, v.dim, spun_cols);
  const FpMatrix change_inv = *inverse(change);

  // phi(A_g b_k) = B_g phi(b_k) for every generator and spun basis vector.
  SubspaceBuilder equations(p, unknowns);
  for (std::size_t g = 0; g < v.gens.size(); ++g) {
    const FpMatrix coords = change_inv * v.gens[g] * change;  // A_g in the spun basis
    for (std::size_t k = 0; k < spun.size(); ++k) {
      FpMatrix lhs = w.gens[g] * images[k];
      for (std::size_t c = 0; c < spun.size(); ++c)
        if (const std::uint8_t a = coords(c, k)) {
          FpMatrix scaled = images[c];
          lhs = lhs - scaled.scale(a);
        }
      for (std::size_t r = 0; r < lhs.rows(); ++r) {
        const auto row = lhs.row(r);
        equations.add(FpVector(row.begin(), row.end()));
      }
    }
  }

  const FpMatrix solutions = nullspace(equations.basis());

  HomSpace out;
  out.dim = solutions.cols();
  for (std::size_t s = 0; s < solutions.cols(); ++s) {
    const FpVector y = solutions.column(s);
    std::vector<FpVector> phi_cols;
    phi_cols.reserve(spun.size());
    for (const FpMatrix& img : images) phi_cols.push_back(img * y);
    out.basis.push_back(FpMatrix::from_columns(p, w.dim, phi_cols) * change_inv);
  }
  return out;
}

std::size_t hom_rad_to_simple(const Partition& lambda, const Partition& mu, Prime p, int cap) {
  if (lambda.degree() != mu.degree()) throw std::invalid_argument("hom_rad_to_simple: degree mismatch");
  const SymRep head = simple_head(mu, p, cap);
  const SymRep rad = rad_subrep(lambda, p, cap);
  return hom_space(rad, head).dim;
}

bool image_equals_rad(const SpechtData& source, const SpechtData& target) {
  if (source.p != target.p) throw std::invalid_argument("image_equals_rad: different characteristics");
  const std::size_t radical = rad_dim(target);
  if (radical == 0) return false;
  const HomSpace homs = hom_space(source.rep, target.rep);
  if (homs.dim == 0) return false;
  const Prime p = target.p;

  // Maps with image inside the radical: G X = 0, linear in the coefficients.
  FpMatrix constraint(p, target.rep.dim * source.rep.dim, homs.dim);
  for (std::size_t j = 0; j < homs.dim; ++j) {
    const FpMatrix gx = target.gram * homs.basis[j];
    for (std::size_t k = 0; k < gx.data().size(); ++k) constraint(k, j) = gx.data()[k];
  }
  const FpMatrix inside = nullspace(constraint);
  if (inside.cols() == 0) return false;

  auto combine = [&](const FpVector& coeffs) {
    FpMatrix x(p, target.rep.dim, source.rep.dim);
    for (std::size_t j = 0; j < homs.dim; ++j)
      if (coeffs[j]) {
        FpMatrix term = homs.basis[j];
        x = x + term.scale(coeffs[j]);
      }
    return x;
  };
  const FpMatrix rad_basis = radical_basis(target);
  auto spans_radical = [&](const FpMatrix& x) {
    return rank(x) == radical && rank(hstack(rad_basis, x)) == radical;
  };

  for (std::size_t j = 0; j < inside.cols(); ++j)
    if (spans_radical(combine(inside.column(j)))) return true;
  // Maximal rank over a subspace is attained off a proper subvariety; a few
  // seeded random combinations settle the multi-dimensional case.
  std::mt19937 rng(0x5eed);
  std::uniform_int_distribution<int> coeff(0, p.value() - 1);
  for (int trial = 0; trial < 64 && inside.cols() > 1; ++trial) {
    FpVector c(inside.cols());
    for (auto& x : c) x = static_cast<std::uint8_t>(coeff(rng));
    if (spans_radical(combine(inside * c))) return true;
  }
  return false;
}

bool image_equals_rad(const Partition& nu, const Partition& lambda, Prime p, int cap) {
  if (nu.degree() != lambda.degree()) throw std::invalid_argument("image_equals_rad: degree mismatch");
  return image_equals_rad(specht_data(nu, p, cap), specht_data(lambda, p, cap));
}

// --- cache ------------------------------------------------------------------

struct SpechtCache::Entry {
  std::once_flag once;
  std::shared_ptr<const SpechtData> data;
};

SpechtCache::SpechtCache(int cap) : cap_(cap) { check_degree_cap(0, cap); }

std::shared_ptr<const SpechtData> SpechtCache::get(const Partition& lambda, Prime p) {
  check_degree_cap(lambda.degree(), cap_);
  std::shared_ptr<Entry> entry;
  {
    std::lock_guard lock(mu_);
    auto& slot = entries_[{p.value(), lambda.parts()}];
    if (!slot) slot = std::make_shared<Entry>();
    entry = slot;
  }
  std::call_once(entry->once, [&] {
    entry->data = loader_ ? loader_(lambda, p) : std::make_shared<const SpechtData>(specht_data(lambda, p, cap_));
  });
  return entry->data;
}

std::size_t SpechtCache::size() const {
  std::lock_guard lock(mu_);
  return entries_.size();
}

}  // namespace csext
