#include "cmlat/algebra.hpp"

#include <algorithm>
#include <sstream>

namespace cmlat {

QuotientAlgebra::QuotientAlgebra(Field F, std::vector<Mat> basis_products,
                                 Vec one, bool validate)
    : AlgebraContext(std::move(F), static_cast<int>(basis_products.size())),
      tab_(std::move(basis_products)) {
  one_ = std::move(one);
  if (validate) {
    for (int i = 0; i < dim_; ++i)
      if (tab_[i].rows != dim_ || tab_[i].cols != dim_)
        throw InvalidInputError("structure constants have wrong shape");
    // two-sided identity
    for (int i = 0; i < dim_; ++i) {
      Vec bi(dim_, 0);
      bi[i] = 1;
      if (mul(one_, bi) != bi || mul(bi, one_) != bi)
        throw InvalidInputError("structure constants: not a two-sided identity");
    }
    // associativity on all basis triples
    for (int i = 0; i < dim_; ++i) {
      Vec bi(dim_, 0);
      bi[i] = 1;
      for (int j = 0; j < dim_; ++j) {
        Vec ij = tab_[i].row(j);
        for (int l = 0; l < dim_; ++l) {
          Vec bl(dim_, 0);
          bl[l] = 1;
          if (mul(ij, bl) != mul(bi, tab_[j].row(l)))
            throw InvalidInputError("structure constants not associative");
        }
      }
    }
  }
}

Vec QuotientAlgebra::mul(const Vec& a, const Vec& b) const {
  const Field& F = field();
  Vec out(dim_, 0);
  for (int i = 0; i < dim_; ++i) {
    if (a[i] == 0) continue;
    const Mat& ti = tab_[i];
    for (int j = 0; j < dim_; ++j) {
      if (b[j] == 0) continue;
      Fel c = F.mul(a[i], b[j]);
      for (int l = 0; l < dim_; ++l) {
        Fel t = ti.at(j, l);
        if (t != 0) out[l] = F.add(out[l], F.mul(c, t));
      }
    }
  }
  return out;
}

bool QuotientAlgebra::commutative() const {
  for (int i = 0; i < dim_; ++i)
    for (int j = i + 1; j < dim_; ++j)
      if (tab_[i].row(j) != tab_[j].row(i)) return false;
  return true;
}

Vec QuotientAlgebra::pow_elem(const Vec& a, long long n) const {
  Vec r = one_, b = a;
  while (n > 0) {
    if (n & 1) r = mul(r, b);
    b = mul(b, b);
    n >>= 1;
  }
  return r;
}

SubspaceBasis QuotientAlgebra::radical() const {
  if (!commutative())
    throw InvalidInputError("radical: commutative algebras only");
  const Field& F = field();
  int p = F.p(), e = F.e();
  long long pk = 1;
  while (pk < dim_) pk *= p;
  // x -> x^{p^K} is F_p-linear; its kernel is exactly the nilpotent set and
  // is closed under scaling by the full field.
  Field Fp = Field::make(p, 1);
  int D = dim_ * e;
  Mat sys(D, D);
  for (int i = 0; i < dim_; ++i)
    for (int j = 0; j < e; ++j) {
      Vec x(dim_, 0);
      std::vector<int> digits(e, 0);
      digits[j] = 1;
      x[i] = F.from_digits(digits);
      Vec y = pow_elem(x, pk);
      int col = i * e + j;
      for (int r = 0; r < dim_; ++r) {
        std::vector<int> d = F.digits(y[r]);
        for (int l = 0; l < e; ++l) sys.at(r * e + l, col) = d[l];
      }
    }
  SubspaceBasis ker = null_space(Fp, sys);
  std::vector<Vec> vecs;
  for (int i = 0; i < ker.dim(); ++i) {
    Vec fp = ker.rows.row(i);
    Vec v(dim_, 0);
    for (int r = 0; r < dim_; ++r) {
      std::vector<int> d(e);
      for (int l = 0; l < e; ++l) d[l] = fp[r * e + l];
      v[r] = F.from_digits(d);
    }
    vecs.push_back(std::move(v));
  }
  return span_of(F, dim_, vecs);
}

FiniteAlgebra subalgebra_closure_any(const AlgebraContext& ctx,
                                     const std::vector<Vec>& gens) {
  const Field& F = ctx.field();
  std::vector<Vec> rows = gens;
  rows.push_back(ctx.one());
  SubspaceBasis cur = span_of(F, ctx.dim(), rows);
  while (true) {
    std::vector<Vec> prods;
    for (int i = 0; i < cur.dim(); ++i)
      for (int j = i; j < cur.dim(); ++j) {
        prods.push_back(ctx.mul(cur.rows.row(i), cur.rows.row(j)));
        if (j != i) prods.push_back(ctx.mul(cur.rows.row(j), cur.rows.row(i)));
      }
    SubspaceBasis next = cur;
    for (const Vec& v : prods)
      if (!subspace_contains(F, next, v))
        next = subspace_sum(F, next, span_of(F, ctx.dim(), {v}));
    if (next.dim() == cur.dim()) break;
    cur = std::move(next);
  }
  return FiniteAlgebra{&ctx, cur, true};
}

FiniteAlgebra subalgebra_closure(const AlgebraContext& ctx,
                                 const std::vector<Vec>& gens) {
  if (const auto* ring = dynamic_cast<const AmbientRing*>(&ctx)) {
    for (const Vec& g : gens) {
      for (int i = 0; i < ring->branches(); ++i)
        if (g[ring->coord(i, 0)] != 0)
          throw InvalidInputError(
              "generator has a unit component (nonzero constant term)");
    }
  }
  return subalgebra_closure_any(ctx, gens);
}

bool is_multiplication_closed(const AlgebraContext& ctx, const SubspaceBasis& b) {
  const Field& F = ctx.field();
  for (int i = 0; i < b.dim(); ++i)
    for (int j = 0; j < b.dim(); ++j)
      if (!subspace_contains(F, b, ctx.mul(b.rows.row(i), b.rows.row(j))))
        return false;
  return true;
}

SubspaceBasis module_closure(const FiniteAlgebra& alg,
                             const std::vector<Vec>& gens, int n) {
  const AlgebraContext& ctx = *alg.ctx;
  const Field& F = ctx.field();
  int md = n * ctx.dim();
  for (const Vec& g : gens)
    if (static_cast<int>(g.size()) != md)
      throw InvalidInputError("module_closure: generator dimension mismatch");
  SubspaceBasis cur = span_of(F, md, gens);
  while (true) {
    SubspaceBasis next = cur;
    for (int i = 0; i < cur.dim(); ++i)
      for (int j = 0; j < alg.basis.dim(); ++j) {
        Vec w = ctx.module_scale(cur.rows.row(i), alg.basis.rows.row(j), n);
        if (!subspace_contains(F, next, w))
          next = subspace_sum(F, next, span_of(F, md, {w}));
      }
    if (next.dim() == cur.dim()) break;
    cur = std::move(next);
  }
  return cur;
}

SubspaceBasis radical(const FiniteAlgebra& alg) {
  const auto* ring = dynamic_cast<const AmbientRing*>(alg.ctx);
  if (!ring)
    throw InvalidInputError("radical: algebra must live in an AmbientRing");
  return subspace_intersect(ring->field(), alg.basis, ring->radical_basis());
}

namespace {

// Minimal polynomial of y in the unital algebra (eA, identity e):
// coefficients c with y^k = sum c_j y^j, returned low degree first,
// length k (the leading term t^k is implicit).
std::vector<Fel> min_poly(const QuotientAlgebra& A, const Vec& e, const Vec& y) {
  const Field& F = A.field();
  Mat rows(0, A.dim());
  rows.append_row(e);
  Vec cur = y;
  while (true) {
    SubspaceBasis sp = rref_canonicalize(F, rows);
    if (subspace_contains(F, sp, cur)) {
      CoordinateMap cm(F, rows);
      return cm.coords(F, cur);
    }
    rows.append_row(cur);
    cur = A.mul(cur, y);
  }
}

std::vector<Fel> poly_roots(const Field& F, const std::vector<Fel>& low_coeffs) {
  // f(t) = t^k - sum low_coeffs[j] t^j; roots by exhaustive evaluation.
  int k = static_cast<int>(low_coeffs.size());
  std::vector<Fel> roots;
  for (Fel x = 0; x < F.q(); ++x) {
    Fel v = 1; // t^k term
    for (int i = 0; i < k; ++i) v = F.mul(v, x);
    Fel rest = 0, xp = 1;
    for (int j = 0; j < k; ++j) {
      rest = F.add(rest, F.mul(low_coeffs[j], xp));
      xp = F.mul(xp, x);
    }
    if (v == rest) roots.push_back(x);
  }
  return roots;
}

} // namespace

std::vector<Vec> primitive_idempotents(const QuotientAlgebra& A) {
  if (!A.commutative())
    throw InvalidInputError("primitive_idempotents: noncommutative input");
  const Field& F = A.field();
  int d = A.dim();
  // Subalgebra fixed by x -> x^q: spanned by the lifted idempotents, so the
  // minimal polynomial of each of its elements splits into distinct linear
  // factors and the splitting below is complete.
  Mat frob(d, d);
  for (int i = 0; i < d; ++i) {
    Vec x(d, 0);
    x[i] = 1;
    Vec y = A.pow_elem(x, F.q());
    for (int r = 0; r < d; ++r)
      frob.at(r, i) = F.sub(y[r], x[r]);
  }
  SubspaceBasis fixed = null_space(F, frob);

  std::vector<Vec> idems{A.one()};
  for (int bi = 0; bi < fixed.dim(); ++bi) {
    Vec x = fixed.rows.row(bi);
    std::vector<Vec> next;
    for (const Vec& e : idems) {
      Vec y = A.mul(e, x);
      std::vector<Fel> mp = min_poly(A, e, y);
      std::vector<Fel> roots = poly_roots(F, mp);
      if (roots.size() <= 1) {
        next.push_back(e);
        continue;
      }
      for (Fel lam : roots) {
        Vec el = e;
        for (Fel mu : roots) {
          if (mu == lam) continue;
          // el *= (y - mu e) / (lam - mu)
          Vec f(y);
          for (int r = 0; r < d; ++r) f[r] = F.sub(f[r], F.mul(mu, e[r]));
          Fel s = F.inv(F.sub(lam, mu));
          for (int r = 0; r < d; ++r) f[r] = F.mul(f[r], s);
          el = A.mul(el, f);
        }
        bool zero = std::all_of(el.begin(), el.end(), [](Fel v) { return v == 0; });
        if (!zero) next.push_back(std::move(el));
      }
    }
    idems = std::move(next);
  }
  return idems;
}

Vec QuotientView::project(const Field& F, const Vec& ambient_vec) const {
  Vec c = stacked.coords(F, ambient_vec);
  return Vec(c.begin(), c.begin() + complement_rows.rows);
}

Vec QuotientView::lift(const Field& F, const Vec& coords) const {
  return vec_mat(F, coords, complement_rows);
}

QuotientView quotient_algebra(const FiniteAlgebra& alg, const SubspaceBasis& ideal) {
  const AlgebraContext& ctx = *alg.ctx;
  const Field& F = ctx.field();
  if (!subspace_leq(F, ideal, alg.basis))
    throw InvalidInputError("quotient: ideal not contained in algebra");
  for (int i = 0; i < alg.basis.dim(); ++i)
    for (int j = 0; j < ideal.dim(); ++j) {
      Vec ab = ctx.mul(alg.basis.rows.row(i), ideal.rows.row(j));
      Vec ba = ctx.mul(ideal.rows.row(j), alg.basis.rows.row(i));
      if (!subspace_contains(F, ideal, ab) || !subspace_contains(F, ideal, ba))
        throw InvalidInputError("quotient: ideal not stable under the algebra");
    }
  if (!alg.contains_one)
    throw InvalidInputError("quotient: algebra must contain the identity");

  auto pivot_of = [](const SubspaceBasis& b, int row) {
    for (int c = 0; c < b.ambient; ++c)
      if (b.rows.at(row, c) != 0) return c;
    return b.ambient;
  };
  std::vector<int> ideal_pivots;
  for (int i = 0; i < ideal.dim(); ++i) ideal_pivots.push_back(pivot_of(ideal, i));

  Mat complement(0, ctx.dim());
  for (int i = 0; i < alg.basis.dim(); ++i) {
    int p = pivot_of(alg.basis, i);
    if (std::find(ideal_pivots.begin(), ideal_pivots.end(), p) == ideal_pivots.end())
      complement.append_row(alg.basis.rows.row(i));
  }
  int qd = complement.rows;
  Mat stacked = complement;
  for (int i = 0; i < ideal.dim(); ++i) stacked.append_row(ideal.rows.row(i));
  CoordinateMap cm(F, stacked);

  std::vector<Mat> tab(qd, Mat(qd, qd));
  for (int i = 0; i < qd; ++i)
    for (int j = 0; j < qd; ++j) {
      Vec prod = ctx.mul(complement.row(i), complement.row(j));
      Vec c = cm.coords(F, prod);
      for (int l = 0; l < qd; ++l) tab[i].at(j, l) = c[l];
    }
  Vec one_c = cm.coords(F, ctx.one());
  Vec one_q(one_c.begin(), one_c.begin() + qd);

  return QuotientView{QuotientAlgebra(F, std::move(tab), std::move(one_q)),
                      std::move(complement), ideal, std::move(cm)};
}

std::vector<Vec> primitive_idempotents(const FiniteAlgebra& alg) {
  const Field& F = alg.ctx->field();
  QuotientView qv = quotient_algebra(alg, zero_subspace(alg.ctx->dim()));
  std::vector<Vec> out;
  for (const Vec& e : primitive_idempotents(qv.algebra))
    out.push_back(qv.lift(F, e));
  return out;
}

std::string DVector::str() const {
  std::ostringstream os;
  os << '(';
  for (size_t i = 0; i < parts.size(); ++i) {
    if (i) os << ',';
    os << parts[i];
  }
  os << ')';
  return os.str();
}

DVector make_dvector(std::vector<int> parts) {
  std::sort(parts.begin(), parts.end(), std::greater<>());
  int total = 0;
  for (int p : parts) total += p;
  return DVector{std::move(parts), total};
}

DVector d_vector(const FiniteAlgebra& gamma, const FiniteAlgebra& lambda) {
  if (gamma.ctx != lambda.ctx)
    throw InvalidInputError("d_vector: algebras in different ambients");
  const Field& F = gamma.ctx->field();
  if (!subspace_leq(F, lambda.basis, gamma.basis))
    throw InvalidInputError("d_vector: lambda not contained in gamma");
  SubspaceBasis m = radical(lambda);
  // m*Gamma spans a Gamma-stable subspace already; no iteration needed.
  std::vector<Vec> prods;
  for (int i = 0; i < m.dim(); ++i)
    for (int j = 0; j < gamma.basis.dim(); ++j)
      prods.push_back(gamma.ctx->mul(m.rows.row(i), gamma.basis.rows.row(j)));
  SubspaceBasis m_gamma = span_of(F, gamma.ctx->dim(), prods);
  QuotientView qv = quotient_algebra(gamma, m_gamma);
  std::vector<Vec> idems = primitive_idempotents(qv.algebra);
  std::vector<int> parts;
  for (const Vec& e : idems) {
    std::vector<Vec> rows;
    for (int j = 0; j < qv.algebra.dim(); ++j) {
      Vec bj(qv.algebra.dim(), 0);
      bj[j] = 1;
      rows.push_back(qv.algebra.mul(e, bj));
    }
    parts.push_back(span_of(F, qv.algebra.dim(), rows).dim());
  }
  DVector d = make_dvector(std::move(parts));
  if (d.total != qv.algebra.dim())
    throw InvalidInputError("d_vector: factor dimensions do not sum to dim");
  return d;
}

} // namespace cmlat
