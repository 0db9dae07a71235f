#include "cmlat/linalg.hpp"

#include <algorithm>

namespace cmlat {

Mat identity_mat(int n) {
  Mat m(n, n);
  for (int i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

std::vector<int> rref(const Field& F, Mat& m) {
  std::vector<int> pivots;
  int r = 0;
  for (int c = 0; c < m.cols && r < m.rows; ++c) {
    int sel = -1;
    for (int i = r; i < m.rows; ++i)
      if (m.at(i, c) != 0) { sel = i; break; }
    if (sel < 0) continue;
    if (sel != r)
      for (int j = 0; j < m.cols; ++j) std::swap(m.at(sel, j), m.at(r, j));
    Fel ip = F.inv(m.at(r, c));
    for (int j = c; j < m.cols; ++j) m.at(r, j) = F.mul(m.at(r, j), ip);
    for (int i = 0; i < m.rows; ++i) {
      if (i == r || m.at(i, c) == 0) continue;
      Fel f = m.at(i, c);
      for (int j = c; j < m.cols; ++j)
        m.at(i, j) = F.sub(m.at(i, j), F.mul(f, m.at(r, j)));
    }
    pivots.push_back(c);
    ++r;
  }
  m.a.resize(static_cast<size_t>(r) * m.cols);
  m.rows = r;
  return pivots;
}

int rank(const Field& F, Mat m) {
  rref(F, m);
  return m.rows;
}

size_t SubspaceHash::operator()(const SubspaceBasis& s) const {
  size_t h = 1469598103934665603ull;
  auto mix = [&h](size_t v) {
    h ^= v;
    h *= 1099511628211ull;
  };
  mix(static_cast<size_t>(s.ambient));
  mix(static_cast<size_t>(s.rows.rows));
  for (Fel x : s.rows.a) mix(static_cast<size_t>(x) + 0x9e3779b9);
  return h;
}

SubspaceBasis rref_canonicalize(const Field& F, Mat m) {
  rref(F, m);
  return SubspaceBasis{m.cols, std::move(m)};
}

SubspaceBasis zero_subspace(int ambient) {
  return SubspaceBasis{ambient, Mat(0, ambient)};
}

SubspaceBasis full_subspace(const Field&, int ambient) {
  return SubspaceBasis{ambient, identity_mat(ambient)};
}

SubspaceBasis span_of(const Field& F, int ambient, const std::vector<Vec>& vecs) {
  Mat m(static_cast<int>(vecs.size()), ambient);
  for (size_t i = 0; i < vecs.size(); ++i) m.set_row(static_cast<int>(i), vecs[i]);
  return rref_canonicalize(F, std::move(m));
}

Vec reduce_against(const Field& F, const SubspaceBasis& b, Vec v) {
  for (int r = 0; r < b.rows.rows; ++r) {
    int c = 0;
    while (c < b.ambient && b.rows.at(r, c) == 0) ++c;
    if (c == b.ambient) continue;
    if (v[c] != 0) {
      Fel f = v[c];
      for (int j = c; j < b.ambient; ++j)
        v[j] = F.sub(v[j], F.mul(f, b.rows.at(r, j)));
    }
  }
  return v;
}

bool subspace_contains(const Field& F, const SubspaceBasis& b, const Vec& v) {
  Vec r = reduce_against(F, b, v);
  return std::all_of(r.begin(), r.end(), [](Fel x) { return x == 0; });
}

bool subspace_leq(const Field& F, const SubspaceBasis& a, const SubspaceBasis& b) {
  if (a.ambient != b.ambient) return false;
  for (int i = 0; i < a.dim(); ++i)
    if (!subspace_contains(F, b, a.rows.row(i))) return false;
  return true;
}

SubspaceBasis subspace_sum(const Field& F, const SubspaceBasis& u,
                           const SubspaceBasis& v) {
  if (u.ambient != v.ambient)
    throw InvalidInputError("subspace_sum: ambient mismatch");
  Mat m(u.dim() + v.dim(), u.ambient);
  for (int i = 0; i < u.dim(); ++i) m.set_row(i, u.rows.row(i));
  for (int i = 0; i < v.dim(); ++i) m.set_row(u.dim() + i, v.rows.row(i));
  return rref_canonicalize(F, std::move(m));
}

SubspaceBasis subspace_intersect(const Field& F, const SubspaceBasis& u,
                                 const SubspaceBasis& v) {
  if (u.ambient != v.ambient)
    throw InvalidInputError("subspace_intersect: ambient mismatch");
  // Zassenhaus: rref of [U|U; V|0], rows with zero left half carry the
  // intersection in their right half.
  int n = u.ambient;
  Mat m(u.dim() + v.dim(), 2 * n);
  for (int i = 0; i < u.dim(); ++i)
    for (int j = 0; j < n; ++j) {
      m.at(i, j) = u.rows.at(i, j);
      m.at(i, n + j) = u.rows.at(i, j);
    }
  for (int i = 0; i < v.dim(); ++i)
    for (int j = 0; j < n; ++j) m.at(u.dim() + i, j) = v.rows.at(i, j);
  rref(F, m);
  std::vector<Vec> inter;
  for (int i = 0; i < m.rows; ++i) {
    bool left_zero = true;
    for (int j = 0; j < n; ++j)
      if (m.at(i, j) != 0) { left_zero = false; break; }
    if (left_zero) {
      Vec w(n);
      for (int j = 0; j < n; ++j) w[j] = m.at(i, n + j);
      inter.push_back(std::move(w));
    }
  }
  return span_of(F, n, inter);
}

SubspaceBasis null_space(const Field& F, const Mat& m) {
  Mat r = m;
  std::vector<int> pivots = rref(F, r);
  std::vector<bool> is_pivot(m.cols, false);
  for (int c : pivots) is_pivot[c] = true;
  std::vector<Vec> basis;
  for (int c = 0; c < m.cols; ++c) {
    if (is_pivot[c]) continue;
    Vec x(m.cols, 0);
    x[c] = 1;
    for (int i = 0; i < r.rows; ++i)
      x[pivots[i]] = F.neg(r.at(i, c));
    basis.push_back(std::move(x));
  }
  return span_of(F, m.cols, basis);
}

Mat invert(const Field& F, Mat m) {
  if (m.rows != m.cols) throw InvalidInputError("invert: not square");
  int n = m.rows;
  Mat aug(n, 2 * n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) aug.at(i, j) = m.at(i, j);
    aug.at(i, n + i) = 1;
  }
  std::vector<int> piv = rref(F, aug);
  if (aug.rows != n || piv.back() >= n)
    throw InvalidInputError("invert: singular matrix");
  Mat out(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) out.at(i, j) = aug.at(i, n + j);
  return out;
}

Vec mat_vec(const Field& F, const Mat& m, const Vec& x) {
  Vec y(m.rows, 0);
  for (int i = 0; i < m.rows; ++i) {
    Fel acc = 0;
    for (int j = 0; j < m.cols; ++j)
      if (m.at(i, j) != 0 && x[j] != 0)
        acc = F.add(acc, F.mul(m.at(i, j), x[j]));
    y[i] = acc;
  }
  return y;
}

Vec vec_mat(const Field& F, const Vec& x, const Mat& m) {
  Vec y(m.cols, 0);
  for (int i = 0; i < m.rows; ++i) {
    if (x[i] == 0) continue;
    for (int j = 0; j < m.cols; ++j)
      if (m.at(i, j) != 0)
        y[j] = F.add(y[j], F.mul(x[i], m.at(i, j)));
  }
  return y;
}

CoordinateMap::CoordinateMap(const Field& F, const Mat& basis_rows) {
  int m = basis_rows.rows, n = basis_rows.cols;
  Mat aug(m, n + m);
  for (int i = 0; i < m; ++i) {
    for (int j = 0; j < n; ++j) aug.at(i, j) = basis_rows.at(i, j);
    aug.at(i, n + i) = 1;
  }
  // Eliminate on the left block only; the right block tracks row operations.
  int r = 0;
  std::vector<int> pivots;
  for (int c = 0; c < n && r < m; ++c) {
    int sel = -1;
    for (int i = r; i < m; ++i)
      if (aug.at(i, c) != 0) { sel = i; break; }
    if (sel < 0) continue;
    if (sel != r)
      for (int j = 0; j < n + m; ++j) std::swap(aug.at(sel, j), aug.at(r, j));
    Fel ip = F.inv(aug.at(r, c));
    for (int j = 0; j < n + m; ++j) aug.at(r, j) = F.mul(aug.at(r, j), ip);
    for (int i = 0; i < m; ++i) {
      if (i == r || aug.at(i, c) == 0) continue;
      Fel f = aug.at(i, c);
      for (int j = 0; j < n + m; ++j)
        aug.at(i, j) = F.sub(aug.at(i, j), F.mul(f, aug.at(r, j)));
    }
    pivots.push_back(c);
    ++r;
  }
  if (r != m) throw InvalidInputError("CoordinateMap: dependent rows");
  reduced_ = Mat(m, n);
  transform_ = Mat(m, m);
  for (int i = 0; i < m; ++i) {
    for (int j = 0; j < n; ++j) reduced_.at(i, j) = aug.at(i, j);
    for (int j = 0; j < m; ++j) transform_.at(i, j) = aug.at(i, n + j);
  }
  pivots_ = std::move(pivots);
}

Vec CoordinateMap::coords(const Field& F, const Vec& v, bool* ok) const {
  int m = reduced_.rows;
  Vec c(m, 0);
  Vec w = v;
  for (int i = 0; i < m; ++i) {
    Fel f = w[pivots_[i]];
    if (f != 0) {
      c[i] = f;
      for (int j = 0; j < reduced_.cols; ++j)
        w[j] = F.sub(w[j], F.mul(f, reduced_.at(i, j)));
    }
  }
  bool in_span = std::all_of(w.begin(), w.end(), [](Fel x) { return x == 0; });
  if (ok) *ok = in_span;
  else if (!in_span) throw InvalidInputError("coords: vector outside span");
  return vec_mat(F, c, transform_);
}

SubspaceBasis transporter(const Field& F, const BilinearAction& act,
                          const SubspaceBasis& u, const SubspaceBasis& v) {
  if (u.ambient != act.module_dim || v.ambient != act.module_dim)
    throw InvalidInputError("transporter: dimension mismatch");
  // Solve act(u_i, h) in V for all basis u_i: a homogeneous system in the
  // coordinates of h, one row block per (u_i, residual coordinate).
  Mat sys(u.dim() * act.module_dim, act.acting_dim);
  for (int i = 0; i < u.dim(); ++i) {
    Vec ui = u.rows.row(i);
    for (int k = 0; k < act.acting_dim; ++k) {
      Vec w = reduce_against(F, v, act.apply_basis(ui, k));
      for (int c = 0; c < act.module_dim; ++c)
        sys.at(i * act.module_dim + c, k) = w[c];
    }
  }
  return null_space(F, sys);
}

} // namespace cmlat
