#include "cmlat/branches.hpp"

namespace cmlat {

AmbientRing::AmbientRing(Field F, int branches, int truncation)
    : AlgebraContext(std::move(F), branches * truncation),
      s_(branches), n_(truncation) {
  if (branches < 1) throw InvalidInputError("branches must be >= 1");
  if (truncation < 1) throw InvalidInputError("truncation must be >= 1");
  one_.assign(dim_, 0);
  for (int i = 0; i < s_; ++i) one_[coord(i, 0)] = 1;
  rad_ = monomial_ideal_basis(1);
}

Vec AmbientRing::mul(const Vec& a, const Vec& b) const {
  Vec out(dim_, 0);
  const Field& F = field();
  for (int i = 0; i < s_; ++i) {
    int base = i * n_;
    for (int j = 0; j < n_; ++j) {
      Fel aj = a[base + j];
      if (aj == 0) continue;
      for (int k = 0; j + k < n_; ++k) {
        Fel bk = b[base + k];
        if (bk == 0) continue;
        int t = base + j + k;
        out[t] = F.add(out[t], F.mul(aj, bk));
      }
    }
  }
  return out;
}

std::vector<int> AmbientRing::valuation(const Vec& a) const {
  std::vector<int> v(s_, kValInf);
  for (int i = 0; i < s_; ++i)
    for (int j = 0; j < n_; ++j)
      if (a[coord(i, j)] != 0) { v[i] = j; break; }
  return v;
}

Vec AmbientRing::monomial(int branch, int deg, Fel c) const {
  if (branch < 0 || branch >= s_ || deg < 0 || deg >= n_)
    throw InvalidInputError("monomial out of range");
  Vec a(dim_, 0);
  a[coord(branch, deg)] = c;
  return a;
}

Vec AmbientRing::t_element() const {
  Vec a(dim_, 0);
  if (n_ > 1)
    for (int i = 0; i < s_; ++i) a[coord(i, 1)] = 1;
  return a;
}

SubspaceBasis AmbientRing::monomial_ideal_basis(int c) const {
  if (c < 0 || c > n_) throw InvalidInputError("ideal exponent out of range");
  // Unit vectors listed with increasing pivot column form a valid RREF.
  Mat rows(s_ * (n_ - c), dim_);
  int r = 0;
  for (int i = 0; i < s_; ++i)
    for (int j = c; j < n_; ++j) rows.at(r++, coord(i, j)) = 1;
  return SubspaceBasis{dim_, std::move(rows)};
}

bool AmbientRing::is_unit(const Vec& a) const {
  for (int i = 0; i < s_; ++i)
    if (a[coord(i, 0)] == 0) return false;
  return true;
}

std::shared_ptr<const AmbientRing> make_ambient(Field F, int branches,
                                                int truncation) {
  return std::make_shared<const AmbientRing>(std::move(F), branches, truncation);
}

} // namespace cmlat
