#include "cmlat/gf.hpp"

#include <algorithm>

namespace cmlat {

bool is_prime(long long n) {
  if (n < 2) return false;
  for (long long d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

namespace {

// Polynomials over F_p, coefficients low degree first, no trailing zeros.
using Poly = std::vector<int>;

void trim(Poly& f) {
  while (!f.empty() && f.back() == 0) f.pop_back();
}

Poly poly_mul(const Poly& f, const Poly& g, int p) {
  if (f.empty() || g.empty()) return {};
  Poly h(f.size() + g.size() - 1, 0);
  for (size_t i = 0; i < f.size(); ++i)
    for (size_t j = 0; j < g.size(); ++j)
      h[i + j] = (h[i + j] + f[i] * g[j]) % p;
  trim(h);
  return h;
}

// f mod g, g monic.
Poly poly_mod(Poly f, const Poly& g, int p) {
  trim(f);
  while (f.size() >= g.size()) {
    int c = f.back();
    size_t shift = f.size() - g.size();
    for (size_t i = 0; i < g.size(); ++i) {
      f[shift + i] = ((f[shift + i] - c * g[i]) % p + p) % p;
    }
    trim(f);
  }
  return f;
}

bool poly_is_zero(const Poly& f) { return f.empty(); }

// Trial division by all monic polynomials of degree 1..deg/2.
bool is_irreducible(const Poly& f, int p) {
  int deg = static_cast<int>(f.size()) - 1;
  if (deg == 1) return true;
  for (int d = 1; 2 * d <= deg; ++d) {
    // all monic polys of degree d: p^d candidates
    long long count = 1;
    for (int i = 0; i < d; ++i) count *= p;
    for (long long code = 0; code < count; ++code) {
      Poly g(d + 1, 0);
      long long c = code;
      for (int i = 0; i < d; ++i) {
        g[i] = static_cast<int>(c % p);
        c /= p;
      }
      g[d] = 1;
      if (poly_is_zero(poly_mod(f, g, p))) return false;
    }
  }
  return true;
}

Poly find_modulus(int p, int e) {
  // Lexicographically smallest (c0, c1, ..., c_{e-1}) with x^e + ... irreducible.
  std::vector<int> c(e, 0);
  while (true) {
    Poly f(c.begin(), c.end());
    f.push_back(1);
    if (is_irreducible(f, p)) return f;
    int i = e - 1;
    while (i >= 0 && c[i] == p - 1) c[i--] = 0;
    if (i < 0) break;
    ++c[i];
  }
  throw InvalidInputError("no irreducible modulus found"); // unreachable
}

constexpr int kTableLimit = 512;

} // namespace

Field Field::make(int p, int e) {
  if (!is_prime(p)) throw InvalidInputError("field characteristic must be prime");
  if (e < 1 || e > 8) throw InvalidInputError("field degree must be in [1, 8]");
  long long q = 1;
  for (int i = 0; i < e; ++i) {
    q *= p;
    if (q > (1LL << 30)) throw InvalidInputError("field too large");
  }
  Field F;
  F.p_ = p;
  F.e_ = e;
  F.q_ = static_cast<int>(q);
  Poly mod = find_modulus(p, e);
  F.modulus_.assign(mod.begin(), mod.end() - 1); // drop leading 1
  if (F.q_ <= kTableLimit) {
    F.tabled_ = true;
    int n = F.q_;
    F.add_tab_.resize(static_cast<size_t>(n) * n);
    F.mul_tab_.resize(static_cast<size_t>(n) * n);
    F.neg_tab_.resize(n);
    F.inv_tab_.assign(n, 0);
    for (Fel a = 0; a < n; ++a) {
      F.neg_tab_[a] = F.neg_slow(a);
      for (Fel b = 0; b < n; ++b) {
        F.add_tab_[a * n + b] = F.add_slow(a, b);
        F.mul_tab_[a * n + b] = F.mul_slow(a, b);
      }
    }
    for (Fel a = 1; a < n; ++a)
      for (Fel b = 1; b < n; ++b)
        if (F.mul_tab_[a * n + b] == 1) { F.inv_tab_[a] = b; break; }
  }
  return F;
}

std::vector<int> Field::digits(Fel a) const {
  std::vector<int> c(e_);
  for (int i = 0; i < e_; ++i) {
    c[i] = a % p_;
    a /= p_;
  }
  return c;
}

Fel Field::from_digits(const std::vector<int>& c) const {
  Fel a = 0;
  for (int i = e_ - 1; i >= 0; --i) {
    int d = i < static_cast<int>(c.size()) ? ((c[i] % p_) + p_) % p_ : 0;
    a = a * p_ + d;
  }
  return a;
}

Fel Field::add_slow(Fel a, Fel b) const {
  Fel r = 0, base = 1;
  for (int i = 0; i < e_; ++i) {
    r += ((a % p_ + b % p_) % p_) * base;
    a /= p_;
    b /= p_;
    base *= p_;
  }
  return r;
}

Fel Field::neg_slow(Fel a) const {
  Fel r = 0, base = 1;
  for (int i = 0; i < e_; ++i) {
    r += ((p_ - a % p_) % p_) * base;
    a /= p_;
    base *= p_;
  }
  return r;
}

Fel Field::mul_slow(Fel a, Fel b) const {
  Poly fa, fb;
  for (Fel x = a; x != 0; x /= p_) fa.push_back(x % p_);
  for (Fel x = b; x != 0; x /= p_) fb.push_back(x % p_);
  Poly mod(modulus_);
  mod.push_back(1);
  Poly h = poly_mod(poly_mul(fa, fb, p_), mod, p_);
  Fel r = 0;
  for (int i = static_cast<int>(h.size()) - 1; i >= 0; --i) r = r * p_ + h[i];
  return r;
}

Fel Field::inv(Fel a) const {
  if (a == 0) throw InvalidInputError("inverse of zero");
  if (tabled_) return inv_tab_[a];
  return pow(a, q_ - 2);
}

Fel Field::pow(Fel a, long long n) const {
  if (n < 0) return pow(inv(a), -n);
  Fel r = 1, b = a;
  while (n > 0) {
    if (n & 1) r = mul(r, b);
    b = mul(b, b);
    n >>= 1;
  }
  return r;
}

} // namespace cmlat
