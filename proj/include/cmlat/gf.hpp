#pragma once

#include <cstdint>
#include <vector>

#include "cmlat/errors.hpp"

namespace cmlat {

/// Field elements are integer codes in [0, q). The code of a residue
/// polynomial c0 + c1*x + ... + c_{e-1}*x^{e-1} over F_p is sum(c_i * p^i),
/// so codes 0 and 1 are the additive and multiplicative identities.
using Fel = int;

/// Arithmetic for F_{p^e}, 1 <= e <= 8.
///
/// The modulus is deterministic: the lexicographically smallest monic
/// irreducible of degree e over F_p, coefficients compared low-degree-first.
/// For small q the four operation tables are precomputed; larger fields fall
/// back to direct polynomial arithmetic.
class Field {
public:
  static Field make(int p, int e);

  int p() const { return p_; }
  int e() const { return e_; }
  int q() const { return q_; }

  /// Non-leading coefficients of the modulus, low degree first (length e).
  const std::vector<int>& modulus() const { return modulus_; }

  Fel add(Fel a, Fel b) const {
    return tabled_ ? add_tab_[a * q_ + b] : add_slow(a, b);
  }
  Fel sub(Fel a, Fel b) const { return add(a, neg(b)); }
  Fel neg(Fel a) const { return tabled_ ? neg_tab_[a] : neg_slow(a); }
  Fel mul(Fel a, Fel b) const {
    return tabled_ ? mul_tab_[a * q_ + b] : mul_slow(a, b);
  }
  Fel inv(Fel a) const;
  Fel pow(Fel a, long long n) const;

  /// Reduce an integer mod p into the prime subfield.
  Fel from_int(long long n) const {
    long long r = n % p_;
    return static_cast<Fel>(r < 0 ? r + p_ : r);
  }

  /// Residue-polynomial coefficients of a code, low degree first (length e).
  std::vector<int> digits(Fel a) const;
  Fel from_digits(const std::vector<int>& c) const;

  bool operator==(const Field& o) const {
    return p_ == o.p_ && e_ == o.e_;
  }

private:
  Field() = default;
  Fel add_slow(Fel a, Fel b) const;
  Fel neg_slow(Fel a) const;
  Fel mul_slow(Fel a, Fel b) const;

  int p_ = 0, e_ = 0, q_ = 0;
  std::vector<int> modulus_;
  bool tabled_ = false;
  std::vector<Fel> add_tab_, mul_tab_, neg_tab_, inv_tab_;
};

bool is_prime(long long n);

} // namespace cmlat
