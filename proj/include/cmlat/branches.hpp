#pragma once

#include <memory>

#include "cmlat/context.hpp"

namespace cmlat {

/// Valuation entry meaning "zero up to the truncation order".
inline constexpr int kValInf = 1 << 30;

/// The truncated multi-branch series ring: a product of s copies of
/// k[t]/t^N, with coordinates (branch i, degree j) at index i*N + j.
class AmbientRing : public AlgebraContext {
public:
  AmbientRing(Field F, int branches, int truncation);

  int branches() const { return s_; }
  int truncation() const { return n_; }
  int coord(int branch, int deg) const { return branch * n_ + deg; }

  /// Branchwise convolution truncated at degree N.
  Vec mul(const Vec& a, const Vec& b) const override;

  /// Per-branch least nonzero exponent; kValInf for a zero branch.
  std::vector<int> valuation(const Vec& a) const;

  /// Element with a single monomial c * t_i^j on one branch.
  Vec monomial(int branch, int deg, Fel c = 1) const;

  /// The element t = (t_1, ..., t_s).
  Vec t_element() const;

  /// Canonical basis of t^c * (whole ring): all monomials of degree >= c.
  SubspaceBasis monomial_ideal_basis(int c) const;

  /// The radical: everything vanishing at each branch origin.
  const SubspaceBasis& radical_basis() const { return rad_; }

  bool is_unit(const Vec& a) const;

private:
  int s_, n_;
  SubspaceBasis rad_;
};

std::shared_ptr<const AmbientRing> make_ambient(Field F, int branches,
                                                int truncation);

} // namespace cmlat
