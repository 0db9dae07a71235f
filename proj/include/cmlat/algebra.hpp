#pragma once

#include <optional>
#include <string>
#include <vector>

#include "cmlat/branches.hpp"
#include "cmlat/context.hpp"

namespace cmlat {

/// Algebra given by structure constants on an abstract basis b_0..b_{dim-1}.
/// Associativity and the two-sided identity are validated on construction.
class QuotientAlgebra : public AlgebraContext {
public:
  QuotientAlgebra(Field F, std::vector<Mat> basis_products, Vec one,
                  bool validate = true);

  Vec mul(const Vec& a, const Vec& b) const override;

  /// Product of basis elements: row j of basis_products[i] is b_i * b_j.
  const Mat& left_table(int i) const { return tab_[i]; }

  bool commutative() const;
  Vec pow_elem(const Vec& a, long long n) const;

  /// Jacobson radical of a commutative algebra: the nilpotent elements,
  /// computed as the kernel of a p-power map.
  SubspaceBasis radical() const;

private:
  std::vector<Mat> tab_; // tab_[i].row(j) = b_i * b_j
};

/// Multiplication-closed unital subspace of an ambient algebra.
struct FiniteAlgebra {
  const AlgebraContext* ctx = nullptr;
  SubspaceBasis basis;
  bool contains_one = false;

  int dim() const { return basis.dim(); }
};

/// Smallest subspace containing 1 and the generators, closed under
/// multiplication. Over an AmbientRing every generator must vanish at the
/// branch origins so the result is local.
FiniteAlgebra subalgebra_closure(const AlgebraContext& ctx,
                                 const std::vector<Vec>& gens);

/// Closure without the locality requirement (internal constructions).
FiniteAlgebra subalgebra_closure_any(const AlgebraContext& ctx,
                                     const std::vector<Vec>& gens);

bool is_multiplication_closed(const AlgebraContext& ctx, const SubspaceBasis& b);

/// Smallest alg-stable subspace of the n-fold module containing the
/// generators.
SubspaceBasis module_closure(const FiniteAlgebra& alg,
                             const std::vector<Vec>& gens, int n);

/// alg ∩ rad(ambient) for algebras living in an AmbientRing; equals the
/// Jacobson radical because generators vanish at branch origins.
SubspaceBasis radical(const FiniteAlgebra& alg);

/// Pairwise-orthogonal primitive idempotents summing to 1, for a
/// commutative algebra. Computed inside the subalgebra fixed by the q-power
/// map, where minimal polynomials split into distinct linear factors.
std::vector<Vec> primitive_idempotents(const QuotientAlgebra& q);
std::vector<Vec> primitive_idempotents(const FiniteAlgebra& alg);

/// A quotient algebra together with the maps between ambient vectors and
/// quotient coordinates.
struct QuotientView {
  QuotientAlgebra algebra;
  Mat complement_rows; // lifts of the quotient basis
  SubspaceBasis ideal;
  CoordinateMap stacked; // coordinates against [complement; ideal]

  Vec project(const Field& F, const Vec& ambient_vec) const;
  Vec lift(const Field& F, const Vec& coords) const;
};

/// Structure constants of alg/ideal on the canonical complement basis.
/// The ideal must be alg-stable.
QuotientView quotient_algebra(const FiniteAlgebra& alg, const SubspaceBasis& ideal);

/// Multiset of local-factor dimensions, sorted descending.
struct DVector {
  std::vector<int> parts;
  int total = 0;

  bool operator==(const DVector& o) const = default;
  std::string str() const;
};

DVector make_dvector(std::vector<int> parts);

/// d-vector of gamma over a local algebra lambda (both in one AmbientRing):
/// factor dimensions of gamma / rad(lambda)*gamma.
DVector d_vector(const FiniteAlgebra& gamma, const FiniteAlgebra& lambda);

} // namespace cmlat
