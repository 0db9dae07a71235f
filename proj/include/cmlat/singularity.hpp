#pragma once

#include <map>
#include <memory>
#include <optional>
#include <string>

#include "cmlat/algebra.hpp"

namespace cmlat {

/// One sparse generator term: coefficient given as integer coordinates of
/// the residue polynomial, so the same spec re-instantiates over any prime.
struct GeneratorTerm {
  int exp = 0;
  std::vector<long long> coeff; // length <= field degree
};

/// Branch parametrization data for one curve singularity.
struct SingularitySpec {
  int characteristic = 2;
  int degree = 1;
  int branches = 1;
  int truncation = 1;
  // ordered: name -> per-branch sparse term lists
  std::vector<std::pair<std::string, std::vector<std::vector<GeneratorTerm>>>>
      generators;

  const std::vector<std::vector<GeneratorTerm>>* find(const std::string& name) const;
  SingularitySpec with_field(int p, int e) const;
  SingularitySpec with_truncation(int n) const;
  SingularitySpec permute_branches(const std::vector<int>& perm) const;
};

void validate_spec(const SingularitySpec& spec);

/// A spec realized in a concrete ambient ring.
struct RealizedSpec {
  std::shared_ptr<const AmbientRing> ambient;
  std::vector<std::pair<std::string, Vec>> generators;

  const Vec* find(const std::string& name) const;
};

RealizedSpec realize(const SingularitySpec& spec);

/// Lambda together with the conductor certificate t^c * Lambda0 <= Lambda.
struct CertifiedAlgebra {
  SingularitySpec spec;
  std::shared_ptr<const AmbientRing> ambient;
  FiniteAlgebra lambda;
  int conductor = 0;
  int margin = 0;

  FiniteAlgebra lambda0() const;
};

/// Closure of the generators plus the smallest conductor exponent with
/// t^c Lambda0 inside Lambda; fails when no c <= N-3 exists.
CertifiedAlgebra build_singularity(const SingularitySpec& spec);

enum class OverringKind { Lambda0, Prime, DoublePrime, PrimeIdempotent };

/// The overrings t*Lambda0 + Lambda, t*m*Lambda0 + Lambda, Lambda' + k*e
/// and the full ring.
FiniteAlgebra derive_overring(const CertifiedAlgebra& base, OverringKind kind,
                              const Vec* idempotent = nullptr);

/// Pair of per-branch vanishing orders of the generators x and y.
struct ValuationType {
  std::vector<int> vx, vy;
  bool operator==(const ValuationType& o) const = default;
};

ValuationType valuation_type(const CertifiedAlgebra& base);
ValuationType valuation_type_of(const RealizedSpec& rs);

enum class SingClass { T, P, Unrecognized };

struct TypeClassification {
  SingClass kind = SingClass::Unrecognized;
  int p = 0, q = 0;    // set for T; same-parity pairs reported with p <= q
  std::string parity;  // "odd-odd", "odd-even" or "even-even" for T and P
  std::string str() const;
};

/// Matches a valuation type against the T- and P-tables up to simultaneous
/// branch permutation and generator swap.
TypeClassification classify_type(const ValuationType& vt);

struct TamenessReport {
  DVector d_lambda0, d_lambda_prime, d_lambda_double_prime;
  std::vector<std::pair<std::string, DVector>> d_lambda_prime_e;
  bool cond_a = false, cond_b = false, cond_c = false;
  bool criterion_satisfied = false;
  std::string caveat = "criterion applies to infinite CM type";
};

/// Evaluates the three tameness restrictions on the d-vectors of
/// Lambda0, Lambda', Lambda'' and every Lambda'_e.
TamenessReport tameness_report(const CertifiedAlgebra& base);

enum class StandardKind { Tpq, FamilyMember };

/// Monomial parametrizations realizing the T-table valuations, and the
/// one-parameter degeneration family members (scaled generators plus the
/// monomial generators of the ideal I). The default truncation is the
/// largest ideal exponent plus 4; family members must raise N through the
/// override so the ideal's monomial list is extended along with it.
SingularitySpec build_standard(StandardKind kind, int p, int q,
                               std::optional<long long> lambda_value = {},
                               int field_char = 5, int field_degree = 1,
                               std::optional<int> truncation_override = {});

/// Sum over branches of the generic branch rank of an n-fold module,
/// computed on the certified degree window.
int rational_length(const SubspaceBasis& m, const CertifiedAlgebra& base, int n);

} // namespace cmlat
