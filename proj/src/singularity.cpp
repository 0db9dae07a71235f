#include "cmlat/singularity.hpp"
#include <map>

#include <algorithm>
#include <numeric>
#include <sstream>

namespace cmlat {

const std::vector<std::vector<GeneratorTerm>>* SingularitySpec::find(
    const std::string& name) const {
  for (const auto& [n, g] : generators)
    if (n == name) return &g;
  return nullptr;
}

SingularitySpec SingularitySpec::with_field(int p, int e) const {
  SingularitySpec s = *this;
  s.characteristic = p;
  s.degree = e;
  return s;
}

SingularitySpec SingularitySpec::with_truncation(int n) const {
  SingularitySpec s = *this;
  s.truncation = n;
  return s;
}

SingularitySpec SingularitySpec::permute_branches(
    const std::vector<int>& perm) const {
  SingularitySpec s = *this;
  for (auto& [name, g] : s.generators) {
    std::vector<std::vector<GeneratorTerm>> ng(g.size());
    for (size_t i = 0; i < g.size(); ++i) ng[perm[i]] = g[i];
    g = std::move(ng);
  }
  return s;
}

void validate_spec(const SingularitySpec& spec) {
  if (!is_prime(spec.characteristic))
    throw InvalidInputError("spec: characteristic must be prime");
  if (spec.degree < 1 || spec.degree > 8)
    throw InvalidInputError("spec: field degree must be in [1, 8]");
  if (spec.branches < 1) throw InvalidInputError("spec: branches must be >= 1");
  if (spec.truncation < 1)
    throw InvalidInputError("spec: truncation must be >= 1");
  for (const auto& [name, g] : spec.generators) {
    if (name.empty()) throw InvalidInputError("spec: empty generator name");
    if (static_cast<int>(g.size()) != spec.branches)
      throw InvalidInputError("spec: generator '" + name +
                              "' has wrong branch count");
    for (const auto& branch : g)
      for (const GeneratorTerm& t : branch) {
        if (t.exp < 1)
          throw InvalidInputError("spec: generator '" + name +
                                  "' has exponent < 1 (locality)");
        if (t.exp >= spec.truncation)
          throw TruncationError("spec: generator '" + name +
                                "' has exponent >= truncation; raise N");
        if (static_cast<int>(t.coeff.size()) > spec.degree)
          throw InvalidInputError("spec: coefficient vector longer than degree");
      }
  }
}

const Vec* RealizedSpec::find(const std::string& name) const {
  for (const auto& [n, v] : generators)
    if (n == name) return &v;
  return nullptr;
}

RealizedSpec realize(const SingularitySpec& spec) {
  validate_spec(spec);
  Field F = Field::make(spec.characteristic, spec.degree);
  auto ring = make_ambient(F, spec.branches, spec.truncation);
  RealizedSpec rs;
  rs.ambient = ring;
  for (const auto& [name, g] : spec.generators) {
    Vec v(ring->dim(), 0);
    for (int b = 0; b < spec.branches; ++b)
      for (const GeneratorTerm& t : g[b]) {
        std::vector<int> digits(spec.degree, 0);
        for (size_t i = 0; i < t.coeff.size(); ++i)
          digits[i] = ring->field().from_int(t.coeff[i]);
        Fel c = ring->field().from_digits(digits);
        int pos = ring->coord(b, t.exp);
        v[pos] = ring->field().add(v[pos], c);
      }
    rs.generators.emplace_back(name, std::move(v));
  }
  return rs;
}

FiniteAlgebra CertifiedAlgebra::lambda0() const {
  return FiniteAlgebra{ambient.get(),
                       full_subspace(ambient->field(), ambient->dim()), true};
}

CertifiedAlgebra build_singularity(const SingularitySpec& spec) {
  RealizedSpec rs = realize(spec);
  const AmbientRing& R = *rs.ambient;
  std::vector<Vec> gens;
  for (const auto& [name, v] : rs.generators) gens.push_back(v);
  FiniteAlgebra lambda = subalgebra_closure(R, gens);

  int n = R.truncation();
  const Field& F = R.field();
  auto contained = [&](int c) {
    return subspace_leq(F, R.monomial_ideal_basis(c), lambda.basis);
  };
  if (n - 3 < 0 || !contained(n - 3))
    throw TruncationError(
        "no conductor exponent c <= N-3 fits; raise the truncation");
  int c = n - 3;
  while (c > 0 && contained(c - 1)) --c;
  return CertifiedAlgebra{spec, rs.ambient, std::move(lambda), c, n - c};
}

FiniteAlgebra derive_overring(const CertifiedAlgebra& base, OverringKind kind,
                              const Vec* idempotent) {
  const AmbientRing& R = *base.ambient;
  const Field& F = R.field();
  switch (kind) {
    case OverringKind::Lambda0:
      return base.lambda0();
    case OverringKind::Prime: {
      SubspaceBasis b =
          subspace_sum(F, R.monomial_ideal_basis(1), base.lambda.basis);
      return FiniteAlgebra{&R, std::move(b), true};
    }
    case OverringKind::DoublePrime: {
      SubspaceBasis m = radical(base.lambda);
      Vec t = R.t_element();
      std::vector<Vec> rows;
      for (int i = 0; i < m.dim(); ++i) {
        Vec tx = R.mul(t, m.rows.row(i));
        for (int s = 0; s < R.branches(); ++s)
          for (int j = 0; j < R.truncation(); ++j)
            rows.push_back(R.mul(tx, R.monomial(s, j)));
      }
      SubspaceBasis tm = span_of(F, R.dim(), rows);
      return FiniteAlgebra{&R, subspace_sum(F, tm, base.lambda.basis), true};
    }
    case OverringKind::PrimeIdempotent: {
      if (!idempotent)
        throw InvalidInputError("prime_e overring needs an idempotent");
      FiniteAlgebra prime = derive_overring(base, OverringKind::Prime);
      if (!subspace_contains(F, prime.basis, *idempotent))
        throw InvalidInputError("element is not in Lambda'");
      if (R.mul(*idempotent, *idempotent) != *idempotent)
        throw InvalidInputError("element is not idempotent");
      SubspaceBasis b =
          subspace_sum(F, prime.basis, span_of(F, R.dim(), {*idempotent}));
      return FiniteAlgebra{&R, std::move(b), true};
    }
  }
  throw InvalidInputError("unknown overring kind");
}

ValuationType valuation_type_of(const RealizedSpec& rs) {
  const Vec* x = rs.find("x");
  const Vec* y = rs.find("y");
  if (!x || !y)
    throw InvalidInputError("valuation type needs generators named x and y");
  return ValuationType{rs.ambient->valuation(*x), rs.ambient->valuation(*y)};
}

ValuationType valuation_type(const CertifiedAlgebra& base) {
  return valuation_type_of(realize(base.spec));
}

std::string TypeClassification::str() const {
  std::ostringstream os;
  switch (kind) {
    case SingClass::T:
      os << "T(" << p << "," << q << ")";
      break;
    case SingClass::P:
      os << "P(" << parity << ")";
      break;
    case SingClass::Unrecognized:
      os << "unrecognized";
      break;
  }
  return os.str();
}

namespace {

bool admissible(long long p, long long q) {
  // 1/p + 1/q <= 1/2 in integers
  return p >= 1 && q >= 1 && 2 * (p + q) <= p * q;
}

struct Candidate {
  int p, q;
  std::string parity;
};

// Try to read (vx, vy) as one T-table row; entries already permuted/swapped.
std::optional<Candidate> match_T(const std::vector<int>& vx,
                                 const std::vector<int>& vy) {
  size_t s = vx.size();
  auto fin = [](int v) { return v != kValInf; };
  if (s == 2) {
    // (2, p-2), (q-2, 2) with p, q odd
    if (fin(vx[0]) && fin(vx[1]) && fin(vy[0]) && fin(vy[1]) && vx[0] == 2 &&
        vy[1] == 2 && vx[1] >= 1 && vy[0] >= 1) {
      int p = vx[1] + 2, q = vy[0] + 2;
      if (p % 2 == 1 && q % 2 == 1 && admissible(p, q))
        return Candidate{p, q, "odd-odd"};
    }
  } else if (s == 3) {
    // (1, 1, p-2), (inf, q/2-1, 2) with p odd, q even
    if (vx[0] == 1 && vx[1] == 1 && fin(vx[2]) && vx[2] >= 1 &&
        vy[0] == kValInf && fin(vy[1]) && vy[1] >= 1 && vy[2] == 2) {
      int p = vx[2] + 2, q = 2 * (vy[1] + 1);
      if (p % 2 == 1 && admissible(p, q)) return Candidate{p, q, "odd-even"};
    }
  } else if (s == 4) {
    // (1, 1, p/2-1, inf), (q/2-1, inf, 1, 1) with p, q even
    if (vx[0] == 1 && vx[1] == 1 && fin(vx[2]) && vx[2] >= 1 &&
        vx[3] == kValInf && fin(vy[0]) && vy[0] >= 1 && vy[1] == kValInf &&
        vy[2] == 1 && vy[3] == 1) {
      int p = 2 * (vx[2] + 1), q = 2 * (vy[0] + 1);
      if (admissible(p, q)) return Candidate{p, q, "even-even"};
    }
  }
  return std::nullopt;
}

bool match_P(const std::vector<int>& vx, const std::vector<int>& vy,
             std::string& parity) {
  size_t s = vx.size();
  const int inf = kValInf;
  if (s == 2 && vx == std::vector<int>{2, inf} && vy == std::vector<int>{inf, 2}) {
    parity = "odd-odd";
    return true;
  }
  if (s == 3 && vx == std::vector<int>{1, 1, inf} &&
      vy == std::vector<int>{inf, inf, 2}) {
    parity = "odd-even";
    return true;
  }
  if (s == 4 && vx == std::vector<int>{1, 1, inf, inf} &&
      vy == std::vector<int>{inf, inf, 1, 1}) {
    parity = "even-even";
    return true;
  }
  return false;
}

} // namespace

TypeClassification classify_type(const ValuationType& vt) {
  size_t s = vt.vx.size();
  if (vt.vy.size() != s || (s != 2 && s != 3 && s != 4)) return {};

  std::vector<int> perm(s);
  std::iota(perm.begin(), perm.end(), 0);
  std::optional<Candidate> best;
  bool p_found = false;
  std::string p_parity;
  do {
    for (int swap = 0; swap < 2; ++swap) {
      std::vector<int> a(s), b(s);
      for (size_t i = 0; i < s; ++i) {
        a[i] = (swap ? vt.vy : vt.vx)[perm[i]];
        b[i] = (swap ? vt.vx : vt.vy)[perm[i]];
      }
      if (auto c = match_T(a, b)) {
        // T_pq and T_qp agree up to the allowed symmetries for same-parity
        // rows; report the lexicographically smallest pair.
        if (!best || std::pair{c->p, c->q} < std::pair{best->p, best->q})
          best = c;
      }
      std::string par;
      if (match_P(a, b, par)) {
        p_found = true;
        p_parity = par;
      }
    }
  } while (std::next_permutation(perm.begin(), perm.end()));

  if (best) return TypeClassification{SingClass::T, best->p, best->q, best->parity};
  if (p_found) return TypeClassification{SingClass::P, 0, 0, p_parity};
  return {};
}

TamenessReport tameness_report(const CertifiedAlgebra& base) {
  const AmbientRing& R = *base.ambient;
  const Field& F = R.field();
  FiniteAlgebra l0 = derive_overring(base, OverringKind::Lambda0);
  FiniteAlgebra lp = derive_overring(base, OverringKind::Prime);
  FiniteAlgebra lpp = derive_overring(base, OverringKind::DoublePrime);

  TamenessReport rep;
  rep.d_lambda0 = d_vector(l0, base.lambda);
  rep.d_lambda_prime = d_vector(lp, base.lambda);
  rep.d_lambda_double_prime = d_vector(lpp, base.lambda);

  // All idempotents of the commutative Lambda' are subset sums of the
  // primitive ones; the empty subset covers Lambda' itself.
  std::vector<Vec> prim = primitive_idempotents(lp);
  size_t m = prim.size();
  DVector bad = make_dvector({3, 1});
  bool any_31 = false;
  for (size_t mask = 0; mask < (1u << m); ++mask) {
    Vec e(R.dim(), 0);
    for (size_t i = 0; i < m; ++i)
      if (mask & (1u << i))
        for (int j = 0; j < R.dim(); ++j) e[j] = F.add(e[j], prim[i][j]);
    FiniteAlgebra le = derive_overring(base, OverringKind::PrimeIdempotent, &e);
    DVector d = d_vector(le, base.lambda);
    if (d == bad) any_31 = true;
    std::ostringstream id;
    id << "e" << mask;
    rep.d_lambda_prime_e.emplace_back(id.str(), std::move(d));
  }

  const DVector& d0 = rep.d_lambda0;
  bool excluded = d0 == make_dvector({4}) || d0 == make_dvector({3, 1}) ||
                  d0 == make_dvector({3});
  rep.cond_a = d0.total <= 4 && !excluded;
  rep.cond_b = rep.d_lambda_prime.total <= 3 && !any_31;
  rep.cond_c = d0.total != 3 || rep.d_lambda_double_prime.total <= 2;
  rep.criterion_satisfied = rep.cond_a && rep.cond_b && rep.cond_c;
  return rep;
}

namespace {

// Sparse integer polynomial in one branch variable.
using ZPoly = std::vector<std::pair<int, long long>>;

ZPoly zmul(const ZPoly& a, const ZPoly& b, int truncation) {
  std::map<int, long long> acc;
  for (auto [ea, ca] : a)
    for (auto [eb, cb] : b)
      if (ea + eb < truncation) acc[ea + eb] += ca * cb;
  ZPoly out;
  for (auto [e, c] : acc)
    if (c != 0) out.emplace_back(e, c);
  return out;
}

ZPoly zscale(const ZPoly& a, long long s) {
  ZPoly out;
  for (auto [e, c] : a)
    if (c * s != 0) out.emplace_back(e, c * s);
  return out;
}

std::vector<std::vector<GeneratorTerm>> to_gen(const std::vector<ZPoly>& g) {
  std::vector<std::vector<GeneratorTerm>> out;
  for (const ZPoly& branch : g) {
    std::vector<GeneratorTerm> terms;
    for (auto [e, c] : branch) terms.push_back(GeneratorTerm{e, {c}});
    out.push_back(std::move(terms));
  }
  return out;
}

} // namespace

SingularitySpec build_standard(StandardKind kind, int p, int q,
                               std::optional<long long> lambda_value,
                               int field_char, int field_degree,
                               std::optional<int> truncation_override) {
  if (!admissible(p, q))
    throw InvalidInputError("build_standard requires 1/p + 1/q <= 1/2");
  bool podd = p % 2, qodd = q % 2;
  // mixed parity: the table fixes the odd role first
  if (!podd && qodd) {
    std::swap(p, q);
    std::swap(podd, qodd);
  }

  SingularitySpec spec;
  spec.characteristic = field_char;
  spec.degree = field_degree;

  std::vector<int> b_exponents;
  std::vector<ZPoly> x, y;
  auto mono = [](int e) { return ZPoly{{e, 1}}; };
  if (podd && qodd) {
    spec.branches = 2;
    b_exponents = {p + 1, q + 1};
    x = {mono(2), mono(p - 2)};
    y = {mono(q - 2), mono(2)};
  } else if (podd && !qodd) {
    spec.branches = 3;
    b_exponents = {q / 2 + 1, q / 2 + 1, p + 1};
    x = {mono(1), mono(1), mono(p - 2)};
    y = {{}, mono(q / 2 - 1), mono(2)};
  } else {
    spec.branches = 4;
    b_exponents = {q / 2 + 1, p / 2 + 1, q / 2 + 1, p / 2 + 1};
    x = {mono(1), mono(1), mono(p / 2 - 1), {}};
    y = {mono(q / 2 - 1), {}, mono(1), mono(1)};
  }
  spec.truncation =
      *std::max_element(b_exponents.begin(), b_exponents.end()) + 4;
  if (truncation_override) {
    if (*truncation_override < spec.truncation)
      throw InvalidInputError("truncation override below the required minimum");
    spec.truncation = *truncation_override;
  }

  // Branches with identical (x, y) parametrizations would merge into one
  // branch and destroy the conductor; separate each duplicate by a
  // valuation-preserving higher-order term on y.
  for (int i = 0; i < spec.branches; ++i)
    for (int j = i + 1; j < spec.branches; ++j) {
      if (x[i] == x[j] && y[i] == y[j]) {
        ZPoly& target = y[j].empty() ? x[j] : y[j];
        int v = target.front().first;
        if (v + 1 < spec.truncation) target.emplace_back(v + 1, 1);
      }
    }

  if (kind == StandardKind::Tpq) {
    spec.generators.emplace_back("x", to_gen(x));
    spec.generators.emplace_back("y", to_gen(y));
    return spec;
  }

  if (!lambda_value)
    throw InvalidInputError("family member needs a lambda value");
  long long lam = *lambda_value;

  // scaling patterns per parity case
  std::vector<long long> sx, sy;
  if (podd && qodd) {
    sx = {lam, 1};
    sy = {1, lam};
  } else if (podd && !qodd) {
    sx = {1, 1, lam};
    sy = {lam, lam, 1};
  } else {
    sx = {1, lam, 1, lam};
    sy = {lam, 1, lam, 1};
  }
  std::vector<ZPoly> xs(spec.branches), ys(spec.branches), xy(spec.branches);
  for (int i = 0; i < spec.branches; ++i) {
    xs[i] = zscale(x[i], sx[i]);
    ys[i] = zscale(y[i], sy[i]);
    xy[i] = zmul(x[i], y[i], spec.truncation);
  }
  spec.generators.emplace_back("x", to_gen(xs));
  spec.generators.emplace_back("y", to_gen(ys));
  spec.generators.emplace_back("xy", to_gen(xy));

  // monomial generators of the ideal I = b*Lambda0, one name per branch
  for (int i = 0; i < spec.branches; ++i) {
    std::vector<std::vector<GeneratorTerm>> g(spec.branches);
    for (int j = b_exponents[i]; j < spec.truncation; ++j)
      g[i].push_back(GeneratorTerm{j, {1}});
    std::ostringstream name;
    name << "i" << i + 1;
    spec.generators.emplace_back(name.str(), std::move(g));
  }
  return spec;
}

int rational_length(const SubspaceBasis& m, const CertifiedAlgebra& base, int n) {
  const AmbientRing& R = *base.ambient;
  const Field& F = R.field();
  int N = R.truncation(), c = base.conductor;
  if (m.ambient != n * R.dim())
    throw InvalidInputError("rational_length: module dimension mismatch");

  auto window_dim = [&](int branch, int w) {
    // rank of the projection onto degrees [0, w) of one branch, all copies
    Mat proj(m.dim(), n * w);
    for (int r = 0; r < m.dim(); ++r)
      for (int copy = 0; copy < n; ++copy)
        for (int j = 0; j < w; ++j)
          proj.at(r, copy * w + j) =
              m.rows.at(r, copy * R.dim() + R.coord(branch, j));
    return rank(F, proj);
  };

  int total = 0;
  for (int i = 0; i < R.branches(); ++i) {
    if (N - 2 < c)
      throw InvalidInputError("rational_length: window too small");
    int d2 = window_dim(i, N - 2);
    int d1 = window_dim(i, N - 1);
    int d0 = window_dim(i, N);
    int r = d0 - d1;
    if (d1 - d2 != r)
      throw InvalidInputError(
          "rational_length: branch rank not stabilized; module not saturated "
          "at this truncation");
    total += r;
  }
  return total;
}

} // namespace cmlat
