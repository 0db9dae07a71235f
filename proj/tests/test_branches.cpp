#include "doctest.h"

#include "cmlat/branches.hpp"
#include "oracles.hpp"

using namespace cmlat;

TEST_CASE("series multiplication") {
  Field F2 = Field::make(2, 1);
  AmbientRing R(F2, 2, 6);

  // (t1, 0) * (t1, t2) = (t1^2, 0)
  Vec a = R.monomial(0, 1);
  Vec b = R.monomial(0, 1);
  for (size_t i = 0; i < b.size(); ++i) b[i] = F2.add(b[i], R.monomial(1, 1)[i]);
  Vec prod = R.mul(a, b);
  CHECK(prod == R.monomial(0, 2));

  // a * 1 = a
  CHECK(R.mul(a, R.one()) == a);

  // (t^2 + t^3)(t^2) = t^4 + t^5 in k[[t]]/t^8, against direct convolution
  AmbientRing R1(F2, 1, 8);
  Vec x(8, 0);
  x[2] = x[3] = 1;
  Vec y(8, 0);
  y[2] = 1;
  Vec expect(8, 0);
  for (int i = 0; i < 8; ++i)
    for (int j = 0; j < 8; ++j)
      if (x[i] && y[j] && i + j < 8)
        expect[i + j] = F2.add(expect[i + j], F2.mul(x[i], y[j]));
  CHECK(R1.mul(x, y) == expect);
  CHECK(expect[4] == 1);
  CHECK(expect[5] == 1);
}

TEST_CASE("ring axioms on random triples") {
  Field F3 = Field::make(3, 1);
  AmbientRing R(F3, 2, 5);
  std::mt19937 rng(11);
  for (int t = 0; t < 100; ++t) {
    Vec a = oracle::random_vec(F3, R.dim(), rng);
    Vec b = oracle::random_vec(F3, R.dim(), rng);
    Vec c = oracle::random_vec(F3, R.dim(), rng);
    CHECK(R.mul(a, b) == R.mul(b, a));
    CHECK(R.mul(R.mul(a, b), c) == R.mul(a, R.mul(b, c)));
    Vec bc(b);
    for (size_t i = 0; i < bc.size(); ++i) bc[i] = F3.add(b[i], c[i]);
    Vec lhs = R.mul(a, bc);
    Vec rhs = R.mul(a, b);
    Vec rhs2 = R.mul(a, c);
    for (size_t i = 0; i < rhs.size(); ++i) rhs[i] = F3.add(rhs[i], rhs2[i]);
    CHECK(lhs == rhs);
  }
}

TEST_CASE("valuation") {
  Field F5 = Field::make(5, 1);
  AmbientRing R(F5, 2, 7);

  CHECK(R.valuation(Vec(R.dim(), 0)) == std::vector<int>{kValInf, kValInf});
  CHECK(R.valuation(R.one()) == std::vector<int>{0, 0});

  Vec a(R.dim(), 0);
  a[R.coord(0, 2)] = 1;          // t1^2
  a[R.coord(1, 3)] = 1;          // t2^3
  a[R.coord(1, 5)] = 2;          // + 2 t2^5
  CHECK(R.valuation(a) == std::vector<int>{2, 3});

  SUBCASE("v(ab) = v(a) + v(b) when sums stay below N") {
    std::mt19937 rng(17);
    int done = 0;
    while (done < 200) {
      Vec x = oracle::random_vec(F5, R.dim(), rng);
      Vec y = oracle::random_vec(F5, R.dim(), rng);
      auto vx = R.valuation(x), vy = R.valuation(y);
      bool usable = true;
      for (int i = 0; i < 2; ++i)
        if (vx[i] == kValInf || vy[i] == kValInf || vx[i] + vy[i] >= R.truncation())
          usable = false;
      if (!usable) continue;
      auto vp = R.valuation(R.mul(x, y));
      for (int i = 0; i < 2; ++i) CHECK(vp[i] == vx[i] + vy[i]);
      ++done;
    }
  }

  SUBCASE("valuation invariant under unit multiplication") {
    std::mt19937 rng(19);
    for (int t = 0; t < 50; ++t) {
      Vec u = oracle::random_vec(F5, R.dim(), rng);
      for (int i = 0; i < 2; ++i)
        if (u[R.coord(i, 0)] == 0) u[R.coord(i, 0)] = 1;
      REQUIRE(R.is_unit(u));
      Vec x = oracle::random_vec(F5, R.dim(), rng);
      CHECK(R.valuation(R.mul(u, x)) == R.valuation(x));
    }
  }
}

TEST_CASE("monomial ideal basis") {
  Field F2 = Field::make(2, 1);
  AmbientRing R(F2, 2, 8);

  CHECK(R.monomial_ideal_basis(0).dim() == R.dim());
  CHECK(R.monomial_ideal_basis(8).dim() == 0);

  SubspaceBasis i4 = R.monomial_ideal_basis(4);
  CHECK(i4.dim() == 8);
  for (int r = 0; r < i4.dim(); ++r) {
    auto v = R.valuation(i4.rows.row(r));
    for (int i = 0; i < 2; ++i) CHECK((v[i] >= 4));
  }
  // canonical: must equal its own rref
  CHECK(i4 == rref_canonicalize(F2, i4.rows));
  CHECK_THROWS_AS(R.monomial_ideal_basis(9), InvalidInputError);

  SUBCASE("ideal property via transporter") {
    BilinearAction act;
    act.module_dim = R.dim();
    act.acting_dim = R.dim();
    act.apply_basis = [&R](const Vec& u, int k) {
      Vec e(R.dim(), 0);
      e[k] = 1;
      return R.mul(u, e);
    };
    SubspaceBasis t = transporter(F2, act, i4, i4);
    CHECK(t.dim() == R.dim()); // everything multiplies the ideal into itself
  }
}
