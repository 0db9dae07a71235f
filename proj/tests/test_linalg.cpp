#include "doctest.h"

#include "cmlat/linalg.hpp"
#include "oracles.hpp"

using namespace cmlat;

TEST_CASE("rref canonical and idempotent") {
  Field F3 = Field::make(3, 1);
  SubspaceBasis id2 = rref_canonicalize(F3, identity_mat(2));
  CHECK(id2.dim() == 2);
  CHECK(id2.rows == identity_mat(2));

  SubspaceBasis z = rref_canonicalize(F3, Mat(3, 4));
  CHECK(z.dim() == 0);

  std::mt19937 rng(7);
  for (int t = 0; t < 30; ++t) {
    Mat m = oracle::random_mat(F3, 4, 5, rng);
    SubspaceBasis b = rref_canonicalize(F3, m);
    SubspaceBasis again = rref_canonicalize(F3, b.rows);
    CHECK(b == again);
  }
}

TEST_CASE("rank matches determinant-minor oracle on 50 random 4x4 over F2") {
  Field F2 = Field::make(2, 1);
  std::mt19937 rng(13);
  for (int t = 0; t < 50; ++t) {
    Mat m = oracle::random_mat(F2, 4, 4, rng);
    CHECK(rank(F2, m) == oracle::rank_by_minors(F2, m));
  }
}

TEST_CASE("sum and intersection satisfy the dimension formula") {
  Field F2 = Field::make(2, 1);
  // two distinct lines in F2^2
  SubspaceBasis l1 = span_of(F2, 2, {{1, 0}});
  SubspaceBasis l2 = span_of(F2, 2, {{0, 1}});
  CHECK(subspace_sum(F2, l1, l2).dim() == 2);
  CHECK(subspace_intersect(F2, l1, l2).dim() == 0);

  Field F3 = Field::make(3, 1);
  std::mt19937 rng(99);
  for (int t = 0; t < 100; ++t) {
    SubspaceBasis u = rref_canonicalize(F3, oracle::random_mat(F3, 3, 5, rng));
    SubspaceBasis v = rref_canonicalize(F3, oracle::random_mat(F3, 2, 5, rng));
    SubspaceBasis s = subspace_sum(F3, u, v);
    SubspaceBasis i = subspace_intersect(F3, u, v);
    CHECK(s.dim() + i.dim() == u.dim() + v.dim());
    CHECK(subspace_sum(F3, u, zero_subspace(5)) == u);
    CHECK(subspace_intersect(F3, u, u) == u);

    if (t < 5) {
      // membership oracle over all 3^5 vectors
      int count_inter = 0;
      oracle::for_all_vectors(F3, 5, [&](const Vec& w) {
        bool in_u = subspace_contains(F3, u, w);
        bool in_v = subspace_contains(F3, v, w);
        if (in_u && in_v) {
          ++count_inter;
          CHECK(subspace_contains(F3, i, w));
        }
      });
      long long expect = 1;
      for (int d = 0; d < i.dim(); ++d) expect *= 3;
      CHECK(count_inter == expect);
    }
  }
}

TEST_CASE("modular law inclusion on random triples") {
  Field F2 = Field::make(2, 1);
  std::mt19937 rng(5);
  for (int t = 0; t < 100; ++t) {
    SubspaceBasis u = rref_canonicalize(F2, oracle::random_mat(F2, 3, 6, rng));
    SubspaceBasis v = rref_canonicalize(F2, oracle::random_mat(F2, 2, 6, rng));
    SubspaceBasis w = rref_canonicalize(F2, oracle::random_mat(F2, 2, 6, rng));
    SubspaceBasis lhs = subspace_intersect(F2, u, subspace_sum(F2, v, w));
    SubspaceBasis rhs = subspace_sum(F2, subspace_intersect(F2, u, v),
                                     subspace_intersect(F2, u, w));
    CHECK(subspace_leq(F2, rhs, lhs));
  }
}

namespace {

// Right multiplication of F = F2[x]/x^2 on itself as a 2-dim module:
// basis {1, x}, acting space = the algebra itself.
BilinearAction nilpotent_right_mult(const Field& F2) {
  BilinearAction act;
  act.module_dim = 2;
  act.acting_dim = 2;
  act.apply_basis = [&F2](const Vec& u, int k) {
    Vec out(2, 0);
    if (k == 0) out = u;                  // action of 1
    else out[1] = u[0];                   // action of x: 1 -> x, x -> 0
    return out;
  };
  return act;
}

} // namespace

TEST_CASE("transporter examples and maximality") {
  Field F2 = Field::make(2, 1);
  BilinearAction act = nilpotent_right_mult(F2);
  SubspaceBasis xline = span_of(F2, 2, {{0, 1}});

  SUBCASE("U = 0 gives the whole acting space") {
    CHECK(transporter(F2, act, zero_subspace(2), xline).dim() == 2);
  }
  SUBCASE("V = whole module gives the whole acting space") {
    CHECK(transporter(F2, act, xline, full_subspace(F2, 2)).dim() == 2);
  }
  SUBCASE("span{x} into span{x} is everything, by enumeration") {
    SubspaceBasis t = transporter(F2, act, xline, xline);
    CHECK(t.dim() == 2);
    // exhaustive: every element h with x*h in span{x}
    oracle::for_all_vectors(F2, 2, [&](const Vec& h) {
      Vec img(2, 0);
      for (int k = 0; k < 2; ++k) {
        if (h[k] == 0) continue;
        Vec w = act.apply_basis(Vec{0, 1}, k);
        for (int c = 0; c < 2; ++c) img[c] = F2.add(img[c], F2.mul(h[k], w[c]));
      }
      bool stable = subspace_contains(F2, xline, img);
      CHECK(stable == subspace_contains(F2, t, h));
    });
  }
}

TEST_CASE("transporter is the largest such subspace, exhaustively over F2^4") {
  Field F2 = Field::make(2, 1);
  // action of M_2(F2) on row vectors of F2^2 by right multiplication;
  // acting space coordinates h = (h00, h01, h10, h11)
  BilinearAction act;
  act.module_dim = 2;
  act.acting_dim = 4;
  act.apply_basis = [&F2](const Vec& u, int k) {
    int i = k / 2, j = k % 2;
    Vec out(2, 0);
    out[j] = u[i];
    return out;
  };
  std::mt19937 rng(23);
  for (int t = 0; t < 20; ++t) {
    SubspaceBasis u = rref_canonicalize(F2, oracle::random_mat(F2, 1, 2, rng));
    SubspaceBasis v = rref_canonicalize(F2, oracle::random_mat(F2, 1, 2, rng));
    SubspaceBasis tr = transporter(F2, act, u, v);
    oracle::for_all_vectors(F2, 4, [&](const Vec& h) {
      bool ok = true;
      for (int r = 0; r < u.dim() && ok; ++r) {
        Vec img(2, 0);
        for (int k = 0; k < 4; ++k) {
          if (h[k] == 0) continue;
          Vec w = act.apply_basis(u.rows.row(r), k);
          for (int c = 0; c < 2; ++c)
            img[c] = F2.add(img[c], F2.mul(h[k], w[c]));
        }
        ok = subspace_contains(F2, v, img);
      }
      CHECK(ok == subspace_contains(F2, tr, h));
    });
  }
}

TEST_CASE("coordinate map and inverse") {
  Field F5 = Field::make(5, 1);
  std::mt19937 rng(3);
  Mat b(3, 5);
  // pick independent rows
  do {
    b = oracle::random_mat(F5, 3, 5, rng);
  } while (rank(F5, b) < 3);
  CoordinateMap cm(F5, b);
  for (int t = 0; t < 20; ++t) {
    Vec c = oracle::random_vec(F5, 3, rng);
    Vec v = vec_mat(F5, c, b);
    CHECK(cm.coords(F5, v) == c);
  }
  Mat sq = oracle::random_mat(F5, 4, 4, rng);
  while (rank(F5, sq) < 4) sq = oracle::random_mat(F5, 4, 4, rng);
  Mat inv = invert(F5, sq);
  Mat prod(4, 4);
  for (int i = 0; i < 4; ++i) {
    Vec r = vec_mat(F5, sq.row(i), inv);
    prod.set_row(i, r);
  }
  CHECK(prod == identity_mat(4));
}
