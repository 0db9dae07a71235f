// Brute-force reference computations used to freeze expected test values.
// Everything here is independent of the library's implementation paths.
#pragma once

#include <functional>
#include <random>
#include <vector>

#include "cmlat/linalg.hpp"

namespace cmlat::oracle {

inline Mat random_mat(const Field& F, int rows, int cols, std::mt19937& rng) {
  Mat m(rows, cols);
  std::uniform_int_distribution<int> d(0, F.q() - 1);
  for (Fel& x : m.a) x = d(rng);
  return m;
}

inline Vec random_vec(const Field& F, int n, std::mt19937& rng) {
  Vec v(n);
  std::uniform_int_distribution<int> d(0, F.q() - 1);
  for (Fel& x : v) x = d(rng);
  return v;
}

/// Visit every vector of F_q^n (q^n of them).
inline void for_all_vectors(const Field& F, int n,
                            const std::function<void(const Vec&)>& fn) {
  Vec v(n, 0);
  while (true) {
    fn(v);
    int i = 0;
    while (i < n && v[i] == F.q() - 1) v[i++] = 0;
    if (i == n) break;
    ++v[i];
  }
}

/// Laplace-expansion determinant.
inline Fel det_laplace(const Field& F, const Mat& m) {
  int n = m.rows;
  if (n == 0) return 1;
  if (n == 1) return m.at(0, 0);
  Fel acc = 0;
  for (int c = 0; c < n; ++c) {
    if (m.at(0, c) == 0) continue;
    Mat minor(n - 1, n - 1);
    for (int i = 1; i < n; ++i) {
      int jj = 0;
      for (int j = 0; j < n; ++j) {
        if (j == c) continue;
        minor.at(i - 1, jj++) = m.at(i, j);
      }
    }
    Fel term = F.mul(m.at(0, c), det_laplace(F, minor));
    acc = (c % 2 == 0) ? F.add(acc, term) : F.sub(acc, term);
  }
  return acc;
}

/// Rank as the largest size of a square minor with nonzero determinant.
inline int rank_by_minors(const Field& F, const Mat& m) {
  int best = 0;
  int r = m.rows, c = m.cols;
  int kmax = std::min(r, c);
  std::function<void(int, int, std::vector<int>&, std::vector<int>&)> go;
  for (int k = kmax; k >= 1; --k) {
    std::vector<int> ri, ci;
    bool found = false;
    std::function<void(int)> pick_rows = [&](int start) {
      if (found) return;
      if (static_cast<int>(ri.size()) == k) {
        std::function<void(int)> pick_cols = [&](int cs) {
          if (found) return;
          if (static_cast<int>(ci.size()) == k) {
            Mat sub(k, k);
            for (int i = 0; i < k; ++i)
              for (int j = 0; j < k; ++j) sub.at(i, j) = m.at(ri[i], ci[j]);
            if (det_laplace(F, sub) != 0) found = true;
            return;
          }
          for (int x = cs; x < c; ++x) {
            ci.push_back(x);
            pick_cols(x + 1);
            ci.pop_back();
            if (found) return;
          }
        };
        pick_cols(0);
        return;
      }
      for (int x = start; x < r; ++x) {
        ri.push_back(x);
        pick_rows(x + 1);
        ri.pop_back();
        if (found) return;
      }
    };
    pick_rows(0);
    if (found) { best = k; break; }
  }
  return best;
}

/// Gaussian binomial [m, d]_q: the number of d-codimensional subspaces.
inline long long gaussian_binomial(int m, int d, int q) {
  if (d < 0 || d > m) return 0;
  // [m choose k]_q with k = d counts k-dimensional subspaces; codimension d
  // subspaces are counted by the same coefficient with k = m - d.
  long long num = 1, den = 1;
  auto qpow = [&](int n) {
    long long r = 1;
    for (int i = 0; i < n; ++i) r *= q;
    return r;
  };
  for (int i = 0; i < d; ++i) {
    num *= qpow(m - i) - 1;
    den *= qpow(i + 1) - 1;
  }
  return num / den;
}

} // namespace cmlat::oracle
