#pragma once

#include <cstddef>
#include <functional>
#include <vector>

#include "cmlat/gf.hpp"

namespace cmlat {

using Vec = std::vector<Fel>;

/// Dense row-major matrix over one field.
struct Mat {
  int rows = 0, cols = 0;
  std::vector<Fel> a;

  Mat() = default;
  Mat(int r, int c) : rows(r), cols(c), a(static_cast<size_t>(r) * c, 0) {}

  Fel& at(int r, int c) { return a[static_cast<size_t>(r) * cols + c]; }
  Fel at(int r, int c) const { return a[static_cast<size_t>(r) * cols + c]; }

  Vec row(int r) const {
    return Vec(a.begin() + static_cast<size_t>(r) * cols,
               a.begin() + static_cast<size_t>(r + 1) * cols);
  }
  void set_row(int r, const Vec& v) {
    std::copy(v.begin(), v.end(), a.begin() + static_cast<size_t>(r) * cols);
  }
  void append_row(const Vec& v) {
    a.insert(a.end(), v.begin(), v.end());
    ++rows;
  }
  bool operator==(const Mat& o) const = default;
};

Mat identity_mat(int n);

/// Reduce to RREF in place; returns the pivot column of each surviving row.
/// Zero rows are removed.
std::vector<int> rref(const Field& F, Mat& m);

int rank(const Field& F, Mat m);

/// Canonical basis of a linear subspace: rows in reduced row-echelon form,
/// strictly increasing pivot columns, pivots 1, pivot columns elsewhere 0.
/// Two values represent the same subspace iff they compare equal.
struct SubspaceBasis {
  int ambient = 0;
  Mat rows; // RREF, rows.cols == ambient

  int dim() const { return rows.rows; }
  bool operator==(const SubspaceBasis& o) const = default;
};

struct SubspaceHash {
  size_t operator()(const SubspaceBasis& s) const;
};

/// Canonicalize the row space of an arbitrary matrix.
SubspaceBasis rref_canonicalize(const Field& F, Mat m);

SubspaceBasis zero_subspace(int ambient);
SubspaceBasis full_subspace(const Field& F, int ambient);
SubspaceBasis span_of(const Field& F, int ambient, const std::vector<Vec>& vecs);

/// Residual of v after elimination against the basis rows; zero iff v lies
/// in the subspace.
Vec reduce_against(const Field& F, const SubspaceBasis& b, Vec v);
bool subspace_contains(const Field& F, const SubspaceBasis& b, const Vec& v);
bool subspace_leq(const Field& F, const SubspaceBasis& a, const SubspaceBasis& b);

SubspaceBasis subspace_sum(const Field& F, const SubspaceBasis& u,
                           const SubspaceBasis& v);
SubspaceBasis subspace_intersect(const Field& F, const SubspaceBasis& u,
                                 const SubspaceBasis& v);

/// Right kernel {x : m x^T = 0}, returned as a canonical row basis.
SubspaceBasis null_space(const Field& F, const Mat& m);

/// Inverse of a square matrix; throws InvalidInputError when singular.
Mat invert(const Field& F, Mat m);

Vec mat_vec(const Field& F, const Mat& m, const Vec& x);   // m * x
Vec vec_mat(const Field& F, const Vec& x, const Mat& m);   // x * m

/// Coordinates of vectors with respect to a fixed set of independent rows.
class CoordinateMap {
public:
  CoordinateMap() = default;
  CoordinateMap(const Field& F, const Mat& basis_rows);

  /// coords such that v = coords * basis_rows; ok=false when v is outside
  /// the span.
  Vec coords(const Field& F, const Vec& v, bool* ok = nullptr) const;
  int dim() const { return reduced_.rows; }

private:
  Mat reduced_;            // RREF of the basis rows
  Mat transform_;          // transform_ * basis_rows == reduced_
  std::vector<int> pivots_;
};

/// A bilinear pairing (module vector, acting-space vector) -> module vector,
/// presented through its action on acting-space basis vectors.
struct BilinearAction {
  int module_dim = 0;
  int acting_dim = 0;
  std::function<Vec(const Vec& u, int acting_index)> apply_basis;
};

/// Largest subspace T of the acting space with act(u, t) in V for every
/// u in U: the transporter of U into V.
SubspaceBasis transporter(const Field& F, const BilinearAction& act,
                          const SubspaceBasis& u, const SubspaceBasis& v);

} // namespace cmlat
