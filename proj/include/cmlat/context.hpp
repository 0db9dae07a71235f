#pragma once

#include <utility>

#include "cmlat/linalg.hpp"

namespace cmlat {

/// A finite-dimensional unital associative algebra presented on k^dim.
/// Subspaces of different contexts never mix; callers keep contexts alive
/// for as long as any dependent value exists.
class AlgebraContext {
public:
  AlgebraContext(Field F, int dim) : field_(std::move(F)), dim_(dim) {}
  virtual ~AlgebraContext() = default;

  const Field& field() const { return field_; }
  int dim() const { return dim_; }
  const Vec& one() const { return one_; }

  virtual Vec mul(const Vec& a, const Vec& b) const = 0;

  /// Action of the algebra on n-fold row modules: componentwise products.
  Vec module_scale(const Vec& v, const Vec& a, int n) const {
    Vec out(static_cast<size_t>(n) * dim_);
    for (int c = 0; c < n; ++c) {
      Vec comp(v.begin() + static_cast<size_t>(c) * dim_,
               v.begin() + static_cast<size_t>(c + 1) * dim_);
      Vec w = mul(comp, a);
      std::copy(w.begin(), w.end(), out.begin() + static_cast<size_t>(c) * dim_);
    }
    return out;
  }

protected:
  Field field_;
  int dim_;
  Vec one_;
};

} // namespace cmlat
