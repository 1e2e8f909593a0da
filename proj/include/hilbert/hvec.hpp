#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "hilbert/numeric.hpp"

namespace hilbert {

// Element of finite-dimensional l2 over the index set {0, ..., dim-1}.
class HVec {
 public:
  // Throws InvalidValue for an empty or non-finite coefficient list.
  explicit HVec(std::vector<CScalar> coeffs);

  static HVec zeros(std::size_t dim);

  std::size_t dim() const { return coeffs_.size(); }
  CScalar operator[](std::size_t i) const { return coeffs_[i]; }
  std::span<const CScalar> coeffs() const { return coeffs_; }

 private:
  std::vector<CScalar> coeffs_;
};

HVec ket(std::size_t i, std::size_t n);

// Antilinear in the first argument.
CScalar inner(const HVec& x, const HVec& y);
double vnorm(const HVec& x);

HVec vadd(const HVec& x, const HVec& y);
HVec vsub(const HVec& x, const HVec& y);
HVec vscale(CScalar c, const HVec& x);
HVec vneg(const HVec& x);

// Keeps the coefficients whose index is in `indices` and zeroes the rest.
// Indices need not be sorted; duplicates are ignored.
HVec trunc(std::span<const std::size_t> indices, const HVec& x);

// ||x - y|| <= atol * max(1, ||x||, ||y||)
bool approx_eq(const HVec& x, const HVec& y, const Tolerance& tol = {});

// Direct-sum vector (x, y) of dimension x.dim() + y.dim().
HVec pair_vec(const HVec& x, const HVec& y);

}  // namespace hilbert

namespace hilbert {

// Pairwise |inner(u, v)| <= atol and | ||u|| - 1 | <= atol.
bool is_orthonormal(std::span<const HVec> vs, const Tolerance& tol = {});

}  // namespace hilbert
