#include "hilbert/hvec.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "hilbert/error.hpp"

namespace hilbert {

namespace {

void require_same_dim(const HVec& x, const HVec& y, const char* what) {
  if (x.dim() != y.dim()) {
    fail(ErrorKind::DimMismatch, std::string(what) + ": dimensions " + std::to_string(x.dim()) + " and " +
                                     std::to_string(y.dim()) + " differ");
  }
}

}  // namespace

HVec::HVec(std::vector<CScalar> coeffs) : coeffs_(std::move(coeffs)) {
  if (coeffs_.empty()) fail(ErrorKind::InvalidValue, "vector dimension must be positive");
  for (const auto& z : coeffs_) {
    if (!is_finite(z)) fail(ErrorKind::InvalidValue, "vector coefficient is not finite");
  }
}

HVec HVec::zeros(std::size_t dim) { return HVec(std::vector<CScalar>(dim, 0.0)); }

HVec ket(std::size_t i, std::size_t n) {
  if (i >= n) {
    fail(ErrorKind::IndexOutOfRange, "ket index " + std::to_string(i) + " out of range for dimension " +
                                         std::to_string(n));
  }
  std::vector<CScalar> c(n, 0.0);
  c[i] = 1.0;
  return HVec(std::move(c));
}

CScalar inner(const HVec& x, const HVec& y) {
  require_same_dim(x, y, "inner");
  CScalar acc = 0.0;
  for (std::size_t k = 0; k < x.dim(); ++k) acc += std::conj(x[k]) * y[k];
  return acc;
}

double vnorm(const HVec& x) {
  double s = 0.0;
  for (const auto& z : x.coeffs()) s += std::norm(z);
  return std::sqrt(s);
}

HVec vadd(const HVec& x, const HVec& y) {
  require_same_dim(x, y, "vadd");
  std::vector<CScalar> c(x.dim());
  for (std::size_t k = 0; k < c.size(); ++k) c[k] = x[k] + y[k];
  return HVec(std::move(c));
}

HVec vsub(const HVec& x, const HVec& y) {
  require_same_dim(x, y, "vsub");
  std::vector<CScalar> c(x.dim());
  for (std::size_t k = 0; k < c.size(); ++k) c[k] = x[k] - y[k];
  return HVec(std::move(c));
}

HVec vscale(CScalar a, const HVec& x) {
  std::vector<CScalar> c(x.dim());
  for (std::size_t k = 0; k < c.size(); ++k) c[k] = a * x[k];
  return HVec(std::move(c));
}

HVec vneg(const HVec& x) { return vscale(-1.0, x); }

HVec trunc(std::span<const std::size_t> indices, const HVec& x) {
  std::vector<CScalar> c(x.dim(), 0.0);
  for (std::size_t i : indices) {
    if (i >= x.dim()) {
      fail(ErrorKind::IndexOutOfRange, "trunc index " + std::to_string(i) + " out of range for dimension " +
                                           std::to_string(x.dim()));
    }
    c[i] = x[i];
  }
  return HVec(std::move(c));
}

bool approx_eq(const HVec& x, const HVec& y, const Tolerance& tol) {
  require_same_dim(x, y, "approx_eq");
  return vnorm(vsub(x, y)) <= tol.atol * std::max({1.0, vnorm(x), vnorm(y)});
}

HVec pair_vec(const HVec& x, const HVec& y) {
  std::vector<CScalar> c(x.coeffs().begin(), x.coeffs().end());
  c.insert(c.end(), y.coeffs().begin(), y.coeffs().end());
  return HVec(std::move(c));
}

}  // namespace hilbert

namespace hilbert {

bool is_orthonormal(std::span<const HVec> vs, const Tolerance& tol) {
  for (std::size_t i = 0; i < vs.size(); ++i) {
    if (std::abs(vnorm(vs[i]) - 1.0) > tol.atol) return false;
    for (std::size_t j = i + 1; j < vs.size(); ++j) {
      if (std::abs(inner(vs[i], vs[j])) > tol.atol) return false;
    }
  }
  return true;
}

}  // namespace hilbert
