#include "hilbert/oracle.hpp"

#include <algorithm>
#include <cmath>

#include "hilbert/error.hpp"

namespace hilbert::oracle {

std::vector<HVec> null_space_by_elimination(const HOp& a, double pivot_tol) {
  const std::size_t m = a.rows();
  const std::size_t n = a.cols();
  std::vector<CScalar> r(a.entries().begin(), a.entries().end());
  double scale = 1.0;
  for (const auto& z : r) scale = std::max(scale, std::abs(z));
  const double cut = pivot_tol * scale;

  std::vector<std::size_t> pivot_cols;
  std::size_t row = 0;
  for (std::size_t col = 0; col < n && row < m; ++col) {
    std::size_t best = row;
    for (std::size_t i = row + 1; i < m; ++i) {
      if (std::abs(r[i * n + col]) > std::abs(r[best * n + col])) best = i;
    }
    if (std::abs(r[best * n + col]) <= cut) continue;
    for (std::size_t j = 0; j < n; ++j) std::swap(r[row * n + j], r[best * n + j]);
    const CScalar piv = r[row * n + col];
    for (std::size_t j = 0; j < n; ++j) r[row * n + j] /= piv;
    for (std::size_t i = 0; i < m; ++i) {
      if (i == row) continue;
      const CScalar f = r[i * n + col];
      if (f == CScalar(0.0)) continue;
      for (std::size_t j = 0; j < n; ++j) r[i * n + j] -= f * r[row * n + j];
    }
    pivot_cols.push_back(col);
    ++row;
  }

  std::vector<HVec> basis;
  for (std::size_t free = 0; free < n; ++free) {
    if (std::find(pivot_cols.begin(), pivot_cols.end(), free) != pivot_cols.end()) continue;
    std::vector<CScalar> v(n, 0.0);
    v[free] = 1.0;
    for (std::size_t k = 0; k < pivot_cols.size(); ++k) v[pivot_cols[k]] = -r[k * n + free];
    basis.emplace_back(std::move(v));
  }
  return basis;
}

Subspace intersection_by_elimination(const Subspace& s, const Subspace& t, double pivot_tol) {
  if (s.ambient() != t.ambient()) fail(ErrorKind::DimMismatch, "intersection: ambient dimensions differ");
  const std::size_t n = s.ambient();
  const HOp cs = sub(identity(n), proj(s));
  const HOp ct = sub(identity(n), proj(t));
  std::vector<CScalar> stacked(cs.entries().begin(), cs.entries().end());
  stacked.insert(stacked.end(), ct.entries().begin(), ct.entries().end());
  return span(null_space_by_elimination(HOp(2 * n, n, std::move(stacked)), pivot_tol), n);
}

}  // namespace hilbert::oracle
