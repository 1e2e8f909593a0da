#include "hilbert/kernels.hpp"

namespace hilbert::kernels {

namespace {

inline void gemm_row(std::size_t i, std::size_t k, std::size_t n, std::span<const CScalar> a,
                     std::span<const CScalar> b, std::span<CScalar> c) {
  for (std::size_t j = 0; j < n; ++j) c[i * n + j] = 0.0;
  for (std::size_t l = 0; l < k; ++l) {
    const CScalar ail = a[i * k + l];
    for (std::size_t j = 0; j < n; ++j) c[i * n + j] += ail * b[l * n + j];
  }
}

inline void gemv_row(std::size_t i, std::size_t n, std::span<const CScalar> a, std::span<const CScalar> x,
                     std::span<CScalar> y) {
  CScalar acc = 0.0;
  for (std::size_t j = 0; j < n; ++j) acc += a[i * n + j] * x[j];
  y[i] = acc;
}

inline void gram_row(std::size_t i, std::size_t m, std::size_t n, std::span<const CScalar> a,
                     std::span<CScalar> g) {
  for (std::size_t j = 0; j < n; ++j) {
    CScalar acc = 0.0;
    for (std::size_t r = 0; r < m; ++r) acc += std::conj(a[r * n + i]) * a[r * n + j];
    g[i * n + j] = acc;
  }
}

}  // namespace

void gemm(std::size_t m, std::size_t k, std::size_t n, std::span<const CScalar> a, std::span<const CScalar> b,
          std::span<CScalar> c) {
  const bool wide = m * k * n >= kParallelThreshold;
  const auto rows = static_cast<std::ptrdiff_t>(m);
#pragma omp parallel for schedule(static) if (wide)
  for (std::ptrdiff_t i = 0; i < rows; ++i) gemm_row(static_cast<std::size_t>(i), k, n, a, b, c);
}

void gemm_serial(std::size_t m, std::size_t k, std::size_t n, std::span<const CScalar> a,
                 std::span<const CScalar> b, std::span<CScalar> c) {
  for (std::size_t i = 0; i < m; ++i) gemm_row(i, k, n, a, b, c);
}

void gemv(std::size_t m, std::size_t n, std::span<const CScalar> a, std::span<const CScalar> x,
          std::span<CScalar> y) {
  const bool wide = m * n >= kParallelThreshold;
  const auto rows = static_cast<std::ptrdiff_t>(m);
#pragma omp parallel for schedule(static) if (wide)
  for (std::ptrdiff_t i = 0; i < rows; ++i) gemv_row(static_cast<std::size_t>(i), n, a, x, y);
}

void gemv_serial(std::size_t m, std::size_t n, std::span<const CScalar> a, std::span<const CScalar> x,
                 std::span<CScalar> y) {
  for (std::size_t i = 0; i < m; ++i) gemv_row(i, n, a, x, y);
}

void gram(std::size_t m, std::size_t n, std::span<const CScalar> a, std::span<CScalar> g) {
  const bool wide = m * n * n >= kParallelThreshold;
  const auto rows = static_cast<std::ptrdiff_t>(n);
#pragma omp parallel for schedule(static) if (wide)
  for (std::ptrdiff_t i = 0; i < rows; ++i) gram_row(static_cast<std::size_t>(i), m, n, a, g);
}

void gram_serial(std::size_t m, std::size_t n, std::span<const CScalar> a, std::span<CScalar> g) {
  for (std::size_t i = 0; i < n; ++i) gram_row(i, m, n, a, g);
}

}  // namespace hilbert::kernels
