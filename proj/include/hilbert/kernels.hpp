#pragma once

#include <cstddef>
#include <span>

#include "hilbert/numeric.hpp"

// Dense complex kernels on row-major storage. Each has an OpenMP version,
// parallel over output rows so every output entry is accumulated by a single
// thread in a fixed order, and a serial reference kept for testing. Both
// produce bit-identical results.
namespace hilbert::kernels {

// Work (multiply-adds) below which the OpenMP versions stay on one thread.
inline constexpr std::size_t kParallelThreshold = 1 << 15;

// c (m x n) = a (m x k) * b (k x n)
void gemm(std::size_t m, std::size_t k, std::size_t n, std::span<const CScalar> a, std::span<const CScalar> b,
          std::span<CScalar> c);
void gemm_serial(std::size_t m, std::size_t k, std::size_t n, std::span<const CScalar> a,
                 std::span<const CScalar> b, std::span<CScalar> c);

// y (m) = a (m x n) * x (n)
void gemv(std::size_t m, std::size_t n, std::span<const CScalar> a, std::span<const CScalar> x,
          std::span<CScalar> y);
void gemv_serial(std::size_t m, std::size_t n, std::span<const CScalar> a, std::span<const CScalar> x,
                 std::span<CScalar> y);

// g (n x n) = a^dagger a for a (m x n)
void gram(std::size_t m, std::size_t n, std::span<const CScalar> a, std::span<CScalar> g);
void gram_serial(std::size_t m, std::size_t n, std::span<const CScalar> a, std::span<CScalar> g);

}  // namespace hilbert::kernels
