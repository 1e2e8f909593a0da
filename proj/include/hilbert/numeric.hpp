#pragma once

#include <complex>
#include <cstdint>
#include <span>
#include <vector>

namespace hilbert {

using CScalar = std::complex<double>;

// Centralized comparison thresholds. Every predicate that decides equality,
// rank or positivity takes one of these explicitly.
struct Tolerance {
  double atol = 1e-9;      // absolute comparison tolerance
  double rank_tol = 1e-8;  // relative threshold for rank/drop decisions
  double psd_tol = 1e-8;   // eigenvalue slack for positivity

  // Throws InvalidValue unless every field is strictly positive.
  void validate() const;
};

bool is_finite(CScalar x);

// Complex partial order: Re x <= Re y and Im x = Im y (imaginary parts
// compared within atol).
bool complex_leq(CScalar x, CScalar y, const Tolerance& tol = {});

// |x - y| <= atol * max(1, |x|, |y|)
bool approx_eq(CScalar x, CScalar y, const Tolerance& tol = {});

struct EigenDecomposition {
  std::vector<double> values;    // ascending
  std::vector<CScalar> vectors;  // row-major n x n, column k pairs with values[k]
  int sweeps = 0;

  std::size_t size() const { return values.size(); }
  CScalar vector_entry(std::size_t row, std::size_t col) const { return vectors[row * values.size() + col]; }
};

// Cyclic complex Jacobi eigensolver for Hermitian matrices given row-major.
// Throws NotHermitian if ||H - H^dagger||_F > atol * max(1, ||H||_F), and
// NoConvergence if 100 sweeps do not bring the off-diagonal mass below
// atol * max(1, ||H||_F).
EigenDecomposition herm_eig(std::size_t n, std::span<const CScalar> h, const Tolerance& tol = {});

// Splittable 64-bit generator (splitmix64 update and finalizer).
//
//   state += 0x9E3779B97F4A7C15
//   z = state
//   z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9
//   z = (z ^ (z >> 27)) * 0x94D049BB133111EB
//   return z ^ (z >> 31)
//
// derive(i) seeds a child stream with mix(seed ^ mix(i + 0x9E3779B97F4A7C15)),
// where mix is the finalizer above and seed is the stream's construction seed,
// so children do not depend on how much of the parent has been consumed.
class RngStream {
 public:
  explicit RngStream(std::uint64_t seed) : seed_(seed), state_(seed) {}

  std::uint64_t seed() const { return seed_; }
  std::uint64_t next_u64();
  // Uniform in [0, 1) with 53 random bits.
  double uniform01();
  // Uniform in [lo, hi).
  double uniform(double lo, double hi);
  // Uniform integer in [lo, hi], inclusive.
  std::uint64_t uniform_int(std::uint64_t lo, std::uint64_t hi);
  // Both components uniform in [-1, 1).
  CScalar complex_unit_box();
  bool coin();

  RngStream derive(std::uint64_t child_index) const;

  static std::uint64_t mix(std::uint64_t z);

 private:
  std::uint64_t seed_;
  std::uint64_t state_;
};

}  // namespace hilbert
