#include "hilbert/numeric.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>

#include "hilbert/error.hpp"

namespace hilbert {

void Tolerance::validate() const {
  if (!(atol > 0.0) || !(rank_tol > 0.0) || !(psd_tol > 0.0)) {
    fail(ErrorKind::InvalidValue, "tolerance fields must be strictly positive");
  }
}

bool is_finite(CScalar x) { return std::isfinite(x.real()) && std::isfinite(x.imag()); }

bool complex_leq(CScalar x, CScalar y, const Tolerance& tol) {
  return x.real() <= y.real() && std::abs(x.imag() - y.imag()) <= tol.atol;
}

bool approx_eq(CScalar x, CScalar y, const Tolerance& tol) {
  return std::abs(x - y) <= tol.atol * std::max({1.0, std::abs(x), std::abs(y)});
}

namespace {

constexpr int kMaxSweeps = 100;

double frobenius(std::span<const CScalar> a) {
  double s = 0.0;
  for (const auto& z : a) s += std::norm(z);
  return std::sqrt(s);
}

double off_diagonal(std::size_t n, const std::vector<CScalar>& a) {
  double s = 0.0;
  for (std::size_t p = 0; p < n; ++p)
    for (std::size_t q = 0; q < n; ++q)
      if (p != q) s += std::norm(a[p * n + q]);
  return std::sqrt(s);
}

// Annihilates a(p,q) with the unitary plane rotation G = diag(1, conj(e)) * R,
// where e is the phase of a(p,q) and R the real Jacobi rotation of the
// phase-aligned 2x2 block. Applies A <- G^dagger A G and V <- V G.
void rotate(std::size_t n, std::vector<CScalar>& a, std::vector<CScalar>& v, std::size_t p, std::size_t q) {
  const CScalar apq = a[p * n + q];
  const double b = std::abs(apq);
  const double alpha = a[p * n + p].real();
  const double gamma = a[q * n + q].real();
  const CScalar phase = apq / b;

  const double theta = (gamma - alpha) / (2.0 * b);
  double t;
  if (std::abs(theta) > 1e150) {
    t = 0.5 / theta;
  } else {
    t = (theta >= 0 ? 1.0 : -1.0) / (std::abs(theta) + std::sqrt(theta * theta + 1.0));
  }
  const double c = 1.0 / std::sqrt(t * t + 1.0);
  const double s = t * c;

  const CScalar gpp = c;
  const CScalar gpq = s;
  const CScalar gqp = -s * std::conj(phase);
  const CScalar gqq = c * std::conj(phase);

  // columns: A <- A G
  for (std::size_t k = 0; k < n; ++k) {
    const CScalar akp = a[k * n + p];
    const CScalar akq = a[k * n + q];
    a[k * n + p] = akp * gpp + akq * gqp;
    a[k * n + q] = akp * gpq + akq * gqq;
  }
  // rows: A <- G^dagger A
  for (std::size_t k = 0; k < n; ++k) {
    const CScalar apk = a[p * n + k];
    const CScalar aqk = a[q * n + k];
    a[p * n + k] = std::conj(gpp) * apk + std::conj(gqp) * aqk;
    a[q * n + k] = std::conj(gpq) * apk + std::conj(gqq) * aqk;
  }
  a[p * n + q] = 0.0;
  a[q * n + p] = 0.0;
  a[p * n + p] = a[p * n + p].real();
  a[q * n + q] = a[q * n + q].real();

  for (std::size_t k = 0; k < n; ++k) {
    const CScalar vkp = v[k * n + p];
    const CScalar vkq = v[k * n + q];
    v[k * n + p] = vkp * gpp + vkq * gqp;
    v[k * n + q] = vkp * gpq + vkq * gqq;
  }
}

}  // namespace

EigenDecomposition herm_eig(std::size_t n, std::span<const CScalar> h, const Tolerance& tol) {
  if (n == 0 || h.size() != n * n) {
    fail(ErrorKind::DimMismatch, "herm_eig expects a non-empty square matrix");
  }
  for (const auto& z : h) {
    if (!is_finite(z)) fail(ErrorKind::InvalidValue, "herm_eig input has a non-finite entry");
  }

  const double norm_h = frobenius(h);
  double asym = 0.0;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) asym += std::norm(h[i * n + j] - std::conj(h[j * n + i]));
  if (std::sqrt(asym) > tol.atol * std::max(1.0, norm_h)) {
    fail(ErrorKind::NotHermitian, "matrix is not Hermitian within tolerance");
  }

  std::vector<CScalar> a(n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) a[i * n + j] = 0.5 * (h[i * n + j] + std::conj(h[j * n + i]));

  std::vector<CScalar> v(n * n, 0.0);
  for (std::size_t i = 0; i < n; ++i) v[i * n + i] = 1.0;

  // Sweeps continue past the acceptance threshold down to rounding level;
  // the acceptance threshold only decides NoConvergence.
  const double scale = std::max(1.0, norm_h);
  const double accept = tol.atol * scale;
  const double floor = 4.0 * std::numeric_limits<double>::epsilon() * std::max(norm_h, std::numeric_limits<double>::min());
  const double skip = std::numeric_limits<double>::epsilon() * 1e-3 * std::max(norm_h, std::numeric_limits<double>::min());

  int sweeps = 0;
  double off = off_diagonal(n, a);
  while (off > floor && sweeps < kMaxSweeps) {
    for (std::size_t p = 0; p + 1 < n; ++p) {
      for (std::size_t q = p + 1; q < n; ++q) {
        if (std::abs(a[p * n + q]) > skip) rotate(n, a, v, p, q);
      }
    }
    ++sweeps;
    const double next = off_diagonal(n, a);
    if (next >= off && next <= accept) {
      off = next;
      break;
    }
    off = next;
  }
  if (off > accept) fail(ErrorKind::NoConvergence, "Jacobi sweep limit exceeded");

  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t x, std::size_t y) { return a[x * n + x].real() < a[y * n + y].real(); });

  EigenDecomposition out;
  out.sweeps = sweeps;
  out.values.resize(n);
  out.vectors.resize(n * n);
  for (std::size_t k = 0; k < n; ++k) {
    const std::size_t src = order[k];
    out.values[k] = a[src * n + src].real();
    for (std::size_t r = 0; r < n; ++r) out.vectors[r * n + k] = v[r * n + src];
  }
  return out;
}

std::uint64_t RngStream::mix(std::uint64_t z) {
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

std::uint64_t RngStream::next_u64() {
  state_ += 0x9E3779B97F4A7C15ULL;
  return mix(state_);
}

double RngStream::uniform01() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

double RngStream::uniform(double lo, double hi) { return lo + (hi - lo) * uniform01(); }

std::uint64_t RngStream::uniform_int(std::uint64_t lo, std::uint64_t hi) {
  if (hi < lo) fail(ErrorKind::InvalidValue, "uniform_int: empty range");
  const std::uint64_t span = hi - lo;
  if (span == ~0ULL) return next_u64();
  const std::uint64_t range = span + 1;
  const std::uint64_t limit = ~0ULL - (~0ULL % range);
  std::uint64_t x;
  do {
    x = next_u64();
  } while (x >= limit);
  return lo + x % range;
}

CScalar RngStream::complex_unit_box() {
  const double re = uniform(-1.0, 1.0);
  const double im = uniform(-1.0, 1.0);
  return {re, im};
}

bool RngStream::coin() { return (next_u64() >> 63) != 0; }

RngStream RngStream::derive(std::uint64_t child_index) const {
  return RngStream(mix(seed_ ^ mix(child_index + 0x9E3779B97F4A7C15ULL)));
}

}  // namespace hilbert
