#include "hilbert/sampling.hpp"

#include <algorithm>
#include <numeric>

#include "hilbert/error.hpp"

namespace hilbert::sampling {

std::size_t random_dim(RngStream& rng, std::size_t max_dim) { return rng.uniform_int(1, std::max<std::size_t>(1, max_dim)); }

HVec random_vector(RngStream& rng, std::size_t n) {
  std::vector<CScalar> c(n);
  for (auto& z : c) z = rng.complex_unit_box();
  return HVec(std::move(c));
}

HOp random_operator(RngStream& rng, std::size_t m, std::size_t n) {
  std::vector<CScalar> e(m * n);
  for (auto& z : e) z = rng.complex_unit_box();
  return HOp(m, n, std::move(e));
}

std::vector<HVec> random_onb(RngStream& rng, std::size_t n) {
  for (;;) {
    std::vector<HVec> cols;
    for (std::size_t j = 0; j < n; ++j) cols.push_back(random_vector(rng, n));
    auto onb = gram_schmidt0(cols);
    if (onb.size() == n) return onb;
  }
}

HOp random_unitary(RngStream& rng, std::size_t n) {
  const auto onb = random_onb(rng, n);
  return from_columns(onb);
}

Subspace random_subspace(RngStream& rng, std::size_t n) {
  const std::size_t k = rng.uniform_int(0, n);
  std::vector<HVec> vs;
  for (std::size_t i = 0; i < k; ++i) vs.push_back(random_vector(rng, n));
  return span(vs, n);
}

HOp random_projector(RngStream& rng, std::size_t n) { return proj(random_subspace(rng, n)); }

HOp random_hermitian(RngStream& rng, std::size_t n) {
  const HOp a = random_operator(rng, n, n);
  return oscale(0.5, add(a, adjoint(a)));
}

HOp random_isometry(RngStream& rng, std::size_t m, std::size_t n) {
  if (m < n) fail(ErrorKind::DimMismatch, "random_isometry needs rows >= cols");
  const auto onb = random_onb(rng, m);
  return from_columns(std::span<const HVec>(onb.data(), n));
}

HOp random_partial_isometry(RngStream& rng, std::size_t m, std::size_t n, bool allow_zero) {
  const std::size_t p = std::min(m, n);
  const std::size_t r = rng.uniform_int(allow_zero ? 0 : 1, p);
  const HOp u = random_unitary(rng, m);
  const HOp v = random_unitary(rng, n);
  std::vector<CScalar> e(m * n, 0.0);
  for (std::size_t i = 0; i < r; ++i) e[i * n + i] = 1.0;
  return compose(compose(u, HOp(m, n, std::move(e))), adjoint(v));
}

HOp random_low_rank(RngStream& rng, std::size_t m, std::size_t n) {
  const std::size_t p = std::min(m, n);
  const std::size_t k = p > 1 ? rng.uniform_int(1, p - 1) : 1;
  return compose(random_operator(rng, m, k), random_operator(rng, k, n));
}

PartialMap random_permutation(RngStream& rng, std::size_t n) {
  std::vector<std::size_t> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  for (std::size_t i = n; i > 1; --i) std::swap(perm[i - 1], perm[rng.uniform_int(0, i - 1)]);
  PartialMap pi{n, n, {}};
  for (auto p : perm) pi.images.emplace_back(p);
  return pi;
}

PartialMap random_injective_map(RngStream& rng, std::size_t dom, std::size_t cod) {
  std::vector<std::size_t> targets(cod);
  std::iota(targets.begin(), targets.end(), 0);
  for (std::size_t i = cod; i > 1; --i) std::swap(targets[i - 1], targets[rng.uniform_int(0, i - 1)]);
  PartialMap pi{dom, cod, std::vector<std::optional<std::size_t>>(dom)};
  std::size_t next = 0;
  for (std::size_t x = 0; x < dom; ++x) {
    if (next < cod && rng.coin()) pi.images[x] = targets[next++];
  }
  return pi;
}

Subspace random_subspace_of(RngStream& rng, const Subspace& s) {
  const std::size_t k = rng.uniform_int(0, sdim(s));
  std::vector<HVec> vs;
  for (std::size_t i = 0; i < k; ++i) {
    HVec v = HVec::zeros(s.ambient());
    for (const auto& u : s.basis()) v = vadd(v, vscale(rng.complex_unit_box(), u));
    vs.push_back(v);
  }
  return span(vs, s.ambient());
}

}  // namespace hilbert::sampling
