#include <doctest.h>

#include <cmath>

#include "hilbert/error.hpp"
#include "hilbert/hop.hpp"
#include "hilbert/hsub.hpp"
#include "hilbert/oracle.hpp"
#include "hilbert/sampling.hpp"

using namespace hilbert;

namespace {

Subspace span_of(std::initializer_list<HVec> vs, std::size_t n) {
  const std::vector<HVec> v(vs);
  return span(v, n);
}

const double kInvSqrt2 = 0.7071067811865475;  // numpy: 1/sqrt(2)

}  // namespace

TEST_CASE("gram_schmidt0 of (1,1),(1,0)") {
  const std::vector<HVec> in{HVec({1, 1}), HVec({1, 0})};
  const auto q = gram_schmidt0(in);
  REQUIRE(q.size() == 2);
  // numpy qr, first coordinate positive: [[0.7071, 0.7071], [0.7071, -0.7071]]
  CHECK(approx_eq(q[0], HVec({kInvSqrt2, kInvSqrt2})));
  CHECK(approx_eq(q[1], HVec({kInvSqrt2, -kInvSqrt2})));
}

TEST_CASE("gram_schmidt0 drops dependent vectors") {
  const std::vector<HVec> in{HVec({1, 2, 0}), HVec({2, 4, 0}), HVec::zeros(3), HVec({0, 0, 1})};
  const auto q = gram_schmidt0(in);
  CHECK(q.size() == 2);
  CHECK(is_orthonormal(q));

  RngStream root(31);
  for (std::uint64_t t = 0; t < 50; ++t) {
    auto rng = root.derive(t);
    const std::size_t n = sampling::random_dim(rng, 6);
    std::vector<HVec> vs;
    const std::size_t count = rng.uniform_int(0, 8);
    for (std::size_t k = 0; k < count; ++k) vs.push_back(sampling::random_vector(rng, n));
    if (!vs.empty()) vs.push_back(vadd(vs.front(), vs.back()));
    const auto q2 = gram_schmidt0(vs);
    CHECK(is_orthonormal(q2));
    CHECK(q2.size() == std::min(n, count));
    const Subspace s = span(vs, n);
    for (const auto& v : vs) CHECK(contains(s, v));
  }
}

TEST_CASE("lattice examples") {
  const HVec d = vadd(ket(0, 2), ket(1, 2));
  CHECK_FALSE(leq(span_of({d}, 2), span_of({ket(0, 2)}, 2)));
  CHECK(vnorm(residual(span_of({ket(0, 2)}, 2), vscale(kInvSqrt2, d))) == doctest::Approx(kInvSqrt2));
  CHECK(seq(sinf(span_of({d}, 2), span_of({ket(0, 2)}, 2)), bot(2)));

  std::vector<HVec> kets;
  for (std::size_t i = 0; i < 4; ++i) kets.push_back(ket(i, 4));
  CHECK(seq(span(kets, 4), top(4)));

  const HOp p = proj(span_of({HVec({1, 1})}, 2));
  CHECK(approx_eq(p, from_matrix({{0.5, 0.5}, {0.5, 0.5}})));

  const HOp swap = from_matrix({{0, 1}, {1, 0}});
  const Subspace e = eigenspace(1.0, swap);
  CHECK(sdim(e) == 1);
  CHECK(seq(e, span_of({HVec({kInvSqrt2, kInvSqrt2})}, 2)));
  CHECK(sdim(eigenspace(3.0, swap)) == 0);
  CHECK(sdim(eigenspace(1.0, identity(3))) == 3);
}

TEST_CASE("dimension errors") {
  CHECK_THROWS_AS(ssup(top(2), top(3)), Error);
  CHECK_THROWS_AS(contains(top(2), ket(0, 3)), Error);
  CHECK_THROWS_AS((Subspace(2, {ket(0, 2), ket(0, 2)})), Error);
  CHECK_THROWS_AS(eigenspace(1.0, zero(2, 3)), Error);
}

TEST_CASE("lattice laws on random subspaces") {
  RngStream root(32);
  for (std::uint64_t t = 0; t < 100; ++t) {
    auto rng = root.derive(t);
    const std::size_t n = sampling::random_dim(rng, 6);
    const Subspace x = sampling::random_subspace(rng, n), y = sampling::random_subspace(rng, n);
    const Subspace nested = sampling::random_subspace_of(rng, y);
    CHECK(leq(nested, y));
    CHECK(seq(ocomplement(ocomplement(x)), x));
    CHECK(sdim(x) + sdim(ocomplement(x)) == n);
    CHECK(seq(ocomplement(ssup(x, y)), sinf(ocomplement(x), ocomplement(y))));
    CHECK(seq(ssup(nested, sinf(ocomplement(nested), y)), y));
    CHECK(leq(sinf(x, y), x));
    CHECK(leq(x, ssup(x, y)));
    CHECK(seq(sinf(x, y), oracle::intersection_by_elimination(x, y)));
    CHECK(sdim(ssup(x, y)) + sdim(sinf(x, y)) == sdim(x) + sdim(y));
  }
}

TEST_CASE("projectors, images and kernels") {
  RngStream root(33);
  for (std::uint64_t t = 0; t < 100; ++t) {
    auto rng = root.derive(t);
    const std::size_t m = sampling::random_dim(rng, 6), n = sampling::random_dim(rng, 6);
    const Subspace s = sampling::random_subspace(rng, n);
    const HOp p = proj(s);
    CHECK(is_proj_op(p));
    CHECK(seq(image(p, top(n)), s));
    CHECK(std::abs(frobenius_norm(p) * frobenius_norm(p) - double(sdim(s))) < 1e-9);
    const HOp a = rng.coin() ? sampling::random_low_rank(rng, m, n) : sampling::random_operator(rng, m, n);
    const Subspace k = kernel(a);
    CHECK(seq(k, ocomplement(image(adjoint(a), top(m)))));
    CHECK(sdim(k) + numerical_rank(a) == n);
    for (const auto& u : k.basis()) CHECK(vnorm(apply(a, u)) < 1e-8 * std::max(1.0, op_norm(a)));
    const auto null = oracle::null_space_by_elimination(a);
    CHECK(null.size() == sdim(k));
    const HOp b = sampling::random_operator(rng, n, m);
    CHECK(seq(image(compose(a, b), top(m)), image(a, image(b, top(m)))));
    const Subspace t2 = sampling::random_subspace(rng, n);
    CHECK(sdim(subspace_times(s, t2)) == sdim(s) + sdim(t2));
  }
}

TEST_CASE("folds over families") {
  const std::vector<Subspace> fam{span_of({ket(0, 3)}, 3), span_of({ket(1, 3)}, 3)};
  CHECK(sdim(ssup_all(fam, 3)) == 2);
  CHECK(sdim(sinf_all(fam, 3)) == 0);
  const std::vector<Subspace> none;
  CHECK(seq(ssup_all(none, 3), bot(3)));
  CHECK(seq(sinf_all(none, 3), top(3)));
}
