#include <doctest.h>

#include <cmath>

#include "hilbert/error.hpp"
#include "hilbert/hop.hpp"
#include "hilbert/hsub.hpp"
#include "hilbert/sampling.hpp"

using namespace hilbert;

namespace {

const HOp kSwap = from_matrix({{0, 1}, {1, 0}});

ErrorKind kind_of(auto&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.kind();
  }
  FAIL("no error thrown");
  return ErrorKind::InvalidValue;
}

}  // namespace

TEST_CASE("construction and read-back") {
  const HOp a = explicit_op(3, 4, [](std::size_t b, std::size_t a) { return CScalar(double(b), double(a)); });
  for (std::size_t c = 0; c < 4; ++c) {
    const HVec col = apply(a, ket(c, 4));
    for (std::size_t r = 0; r < 3; ++r) CHECK(col[r] == CScalar(double(r), double(c)));
  }
  CHECK(kind_of([] { HOp(0, 1, {}); }) == ErrorKind::InvalidValue);
  CHECK(kind_of([] { HOp(2, 2, {1, 2, 3}); }) == ErrorKind::InvalidValue);
  CHECK(kind_of([] { apply(identity(2), ket(0, 3)); }) == ErrorKind::DimMismatch);
  CHECK(kind_of([] { compose(zero(2, 3), zero(2, 3)); }) == ErrorKind::DimMismatch);
}

TEST_CASE("operator norm examples") {
  CHECK(op_norm(from_matrix({{1, 1}})) == doctest::Approx(std::sqrt(2.0)).epsilon(1e-12));
  // numpy: norm([[0,1],[1,0]], 2) = 1.0
  CHECK(op_norm(kSwap) == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(op_norm(zero(3, 2)) == 0.0);
}

TEST_CASE("sandwich of the swap with diag(1,-1)") {
  const std::vector<CScalar> d{1, -1};
  const std::vector<CScalar> expected{-1, 1};
  CHECK(approx_eq(sandwich(kSwap, diag(d)), diag(expected)));
  CHECK(kind_of([&] { sandwich(kSwap, zero(2, 3)); }) == ErrorKind::NonSquare);
}

TEST_CASE("adjoint laws") {
  RngStream root(21);
  for (std::uint64_t t = 0; t < 100; ++t) {
    auto rng = root.derive(t);
    const std::size_t m = sampling::random_dim(rng, 6), k = sampling::random_dim(rng, 6),
                      n = sampling::random_dim(rng, 6);
    const HOp a = sampling::random_operator(rng, m, k), b = sampling::random_operator(rng, k, n);
    const HVec x = sampling::random_vector(rng, n);
    CHECK(approx_eq(adjoint(adjoint(a)), a));
    CHECK(approx_eq(adjoint(compose(a, b)), compose(adjoint(b), adjoint(a))));
    CHECK(approx_eq(apply(compose(a, b), x), apply(a, apply(b, x))));
    const double na = op_norm(a);
    CHECK(std::abs(op_norm(adjoint(a)) - na) <= 1e-7 * std::max(1.0, na));
    CHECK(std::abs(op_norm(compose(adjoint(a), a)) - na * na) <= 1e-7 * std::max(1.0, na * na));
    CHECK(op_norm(compose(a, b)) <= na * op_norm(b) * (1 + 1e-9) + 1e-12);
    CHECK(vnorm(apply(b, x)) <= op_norm(b) * vnorm(x) * (1 + 1e-9) + 1e-12);
  }
}

TEST_CASE("operator classes") {
  const std::vector<CScalar> p{1, 0};
  CHECK(is_partial_isometry(diag(p)));
  CHECK(op_norm(diag(p)) == doctest::Approx(1.0));
  CHECK(is_unitary(kSwap));
  CHECK(is_selfadjoint(kSwap));
  CHECK_FALSE(is_positive(kSwap));
  CHECK(is_proj_op(diag(p)));
  CHECK_FALSE(is_proj_op(kSwap));
  CHECK_FALSE(is_unitary(zero(2, 3)));
  CHECK(kind_of([] { is_selfadjoint(zero(2, 3)); }) == ErrorKind::NonSquare);
  CHECK(loewner_leq(zero(2, 2), identity(2)));
  CHECK_FALSE(loewner_leq(kSwap, zero(2, 2)));
  CHECK_FALSE(loewner_leq(zero(2, 2), kSwap));

  RngStream root(22);
  for (std::uint64_t t = 0; t < 50; ++t) {
    auto rng = root.derive(t);
    const std::size_t m = sampling::random_dim(rng, 6), n = sampling::random_dim(rng, 6);
    const HOp b = sampling::random_operator(rng, m, n);
    CHECK(is_positive(compose(adjoint(b), b)));
    CHECK(is_unitary(sampling::random_unitary(rng, n)));
    const HOp pi = sampling::random_partial_isometry(rng, m, n, false);
    CHECK(is_partial_isometry(pi));
    CHECK(op_norm(pi) == doctest::Approx(1.0).epsilon(1e-9));
    if (m >= n) CHECK(is_isometry(sampling::random_isometry(rng, m, n)));
  }
}

TEST_CASE("vectors as operators and butterflies") {
  RngStream root(23);
  for (std::uint64_t t = 0; t < 50; ++t) {
    auto rng = root.derive(t);
    const std::size_t n = sampling::random_dim(rng, 6), m = sampling::random_dim(rng, 6);
    const HVec a = sampling::random_vector(rng, n), b = sampling::random_vector(rng, n),
               c = sampling::random_vector(rng, m);
    CHECK(op_norm(vector_to_op(a)) == doctest::Approx(vnorm(a)).epsilon(1e-9));
    const HOp g = compose(adjoint(vector_to_op(a)), vector_to_op(b));
    REQUIRE(g.rows() == 1);
    CHECK(std::abs(g(0, 0) - inner(a, b)) < 1e-12);
    CHECK(std::abs(one_dim_to_scalar(g) - inner(a, b)) < 1e-12);
    CHECK(approx_eq(op_to_vector(vector_to_op(a)), a));
    CHECK(op_norm(butterfly(a, c)) == doctest::Approx(vnorm(a) * vnorm(c)).epsilon(1e-9));
    CHECK(is_rank1(butterfly(a, c)));
  }
  HOp sum = zero(4, 4);
  for (std::size_t i = 0; i < 4; ++i) sum = add(sum, butterfly(ket(i, 4), ket(i, 4)));
  CHECK(approx_eq(sum, identity(4)));
  CHECK_FALSE(is_rank1(identity(2)));
}

TEST_CASE("classical operators") {
  PartialMap swap{2, 2, {1, 0}};
  CHECK(approx_eq(classical_operator(swap), kSwap));
  CHECK(is_unitary(classical_operator(swap)));

  PartialMap constant{2, 2, {0, 0}};
  const HOp k = classical_operator(constant);
  CHECK(approx_eq(k, from_matrix({{1, 1}, {0, 0}})));
  // numpy: norm([[1,1],[0,0]], 2) = 1.4142135623730951
  CHECK(op_norm(k) == doctest::Approx(1.4142135623730951).epsilon(1e-12));
  CHECK_FALSE(is_isometry(k));
  CHECK(kind_of([&] { pm_inverse(constant); }) == ErrorKind::NotInjective);
  CHECK(kind_of([] { PartialMap{2, 2, {0, 2}}.validate(); }) == ErrorKind::IndexOutOfRange);

  RngStream root(24);
  for (std::uint64_t t = 0; t < 50; ++t) {
    auto rng = root.derive(t);
    const std::size_t d = sampling::random_dim(rng, 6);
    const std::size_t c = d + rng.uniform_int(0, 2);
    const PartialMap pi = sampling::random_injective_map(rng, d, c);
    const HOp a = classical_operator(pi);
    CHECK(is_partial_isometry(a));
    CHECK(approx_eq(adjoint(a), classical_operator(pm_inverse(pi))));
  }
}

TEST_CASE("left inverse of tall full-rank operators") {
  RngStream root(25);
  for (std::uint64_t t = 0; t < 20; ++t) {
    auto rng = root.derive(t);
    const HOp a = sampling::random_operator(rng, 4, 2);
    REQUIRE(is_invertible(a));
    CHECK_FALSE(is_iso(a));
    CHECK(approx_eq(compose(left_inverse(a), a), identity(2)));
    const HOp u = sampling::random_unitary(rng, 3);
    CHECK(is_iso(u));
    CHECK(approx_eq(left_inverse(u), adjoint(u)));
    CHECK(approx_eq(compose(u, left_inverse(u)), identity(3)));
  }
  CHECK(approx_eq(left_inverse(from_matrix({{2}})), from_matrix({{0.5}})));
  CHECK(kind_of([] { left_inverse(from_matrix({{1, 1}, {1, 1}})); }) == ErrorKind::NotInvertible);
  CHECK(is_invertible(kSwap));
  CHECK_FALSE(is_invertible(from_matrix({{1, 1}, {1, 1}})));
}

TEST_CASE("extension from a set") {
  const std::vector<std::pair<HVec, HVec>> pairs{{ket(0, 3), ket(1, 2)}, {vadd(ket(0, 3), ket(1, 3)), ket(0, 2)}};
  const HOp b = extend_from_set(pairs);
  for (const auto& [s, y] : pairs) CHECK(approx_eq(apply(b, s), y));
  CHECK(vnorm(apply(b, ket(2, 3))) < 1e-12);
  const std::vector<std::pair<HVec, HVec>> clash{{ket(0, 2), ket(0, 2)}, {vscale(2.0, ket(0, 2)), ket(1, 2)}};
  CHECK(kind_of([&] { extend_from_set(clash); }) == ErrorKind::Inconsistent);
}

TEST_CASE("Riesz representatives") {
  const HOp f = from_matrix({{1, CScalar(0, -1)}});
  const HVec t = riesz_rep(f);
  CHECK(t[0] == CScalar(1, 0));
  CHECK(t[1] == CScalar(0, 1));
  for (std::size_t k = 0; k < 2; ++k) CHECK(inner(t, ket(k, 2)) == apply(f, ket(k, 2))[0]);
  CHECK(kind_of([] { riesz_rep(identity(2)); }) == ErrorKind::DimMismatch);

  RngStream root(26);
  for (std::uint64_t t2 = 0; t2 < 30; ++t2) {
    auto rng = root.derive(t2);
    const std::size_t m = sampling::random_dim(rng, 5), n = sampling::random_dim(rng, 5);
    const HOp g = sampling::random_operator(rng, 1, n);
    CHECK(vnorm(riesz_rep(g)) == doctest::Approx(op_norm(g)).epsilon(1e-9));
    const HOp c = sampling::random_operator(rng, m, n);
    std::vector<std::vector<CScalar>> table(n, std::vector<CScalar>(m));
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = 0; b < m; ++b) table[a][b] = inner(apply(c, ket(a, n)), ket(b, m));
    CHECK(approx_eq(riesz_rep_sesqui(table), c));
  }
}

TEST_CASE("unitary between bases") {
  RngStream root(27);
  for (std::uint64_t t = 0; t < 20; ++t) {
    auto rng = root.derive(t);
    const std::size_t n = sampling::random_dim(rng, 6);
    const auto e = sampling::random_onb(rng, n), f = sampling::random_onb(rng, n);
    const HOp u = unitary_between(e, f);
    CHECK(is_unitary(u));
    for (std::size_t i = 0; i < n; ++i) CHECK(approx_eq(apply(u, e[i]), f[i]));
  }
  const std::vector<HVec> bad{ket(0, 2), ket(0, 2)};
  const std::vector<HVec> good{ket(0, 2), ket(1, 2)};
  CHECK(kind_of([&] { unitary_between(bad, good); }) == ErrorKind::NotOrthonormalBasis);
}

TEST_CASE("direct sums and one-dimensional spaces") {
  for (std::size_t n = 1; n <= 4; ++n)
    for (std::size_t m = 1; m <= 4; ++m) {
      CHECK(is_isometry(embed_left(n, m)));
      CHECK(is_isometry(embed_right(n, m)));
    }
  CHECK(approx_eq(compose(adjoint(embed_right(2, 2)), embed_left(2, 2)), zero(2, 2)));
  CHECK(loewner_leq(scalar_to_one_dim(1.0), scalar_to_one_dim(2.0)) == complex_leq(1.0, 2.0));
  CHECK(one_dim_to_scalar(scalar_to_one_dim({3, 4})) == CScalar(3, 4));
  CHECK(vec1_to_scalar(scalar_to_vec1({0, 1})) == CScalar(0, 1));
  CHECK(kind_of([] { one_dim_to_scalar(identity(2)); }) == ErrorKind::DimMismatch);
}

TEST_CASE("small worked cases") {
  const std::vector<std::pair<HVec, HVec>> swap_pairs{{ket(0, 2), ket(1, 2)}, {ket(1, 2), ket(0, 2)}};
  CHECK(approx_eq(extend_from_set(swap_pairs), kSwap));
  const std::vector<std::pair<HVec, HVec>> scaled{{ket(0, 2), ket(1, 2)}, {vscale(2.0, ket(0, 2)), vscale(2.0, ket(1, 2))}};
  CHECK(approx_eq(extend_from_set(scaled), from_matrix({{0, 0}, {1, 0}})));

  CHECK(approx_eq(riesz_rep(zero(1, 3)), HVec::zeros(3)));
  CHECK(approx_eq(riesz_rep_sesqui({{1, 0}, {0, 1}}), identity(2)));
  CHECK(approx_eq(riesz_rep_sesqui({{0, 0, 0}, {0, 0, 0}}), zero(3, 2)));

  const std::vector<HVec> kets{ket(0, 2), ket(1, 2)}, reversed{ket(1, 2), ket(0, 2)};
  CHECK(approx_eq(unitary_between(kets, kets), identity(2)));
  CHECK(approx_eq(unitary_between(kets, reversed), kSwap));

  CHECK(approx_eq(embed_left(1, 1), from_matrix({{1}, {0}})));
  CHECK(one_dim_to_scalar(from_matrix({{CScalar(2, 1)}})) == CScalar(2, 1));
  CHECK(one_dim_to_scalar(compose(scalar_to_one_dim(2.0), scalar_to_one_dim({0, 3}))) == CScalar(0, 6));
}

TEST_CASE("partial isometries project onto their initial space") {
  RngStream root(28);
  for (std::uint64_t t = 0; t < 30; ++t) {
    auto rng = root.derive(t);
    const std::size_t m = sampling::random_dim(rng, 6), n = sampling::random_dim(rng, 6);
    const HOp a = sampling::random_partial_isometry(rng, m, n, false);
    const HOp p = compose(adjoint(a), a);
    CHECK(is_proj_op(p));
    CHECK(seq(image(p, top(n)), ocomplement(kernel(a))));
  }
}

TEST_CASE("operators agreeing on kets are equal") {
  RngStream rng(29);
  const HOp a = sampling::random_operator(rng, 3, 4);
  const HOp b = explicit_op(3, 4, [&](std::size_t r, std::size_t c) { return apply(a, ket(c, 4))[r]; });
  CHECK(frobenius_norm(sub(a, b)) == 0.0);
}
