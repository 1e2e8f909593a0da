#include "hilbert/lemma_suite.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

#include "hilbert/error.hpp"
#include "hilbert/hop.hpp"
#include "hilbert/hsub.hpp"
#include "hilbert/hvec.hpp"
#include "hilbert/oracle.hpp"
#include "hilbert/sampling.hpp"

namespace hilbert::lemma_suite {

using namespace hilbert::sampling;

namespace {

// Outcome for a residual compared against a bound.
CheckOutcome within(double residual, double bound) { return {residual <= bound, residual}; }

// Outcome for a boolean property; residual 1 on failure.
CheckOutcome holds(bool ok) { return {ok, ok ? 0.0 : 1.0}; }

CheckOutcome both(CheckOutcome a, CheckOutcome b) { return {a.pass && b.pass, std::max(a.residual, b.residual)}; }

double dist(const HOp& a, const HOp& b) { return frobenius_norm(sub(a, b)); }

std::vector<HVec> columns(const HOp& a) {
  std::vector<HVec> out;
  for (std::size_t j = 0; j < a.cols(); ++j) out.push_back(a.column(j));
  return out;
}

// ---------------------------------------------------------------------------
// numeric

CheckOutcome check_herm_eig(RngStream& rng, const Tolerance& tol, std::size_t max_dim) {
  const std::size_t n = random_dim(rng, max_dim);
  const HOp h = random_hermitian(rng, n);
  const auto eig = herm_eig(h, tol);
  const HOp v(n, n, eig.vectors);
  std::vector<CScalar> lam(eig.values.begin(), eig.values.end());
  const double scale = std::max(1.0, frobenius_norm(h));
  const double eig_res = dist(compose(h, v), compose(v, diag(lam)));
  const double unit_res = dist(compose(adjoint(v), v), identity(n));
  const bool sorted = std::is_sorted(eig.values.begin(), eig.values.end());
  return both(both(within(eig_res, 1e-8 * scale), within(unit_res, 1e-9)), holds(sorted));
}

CheckOutcome check_complex_order(RngStream& rng, const Tolerance& tol, std::size_t) {
  // Triples sharing an imaginary part exercise the non-trivial branch.
  const double im = rng.uniform(-1.0, 1.0);
  const CScalar x{rng.uniform(-1.0, 1.0), im};
  const CScalar y{rng.uniform(-1.0, 1.0), rng.coin() ? im : rng.uniform(-1.0, 1.0)};
  const CScalar z{rng.uniform(-1.0, 1.0), rng.coin() ? im : rng.uniform(-1.0, 1.0)};
  bool ok = complex_leq(x, x, tol);
  if (complex_leq(x, y, tol) && complex_leq(y, x, tol)) ok = ok && approx_eq(x, y, tol);
  if (x.imag() == y.imag() && y.imag() == z.imag() && complex_leq(x, y, tol) && complex_leq(y, z, tol)) {
    ok = ok && complex_leq(x, z, tol);
  }
  ok = ok && approx_eq(x, y, tol) == approx_eq(y, x, tol) && approx_eq(x, x, tol);
  return holds(ok);
}

// ---------------------------------------------------------------------------
// hvec

CheckOutcome check_cinner_commute(RngStream& rng, const Tolerance& tol, std::size_t max_dim) {
  const std::size_t n = random_dim(rng, max_dim);
  const HVec x = random_vector(rng, n);
  const HVec y = random_vector(rng, n);
  const double r = std::abs(inner(x, y) - std::conj(inner(y, x)));
  return within(r, tol.atol * std::max(1.0, vnorm(x) * vnorm(y)));
}

CheckOutcome check_cinner_eq_zero_iff(RngStream& rng, const Tolerance& tol, std::size_t max_dim) {
  const std::size_t n = random_dim(rng, max_dim);
  HVec x = random_vector(rng, n);
  switch (rng.uniform_int(0, 2)) {
    case 0: x = HVec::zeros(n); break;
    case 1: x = vscale(1e-12, x); break;
    default: break;
  }
  const CScalar xx = inner(x, x);
  const bool real = std::abs(xx.imag()) <= tol.atol * std::max(1.0, xx.real());
  const bool nonneg = xx.real() >= -tol.atol;
  const bool iff = (std::abs(xx) <= tol.atol) == (vnorm(x) <= tol.atol);
  return {real && nonneg && iff, std::abs(xx.imag())};
}

CheckOutcome check_cauchy_schwarz(RngStream& rng, const Tolerance& tol, std::size_t max_dim) {
  const std::size_t n = random_dim(rng, max_dim);
  const HVec x = random_vector(rng, n);
  const HVec y = rng.coin() ? random_vector(rng, n) : vscale(rng.complex_unit_box(), x);
  const double excess = std::abs(inner(x, y)) - vnorm(x) * vnorm(y);
  return within(std::max(0.0, excess), tol.atol);
}

CheckOutcome check_cinner_add_right(RngStream& rng, const Tolerance& tol, std::size_t max_dim) {
  const std::size_t n = random_dim(rng, max_dim);
  const HVec x = random_vector(rng, n);
  const HVec y = random_vector(rng, n);
  const HVec z = random_vector(rng, n);
  const double r = std::abs(inner(x, vadd(y, z)) - (inner(x, y) + inner(x, z)));
  return within(r, tol.atol);
}

CheckOutcome check_cinner_scaleC_left(RngStream& rng, const Tolerance& tol, std::size_t max_dim) {
  const std::size_t n = random_dim(rng, max_dim);
  const CScalar c = rng.complex_unit_box();
  const HVec x = random_vector(rng, n);
  const HVec y = random_vector(rng, n);
  const double r1 = std::abs(inner(vscale(c, x), y) - std::conj(c) * inner(x, y));
  const double r2 = std::abs(inner(x, vscale(c, y)) - c * inner(x, y));
  return within(std::max(r1, r2), tol.atol);
}

CheckOutcome check_scaleC_scaleC(RngStream& rng, const Tolerance& tol, std::size_t max_dim) {
  const std::size_t n = random_dim(rng, max_dim);
  const CScalar a = rng.complex_unit_box();
  const CScalar b = rng.complex_unit_box();
  const HVec x = random_vector(rng, n);
  const double r = vnorm(vsub(vscale(a, vscale(b, x)), vscale(a * b, x)));
  const double one = vnorm(vsub(vscale(1.0, x), x));
  return within(std::max(r, one), tol.atol);
}

CheckOutcome check_ket_orthonormal(RngStream& rng, const Tolerance& tol, std::size_t max_dim) {
  const std::size_t n = random_dim(rng, max_dim);
  double worst = 0.0;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      worst = std::max(worst, std::abs(inner(ket(i, n), ket(j, n)) - CScalar(i == j ? 1.0 : 0.0)));
  return within(worst, tol.atol);
}

CheckOutcome check_parseval(RngStream& rng, const Tolerance&, std::size_t max_dim) {
  const std::size_t n = random_dim(rng, max_dim);
  const auto onb = random_onb(rng, n);
  const HVec psi = random_vector(rng, n);
  double sum = 0.0;
  for (const auto& b : onb) sum += std::norm(inner(b, psi));
  const double nn = vnorm(psi);
  return within(std::abs(sum - nn * nn), 1e-9);
}

CheckOutcome check_trunc_reduces_norm(RngStream& rng, const Tolerance& tol, std::size_t max_dim) {
  const std::size_t n = random_dim(rng, max_dim);
  const HVec x = random_vector(rng, n);
  std::vector<std::size_t> keep;
  for (std::size_t i = 0; i < n; ++i)
    if (rng.coin()) keep.push_back(i);
  const double excess = vnorm(trunc(keep, x)) - vnorm(x);
  return within(std::max(0.0, excess), tol.atol);
}

// ---------------------------------------------------------------------------
// hop

CheckOutcome check_cinner_adj(RngStream& rng, const Tolerance& tol, std::size_t max_dim) {
  const std::size_t m = random_dim(rng, max_dim);
  const std::size_t n = random_dim(rng, max_dim);
  const HOp a = random_operator(rng, m, n);
  const HVec x = random_vector(rng, n);
  const HVec y = random_vector(rng, m);
  const CScalar lhs = inner(apply(a, x), y);
  const CScalar rhs = inner(x, apply(adjoint(a), y));
  return within(std::abs(lhs - rhs), tol.atol * std::max(1.0, std::abs(lhs)));
}

CheckOutcome check_double_adj(RngStream& rng, const Tolerance&, std::size_t max_dim) {
  const std::size_t m = random_dim(rng, max_dim);
  const std::size_t n = random_dim(rng, max_dim);
  const std::size_t k = random_dim(rng, max_dim);
  const HOp a = random_operator(rng, m, n);
  const HOp b = random_operator(rng, n, k);
  const double r1 = dist(adjoint(adjoint(a)), a);
  const double r2 = dist(adjoint(compose(a, b)), compose(adjoint(b), adjoint(a)));
  return within(std::max(r1, r2), 1e-12 * std::max(1.0, frobenius_norm(a) * frobenius_norm(b)));
}

CheckOutcome check_norm_adj(RngStream& rng, const Tolerance& tol, std::size_t max_dim) {
  const HOp a = random_operator(rng, random_dim(rng, max_dim), random_dim(rng, max_dim));
  const double na = op_norm(a, tol);
  return within(std::abs(op_norm(adjoint(a), tol) - na) / std::max(1.0, na), 1e-7);
}

CheckOutcome check_norm_AadjA(RngStream& rng, const Tolerance& tol, std::size_t max_dim) {
  const HOp a = random_operator(rng, random_dim(rng, max_dim), random_dim(rng, max_dim));
  const double na = op_norm(a, tol);
  return within(std::abs(op_norm(compose(adjoint(a), a), tol) - na * na) / std::max(1.0, na * na), 1e-7);
}

CheckOutcome check_norm_compose(RngStream& rng, const Tolerance& tol, std::size_t max_dim) {
  const std::size_t m = random_dim(rng, max_dim);
  const std::size_t n = random_dim(rng, max_dim);
  const std::size_t k = random_dim(rng, max_dim);
  const HOp a = random_operator(rng, m, n);
  const HOp b = random_operator(rng, n, k);
  const double excess = op_norm(compose(a, b), tol) - op_norm(a, tol) * op_norm(b, tol);
  return within(std::max(0.0, excess), tol.atol);
}

CheckOutcome check_norm_bound(RngStream& rng, const Tolerance& tol, std::size_t max_dim) {
  const std::size_t m = random_dim(rng, max_dim);
  const std::size_t n = random_dim(rng, max_dim);
  const HOp a = random_operator(rng, m, n);
  const HVec x = random_vector(rng, n);
  const double bound = op_norm(a, tol);
  const double excess = std::max(0.0, vnorm(apply(a, x)) - bound * vnorm(x));
  const auto top = top_singular_triple(a, tol);
  const double attained = std::abs(vnorm(apply(a, top.right)) - bound);
  return both(within(excess, tol.atol), within(attained, 1e-9 * std::max(1.0, bound)));
}

CheckOutcome check_partial_isometry_hierarchy(RngStream& rng, const Tolerance& tol, std::size_t max_dim) {
  const std::size_t n = random_dim(rng, max_dim);
  bool ok = true;
  switch (rng.uniform_int(0, 2)) {
    case 0: {
      const HOp u = random_unitary(rng, n);
      ok = is_unitary(u, tol) && is_isometry(u, tol) && is_partial_isometry(u, tol);
      break;
    }
    case 1: {
      const std::size_t k = rng.uniform_int(1, n);
      const HOp u = random_isometry(rng, n, k);
      ok = is_isometry(u, tol) && is_partial_isometry(u, tol);
      break;
    }
    default: {
      const HOp p = random_projector(rng, n);
      ok = is_proj_op(p, tol) && is_partial_isometry(p, tol);
      break;
    }
  }
  return holds(ok);
}

CheckOutcome check_isometry_from_inner(RngStream& rng, const Tolerance& tol, std::size_t max_dim) {
  const std::size_t n = random_dim(rng, max_dim);
  const std::size_t m = rng.uniform_int(n, std::max(n, max_dim));
  const HOp u = rng.coin() ? random_isometry(rng, m, n) : random_operator(rng, m, n);
  bool preserves = true;
  double worst = 0.0;
  for (std::size_t b = 0; b < n; ++b) {
    for (std::size_t c = 0; c < n; ++c) {
      const double r = std::abs(inner(apply(u, ket(b, n)), apply(u, ket(c, n))) - inner(ket(b, n), ket(c, n)));
      worst = std::max(worst, r);
      preserves = preserves && r <= tol.atol;
    }
  }
  return {!preserves || is_isometry(u, tol), preserves ? worst : 0.0};
}

CheckOutcome check_surj_isometry_unitary(RngStream& rng, const Tolerance& tol, std::size_t max_dim) {
  const std::size_t n = random_dim(rng, max_dim);
  const std::size_t m = rng.coin() ? n : rng.uniform_int(n, std::max(n, max_dim));
  const HOp u = random_isometry(rng, m, n);
  const bool surjective = seq(image(u, top(n), tol), top(m), tol);
  const bool premise_ok = is_isometry(u, tol) && (m != n || surjective);
  return holds(premise_ok && (!surjective || is_unitary(u, tol)));
}

CheckOutcome check_selfadjoint_iff_real(RngStream& rng, const Tolerance& tol, std::size_t max_dim) {
  const std::size_t n = random_dim(rng, max_dim);
  const HOp a = rng.coin() ? random_hermitian(rng, n) : random_operator(rng, n, n);
  bool all_real = true;
  for (int k = 0; k < 50; ++k) {
    const HVec psi = random_vector(rng, n);
    const CScalar q = inner(psi, apply(a, psi));
    all_real = all_real && std::abs(q.imag()) <= tol.atol * std::max(1.0, std::abs(q));
  }
  return holds(is_selfadjoint(a, tol) == all_real);
}

CheckOutcome check_positive_selfadjoint(RngStream& rng, const Tolerance& tol, std::size_t max_dim) {
  const std::size_t n = random_dim(rng, max_dim);
  HOp a = random_operator(rng, n, n);
  if (rng.coin()) a = compose(adjoint(a), a);
  return holds(!is_positive(a, tol) || is_selfadjoint(a, tol));
}

CheckOutcome check_positive_square(RngStream& rng, const Tolerance& tol, std::size_t max_dim) {
  const HOp b = random_operator(rng, random_dim(rng, max_dim), random_dim(rng, max_dim));
  const HOp bb = compose(adjoint(b), b);
  return holds(is_positive(bb, tol) && loewner_leq(zero(bb.rows(), bb.cols()), bb, tol));
}

CheckOutcome check_norm_partial_isometry(RngStream& rng, const Tolerance& tol, std::size_t max_dim) {
  const std::size_t m = random_dim(rng, max_dim);
  const std::size_t n = random_dim(rng, max_dim);
  const HOp a = random_partial_isometry(rng, m, n, false);
  const HOp initial = compose(adjoint(a), a);
  const double r = std::abs(op_norm(a, tol) - 1.0);
  const bool projector = is_proj_op(initial, tol) &&
                         seq(image(initial, top(n), tol), ocomplement(kernel(a, tol), tol), tol);
  return both(within(r, 1e-7), holds(is_partial_isometry(a, tol) && projector));
}

CheckOutcome check_equal_ket(RngStream& rng, const Tolerance& tol, std::size_t max_dim) {
  const std::size_t m = random_dim(rng, max_dim);
  const std::size_t n = random_dim(rng, max_dim);
  const HOp a = random_operator(rng, m, n);
  const HOp b = rng.coin() ? oscale(1.0, a) : add(a, oscale(1e-3, random_operator(rng, m, n)));
  bool on_kets = true;
  for (std::size_t i = 0; i < n; ++i) on_kets = on_kets && approx_eq(apply(a, ket(i, n)), apply(b, ket(i, n)), tol);
  const bool equal = frobenius_norm(sub(a, b)) <= tol.atol * std::max(1.0, frobenius_norm(a));
  return holds(on_kets == equal);
}

CheckOutcome check_rank1_iff_butterfly(RngStream& rng, const Tolerance& tol, std::size_t max_dim) {
  const std::size_t m = random_dim(rng, max_dim);
  const std::size_t n = random_dim(rng, max_dim);
  const HVec psi = random_vector(rng, m);
  const HVec phi = random_vector(rng, n);
  const HOp bf = butterfly(psi, phi);
  const HOp a = rng.coin() ? bf : random_operator(rng, m, n);
  if (!is_rank1(bf, tol)) return holds(false);
  if (!is_rank1(a, tol)) return holds(std::min(m, n) > 1);
  const auto top = top_singular_triple(a, tol);
  const HOp rebuilt = butterfly(vscale(top.sigma, top.left), top.right);
  return within(dist(rebuilt, a), 1e-8 * std::max(top.sigma, std::numeric_limits<double>::min()));
}

CheckOutcome check_norm_butterfly(RngStream& rng, const Tolerance& tol, std::size_t max_dim) {
  const HVec psi = random_vector(rng, random_dim(rng, max_dim));
  const HVec phi = random_vector(rng, random_dim(rng, max_dim));
  const double product = vnorm(psi) * vnorm(phi);
  return within(std::abs(op_norm(butterfly(psi, phi), tol) - product), 1e-9 * std::max(1.0, product));
}

CheckOutcome check_butterflies_sum_id(RngStream& rng, const Tolerance&, std::size_t max_dim) {
  const std::size_t n = random_dim(rng, max_dim);
  const auto onb = rng.coin() ? random_onb(rng, n) : columns(identity(n));
  HOp sum = zero(n, n);
  for (const auto& b : onb) sum = add(sum, butterfly(b, b));
  return within(dist(sum, identity(n)), 1e-9);
}

CheckOutcome check_loewner_order(RngStream& rng, const Tolerance& tol, std::size_t max_dim) {
  const std::size_t n = random_dim(rng, max_dim);
  const HOp a = random_hermitian(rng, n);
  HOp b = a;
  switch (rng.uniform_int(0, 2)) {
    case 0: break;
    case 1: {
      const HOp c = random_operator(rng, n, n);
      b = add(a, compose(adjoint(c), c));
      break;
    }
    default: b = random_hermitian(rng, n); break;
  }
  bool ok = loewner_leq(a, a, tol) && loewner_leq(b, b, tol);
  if (loewner_leq(a, b, tol) && loewner_leq(b, a, tol)) {
    ok = ok && frobenius_norm(sub(a, b)) <= 1e-6 * std::max(1.0, frobenius_norm(a));
  }
  return holds(ok);
}

CheckOutcome check_one_dim_loewner(RngStream& rng, const Tolerance& tol, std::size_t) {
  const CScalar a = rng.complex_unit_box();
  const CScalar b{rng.uniform(-1.0, 1.0), rng.coin() ? a.imag() : rng.uniform(-1.0, 1.0)};
  const bool op_order = loewner_leq(scalar_to_one_dim(a), scalar_to_one_dim(b), tol);
  return holds(op_order == complex_leq(a, b, tol));
}

CheckOutcome check_one_dim_iso(RngStream& rng, const Tolerance& tol, std::size_t max_dim) {
  const std::size_t n = random_dim(rng, max_dim);
  const HVec psi = random_vector(rng, n);
  const HVec phi = random_vector(rng, n);
  const CScalar a = rng.complex_unit_box();
  const CScalar b = rng.complex_unit_box();
  const double r1 = std::abs(one_dim_to_scalar(compose(adjoint(vector_to_op(psi)), vector_to_op(phi))) - inner(psi, phi));
  const double r2 = std::abs(one_dim_to_scalar(compose(scalar_to_one_dim(a), scalar_to_one_dim(b))) - a * b);
  const double r3 = std::abs(vec1_to_scalar(scalar_to_vec1(a)) - a) + std::abs(one_dim_to_scalar(scalar_to_one_dim(b)) - b);
  return within(std::max({r1, r2, r3}), tol.atol);
}

CheckOutcome check_norm_vector_to_op(RngStream& rng, const Tolerance& tol, std::size_t max_dim) {
  const HVec psi = random_vector(rng, random_dim(rng, max_dim));
  const double r = std::abs(op_norm(vector_to_op(psi), tol) - vnorm(psi));
  const double round_trip = vnorm(vsub(op_to_vector(vector_to_op(psi)), psi));
  return within(std::max(r, round_trip), 1e-9 * std::max(1.0, vnorm(psi)));
}

CheckOutcome check_classical_adjoint(RngStream& rng, const Tolerance&, std::size_t max_dim) {
  const auto pi = random_injective_map(rng, random_dim(rng, max_dim), random_dim(rng, max_dim));
  return within(dist(adjoint(classical_operator(pi)), classical_operator(pm_inverse(pi))), 1e-12);
}

CheckOutcome check_unitary_classical(RngStream& rng, const Tolerance& tol, std::size_t max_dim) {
  const auto pi = random_permutation(rng, random_dim(rng, max_dim));
  return holds(is_unitary(classical_operator(pi), tol));
}

CheckOutcome check_classical_partial_isometry(RngStream& rng, const Tolerance& tol, std::size_t max_dim) {
  const auto pi = random_injective_map(rng, random_dim(rng, max_dim), random_dim(rng, max_dim));
  const HOp c = classical_operator(pi);
  const bool defined = std::any_of(pi.images.begin(), pi.images.end(), [](const auto& x) { return x.has_value(); });
  const double r = defined ? std::abs(op_norm(c, tol) - 1.0) : op_norm(c, tol);
  return both(holds(is_partial_isometry(c, tol)), within(r, 1e-9));
}

CheckOutcome check_extension_apply(RngStream& rng, const Tolerance& tol, std::size_t max_dim) {
  const std::size_t n = random_dim(rng, max_dim);
  const std::size_t m = random_dim(rng, max_dim);
  const HOp target = random_operator(rng, m, n);
  const std::size_t k = rng.uniform_int(1, n + 1);
  std::vector<HVec> sources;
  for (std::size_t i = 0; i < k; ++i) {
    // Occasionally repeat a scaled earlier source to create a dependency.
    if (i > 0 && rng.uniform_int(0, 3) == 0) {
      sources.push_back(vscale(rng.complex_unit_box(), sources[rng.uniform_int(0, i - 1)]));
    } else {
      sources.push_back(random_vector(rng, n));
    }
  }
  std::vector<std::pair<HVec, HVec>> pairs;
  for (const auto& s : sources) pairs.emplace_back(s, apply(target, s));
  const HOp b = extend_from_set(pairs, tol);
  double worst = 0.0;
  for (const auto& [s, img] : pairs) worst = std::max(worst, vnorm(vsub(apply(b, s), img)));
  const Subspace off = ocomplement(span(sources, n, tol), tol);
  double leak = 0.0;
  for (const auto& u : off.basis()) leak = std::max(leak, vnorm(apply(b, u)));
  return within(std::max(worst, leak), 1e-8 * std::max(1.0, frobenius_norm(target)));
}

CheckOutcome check_left_inverse(RngStream& rng, const Tolerance& tol, std::size_t max_dim) {
  const std::size_t n = random_dim(rng, max_dim);
  const std::size_t m = rng.uniform_int(n, std::max(n, max_dim));
  const HOp a = random_operator(rng, m, n);
  if (!is_invertible(a, tol)) return holds(false);
  const HOp li = left_inverse(a, tol);
  double r = dist(compose(li, a), identity(n));
  if (is_iso(a, tol)) r = std::max(r, dist(compose(a, li), identity(m)));
  return within(r, 1e-7);
}

CheckOutcome check_riesz(RngStream& rng, const Tolerance& tol, std::size_t max_dim) {
  const std::size_t n = random_dim(rng, max_dim);
  const HOp f = random_operator(rng, 1, n);
  const HVec t = riesz_rep(f);
  double worst = 0.0;
  for (std::size_t k = 0; k < n; ++k) worst = std::max(worst, std::abs(apply(f, ket(k, n))[0] - inner(t, ket(k, n))));
  return both(within(worst, 1e-9), within(std::abs(vnorm(t) - op_norm(f, tol)), 1e-7));
}

CheckOutcome check_riesz_sesqui(RngStream& rng, const Tolerance&, std::size_t max_dim) {
  const std::size_t na = random_dim(rng, max_dim);
  const std::size_t nb = random_dim(rng, max_dim);
  const HOp c = random_operator(rng, nb, na);
  std::vector<std::vector<CScalar>> table(na, std::vector<CScalar>(nb));
  for (std::size_t a = 0; a < na; ++a)
    for (std::size_t b = 0; b < nb; ++b) table[a][b] = inner(apply(c, ket(a, na)), ket(b, nb));
  return within(dist(riesz_rep_sesqui(table), c), 1e-9);
}

CheckOutcome check_unitary_between(RngStream& rng, const Tolerance& tol, std::size_t max_dim) {
  const std::size_t n = random_dim(rng, max_dim);
  const auto e = random_onb(rng, n);
  const auto f = random_onb(rng, n);
  const HOp u = unitary_between(e, f, tol);
  double worst = 0.0;
  for (std::size_t i = 0; i < n; ++i) worst = std::max(worst, vnorm(vsub(apply(u, e[i]), f[i])));
  return both(holds(is_unitary(u, tol)), within(worst, 1e-9));
}

CheckOutcome check_left_right_embeddings(RngStream& rng, const Tolerance& tol, std::size_t max_dim) {
  const std::size_t n = random_dim(rng, max_dim);
  const std::size_t m = random_dim(rng, max_dim);
  const HOp l = embed_left(n, m);
  const HOp r = embed_right(n, m);
  const HVec x = random_vector(rng, n);
  const HVec y = random_vector(rng, m);
  const double pairing = vnorm(vsub(vadd(apply(l, x), apply(r, y)), pair_vec(x, y)));
  const double ortho = frobenius_norm(compose(adjoint(r), l));
  return both(holds(is_isometry(l, tol) && is_isometry(r, tol)), within(std::max(pairing, ortho), tol.atol));
}

// ---------------------------------------------------------------------------
// hsub

CheckOutcome check_lattice_laws(RngStream& rng, const Tolerance& tol, std::size_t max_dim) {
  const std::size_t n = random_dim(rng, max_dim);
  const Subspace x = random_subspace(rng, n);
  const Subspace y = random_subspace(rng, n);
  const Subspace z = random_subspace(rng, n);
  bool ok = seq(ssup(x, y, tol), ssup(y, x, tol), tol) && seq(sinf(x, y, tol), sinf(y, x, tol), tol);
  ok = ok && seq(ssup(ssup(x, y, tol), z, tol), ssup(x, ssup(y, z, tol), tol), tol);
  ok = ok && seq(sinf(sinf(x, y, tol), z, tol), sinf(x, sinf(y, z, tol), tol), tol);
  ok = ok && seq(ssup(x, sinf(x, y, tol), tol), x, tol) && seq(sinf(x, ssup(x, y, tol), tol), x, tol);
  ok = ok && leq(bot(n), x, tol) && leq(x, top(n), tol);
  return holds(ok);
}

CheckOutcome check_double_complement(RngStream& rng, const Tolerance& tol, std::size_t max_dim) {
  const std::size_t n = random_dim(rng, max_dim);
  const Subspace s = random_subspace(rng, n);
  const Subspace t = rng.coin() ? ssup(s, random_subspace(rng, n), tol) : random_subspace(rng, n);
  const bool twice = seq(ocomplement(ocomplement(s, tol), tol), s, tol);
  const bool antitone = leq(s, t, tol) == leq(ocomplement(t, tol), ocomplement(s, tol), tol);
  return holds(twice && antitone);
}

CheckOutcome check_orthomodular(RngStream& rng, const Tolerance& tol, std::size_t max_dim) {
  const std::size_t n = random_dim(rng, max_dim);
  const Subspace y = random_subspace(rng, n);
  const Subspace x = random_subspace_of(rng, y);
  if (!leq(x, y, tol)) return holds(false);
  return holds(seq(ssup(x, sinf(ocomplement(x, tol), y, tol), tol), y, tol));
}

CheckOutcome check_compl_sup(RngStream& rng, const Tolerance& tol, std::size_t max_dim) {
  const std::size_t n = random_dim(rng, max_dim);
  const Subspace x = random_subspace(rng, n);
  const Subspace y = random_subspace(rng, n);
  const bool sup_law = seq(ocomplement(ssup(x, y, tol), tol), sinf(ocomplement(x, tol), ocomplement(y, tol), tol), tol);
  const bool inf_law = seq(ocomplement(sinf(x, y, tol), tol), ssup(ocomplement(x, tol), ocomplement(y, tol), tol), tol);
  return holds(sup_law && inf_law);
}

CheckOutcome check_inf_oracle(RngStream& rng, const Tolerance& tol, std::size_t max_dim) {
  const std::size_t n = random_dim(rng, max_dim);
  const Subspace x = random_subspace(rng, n);
  // Half the pairs share a forced common part so the meet is non-trivial.
  Subspace y = random_subspace(rng, n);
  if (rng.coin()) y = ssup(y, random_subspace_of(rng, x), tol);
  return holds(seq(sinf(x, y, tol), oracle::intersection_by_elimination(x, y), tol));
}

CheckOutcome check_kernel_compl_adj_range(RngStream& rng, const Tolerance& tol, std::size_t max_dim) {
  const std::size_t m = random_dim(rng, max_dim);
  const std::size_t n = random_dim(rng, max_dim);
  const HOp a = rng.coin() ? random_low_rank(rng, m, n) : random_operator(rng, m, n);
  return holds(seq(kernel(a, tol), ocomplement(image(adjoint(a), top(m), tol), tol), tol));
}

CheckOutcome check_proj_mono(RngStream& rng, const Tolerance& tol, std::size_t max_dim) {
  const std::size_t n = random_dim(rng, max_dim);
  const Subspace t = random_subspace(rng, n);
  const Subspace s = rng.coin() ? random_subspace_of(rng, t) : random_subspace(rng, n);
  const bool forward = loewner_leq(proj(s), proj(t), tol) == leq(s, t, tol);
  const bool backward = loewner_leq(proj(t), proj(s), tol) == leq(t, s, tol);
  return holds(forward && backward);
}

CheckOutcome check_proj_sup_orthogonal(RngStream& rng, const Tolerance& tol, std::size_t max_dim) {
  const std::size_t n = random_dim(rng, max_dim);
  const Subspace m = random_subspace(rng, n);
  const Subspace nn = random_subspace_of(rng, ocomplement(m, tol));
  if (!leq(m, ocomplement(nn, tol), tol)) return holds(false);
  return within(dist(proj(ssup(m, nn, tol)), add(proj(m), proj(nn))), 1e-8);
}

CheckOutcome check_proj_ortho_compl(RngStream& rng, const Tolerance& tol, std::size_t max_dim) {
  const std::size_t n = random_dim(rng, max_dim);
  const Subspace s = random_subspace(rng, n);
  return within(dist(sub(identity(n), proj(s)), proj(ocomplement(s, tol))), 1e-8);
}

CheckOutcome check_compose_image(RngStream& rng, const Tolerance& tol, std::size_t max_dim) {
  const std::size_t m = random_dim(rng, max_dim);
  const std::size_t n = random_dim(rng, max_dim);
  const std::size_t k = random_dim(rng, max_dim);
  const HOp a = rng.coin() ? random_low_rank(rng, m, n) : random_operator(rng, m, n);
  const HOp b = random_operator(rng, n, k);
  const Subspace s = random_subspace(rng, k);
  return holds(seq(image(compose(a, b), s, tol), image(a, image(b, s, tol), tol), tol));
}

CheckOutcome check_isometry_image_inf(RngStream& rng, const Tolerance& tol, std::size_t max_dim) {
  const std::size_t n = random_dim(rng, max_dim);
  const std::size_t m = rng.uniform_int(n, std::max(n, max_dim));
  const HOp u = random_isometry(rng, m, n);
  const Subspace x = random_subspace(rng, n);
  const Subspace y = random_subspace(rng, n);
  return holds(seq(image(u, sinf(x, y, tol), tol), sinf(image(u, x, tol), image(u, y, tol), tol), tol));
}

CheckOutcome check_basis_cardinality(RngStream& rng, const Tolerance& tol, std::size_t max_dim) {
  const std::size_t n = random_dim(rng, max_dim);
  const Subspace s = random_subspace(rng, n);
  std::vector<HVec> gens;
  const std::size_t count = rng.uniform_int(sdim(s), sdim(s) + 3);
  for (std::size_t i = 0; i < count; ++i) {
    HVec v = HVec::zeros(n);
    for (const auto& u : s.basis()) v = vadd(v, vscale(rng.complex_unit_box(), u));
    gens.push_back(v);
  }
  // Guarantee the generators span s.
  for (const auto& u : s.basis()) gens.push_back(vscale(2.0, u));
  const auto a = gram_schmidt0(std::vector<HVec>(s.basis().begin(), s.basis().end()), tol);
  const auto b = gram_schmidt0(gens, tol);
  return holds(a.size() == b.size() && seq(span(b, n, tol), s, tol));
}

CheckOutcome check_norm_proj(RngStream& rng, const Tolerance& tol, std::size_t max_dim) {
  const std::size_t n = random_dim(rng, max_dim);
  const Subspace s = random_subspace(rng, n);
  return within(std::max(0.0, op_norm(proj(s), tol) - 1.0), tol.atol);
}

CheckOutcome check_proj_characterization(RngStream& rng, const Tolerance& tol, std::size_t max_dim) {
  const std::size_t n = random_dim(rng, max_dim);
  const Subspace s = random_subspace(rng, n);
  const HOp p = proj(s);
  const double idem = dist(compose(p, p), p);
  const double herm = dist(p, adjoint(p));
  return both(within(std::max(idem, herm), 1e-9), holds(seq(image(p, top(n), tol), s, tol)));
}

CheckOutcome check_proj_from_unitary(RngStream& rng, const Tolerance& tol, std::size_t max_dim) {
  const std::size_t n = random_dim(rng, max_dim);
  const HOp u = random_unitary(rng, n);
  std::vector<CScalar> d(n);
  for (auto& x : d) x = rng.coin() ? 1.0 : 0.0;
  const HOp p = sandwich(u, diag(d));
  if (!is_proj_op(p, tol)) return holds(false);
  return within(dist(proj(image(p, top(n), tol)), p), 1e-8);
}

CheckOutcome check_subspace_times(RngStream& rng, const Tolerance& tol, std::size_t max_dim) {
  const std::size_t n = random_dim(rng, max_dim);
  const std::size_t m = random_dim(rng, max_dim);
  const Subspace s = random_subspace(rng, n);
  const Subspace t = random_subspace(rng, m);
  const Subspace prod = subspace_times(s, t, tol);
  // Spans of embedded generator sets that include 0.
  std::vector<HVec> gens{HVec::zeros(n + m)};
  const HOp l = embed_left(n, m);
  const HOp r = embed_right(n, m);
  for (const auto& u : s.basis()) gens.push_back(apply(l, vscale(rng.complex_unit_box(), u)));
  for (const auto& u : t.basis()) gens.push_back(apply(r, vscale(rng.complex_unit_box(), u)));
  const bool dims = sdim(prod) == sdim(s) + sdim(t) && prod.ambient() == n + m;
  return holds(dims && seq(span(gens, n + m, tol), prod, tol));
}

CheckOutcome check_image_rank1(RngStream& rng, const Tolerance& tol, std::size_t max_dim) {
  const std::size_t m = random_dim(rng, max_dim);
  const std::size_t n = random_dim(rng, max_dim);
  const HVec psi = random_vector(rng, m);
  const HVec phi = random_vector(rng, n);
  return holds(seq(image(butterfly(psi, phi), top(n), tol), span(std::vector<HVec>{psi}, m, tol), tol));
}

CheckOutcome check_explicit_op(RngStream& rng, const Tolerance&, std::size_t max_dim) {
  const std::size_t m = random_dim(rng, max_dim);
  const std::size_t n = random_dim(rng, max_dim);
  const HOp table = random_operator(rng, m, n);
  const HOp e = explicit_op(m, n, [&](std::size_t r, std::size_t c) { return table(r, c); });
  double worst = 0.0;
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < m; ++b) worst = std::max(worst, std::abs(apply(e, ket(a, n))[b] - table(b, a)));
  return within(worst, 0.0);
}

std::vector<CheckSpec> build_registry() {
  std::vector<CheckSpec> r;
  auto add_check = [&](std::string name, std::string statement, auto body, std::size_t min_dim = 1) {
    r.push_back({std::move(name), std::move(statement), min_dim, body});
  };
  // numeric
  add_check("herm_eig_residual", "H V = V diag(lambda), V unitary, eigenvalues ascending", check_herm_eig);
  add_check("complex_order", "complex_leq reflexive, antisymmetric, transitive; approx_eq symmetric", check_complex_order);
  // hvec
  add_check("cinner_commute", "inner(x, y) = cnj(inner(y, x))", check_cinner_commute);
  add_check("cinner_eq_zero_iff", "inner(x, x) real, nonnegative, zero iff x = 0", check_cinner_eq_zero_iff);
  add_check("Cauchy_Schwarz_ineq2", "|inner(x, y)| <= |x| |y|", check_cauchy_schwarz);
  add_check("cinner_add_right", "inner(x, y + z) = inner(x, y) + inner(x, z)", check_cinner_add_right);
  add_check("cinner_scaleC_left", "inner(c x, y) = cnj(c) inner(x, y)", check_cinner_scaleC_left);
  add_check("scaleC_scaleC", "a (b x) = (a b) x and 1 x = x", check_scaleC_scaleC);
  add_check("is_onb_ket", "inner(ket i, ket j) = of_bool(i = j)", check_ket_orthonormal);
  add_check("parseval_identity", "sum over an ONB of |inner(b, psi)|^2 = |psi|^2", check_parseval);
  add_check("trunc_ell2_reduces_norm", "|trunc S x| <= |x|", check_trunc_reduces_norm);
  // hop
  add_check("mat_of_cblinfun_explicit_cblinfun", "explicit_op M applied to ket a has coefficient M b a", check_explicit_op);
  add_check("cinner_adj_left", "inner(A x, y) = inner(x, adj(A) y)", check_cinner_adj);
  add_check("double_adj", "adj(adj A) = A and adj(A B) = adj B adj A", check_double_adj);
  add_check("norm_adj", "norm(adj a) = norm a", check_norm_adj);
  add_check("norm_AadjA", "norm(adj a a) = norm(a)^2", check_norm_AadjA);
  add_check("norm_cblinfun_compose", "norm(A B) <= norm A norm B", check_norm_compose);
  add_check("norm_cblinfun", "|A x| <= norm(A) |x|, attained at the top singular vector", check_norm_bound);
  add_check("unitary_partial_isometry", "unitary => isometry => partial isometry; projector => partial isometry",
            check_partial_isometry_hierarchy);
  add_check("norm_preserving_isometry", "inner(U b, U c) = inner(b, c) on kets => isometry", check_isometry_from_inner);
  add_check("surj_isometry_is_unitary", "isometry with image top is unitary", check_surj_isometry_unitary);
  add_check("cinner_real_selfadjointI", "selfadjoint iff inner(psi, A psi) real for sampled psi", check_selfadjoint_iff_real);
  add_check("positive_selfadjointI", "positive => selfadjoint", check_positive_selfadjoint);
  add_check("positive_cblinfun_squareI", "adj b b >= 0", check_positive_square);
  add_check("norm_partial_isometry", "nonzero partial isometry has norm 1; adj A A projects onto -kernel A",
            check_norm_partial_isometry);
  add_check("equal_ket", "operators agreeing on all kets are equal", check_equal_ket);
  add_check("rank1_iff_butterfly", "butterflies are rank-1 and rank-1 operators are butterflies", check_rank1_iff_butterfly);
  add_check("norm_butterfly", "norm(butterfly psi phi) = |psi| |phi|", check_norm_butterfly);
  add_check("butterflies_sum_id_finite", "sum of self-butterflies of an ONB is the identity", check_butterflies_sum_id);
  add_check("less_eq_cblinfun_order", "Loewner order reflexive and antisymmetric", check_loewner_order);
  add_check("one_dim_loewner_order", "loewner_leq on 1x1 agrees with complex_leq", check_one_dim_loewner);
  add_check("one_dim_iso_inner", "1x1 operators multiply like scalars; adj(v psi) v phi = inner(psi, phi)", check_one_dim_iso);
  add_check("norm_vector_to_cblinfun", "norm(vector_to_op psi) = |psi|", check_norm_vector_to_op);
  add_check("classical_operator_adjoint", "adj(classical pi) = classical(inv_map pi)", check_classical_adjoint);
  add_check("unitary_classical_operator", "permutations give unitaries", check_unitary_classical);
  add_check("classical_operator_norm_inj", "injective maps give partial isometries of norm 1", check_classical_partial_isometry);
  add_check("cblinfun_extension_apply", "extension reproduces the pairs and vanishes off their span", check_extension_apply);
  add_check("cblinfun_inv_left", "left_inverse(A) A = id; also a right inverse for isomorphisms", check_left_inverse);
  add_check("the_riesz_rep", "f x = inner(t, x) and |t| = norm f", check_riesz);
  add_check("the_riesz_rep_sesqui_apply", "inner(A e_a, f_b) = p e_a f_b", check_riesz_sesqui);
  add_check("unitary_between_apply", "unitary_between maps E to F and is unitary", check_unitary_between);
  add_check("cblinfun_right_left_ortho", "embeddings are isometries and adj(right) left = 0", check_left_right_embeddings);
  // hsub
  add_check("ccsubspace_lattice", "sup/inf commutative, associative, absorptive; bot <= S <= top", check_lattice_laws);
  add_check("orthogonal_complement_twice", "- - S = S and S <= T iff -T <= -S", check_double_complement);
  add_check("orthomodular", "x <= y => x sup (-x inf y) = y", check_orthomodular);
  add_check("compl_sup", "-(x sup y) = -x inf -y and -(x inf y) = -x sup -y", check_compl_sup);
  add_check("inf_ccsubspace_oracle", "inf agrees with elimination null space of stacked complements", check_inf_oracle);
  add_check("kernel_compl_adj_range", "kernel a = -(adj a image top)", check_kernel_compl_adj_range);
  add_check("Proj_mono", "Proj S <= Proj T iff S <= T", check_proj_mono);
  add_check("projection_plus", "M <= -N => Proj(M sup N) = Proj M + Proj N", check_proj_sup_orthogonal);
  add_check("Proj_ortho_compl", "id - Proj S = Proj(-S)", check_proj_ortho_compl);
  add_check("cblinfun_compose_image", "(A B) image S = A image (B image S)", check_compose_image);
  add_check("isometry_cblinfun_image_inf_distrib", "U image (X inf Y) = U image X inf U image Y", check_isometry_image_inf);
  add_check("bij_between_bases_bij", "orthonormalized generating sets of one subspace have equal size", check_basis_cardinality);
  add_check("norm_is_Proj", "norm(Proj S) <= 1", check_norm_proj);
  add_check("Proj_range", "Proj S idempotent, selfadjoint, with image S", check_proj_characterization);
  add_check("Proj_on_own_range", "U diag(0/1) adj U is a projector recovered from its range", check_proj_from_unitary);
  add_check("ccsubspace_Times_ccspan", "span of embedded generators = S x T, dimensions add", check_subspace_times);
  add_check("rank1_image", "butterfly psi phi image top = span{psi}", check_image_rank1);
  return r;
}

std::size_t index_of(const std::string& name) {
  const auto& reg = registry();
  for (std::size_t i = 0; i < reg.size(); ++i)
    if (reg[i].name == name) return i;
  fail(ErrorKind::UnknownCheckName, "no check named \"" + name + "\"");
}

struct TrialResult {
  CheckOutcome outcome;
  std::uint64_t seed = 0;
  std::optional<std::string> error;
};

TrialResult run_trial(const CheckSpec& spec, RngStream rng, const Tolerance& tol, std::size_t max_dim) {
  TrialResult tr;
  tr.seed = rng.seed();
  try {
    tr.outcome = spec.body(rng, tol, std::max(max_dim, spec.min_dim));
    if (!std::isfinite(tr.outcome.residual)) tr.outcome.pass = false;
  } catch (const std::exception& e) {
    tr.outcome = {false, 0.0};
    tr.error = e.what();
  }
  return tr;
}

}  // namespace

const std::vector<CheckSpec>& registry() {
  static const std::vector<CheckSpec> reg = build_registry();
  return reg;
}

bool CheckReport::all_passed() const {
  return std::all_of(checks.begin(), checks.end(), [](const CheckResult& c) { return c.fail == 0; });
}

CheckReport run_checks(std::uint64_t seed, std::size_t max_dim, std::size_t trials,
                       const std::optional<std::vector<std::string>>& filter, const Tolerance& tol,
                       Execution execution) {
  tol.validate();
  if (trials == 0) fail(ErrorKind::InvalidValue, "trials must be at least 1");
  if (max_dim == 0) fail(ErrorKind::InvalidValue, "max_dim must be at least 1");

  const auto& reg = registry();
  std::vector<std::size_t> selected;
  if (filter) {
    for (const auto& name : *filter) selected.push_back(index_of(name));
    std::sort(selected.begin(), selected.end());
    selected.erase(std::unique(selected.begin(), selected.end()), selected.end());
  } else {
    for (std::size_t i = 0; i < reg.size(); ++i) selected.push_back(i);
  }

  const RngStream root(seed);
  const std::size_t total = selected.size() * trials;
  std::vector<TrialResult> results(total);
  auto run_one = [&](std::size_t job) {
    const std::size_t c = selected[job / trials];
    const std::size_t t = job % trials;
    results[job] = run_trial(reg[c], root.derive(c).derive(t), tol, max_dim);
  };

  if (execution == Execution::Parallel) {
    const auto jobs = static_cast<std::ptrdiff_t>(total);
#pragma omp parallel for schedule(dynamic, 4)
    for (std::ptrdiff_t job = 0; job < jobs; ++job) run_one(static_cast<std::size_t>(job));
  } else {
    for (std::size_t job = 0; job < total; ++job) run_one(job);
  }

  CheckReport report;
  for (std::size_t s = 0; s < selected.size(); ++s) {
    CheckResult cr;
    cr.name = reg[selected[s]].name;
    for (std::size_t t = 0; t < trials; ++t) {
      const TrialResult& tr = results[s * trials + t];
      if (tr.outcome.pass) {
        ++cr.pass;
      } else {
        ++cr.fail;
        if (!cr.first_fail_seed) {
          cr.first_fail_seed = tr.seed;
          cr.first_error = tr.error;
        }
      }
      cr.max_residual = std::max(cr.max_residual, tr.outcome.residual);
    }
    report.checks.push_back(std::move(cr));
  }
  return report;
}

CheckOutcome replay(const std::string& name, std::uint64_t trial_seed, std::size_t max_dim, const Tolerance& tol) {
  const auto& spec = registry()[index_of(name)];
  const TrialResult tr = run_trial(spec, RngStream(trial_seed), tol, max_dim);
  if (tr.error) fail(ErrorKind::InvalidValue, "trial threw: " + *tr.error);
  return tr.outcome;
}

nlohmann::json report_to_json(const CheckReport& report) {
  nlohmann::json checks = nlohmann::json::array();
  for (const auto& c : report.checks) {
    checks.push_back({{"name", c.name},
                      {"pass", c.pass},
                      {"fail", c.fail},
                      {"max_residual", c.max_residual},
                      {"first_fail_seed", c.first_fail_seed ? nlohmann::json(*c.first_fail_seed) : nlohmann::json(nullptr)}});
  }
  return {{"checks", checks}};
}

std::string report_to_text(const CheckReport& report) {
  std::ostringstream out;
  std::size_t failed = 0;
  for (const auto& c : report.checks) {
    out << (c.fail == 0 ? "PASS " : "FAIL ") << c.name << "  pass=" << c.pass << " fail=" << c.fail
        << " max_residual=" << c.max_residual;
    if (c.first_fail_seed) out << " first_fail_seed=" << *c.first_fail_seed;
    if (c.first_error) out << " error=\"" << *c.first_error << "\"";
    out << "\n";
    if (c.fail != 0) ++failed;
  }
  out << report.checks.size() - failed << "/" << report.checks.size() << " checks passed\n";
  return out.str();
}

}  // namespace hilbert::lemma_suite
