#include "hilbert/hsub.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "hilbert/error.hpp"

namespace hilbert {

namespace {

void require_same_ambient(const Subspace& s, const Subspace& t, const char* what) {
  if (s.ambient() != t.ambient()) {
    fail(ErrorKind::DimMismatch, std::string(what) + ": ambient dimensions " + std::to_string(s.ambient()) +
                                     " and " + std::to_string(t.ambient()) + " differ");
  }
}

}  // namespace

Subspace::Subspace(std::size_t ambient, std::vector<HVec> onb, const Tolerance& tol)
    : ambient_(ambient), onb_(std::move(onb)) {
  if (ambient_ == 0) fail(ErrorKind::InvalidValue, "ambient dimension must be positive");
  if (onb_.size() > ambient_) fail(ErrorKind::InvalidValue, "basis longer than the ambient dimension");
  for (const auto& u : onb_) {
    if (u.dim() != ambient_) fail(ErrorKind::DimMismatch, "basis vector dimension differs from ambient");
  }
  if (!is_orthonormal(onb_, tol)) fail(ErrorKind::InvalidValue, "basis is not orthonormal");
}

std::vector<HVec> gram_schmidt0(std::span<const HVec> vs, const Tolerance& tol) {
  std::vector<HVec> out;
  if (vs.empty()) return out;
  const std::size_t n = vs.front().dim();
  for (const auto& x : vs) {
    if (x.dim() != n) fail(ErrorKind::DimMismatch, "gram_schmidt0: vectors differ in dimension");
    std::vector<CScalar> v(x.coeffs().begin(), x.coeffs().end());
    for (int pass = 0; pass < 2; ++pass) {
      for (const auto& q : out) {
        CScalar c = 0.0;
        for (std::size_t k = 0; k < n; ++k) c += std::conj(q[k]) * v[k];
        for (std::size_t k = 0; k < n; ++k) v[k] -= c * q[k];
      }
    }
    double r = 0.0;
    for (const auto& z : v) r += std::norm(z);
    r = std::sqrt(r);
    if (r <= tol.rank_tol * std::max(1.0, vnorm(x))) continue;
    for (auto& z : v) z /= r;
    out.emplace_back(std::move(v));
  }
  return out;
}

Subspace span(std::span<const HVec> vs, std::size_t ambient, const Tolerance& tol) {
  if (ambient == 0) fail(ErrorKind::InvalidValue, "ambient dimension must be positive");
  for (const auto& v : vs) {
    if (v.dim() != ambient) {
      fail(ErrorKind::DimMismatch, "span: vector of dimension " + std::to_string(v.dim()) + " in ambient " +
                                       std::to_string(ambient));
    }
  }
  return Subspace(Subspace::Trusted{}, ambient, gram_schmidt0(vs, tol));
}

Subspace top(std::size_t n) {
  std::vector<HVec> kets;
  for (std::size_t i = 0; i < n; ++i) kets.push_back(ket(i, n));
  return span(kets, n);
}

Subspace bot(std::size_t n) { return span({}, n); }

std::size_t sdim(const Subspace& s) { return s.basis().size(); }

HVec residual(const Subspace& s, const HVec& v) {
  if (v.dim() != s.ambient()) fail(ErrorKind::DimMismatch, "vector dimension differs from ambient");
  HVec r = v;
  for (const auto& u : s.basis()) r = vsub(r, vscale(inner(u, r), u));
  return r;
}

bool contains(const Subspace& s, const HVec& v, const Tolerance& tol) {
  return vnorm(residual(s, v)) <= tol.atol * std::max(1.0, vnorm(v));
}

bool leq(const Subspace& s, const Subspace& t, const Tolerance& tol) {
  require_same_ambient(s, t, "leq");
  return std::all_of(s.basis().begin(), s.basis().end(), [&](const HVec& u) { return contains(t, u, tol); });
}

bool seq(const Subspace& s, const Subspace& t, const Tolerance& tol) { return leq(s, t, tol) && leq(t, s, tol); }

Subspace ssup(const Subspace& s, const Subspace& t, const Tolerance& tol) {
  require_same_ambient(s, t, "ssup");
  std::vector<HVec> all(s.basis().begin(), s.basis().end());
  all.insert(all.end(), t.basis().begin(), t.basis().end());
  return span(all, s.ambient(), tol);
}

Subspace ocomplement(const Subspace& s, const Tolerance& tol) {
  const std::size_t n = s.ambient();
  const auto eig = herm_eig(sub(identity(n), proj(s)), tol);
  std::vector<HVec> vs;
  for (std::size_t k = 0; k < n; ++k) {
    if (eig.values[k] <= 0.5) continue;
    std::vector<CScalar> v(n);
    for (std::size_t r = 0; r < n; ++r) v[r] = eig.vector_entry(r, k);
    vs.emplace_back(std::move(v));
  }
  return span(vs, n, tol);
}

Subspace sinf(const Subspace& s, const Subspace& t, const Tolerance& tol) {
  require_same_ambient(s, t, "sinf");
  return ocomplement(ssup(ocomplement(s, tol), ocomplement(t, tol), tol), tol);
}

Subspace ssup_all(std::span<const Subspace> family, std::size_t ambient, const Tolerance& tol) {
  Subspace acc = bot(ambient);
  for (const auto& s : family) acc = ssup(acc, s, tol);
  return acc;
}

Subspace sinf_all(std::span<const Subspace> family, std::size_t ambient, const Tolerance& tol) {
  Subspace acc = top(ambient);
  for (const auto& s : family) acc = sinf(acc, s, tol);
  return acc;
}

HOp proj(const Subspace& s) {
  HOp p = zero(s.ambient(), s.ambient());
  for (const auto& u : s.basis()) p = add(p, butterfly(u, u));
  return p;
}

Subspace image(const HOp& a, const Subspace& s, const Tolerance& tol) {
  if (a.cols() != s.ambient()) {
    fail(ErrorKind::DimMismatch, "image: operator with " + std::to_string(a.cols()) + " columns on ambient " +
                                     std::to_string(s.ambient()));
  }
  std::vector<HVec> vs;
  for (const auto& u : s.basis()) vs.push_back(apply(a, u));
  return span(vs, a.rows(), tol);
}

Subspace kernel(const HOp& a, const Tolerance& tol) {
  const std::size_t n = a.cols();
  const auto sv = singular_values(a, tol);
  const double cut = tol.rank_tol * std::max(1.0, sv.empty() ? 0.0 : sv.front());
  const auto rank = static_cast<std::size_t>(std::count_if(sv.begin(), sv.end(), [&](double x) { return x > cut; }));
  const std::size_t nullity = n - rank;
  if (nullity == 0) return bot(n);
  if (nullity == n) return top(n);

  const auto eig = herm_eig(compose(adjoint(a), a), tol);
  std::vector<HVec> vs;
  for (std::size_t k = 0; k < nullity; ++k) {
    std::vector<CScalar> v(n);
    for (std::size_t r = 0; r < n; ++r) v[r] = eig.vector_entry(r, k);
    vs.emplace_back(std::move(v));
  }
  return span(vs, n, tol);
}

Subspace eigenspace(CScalar lambda, const HOp& a, const Tolerance& tol) {
  if (!a.is_square()) fail(ErrorKind::NonSquare, "eigenspace: operator is not square");
  return kernel(sub(a, oscale(lambda, identity(a.rows()))), tol);
}

Subspace subspace_times(const Subspace& s, const Subspace& t, const Tolerance& tol) {
  const std::size_t n = s.ambient();
  const std::size_t m = t.ambient();
  const HOp left = embed_left(n, m);
  const HOp right = embed_right(n, m);
  std::vector<HVec> vs;
  for (const auto& u : s.basis()) vs.push_back(apply(left, u));
  for (const auto& u : t.basis()) vs.push_back(apply(right, u));
  return span(vs, n + m, tol);
}

}  // namespace hilbert
