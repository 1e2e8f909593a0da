#include "hilbert/hop.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <string>

#include "hilbert/error.hpp"
#include "hilbert/hsub.hpp"
#include "hilbert/kernels.hpp"

namespace hilbert {

namespace {

std::string shape(const HOp& a) { return std::to_string(a.rows()) + "x" + std::to_string(a.cols()); }

void require_square(const HOp& a, const char* what) {
  if (!a.is_square()) fail(ErrorKind::NonSquare, std::string(what) + ": operator is " + shape(a));
}

void require_same_shape(const HOp& a, const HOp& b, const char* what) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) {
    fail(ErrorKind::DimMismatch, std::string(what) + ": shapes " + shape(a) + " and " + shape(b) + " differ");
  }
}

HOp gram_of(const HOp& a) {
  std::vector<CScalar> g(a.cols() * a.cols());
  kernels::gram(a.rows(), a.cols(), a.entries(), g);
  return HOp(a.cols(), a.cols(), std::move(g));
}

// Inverse of a Hermitian positive definite matrix through its eigenbasis.
HOp hpd_inverse(const HOp& h, const Tolerance& tol) {
  const auto eig = herm_eig(h, tol);
  const std::size_t n = h.rows();
  std::vector<CScalar> out(n * n, 0.0);
  for (std::size_t k = 0; k < n; ++k) {
    if (!(eig.values[k] > 0.0)) fail(ErrorKind::NotInvertible, "matrix is singular");
    const double inv = 1.0 / eig.values[k];
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        out[i * n + j] += eig.vector_entry(i, k) * inv * std::conj(eig.vector_entry(j, k));
  }
  return HOp(n, n, std::move(out));
}

}  // namespace

HOp::HOp(std::size_t rows, std::size_t cols, std::vector<CScalar> entries)
    : rows_(rows), cols_(cols), entries_(std::move(entries)) {
  if (rows_ == 0 || cols_ == 0) fail(ErrorKind::InvalidValue, "operator dimensions must be positive");
  if (entries_.size() != rows_ * cols_) {
    fail(ErrorKind::InvalidValue, "operator has " + std::to_string(entries_.size()) + " entries, expected " +
                                      std::to_string(rows_ * cols_));
  }
  for (const auto& z : entries_) {
    if (!is_finite(z)) fail(ErrorKind::InvalidValue, "operator entry is not finite");
  }
}

HVec HOp::column(std::size_t c) const {
  if (c >= cols_) fail(ErrorKind::IndexOutOfRange, "column index out of range");
  std::vector<CScalar> out(rows_);
  for (std::size_t r = 0; r < rows_; ++r) out[r] = (*this)(r, c);
  return HVec(std::move(out));
}

HOp explicit_op(std::size_t m, std::size_t n, const std::function<CScalar(std::size_t, std::size_t)>& entry) {
  std::vector<CScalar> e(m * n);
  for (std::size_t r = 0; r < m; ++r)
    for (std::size_t c = 0; c < n; ++c) e[r * n + c] = entry(r, c);
  return HOp(m, n, std::move(e));
}

HOp from_matrix(const std::vector<std::vector<CScalar>>& rows) {
  if (rows.empty() || rows.front().empty()) fail(ErrorKind::InvalidValue, "matrix must be non-empty");
  const std::size_t n = rows.front().size();
  std::vector<CScalar> e;
  e.reserve(rows.size() * n);
  for (const auto& row : rows) {
    if (row.size() != n) fail(ErrorKind::DimMismatch, "matrix rows have different lengths");
    e.insert(e.end(), row.begin(), row.end());
  }
  return HOp(rows.size(), n, std::move(e));
}

HOp from_columns(std::span<const HVec> columns) {
  if (columns.empty()) fail(ErrorKind::InvalidValue, "from_columns needs at least one column");
  const std::size_t m = columns.front().dim();
  const std::size_t n = columns.size();
  std::vector<CScalar> e(m * n);
  for (std::size_t c = 0; c < n; ++c) {
    if (columns[c].dim() != m) fail(ErrorKind::DimMismatch, "columns have different dimensions");
    for (std::size_t r = 0; r < m; ++r) e[r * n + c] = columns[c][r];
  }
  return HOp(m, n, std::move(e));
}

HOp identity(std::size_t n) {
  return explicit_op(n, n, [](std::size_t r, std::size_t c) { return CScalar(r == c ? 1.0 : 0.0); });
}

HOp zero(std::size_t m, std::size_t n) { return HOp(m, n, std::vector<CScalar>(m * n, 0.0)); }

HOp diag(std::span<const CScalar> d) {
  return explicit_op(d.size(), d.size(), [&](std::size_t r, std::size_t c) { return r == c ? d[r] : CScalar(0.0); });
}

HVec apply(const HOp& a, const HVec& x) {
  if (a.cols() != x.dim()) {
    fail(ErrorKind::DimMismatch, "apply: operator " + shape(a) + " on vector of dimension " + std::to_string(x.dim()));
  }
  std::vector<CScalar> y(a.rows());
  kernels::gemv(a.rows(), a.cols(), a.entries(), x.coeffs(), y);
  return HVec(std::move(y));
}

HOp compose(const HOp& a, const HOp& b) {
  if (a.cols() != b.rows()) fail(ErrorKind::DimMismatch, "compose: shapes " + shape(a) + " and " + shape(b));
  std::vector<CScalar> c(a.rows() * b.cols());
  kernels::gemm(a.rows(), a.cols(), b.cols(), a.entries(), b.entries(), c);
  return HOp(a.rows(), b.cols(), std::move(c));
}

HOp add(const HOp& a, const HOp& b) {
  require_same_shape(a, b, "add");
  std::vector<CScalar> e(a.entries().size());
  for (std::size_t k = 0; k < e.size(); ++k) e[k] = a.entries()[k] + b.entries()[k];
  return HOp(a.rows(), a.cols(), std::move(e));
}

HOp sub(const HOp& a, const HOp& b) {
  require_same_shape(a, b, "sub");
  std::vector<CScalar> e(a.entries().size());
  for (std::size_t k = 0; k < e.size(); ++k) e[k] = a.entries()[k] - b.entries()[k];
  return HOp(a.rows(), a.cols(), std::move(e));
}

HOp oscale(CScalar c, const HOp& a) {
  std::vector<CScalar> e(a.entries().size());
  for (std::size_t k = 0; k < e.size(); ++k) e[k] = c * a.entries()[k];
  return HOp(a.rows(), a.cols(), std::move(e));
}

HOp oneg(const HOp& a) { return oscale(-1.0, a); }

HOp adjoint(const HOp& a) {
  return explicit_op(a.cols(), a.rows(), [&](std::size_t r, std::size_t c) { return std::conj(a(c, r)); });
}

HOp sandwich(const HOp& a, const HOp& b) {
  require_square(b, "sandwich");
  if (a.cols() != b.rows()) fail(ErrorKind::DimMismatch, "sandwich: shapes " + shape(a) + " and " + shape(b));
  return compose(compose(a, b), adjoint(a));
}

double frobenius_norm(const HOp& a) {
  double s = 0.0;
  for (const auto& z : a.entries()) s += std::norm(z);
  return std::sqrt(s);
}

bool approx_eq(const HOp& a, const HOp& b, const Tolerance& tol) {
  require_same_shape(a, b, "approx_eq");
  return frobenius_norm(sub(a, b)) <= tol.atol * std::max({1.0, frobenius_norm(a), frobenius_norm(b)});
}

EigenDecomposition herm_eig(const HOp& h, const Tolerance& tol) {
  require_square(h, "herm_eig");
  return herm_eig(h.rows(), h.entries(), tol);
}

std::vector<double> singular_values(const HOp& a, const Tolerance& tol) {
  const std::size_t m = a.rows();
  const std::size_t n = a.cols();
  const std::size_t d = m + n;
  std::vector<CScalar> dil(d * d, 0.0);
  for (std::size_t r = 0; r < m; ++r) {
    for (std::size_t c = 0; c < n; ++c) {
      dil[r * d + (m + c)] = a(r, c);
      dil[(m + c) * d + r] = std::conj(a(r, c));
    }
  }
  const auto eig = herm_eig(d, dil, tol);
  const std::size_t p = std::min(m, n);
  std::vector<double> sv(p);
  for (std::size_t k = 0; k < p; ++k) sv[k] = std::max(0.0, eig.values[d - 1 - k]);
  return sv;
}

std::size_t numerical_rank(const HOp& a, const Tolerance& tol) {
  const auto sv = singular_values(a, tol);
  if (sv.empty() || sv.front() == 0.0) return 0;
  const double cut = tol.rank_tol * sv.front();
  return static_cast<std::size_t>(std::count_if(sv.begin(), sv.end(), [&](double s) { return s > cut; }));
}

double op_norm(const HOp& a, const Tolerance& tol) {
  const auto eig = herm_eig(gram_of(a), tol);
  return std::sqrt(std::max(0.0, eig.values.back()));
}

SingularTriple top_singular_triple(const HOp& a, const Tolerance& tol) {
  const auto eig = herm_eig(gram_of(a), tol);
  const std::size_t n = a.cols();
  const double sigma = std::sqrt(std::max(0.0, eig.values.back()));
  std::vector<CScalar> v(n);
  for (std::size_t i = 0; i < n; ++i) v[i] = eig.vector_entry(i, n - 1);
  HVec right(std::move(v));
  if (sigma == 0.0) return {0.0, ket(0, a.rows()), ket(0, n)};
  HVec left = vscale(1.0 / sigma, apply(a, right));
  return {sigma, std::move(left), std::move(right)};
}

bool is_selfadjoint(const HOp& a, const Tolerance& tol) {
  require_square(a, "is_selfadjoint");
  return approx_eq(a, adjoint(a), tol);
}

bool is_isometry(const HOp& a, const Tolerance& tol) { return approx_eq(gram_of(a), identity(a.cols()), tol); }

bool is_unitary(const HOp& a, const Tolerance& tol) {
  if (!a.is_square()) return false;
  return is_isometry(a, tol) && approx_eq(compose(a, adjoint(a)), identity(a.rows()), tol);
}

bool is_partial_isometry(const HOp& a, const Tolerance& tol) {
  const auto sv = singular_values(a, tol);
  if (sv.empty() || sv.front() == 0.0) return true;
  const double cut = tol.rank_tol * sv.front();
  return std::all_of(sv.begin(), sv.end(), [&](double s) { return s <= cut || std::abs(s - 1.0) <= tol.rank_tol; });
}

bool is_proj_op(const HOp& a, const Tolerance& tol) {
  require_square(a, "is_proj_op");
  return approx_eq(compose(a, a), a, tol) && approx_eq(a, adjoint(a), tol);
}

bool is_positive(const HOp& a, const Tolerance& tol) {
  require_square(a, "is_positive");
  if (!approx_eq(a, adjoint(a), tol)) return false;
  const auto eig = herm_eig(a, tol);
  return eig.values.front() >= -tol.psd_tol;
}

bool is_rank1(const HOp& a, const Tolerance& tol) { return numerical_rank(a, tol) <= 1; }

bool loewner_leq(const HOp& a, const HOp& b, const Tolerance& tol) {
  require_square(a, "loewner_leq");
  require_square(b, "loewner_leq");
  require_same_shape(a, b, "loewner_leq");
  return is_positive(sub(b, a), tol);
}

HOp vector_to_op(const HVec& psi) { return HOp(psi.dim(), 1, std::vector<CScalar>(psi.coeffs().begin(), psi.coeffs().end())); }

HVec op_to_vector(const HOp& a) {
  if (a.cols() != 1) fail(ErrorKind::DimMismatch, "op_to_vector: operator " + shape(a) + " is not a column");
  return a.column(0);
}

HOp butterfly(const HVec& psi, const HVec& phi) {
  return explicit_op(psi.dim(), phi.dim(), [&](std::size_t r, std::size_t c) { return psi[r] * std::conj(phi[c]); });
}

void PartialMap::validate() const {
  if (domain_size == 0 || codomain_size == 0) fail(ErrorKind::InvalidValue, "partial map sizes must be positive");
  if (images.size() != domain_size) fail(ErrorKind::InvalidValue, "partial map has wrong number of images");
  for (const auto& img : images) {
    if (img && *img >= codomain_size) fail(ErrorKind::IndexOutOfRange, "partial map image out of range");
  }
}

HOp classical_operator(const PartialMap& pi) {
  pi.validate();
  std::vector<CScalar> e(pi.codomain_size * pi.domain_size, 0.0);
  for (std::size_t x = 0; x < pi.domain_size; ++x) {
    if (pi.images[x]) e[*pi.images[x] * pi.domain_size + x] = 1.0;
  }
  return HOp(pi.codomain_size, pi.domain_size, std::move(e));
}

PartialMap pm_inverse(const PartialMap& pi) {
  pi.validate();
  PartialMap inv{pi.codomain_size, pi.domain_size, std::vector<std::optional<std::size_t>>(pi.codomain_size)};
  for (std::size_t x = 0; x < pi.domain_size; ++x) {
    if (!pi.images[x]) continue;
    auto& slot = inv.images[*pi.images[x]];
    if (slot) {
      fail(ErrorKind::NotInjective, "points " + std::to_string(*slot) + " and " + std::to_string(x) +
                                        " share image " + std::to_string(*pi.images[x]));
    }
    slot = x;
  }
  return inv;
}

bool is_invertible(const HOp& a, const Tolerance& tol) { return numerical_rank(a, tol) == a.cols(); }

bool is_iso(const HOp& a, const Tolerance& tol) { return a.is_square() && is_invertible(a, tol); }

HOp left_inverse(const HOp& a, const Tolerance& tol) {
  if (!is_invertible(a, tol)) fail(ErrorKind::NotInvertible, "operator " + shape(a) + " has no left inverse");
  return compose(hpd_inverse(gram_of(a), tol), adjoint(a));
}

HOp extend_from_set(std::span<const std::pair<HVec, HVec>> pairs, const Tolerance& tol) {
  if (pairs.empty()) fail(ErrorKind::InvalidValue, "extend_from_set needs at least one pair");
  const std::size_t n = pairs.front().first.dim();
  const std::size_t m = pairs.front().second.dim();
  std::vector<HVec> sources;
  std::vector<HVec> images;
  for (const auto& [s, img] : pairs) {
    if (s.dim() != n || img.dim() != m) fail(ErrorKind::DimMismatch, "extend_from_set: inconsistent dimensions");
    sources.push_back(s);
    images.push_back(img);
  }
  const HOp s_mat = from_columns(sources);
  const HOp y_mat = from_columns(images);

  const auto q_basis = gram_schmidt0(sources, tol);
  HOp b = zero(m, n);
  if (!q_basis.empty()) {
    const HOp q = from_columns(q_basis);
    const HOp coords = compose(adjoint(q), s_mat);  // k' x k, full row rank
    const HOp w = compose(compose(y_mat, adjoint(coords)), hpd_inverse(compose(coords, adjoint(coords)), tol));
    b = compose(w, adjoint(q));
  }
  const double residual = frobenius_norm(sub(compose(b, s_mat), y_mat));
  if (residual > tol.atol * std::max(1.0, frobenius_norm(y_mat))) {
    std::ostringstream msg;
    msg << "no linear map fits the pairs (residual " << residual << ")";
    fail(ErrorKind::Inconsistent, msg.str());
  }
  return b;
}

HVec riesz_rep(const HOp& f) {
  if (f.rows() != 1) fail(ErrorKind::DimMismatch, "riesz_rep: functional must have one row, got " + shape(f));
  std::vector<CScalar> t(f.cols());
  for (std::size_t k = 0; k < t.size(); ++k) t[k] = std::conj(f(0, k));
  return HVec(std::move(t));
}

HOp riesz_rep_sesqui(const std::vector<std::vector<CScalar>>& table) {
  return adjoint(from_matrix(table));
}

HOp unitary_between(std::span<const HVec> e, std::span<const HVec> f, const Tolerance& tol) {
  if (e.empty() || e.size() != f.size()) fail(ErrorKind::NotOrthonormalBasis, "bases differ in size");
  const std::size_t n = e.front().dim();
  for (std::size_t i = 0; i < e.size(); ++i) {
    if (e[i].dim() != n || f[i].dim() != n) fail(ErrorKind::DimMismatch, "basis vectors differ in dimension");
  }
  if (e.size() != n) fail(ErrorKind::NotOrthonormalBasis, "a basis of the full space needs dimension-many vectors");
  if (!is_orthonormal(e, tol) || !is_orthonormal(f, tol)) {
    fail(ErrorKind::NotOrthonormalBasis, "input is not orthonormal");
  }
  HOp u = zero(n, n);
  for (std::size_t i = 0; i < n; ++i) u = add(u, butterfly(f[i], e[i]));
  return u;
}

HOp embed_left(std::size_t n, std::size_t m) {
  return explicit_op(n + m, n, [](std::size_t r, std::size_t c) { return CScalar(r == c ? 1.0 : 0.0); });
}

HOp embed_right(std::size_t n, std::size_t m) {
  return explicit_op(n + m, m, [n](std::size_t r, std::size_t c) { return CScalar(r == n + c ? 1.0 : 0.0); });
}

CScalar one_dim_to_scalar(const HOp& a) {
  if (a.rows() != 1 || a.cols() != 1) fail(ErrorKind::DimMismatch, "expected a 1x1 operator, got " + shape(a));
  return a(0, 0);
}

HOp scalar_to_one_dim(CScalar c) { return HOp(1, 1, {c}); }

CScalar vec1_to_scalar(const HVec& x) {
  if (x.dim() != 1) fail(ErrorKind::DimMismatch, "expected a vector of dimension 1");
  return x[0];
}

HVec scalar_to_vec1(CScalar c) { return HVec({c}); }

}  // namespace hilbert
