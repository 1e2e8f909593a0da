#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "hilbert/hvec.hpp"
#include "hilbert/numeric.hpp"

namespace hilbert {

// Bounded operator C^cols -> C^rows stored as a row-major complex matrix.
// apply(A, ket(j, cols)) reads out column j.
class HOp {
 public:
  // Throws InvalidValue on zero dimensions, a size mismatch or non-finite entries.
  HOp(std::size_t rows, std::size_t cols, std::vector<CScalar> entries);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool is_square() const { return rows_ == cols_; }
  CScalar operator()(std::size_t r, std::size_t c) const { return entries_[r * cols_ + c]; }
  std::span<const CScalar> entries() const { return entries_; }

  HVec column(std::size_t c) const;

 private:
  std::size_t rows_;
  std::size_t cols_;
  std::vector<CScalar> entries_;
};

// --- construction ---------------------------------------------------------

// entry(b, a) becomes coefficient b of apply(result, ket(a, n)).
HOp explicit_op(std::size_t m, std::size_t n, const std::function<CScalar(std::size_t, std::size_t)>& entry);
HOp from_matrix(const std::vector<std::vector<CScalar>>& rows);
HOp from_columns(std::span<const HVec> columns);
HOp identity(std::size_t n);
HOp zero(std::size_t m, std::size_t n);
HOp diag(std::span<const CScalar> d);

// --- algebra --------------------------------------------------------------

HVec apply(const HOp& a, const HVec& x);
HOp compose(const HOp& a, const HOp& b);
HOp add(const HOp& a, const HOp& b);
HOp sub(const HOp& a, const HOp& b);
HOp oscale(CScalar c, const HOp& a);
HOp oneg(const HOp& a);
HOp adjoint(const HOp& a);
// A B A^dagger
HOp sandwich(const HOp& a, const HOp& b);

double frobenius_norm(const HOp& a);
// ||A - B||_F <= atol * max(1, ||A||_F, ||B||_F)
bool approx_eq(const HOp& a, const HOp& b, const Tolerance& tol = {});

// --- spectral quantities --------------------------------------------------

EigenDecomposition herm_eig(const HOp& h, const Tolerance& tol = {});

// Singular values in descending order, min(rows, cols) of them. Computed from
// the Hermitian dilation [[0, A], [A^dagger, 0]] so small singular values keep
// absolute accuracy of order eps * sigma_max.
std::vector<double> singular_values(const HOp& a, const Tolerance& tol = {});

// Count of singular values above rank_tol * sigma_max.
std::size_t numerical_rank(const HOp& a, const Tolerance& tol = {});

// Largest singular value, sqrt(max(0, lambda_max(A^dagger A))).
double op_norm(const HOp& a, const Tolerance& tol = {});

struct SingularTriple {
  double sigma;
  HVec left;   // u, dimension rows
  HVec right;  // v, dimension cols; A v = sigma u
};

// Top singular pair; for the zero operator sigma is 0 and u, v are kets.
SingularTriple top_singular_triple(const HOp& a, const Tolerance& tol = {});

// --- operator classes -----------------------------------------------------

bool is_selfadjoint(const HOp& a, const Tolerance& tol = {});
bool is_isometry(const HOp& a, const Tolerance& tol = {});
bool is_unitary(const HOp& a, const Tolerance& tol = {});
bool is_partial_isometry(const HOp& a, const Tolerance& tol = {});
bool is_proj_op(const HOp& a, const Tolerance& tol = {});
bool is_positive(const HOp& a, const Tolerance& tol = {});
bool is_rank1(const HOp& a, const Tolerance& tol = {});

// Loewner order on square operators of equal dimension: B - A positive.
bool loewner_leq(const HOp& a, const HOp& b, const Tolerance& tol = {});

// --- vectors as operators -------------------------------------------------

HOp vector_to_op(const HVec& psi);
HVec op_to_vector(const HOp& a);
// psi phi^dagger
HOp butterfly(const HVec& psi, const HVec& phi);

// --- classical operators --------------------------------------------------

struct PartialMap {
  std::size_t domain_size = 0;
  std::size_t codomain_size = 0;
  std::vector<std::optional<std::size_t>> images;

  // Throws InvalidValue if the sizes disagree or an image is out of range.
  void validate() const;
  bool operator==(const PartialMap&) const = default;
};

HOp classical_operator(const PartialMap& pi);
// Throws NotInjective if two domain points share an image.
PartialMap pm_inverse(const PartialMap& pi);

// --- inverses and extensions ----------------------------------------------

bool is_invertible(const HOp& a, const Tolerance& tol = {});
bool is_iso(const HOp& a, const Tolerance& tol = {});
// (A^dagger A)^{-1} A^dagger: a left inverse vanishing on range(A)^perp.
HOp left_inverse(const HOp& a, const Tolerance& tol = {});

// The operator B with B s_i = image_i that vanishes on span{s_i}^perp.
// Throws Inconsistent if no linear map satisfies every pair.
HOp extend_from_set(std::span<const std::pair<HVec, HVec>> pairs, const Tolerance& tol = {});

// --- Riesz representation -------------------------------------------------

// t with f(x) = inner(t, x); f must have a single row.
HVec riesz_rep(const HOp& f);
// table[a][b] = p(e_a, f_b); returns A with inner(A e_a, f_b) = table[a][b].
HOp riesz_rep_sesqui(const std::vector<std::vector<CScalar>>& table);

// sum_i f_i e_i^dagger; E and F must be orthonormal bases of the full space.
HOp unitary_between(std::span<const HVec> e, std::span<const HVec> f, const Tolerance& tol = {});

// --- direct sums ----------------------------------------------------------

// x -> (x, 0), shape (n + m) x n
HOp embed_left(std::size_t n, std::size_t m);
// y -> (0, y), shape (n + m) x m
HOp embed_right(std::size_t n, std::size_t m);

// --- one-dimensional spaces -----------------------------------------------

CScalar one_dim_to_scalar(const HOp& a);
HOp scalar_to_one_dim(CScalar c);
CScalar vec1_to_scalar(const HVec& x);
HVec scalar_to_vec1(CScalar c);

}  // namespace hilbert
