#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "hilbert/hop.hpp"
#include "hilbert/hvec.hpp"
#include "hilbert/numeric.hpp"

namespace hilbert {

// Closed subspace of C^ambient, stored as an orthonormal basis. Equality of
// subspaces is span equality (seq), never comparison of the stored bases.
class Subspace {
 public:
  // Validates dimensions and orthonormality of `onb`; throws InvalidValue
  // or DimMismatch on violation.
  Subspace(std::size_t ambient, std::vector<HVec> onb, const Tolerance& tol = {});

  std::size_t ambient() const { return ambient_; }
  std::span<const HVec> basis() const { return onb_; }

 private:
  struct Trusted {};
  Subspace(Trusted, std::size_t ambient, std::vector<HVec> onb) : ambient_(ambient), onb_(std::move(onb)) {}
  friend Subspace span(std::span<const HVec> vs, std::size_t ambient, const Tolerance& tol);

  std::size_t ambient_;
  std::vector<HVec> onb_;
};

// Dependency-tolerant Gram-Schmidt: modified Gram-Schmidt with a second
// re-orthogonalization pass; a vector is dropped when its residual norm is at
// most rank_tol * max(1, its original norm).
std::vector<HVec> gram_schmidt0(std::span<const HVec> vs, const Tolerance& tol = {});

Subspace span(std::span<const HVec> vs, std::size_t ambient, const Tolerance& tol = {});
Subspace top(std::size_t n);
Subspace bot(std::size_t n);
std::size_t sdim(const Subspace& s);

// Component of v orthogonal to S.
HVec residual(const Subspace& s, const HVec& v);
bool contains(const Subspace& s, const HVec& v, const Tolerance& tol = {});

bool leq(const Subspace& s, const Subspace& t, const Tolerance& tol = {});
bool seq(const Subspace& s, const Subspace& t, const Tolerance& tol = {});

Subspace ssup(const Subspace& s, const Subspace& t, const Tolerance& tol = {});
Subspace sinf(const Subspace& s, const Subspace& t, const Tolerance& tol = {});
Subspace ocomplement(const Subspace& s, const Tolerance& tol = {});
// Folds with bot(ambient) / top(ambient) as units.
Subspace ssup_all(std::span<const Subspace> family, std::size_t ambient, const Tolerance& tol = {});
Subspace sinf_all(std::span<const Subspace> family, std::size_t ambient, const Tolerance& tol = {});

// Sum of the self-butterflies of the basis.
HOp proj(const Subspace& s);
Subspace image(const HOp& a, const Subspace& s, const Tolerance& tol = {});
Subspace kernel(const HOp& a, const Tolerance& tol = {});
Subspace eigenspace(CScalar lambda, const HOp& a, const Tolerance& tol = {});
// S x T inside C^(S.ambient + T.ambient).
Subspace subspace_times(const Subspace& s, const Subspace& t, const Tolerance& tol = {});

}  // namespace hilbert
