#pragma once

#include <cstddef>

#include "hilbert/hop.hpp"
#include "hilbert/hsub.hpp"
#include "hilbert/hvec.hpp"
#include "hilbert/numeric.hpp"

// Random instances for the conformance suite. Entries are drawn with both
// components uniform in [-1, 1); every draw goes through the given stream, so
// equal seeds give equal values.
namespace hilbert::sampling {

HVec random_vector(RngStream& rng, std::size_t n);
HOp random_operator(RngStream& rng, std::size_t m, std::size_t n);
// Orthonormalized columns of a random square matrix, redrawn until full rank.
HOp random_unitary(RngStream& rng, std::size_t n);
// Span of k random vectors with k uniform in [0, n].
Subspace random_subspace(RngStream& rng, std::size_t n);
HOp random_projector(RngStream& rng, std::size_t n);

// Companions used by individual checks.
HOp random_hermitian(RngStream& rng, std::size_t n);
// First n columns of a random m x m unitary; requires m >= n.
HOp random_isometry(RngStream& rng, std::size_t m, std::size_t n);
// U diag(d) V^dagger with d in {0, 1}; at least one 1 unless allow_zero.
HOp random_partial_isometry(RngStream& rng, std::size_t m, std::size_t n, bool allow_zero = true);
// B * C with inner dimension strictly below min(m, n) when min(m, n) > 1.
HOp random_low_rank(RngStream& rng, std::size_t m, std::size_t n);
PartialMap random_permutation(RngStream& rng, std::size_t n);
PartialMap random_injective_map(RngStream& rng, std::size_t dom, std::size_t cod);
// Random subspace contained in s.
Subspace random_subspace_of(RngStream& rng, const Subspace& s);
// Orthonormal basis of the full space (columns of random_unitary).
std::vector<HVec> random_onb(RngStream& rng, std::size_t n);
std::size_t random_dim(RngStream& rng, std::size_t max_dim);

}  // namespace hilbert::sampling
