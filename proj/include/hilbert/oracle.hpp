#pragma once

#include "hilbert/hop.hpp"
#include "hilbert/hsub.hpp"

// Reference computations that share no code path with the subspace lattice:
// complex Gaussian elimination with partial pivoting, no eigensolver.
namespace hilbert::oracle {

// Null space of `a` from its reduced row echelon form. Pivots of modulus at
// or below pivot_tol * max(1, max |a_ij|) count as zero.
std::vector<HVec> null_space_by_elimination(const HOp& a, double pivot_tol = 1e-8);

// S meet T as the null space of the stacked matrix [(I - P_S); (I - P_T)].
Subspace intersection_by_elimination(const Subspace& s, const Subspace& t, double pivot_tol = 1e-8);

}  // namespace hilbert::oracle
