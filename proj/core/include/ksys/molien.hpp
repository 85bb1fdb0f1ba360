#pragma once

#include "ksys/chartable.hpp"
#include "ksys/matrix.hpp"
#include "ksys/ratfun.hpp"

namespace ksys {

// Graded multiplicity of L_chi in L_psi (x) S(h):
//   Omega_{chi,psi}(q) = (1/|W|) sum_c |C_c| conj(chi(c)) psi(c) / det(1 - q c|_h),
// summed exactly over conjugacy classes as rational functions. The result
// always has rational coefficients; that is asserted, not assumed.
RatFun molien_pairing(const ReflectionGroup& G, const CharacterTable& T, int chi, int psi);

// Square matrix of pairings in table order.
Matrix<RatFun> omega_matrix(const ReflectionGroup& G, const CharacterTable& T);

// Molien series of the invariant ring, (1/|W|) sum 1/det(1 - q c|_h).
RatFun molien_invariants(const ReflectionGroup& G);

// Degrees d_1 <= ... <= d_r recognized from the invariant Molien series
// matching prod 1/(1 - q^{d_i}); errors with not_reflection_group when the
// series does not have that shape. Checks prod d_i = |W| and verifies the
// recognition exactly as rational functions.
std::vector<int> invariant_degrees(const ReflectionGroup& G);

// f_chi(q) = prod_i (1 - q^{d_i}) * Omega_{chi,triv}: the graded multiplicity
// of chi in the coinvariant algebra. Polynomial with nonnegative integer
// coefficients; f_chi(1) = dim chi.
Poly<Rat> fake_degree(const ReflectionGroup& G, const CharacterTable& T, int chi);

}  // namespace ksys
