#pragma once

#include <map>
#include <vector>

#include "ksys/chartable.hpp"
#include "ksys/gmodule.hpp"

// Shared machinery for the graded-module constructors.

namespace ksys::detail {

// Monomials of one degree in r variables, in a fixed deterministic order.
struct MonomialBasis {
    int r = 0, k = 0;
    std::vector<std::vector<int>> exps;
    std::map<std::vector<int>, int> index;

    int size() const { return static_cast<int>(exps.size()); }
    static const MonomialBasis& get(int r, int k);
};

// Index map of multiplication by variable a: deg k -> deg k+1.
std::vector<int> variable_shift(int r, int k, int a);

// Action of an r x r matrix on the degree-k monomial basis, built from the
// degree-(k-1) action. For k = 0 pass the 1x1 identity as `prev`.
Matrix<Cyclo> sym_action(const Matrix<Cyclo>& m, int k, const Matrix<Cyclo>& prev);

// Basis of e_chi C[W] inside the group algebra with the left action of each
// generator expressed in that basis.
struct IdempotentSlice {
    RowBasis<Cyclo> basis;
    std::vector<Matrix<Cyclo>> gen_action;
    IdempotentSlice() : basis(0) {}
};
IdempotentSlice idempotent_slice(const ReflectionGroup& G, const CharacterTable& T, int chi);

// Matrix induced on quotient coordinates: the domain/codomain quotients are
// presented by kill bases in reduced echelon form; representatives live on
// the non-pivot columns.
Matrix<Cyclo> induced_on_quotient(const Matrix<Cyclo>& A, const RowBasis<Cyclo>& kill_dom,
                                  const RowBasis<Cyclo>& kill_cod);

// tr Sym^k(m) for k = 0..N via Newton's identity on power sums.
std::vector<Cyclo> sym_trace_series(const Matrix<Cyclo>& m, int N);

// Weights alpha(class) = sum_{psi in kill} dim_psi conj(psi(class)) and the
// projector onto the killed isotypic sum from all-element actions.
std::vector<Cyclo> kill_weights(const ReflectionGroup& G, const CharacterTable& T,
                                const std::vector<int>& kill);
Matrix<Cyclo> kill_projector(const ReflectionGroup& G, const std::vector<Cyclo>& weights,
                             const GradedPiece& piece);

// dim of the killed isotypic subspace of a space with the given class values.
long kill_dimension(const ReflectionGroup& G, const std::vector<Cyclo>& weights,
                    const std::vector<Cyclo>& values);

}  // namespace ksys::detail
