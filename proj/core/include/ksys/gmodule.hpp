#pragma once

#include <string>
#include <vector>

#include "ksys/gclass.hpp"
#include "ksys/matrix.hpp"
#include "ksys/preorder.hpp"

namespace ksys {

// One graded piece: a basis dimension together with the action matrix of
// every group generator.
struct GradedPiece {
    int dim = 0;
    std::vector<Matrix<Cyclo>> gen_action;
};

// A grade-truncated module over C[W] # S(h): per-grade group actions plus,
// for each h-basis vector, the multiplication map into the next grade.
//
// Equivariance (action_{k+1}(g) mult_a = sum_b g_{ba} mult_b action_k(g)) is
// asserted by every constructor through assert_equivariant.
struct GradedModule {
    int trunc = -1;
    std::vector<GradedPiece> gr;                   // size trunc+1
    std::vector<std::vector<Matrix<Cyclo>>> mult;  // mult[k][a]: gr_k -> gr_{k+1}
    std::string meta;                              // ambient / nabla / barnabla / sub / quotient
    int chi = -1;
    int mult_factor = 1;  // built as E_chi ~ P_chi^{mult_factor}, mult_factor = dim chi

    int dim_at(int k) const { return (k >= 0 && k <= trunc) ? gr[k].dim : 0; }
    int top_nonzero_grade() const;  // -1 for the zero module
};

// Per-grade row bases of a graded subspace of some parent module.
struct GradedSubspace {
    std::vector<RowBasis<Cyclo>> piece;
    int dim_at(int k) const { return piece[k].dim(); }
};

// Action of one element / of all elements on a graded piece. All-element
// actions follow the BFS order, one product per element.
Matrix<Cyclo> element_action(const ReflectionGroup& G, const GradedPiece& piece, int element);
std::vector<Matrix<Cyclo>> all_element_actions(const ReflectionGroup& G, const GradedPiece& piece);

void assert_equivariant(const ReflectionGroup& G, const GradedModule& M);

// E_chi = e_chi C[W] (x) S(h) truncated at N: isomorphic to P_chi^{dim chi}.
// Every graded character extracted from it is divided by dim chi downstream.
GradedModule ambient_isotypic(const ReflectionGroup& G, const CharacterTable& T, int chi, int N);

// Basis of the psi-isotypic subspace of gr_k M, via the character projector.
RowBasis<Cyclo> isotypic_component(const ReflectionGroup& G, const CharacterTable& T,
                                   const GradedModule& M, int k, int psi);

// Smallest graded subspace containing the seeds, closed under the group
// action and h-multiplication: S_k = span(h * S_{k-1}) + seeds_k.
// Seeds must be group-stable per grade.
GradedSubspace generated_submodule(const GradedModule& M, const GradedSubspace& seeds);

GradedSubspace empty_subspace(const GradedModule& M);

// Quotient module M/S with canonical representatives on non-pivot columns.
GradedModule quotient_module(const ReflectionGroup& G, const GradedModule& M,
                             const GradedSubspace& S);

// Trace of each class representative per grade (not divided by mult_factor).
GradedClass graded_character(const ReflectionGroup& G, const GradedModule& M);

// Versioned JSON dump (dims, action and multiplication matrices).
std::string module_to_json(const GradedModule& M);

}  // namespace ksys
