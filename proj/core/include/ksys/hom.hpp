#pragma once

#include <map>

#include "ksys/gmodule.hpp"

namespace ksys {

// Graded Hom of modules: coefficient of q^k is the dimension of the space of
// W-equivariant, h-linear maps M -> N raising grades by k. N must be finite
// within its truncation (a zero grade above its top one) and M must be
// truncated at least one grade past N's top nonzero grade.
//
// A map is determined by its grade-0 restriction because M is generated in
// grade 0; candidates are propagated grade by grade through the
// h-commutation constraints, which cuts the solution space down exactly.
//
// Both modules carry an E_chi-style multiplicity; the result is divided by
// M.mult_factor * N.mult_factor with exact divisibility asserted.
std::map<int, long> hom_graded(const ReflectionGroup& G, const GradedModule& M,
                               const GradedModule& N);

}  // namespace ksys
