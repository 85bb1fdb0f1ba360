#pragma once

#include "ksys/gmodule.hpp"

namespace ksys {

// strict: quotient of E_chi by the submodule generated by the psi-isotypic
//         components of all grades n >= 1 with psi strictly below chi.
// weak:   same with psi <= chi (including the phylum of chi itself); the
//         grade-0 character of the result is exactly chi.
enum class TraceMode { strict, weak };

struct TraceQuotient {
    GradedModule module;  // quotient of E_chi; multiplicity dim chi
    GradedClass cls;      // graded character divided by dim chi
};

// Grade-by-grade construction of the trace quotient. Per grade k the killed
// subspace is h * S_{k-1} plus the full killed isotypic component, so the
// result equals the quotient by the generated submodule seeded with the
// ambient isotypic components; gr_{k+1} is presented as
// (h (x) gr_k) / Koszul relations, which keeps all linear algebra at
// quotient dimensions.
TraceQuotient trace_quotient(const ReflectionGroup& G, const CharacterTable& T, const Preorder& P,
                             int chi, TraceMode mode, int N);

// True iff the top `buffer` grades of the class vanish identically; callers
// treat false as "raise the truncation and retry".
bool certify_finite(const GradedClass& cls, int buffer);

}  // namespace ksys
