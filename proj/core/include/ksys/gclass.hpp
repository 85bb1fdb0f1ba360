#pragma once

#include <optional>
#include <vector>

#include "ksys/chartable.hpp"
#include "ksys/qseries.hpp"
#include "ksys/ratfun.hpp"

namespace ksys {

// A class function valued in truncated q-series: the graded character of a
// module, or any Grothendieck-group class. Entry [c] is the series of values
// at the c-th conjugacy class. Evaluating at the q^0 coefficient gives an
// ordinary (virtual) character.
struct GradedClass {
    std::vector<QSeries> by_class;
    std::optional<std::vector<RatFun>> exact;  // per class, when available

    int trunc() const { return by_class.empty() ? -1 : by_class.front().trunc(); }
    int num_classes() const { return static_cast<int>(by_class.size()); }

    std::vector<Cyclo> grade(int k) const;
    bool grade_is_zero(int k) const;
    GradedClass truncated(int t) const;

    friend GradedClass operator+(const GradedClass& a, const GradedClass& b);
    friend GradedClass operator-(const GradedClass& a, const GradedClass& b);
    GradedClass shifted(int n) const;
    GradedClass scaled(const Cyclo& s) const;
};

GradedClass zero_class(int num_classes, int trunc);

// Graded character of P_chi: class c carries chi(c) / det(1 - q c|_h).
GradedClass projective_class(const ReflectionGroup& G, const CharacterTable& T, int chi, int trunc);

// Multiplicity of psi in the grade-k piece of the class.
Cyclo grade_multiplicity(const ReflectionGroup& G, const CharacterTable& T, const GradedClass& cls,
                         int k, int psi);

// Dimension series: value at the identity class.
QSeries dimension_series(const ReflectionGroup& G, const GradedClass& cls);

}  // namespace ksys
