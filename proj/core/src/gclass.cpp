#include "ksys/gclass.hpp"

namespace ksys {

std::vector<Cyclo> GradedClass::grade(int k) const {
    std::vector<Cyclo> v(by_class.size());
    for (size_t c = 0; c < by_class.size(); ++c) v[c] = by_class[c][k];
    return v;
}

bool GradedClass::grade_is_zero(int k) const {
    for (const auto& s : by_class)
        if (!s[k].is_zero()) return false;
    return true;
}

GradedClass GradedClass::truncated(int t) const {
    GradedClass r;
    for (const auto& s : by_class) r.by_class.push_back(s.truncated(t));
    r.exact = exact;
    return r;
}

GradedClass operator+(const GradedClass& a, const GradedClass& b) {
    KSYS_INVARIANT(a.num_classes() == b.num_classes(), "class function length mismatch");
    GradedClass r;
    for (int c = 0; c < a.num_classes(); ++c) r.by_class.push_back(a.by_class[c] + b.by_class[c]);
    return r;
}

GradedClass operator-(const GradedClass& a, const GradedClass& b) {
    KSYS_INVARIANT(a.num_classes() == b.num_classes(), "class function length mismatch");
    GradedClass r;
    for (int c = 0; c < a.num_classes(); ++c) r.by_class.push_back(a.by_class[c] - b.by_class[c]);
    return r;
}

GradedClass GradedClass::shifted(int n) const {
    GradedClass r;
    for (const auto& s : by_class) r.by_class.push_back(s.shifted(n));
    return r;
}

GradedClass GradedClass::scaled(const Cyclo& s) const {
    GradedClass r;
    for (const auto& series : by_class) r.by_class.push_back(series.scaled(s));
    return r;
}

GradedClass zero_class(int num_classes, int trunc) {
    GradedClass r;
    r.by_class.assign(num_classes, QSeries(trunc));
    return r;
}

GradedClass projective_class(const ReflectionGroup& G, const CharacterTable& T, int chi, int trunc) {
    GradedClass r;
    for (int c = 0; c < G.num_classes(); ++c) {
        Poly<Cyclo> cp = char_poly_h(G, G.class_rep[c]);
        QSeries den(trunc);
        for (int k = 0; k <= std::min(trunc, cp.degree()); ++k) den.at(k) = cp.coeff(k);
        r.by_class.push_back(series_div(QSeries::monomial(trunc, 0, T.rows[chi][c]), den));
    }
    return r;
}

Cyclo grade_multiplicity(const ReflectionGroup& G, const CharacterTable& T, const GradedClass& cls,
                         int k, int psi) {
    return char_inner(G, T, cls.grade(k), psi);
}

QSeries dimension_series(const ReflectionGroup& G, const GradedClass& cls) {
    return cls.by_class[G.identity_class()];
}

}  // namespace ksys
