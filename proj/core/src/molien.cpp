#include "ksys/molien.hpp"

#include <algorithm>

namespace ksys {

namespace {

// Sum over classes of weight_c / charpoly_c, reduced over Q(zeta) and
// converted to a rational-coefficient RatFun.
RatFun class_sum(const ReflectionGroup& G, const std::vector<Cyclo>& weights) {
    std::vector<Poly<Cyclo>> charpolys;
    for (int c = 0; c < G.num_classes(); ++c) charpolys.push_back(char_poly_h(G, G.class_rep[c]));

    Poly<Cyclo> den(Cyclo(1));
    for (const auto& cp : charpolys) den *= cp;
    Poly<Cyclo> num;
    for (int c = 0; c < G.num_classes(); ++c) {
        if (weights[c].is_zero()) continue;
        Poly<Cyclo> term(weights[c]);
        for (int d = 0; d < G.num_classes(); ++d)
            if (d != c) term *= charpolys[d];
        num += term;
    }
    num = num.scaled(Cyclo(rat(1, G.order())));
    if (num.is_zero()) return RatFun();

    Poly<Cyclo> g = gcd(num, den);
    num = div_exact(num, g);
    den = div_exact(den, g);

    auto to_rat = [](const Poly<Cyclo>& p) {
        std::vector<Rat> c(p.degree() + 1);
        for (int k = 0; k <= p.degree(); ++k) {
            KSYS_INVARIANT(p.coeff(k).is_rational(), "Molien sum left a non-rational coefficient");
            c[k] = p.coeff(k).rational_value();
        }
        return Poly<Rat>(std::move(c));
    };
    return RatFun(to_rat(num), to_rat(den));
}

}  // namespace

RatFun molien_pairing(const ReflectionGroup& G, const CharacterTable& T, int chi, int psi) {
    std::vector<Cyclo> w(G.num_classes());
    for (int c = 0; c < G.num_classes(); ++c)
        w[c] = Cyclo(Rat(G.class_sizes[c])) * T.rows[chi][c].conj() * T.rows[psi][c];
    return class_sum(G, w);
}

Matrix<RatFun> omega_matrix(const ReflectionGroup& G, const CharacterTable& T) {
    int k = T.num_chars();
    Matrix<RatFun> omega(k, k);
    for (int i = 0; i < k; ++i)
        for (int j = 0; j < k; ++j) omega.at(i, j) = molien_pairing(G, T, i, j);
    return omega;
}

RatFun molien_invariants(const ReflectionGroup& G) {
    std::vector<Cyclo> w(G.num_classes());
    for (int c = 0; c < G.num_classes(); ++c) w[c] = Cyclo(Rat(G.class_sizes[c]));
    return class_sum(G, w);
}

std::vector<int> invariant_degrees(const ReflectionGroup& G) {
    RatFun inv = molien_invariants(G);
    int r = G.dim_h;
    // Peel factors (1 - q^d) off the series, smallest exposed degree first.
    int order = static_cast<int>(G.order()) + 1;
    QSeries s = inv.expand(order);
    std::vector<int> degrees;
    KSYS_REQUIRE(s[0] == Cyclo(1), Errc::not_reflection_group,
                 "invariant Molien series does not start at 1");
    for (int i = 0; i < r; ++i) {
        int d = 0;
        for (int k = 1; k <= order; ++k)
            if (!s[k].is_zero()) {
                d = k;
                break;
            }
        KSYS_REQUIRE(d >= 1, Errc::not_reflection_group,
                     "invariant Molien series has fewer than dim_h factors");
        degrees.push_back(d);
        s = s * (QSeries::one(order) - QSeries::monomial(order, d));
    }
    for (int k = 1; k <= order; ++k)
        KSYS_REQUIRE(s[k].is_zero(), Errc::not_reflection_group,
                     "invariant Molien series is not a product of dim_h factors 1/(1-q^d)");

    long prod = 1;
    RatFun check(1);
    for (int d : degrees) {
        prod *= d;
        check = check / RatFun(one_minus_qk(d));
    }
    KSYS_REQUIRE(prod == G.order(), Errc::not_reflection_group,
                 "product of invariant degrees does not equal |W|");
    KSYS_REQUIRE(check == inv, Errc::not_reflection_group,
                 "degree recognition failed the exact rational-function check");
    std::sort(degrees.begin(), degrees.end());
    return degrees;
}

Poly<Rat> fake_degree(const ReflectionGroup& G, const CharacterTable& T, int chi) {
    std::vector<int> degrees = invariant_degrees(G);
    RatFun f = molien_pairing(G, T, chi, T.trivial_index());
    for (int d : degrees) f *= RatFun(one_minus_qk(d));
    KSYS_INVARIANT(f.is_polynomial(), "fake degree is not a polynomial");
    return f.as_polynomial();
}

}  // namespace ksys
