#include "ksys/ratfun.hpp"

#include <optional>
#include <sstream>

#include "ksys/cyclo.hpp"

namespace ksys {

Poly<Rat> one_minus_qk(int k) {
    KSYS_INVARIANT(k >= 1, "exponent must be positive");
    return Poly<Rat>(1) - Poly<Rat>::monomial(k);
}

RatFun::RatFun(Poly<Rat> numerator, Poly<Rat> denominator)
    : num_(std::move(numerator)), den_(std::move(denominator)) {
    KSYS_REQUIRE(!den_.is_zero(), Errc::division_by_zero, "rational function with zero denominator");
    normalize();
}

RatFun ratfun_normalize(const Poly<Rat>& num, const Poly<Rat>& den) { return RatFun(num, den); }

namespace {

// Factor a monic polynomial into cyclotomic polynomials Phi_d; empty optional
// when some factor is not cyclotomic. phi(d) >= sqrt(d/2) bounds the search.
std::optional<std::map<int, int>> cyclotomic_factorization(Poly<Rat> p) {
    std::map<int, int> fac;
    const int bound = 2 * p.degree() * p.degree() + 2;
    for (int d = 1; p.degree() > 0 && d <= bound; ++d) {
        if (totient(d) > p.degree()) continue;
        Poly<Rat> phi = cyclotomic_poly(d);
        while (phi.degree() <= p.degree() && phi.divides(p)) {
            p = div_exact(p, phi);
            ++fac[d];
        }
    }
    if (p.degree() > 0) return std::nullopt;
    return fac;
}

// Greedy multiset K of exponents, largest d first, with prod_{k in K} (1-q^k)
// covering the cyclotomic content: for each d, #{k in K : d | k} >= fac[d].
std::map<int, int> qfactor_cover(const std::map<int, int>& fac) {
    std::map<int, int> cover;
    std::map<int, int> have;
    for (auto it = fac.rbegin(); it != fac.rend(); ++it) {
        int d = it->first;
        int deficit = it->second - have[d];
        if (deficit <= 0) continue;
        cover[d] += deficit;
        for (int dd = 1; dd <= d; ++dd)
            if (d % dd == 0) have[dd] += deficit;
    }
    return cover;
}

Poly<Rat> qproduct(const std::map<int, int>& cover) {
    Poly<Rat> p(1);
    for (auto [k, m] : cover)
        for (int i = 0; i < m; ++i) p *= one_minus_qk(k);
    return p;
}

}  // namespace

void RatFun::normalize() {
    factored_ = false;
    den_fac_.clear();
    if (num_.is_zero()) {
        den_ = Poly<Rat>(1);
        factored_ = true;
        return;
    }
    Poly<Rat> g = gcd(num_, den_);
    num_ = div_exact(num_, g);
    den_ = div_exact(den_, g);
    num_ = num_.scaled(Rat(1) / den_.lead());
    den_ = den_.monic();
    if (den_.degree() == 0) {
        den_ = Poly<Rat>(1);
        factored_ = true;
        return;
    }
    auto fac = cyclotomic_factorization(den_);
    if (!fac) return;
    std::map<int, int> cover = qfactor_cover(*fac);
    Poly<Rat> target = qproduct(cover);
    // target = sign * (den * extra) with monic extra and sign = +-1.
    Rat sign = target.lead();
    Poly<Rat> extra = div_exact(target.scaled(Rat(1) / sign), den_);
    num_ = (num_ * extra).scaled(sign);
    den_ = std::move(target);
    den_fac_ = std::move(cover);
    factored_ = true;
}

const std::map<int, int>& RatFun::den_factors() const {
    KSYS_INVARIANT(factored_, "denominator is not a (1-q^k) product");
    return den_fac_;
}

RatFun RatFun::inv_qfactors(const std::map<int, int>& factors) {
    return RatFun(Poly<Rat>(1), qproduct(factors));
}

Poly<Rat> RatFun::as_polynomial() const {
    KSYS_INVARIANT(is_polynomial(), "rational function is not a polynomial");
    return num_.scaled(Rat(1) / den_.coeff(0));
}

RatFun RatFun::operator-() const {
    RatFun r = *this;
    r.num_ = -r.num_;
    return r;
}

RatFun operator+(const RatFun& a, const RatFun& b) {
    return RatFun(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}
RatFun operator-(const RatFun& a, const RatFun& b) {
    return RatFun(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
}
RatFun operator*(const RatFun& a, const RatFun& b) { return RatFun(a.num_ * b.num_, a.den_ * b.den_); }
RatFun operator/(const RatFun& a, const RatFun& b) {
    KSYS_REQUIRE(!b.is_zero(), Errc::division_by_zero, "rational function division by zero");
    return RatFun(a.num_ * b.den_, a.den_ * b.num_);
}

bool RatFun::operator==(const RatFun& o) const { return num_ * o.den_ == o.num_ * den_; }

QSeries RatFun::expand(int t) const {
    KSYS_REQUIRE(!rat_is_zero(den_.coeff(0)), Errc::not_a_unit,
                 "rational function has a pole at q = 0");
    QSeries num_s(t), den_s(t);
    for (int k = 0; k <= std::min(t, num_.degree()); ++k) num_s.at(k) = Cyclo(num_.coeff(k));
    for (int k = 0; k <= std::min(t, den_.degree()); ++k) den_s.at(k) = Cyclo(den_.coeff(k));
    return series_div(num_s, den_s);
}

std::string poly_str(const Poly<Rat>& p) {
    if (p.is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (int k = 0; k <= p.degree(); ++k) {
        Rat c = p.coeff(k);
        if (rat_is_zero(c)) continue;
        if (first) {
            if (sgn(c) < 0) {
                os << "-";
                c = -c;
            }
        } else {
            os << (sgn(c) < 0 ? " - " : " + ");
            if (sgn(c) < 0) c = -c;
        }
        if (k == 0) {
            os << rat_str(c);
        } else {
            if (c != 1) os << rat_str(c) << "*";
            os << "q";
            if (k > 1) os << "^" << k;
        }
        first = false;
    }
    return os.str();
}

std::string RatFun::str() const {
    if (is_polynomial()) return poly_str(as_polynomial());
    int num_terms = 0;
    for (int k = 0; k <= num_.degree(); ++k)
        if (!rat_is_zero(num_.coeff(k))) ++num_terms;
    std::ostringstream os;
    std::string n = poly_str(num_);
    os << (num_terms > 1 ? "(" + n + ")" : n) << "/";
    if (factored_) {
        int nfac = 0;
        for (auto [k, m] : den_fac_) nfac += m;
        std::ostringstream ds;
        for (auto [k, m] : den_fac_) {
            ds << "(1-q";
            if (k > 1) ds << "^" << k;
            ds << ")";
            if (m > 1) ds << "^" << m;
        }
        os << (nfac > 1 ? "(" + ds.str() + ")" : ds.str());
    } else {
        os << "(" << poly_str(den_) << ")";
    }
    return os.str();
}

}  // namespace ksys
