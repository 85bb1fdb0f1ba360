#pragma once

#include <map>
#include <string>

#include "ksys/poly.hpp"
#include "ksys/qseries.hpp"
#include "ksys/rational.hpp"

namespace ksys {

// One-variable rational function over Q in canonical reduced form.
//
// After gcd reduction the denominator is rewritten, whenever possible, as a
// product of factors (1 - q^k); every graded dimension produced here has that
// shape. Denominators outside that family fall back to the monic form.
class RatFun {
  public:
    RatFun() : num_(0), den_(1) {}
    RatFun(long v) : num_(v), den_(1) {}
    explicit RatFun(Poly<Rat> numerator) : num_(std::move(numerator)), den_(1) {}
    RatFun(Poly<Rat> numerator, Poly<Rat> denominator);

    static RatFun monomial(int k) { return RatFun(Poly<Rat>::monomial(k)); }
    // 1 / prod (1 - q^k) for the given exponent multiset.
    static RatFun inv_qfactors(const std::map<int, int>& factors);

    const Poly<Rat>& num() const { return num_; }
    const Poly<Rat>& den() const { return den_; }
    bool den_is_qproduct() const { return factored_; }
    const std::map<int, int>& den_factors() const;  // requires den_is_qproduct()

    bool is_zero() const { return num_.is_zero(); }
    bool is_polynomial() const { return den_.degree() == 0; }
    Poly<Rat> as_polynomial() const;  // requires is_polynomial() after reduction

    RatFun operator-() const;
    friend RatFun operator+(const RatFun& a, const RatFun& b);
    friend RatFun operator-(const RatFun& a, const RatFun& b);
    friend RatFun operator*(const RatFun& a, const RatFun& b);
    friend RatFun operator/(const RatFun& a, const RatFun& b);
    RatFun& operator+=(const RatFun& o) { return *this = *this + o; }
    RatFun& operator-=(const RatFun& o) { return *this = *this - o; }
    RatFun& operator*=(const RatFun& o) { return *this = *this * o; }

    bool operator==(const RatFun& o) const;
    bool operator!=(const RatFun& o) const { return !(*this == o); }

    // Power series expansion through order t; the reduced denominator must
    // not vanish at q = 0.
    QSeries expand(int t) const;

    std::string str() const;

  private:
    void normalize();
    Poly<Rat> num_, den_;
    std::map<int, int> den_fac_;
    bool factored_ = true;  // default-constructed denominators are trivial products
};

// Canonical reduced form of num/den; the spec-level normalization entry point.
RatFun ratfun_normalize(const Poly<Rat>& num, const Poly<Rat>& den);

// 1 - q^k as a polynomial.
Poly<Rat> one_minus_qk(int k);

std::string poly_str(const Poly<Rat>& p);

}  // namespace ksys
