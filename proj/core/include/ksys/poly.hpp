#pragma once

#include <string>
#include <utility>
#include <vector>

#include "ksys/error.hpp"

namespace ksys {

// Dense univariate polynomial over a field T (T = Rat or Cyclo here).
// Invariant: no trailing zero coefficients; zero polynomial has empty storage.
template <class T>
class Poly {
  public:
    Poly() = default;
    Poly(long v) {
        if (v != 0) c_.push_back(T(v));
    }
    explicit Poly(T v) {
        if (!coeff_is_zero(v)) c_.push_back(std::move(v));
    }
    explicit Poly(std::vector<T> coeffs) : c_(std::move(coeffs)) { trim(); }

    static Poly monomial(int k, T coeff = T(1)) {
        Poly p;
        if (coeff_is_zero(coeff)) return p;
        p.c_.assign(k + 1, T(0));
        p.c_[k] = std::move(coeff);
        return p;
    }

    int degree() const { return static_cast<int>(c_.size()) - 1; }  // zero -> -1
    bool is_zero() const { return c_.empty(); }
    const std::vector<T>& coeffs() const { return c_; }

    T coeff(int k) const {
        if (k < 0 || k > degree()) return T(0);
        return c_[k];
    }
    const T& lead() const {
        KSYS_INVARIANT(!c_.empty(), "lead of zero polynomial");
        return c_.back();
    }

    T eval(const T& x) const {
        T acc(0);
        for (int i = degree(); i >= 0; --i) acc = acc * x + c_[i];
        return acc;
    }

    Poly shifted(int k) const {  // multiply by q^k, k >= 0
        if (is_zero()) return {};
        Poly r;
        r.c_.assign(c_.size() + k, T(0));
        for (size_t i = 0; i < c_.size(); ++i) r.c_[i + k] = c_[i];
        return r;
    }

    int valuation() const {  // lowest nonzero power; -1 for zero
        for (size_t i = 0; i < c_.size(); ++i)
            if (!coeff_is_zero(c_[i])) return static_cast<int>(i);
        return -1;
    }

    friend Poly operator+(const Poly& a, const Poly& b) {
        Poly r;
        r.c_.resize(std::max(a.c_.size(), b.c_.size()), T(0));
        for (size_t i = 0; i < a.c_.size(); ++i) r.c_[i] = a.c_[i];
        for (size_t i = 0; i < b.c_.size(); ++i) r.c_[i] += b.c_[i];
        r.trim();
        return r;
    }
    friend Poly operator-(const Poly& a, const Poly& b) {
        Poly r;
        r.c_.resize(std::max(a.c_.size(), b.c_.size()), T(0));
        for (size_t i = 0; i < a.c_.size(); ++i) r.c_[i] = a.c_[i];
        for (size_t i = 0; i < b.c_.size(); ++i) r.c_[i] -= b.c_[i];
        r.trim();
        return r;
    }
    Poly operator-() const {
        Poly r = *this;
        for (auto& x : r.c_) x = -x;
        return r;
    }
    friend Poly operator*(const Poly& a, const Poly& b) {
        if (a.is_zero() || b.is_zero()) return {};
        Poly r;
        r.c_.assign(a.c_.size() + b.c_.size() - 1, T(0));
        for (size_t i = 0; i < a.c_.size(); ++i) {
            if (coeff_is_zero(a.c_[i])) continue;
            for (size_t j = 0; j < b.c_.size(); ++j) r.c_[i + j] += a.c_[i] * b.c_[j];
        }
        r.trim();
        return r;
    }
    Poly& operator+=(const Poly& o) { return *this = *this + o; }
    Poly& operator-=(const Poly& o) { return *this = *this - o; }
    Poly& operator*=(const Poly& o) { return *this = *this * o; }

    Poly scaled(const T& s) const {
        Poly r = *this;
        for (auto& x : r.c_) x *= s;
        r.trim();
        return r;
    }

    bool operator==(const Poly& o) const { return c_ == o.c_; }
    bool operator!=(const Poly& o) const { return !(*this == o); }

    // Euclidean division; requires b != 0.
    friend std::pair<Poly, Poly> divrem(const Poly& a, const Poly& b) {
        KSYS_REQUIRE(!b.is_zero(), Errc::division_by_zero, "polynomial division by zero");
        Poly q, r = a;
        if (r.degree() < b.degree()) return {q, r};
        q.c_.assign(r.degree() - b.degree() + 1, T(0));
        T inv_lead = T(1) / b.lead();
        while (!r.is_zero() && r.degree() >= b.degree()) {
            int d = r.degree() - b.degree();
            T f = r.lead() * inv_lead;
            q.c_[d] = f;
            for (int i = 0; i <= b.degree(); ++i) r.c_[i + d] -= f * b.c_[i];
            r.trim();
        }
        q.trim();
        return {q, r};
    }

    friend Poly operator/(const Poly& a, const Poly& b) { return divrem(a, b).first; }
    friend Poly operator%(const Poly& a, const Poly& b) { return divrem(a, b).second; }

    // Exact division; errors on nonzero remainder.
    friend Poly div_exact(const Poly& a, const Poly& b) {
        auto [q, r] = divrem(a, b);
        KSYS_INVARIANT(r.is_zero(), "polynomial division expected exact");
        return q;
    }

    bool divides(const Poly& a) const { return divrem(a, *this).second.is_zero(); }

    Poly monic() const {
        if (is_zero()) return {};
        return scaled(T(1) / lead());
    }

    friend Poly gcd(Poly a, Poly b) {  // monic gcd
        while (!b.is_zero()) {
            Poly r = a % b;
            a = std::move(b);
            b = std::move(r);
        }
        return a.monic();
    }

  private:
    static bool coeff_is_zero(const T& x) { return x == T(0); }
    void trim() {
        while (!c_.empty() && coeff_is_zero(c_.back())) c_.pop_back();
    }
    std::vector<T> c_;
};

}  // namespace ksys
