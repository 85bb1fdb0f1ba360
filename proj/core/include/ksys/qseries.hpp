#pragma once

#include <string>
#include <vector>

#include "ksys/cyclo.hpp"

namespace ksys {

// Truncated power series in q with cyclotomic coefficients, exact through
// order trunc(). Binary operations never extend past the shorter operand:
// the result truncation is the minimum of the operands'.
class QSeries {
  public:
    explicit QSeries(int trunc) : trunc_(trunc), c_(trunc + 1) {
        KSYS_REQUIRE(trunc >= 0, Errc::invalid_truncation, "negative truncation");
    }
    QSeries(int trunc, std::vector<Cyclo> coeffs) : QSeries(trunc) {
        for (size_t i = 0; i < coeffs.size() && i < c_.size(); ++i) c_[i] = std::move(coeffs[i]);
    }

    static QSeries one(int trunc) { return monomial(trunc, 0); }
    static QSeries monomial(int trunc, int k, Cyclo coeff = Cyclo(1)) {
        QSeries s(trunc);
        if (k <= trunc) s.c_[k] = std::move(coeff);
        return s;
    }

    int trunc() const { return trunc_; }
    const Cyclo& operator[](int k) const { return c_[k]; }
    Cyclo& at(int k) { return c_[k]; }

    bool is_zero() const;
    Cyclo eval_trunc0() const { return c_[0]; }

    QSeries truncated(int t) const;
    QSeries shifted(int n) const;  // multiply by q^n (n may be negative; low terms drop)
    QSeries scaled(const Cyclo& s) const;
    QSeries conj_coeffs() const;

    friend QSeries operator+(const QSeries& a, const QSeries& b);
    friend QSeries operator-(const QSeries& a, const QSeries& b);
    friend QSeries operator*(const QSeries& a, const QSeries& b);
    QSeries operator-() const;
    QSeries& operator+=(const QSeries& o) { return *this = *this + o; }
    QSeries& operator-=(const QSeries& o) { return *this = *this - o; }

    // c with c*b = a through the shared truncation; b must have an invertible
    // constant term.
    friend QSeries series_div(const QSeries& a, const QSeries& b);

    bool operator==(const QSeries& o) const { return trunc_ == o.trunc_ && c_ == o.c_; }
    bool operator!=(const QSeries& o) const { return !(*this == o); }

    std::string str() const;

  private:
    int trunc_;
    std::vector<Cyclo> c_;
};

}  // namespace ksys
