#include "ksys/qseries.hpp"

#include <algorithm>
#include <sstream>

namespace ksys {

bool QSeries::is_zero() const {
    return std::all_of(c_.begin(), c_.end(), [](const Cyclo& x) { return x.is_zero(); });
}

QSeries QSeries::truncated(int t) const {
    KSYS_REQUIRE(t >= 0 && t <= trunc_, Errc::invalid_truncation, "truncation out of range");
    QSeries r(t);
    for (int i = 0; i <= t; ++i) r.c_[i] = c_[i];
    return r;
}

QSeries QSeries::shifted(int n) const {
    QSeries r(trunc_);
    for (int k = 0; k <= trunc_; ++k) {
        int src = k - n;
        if (src >= 0 && src <= trunc_) r.c_[k] = c_[src];
    }
    return r;
}

QSeries QSeries::scaled(const Cyclo& s) const {
    QSeries r(trunc_);
    for (int k = 0; k <= trunc_; ++k) r.c_[k] = c_[k] * s;
    return r;
}

QSeries QSeries::conj_coeffs() const {
    QSeries r(trunc_);
    for (int k = 0; k <= trunc_; ++k) r.c_[k] = c_[k].conj();
    return r;
}

QSeries operator+(const QSeries& a, const QSeries& b) {
    QSeries r(std::min(a.trunc_, b.trunc_));
    for (int k = 0; k <= r.trunc_; ++k) r.c_[k] = a.c_[k] + b.c_[k];
    return r;
}

QSeries operator-(const QSeries& a, const QSeries& b) {
    QSeries r(std::min(a.trunc_, b.trunc_));
    for (int k = 0; k <= r.trunc_; ++k) r.c_[k] = a.c_[k] - b.c_[k];
    return r;
}

QSeries QSeries::operator-() const {
    QSeries r(trunc_);
    for (int k = 0; k <= trunc_; ++k) r.c_[k] = -c_[k];
    return r;
}

QSeries operator*(const QSeries& a, const QSeries& b) {
    QSeries r(std::min(a.trunc_, b.trunc_));
    for (int i = 0; i <= r.trunc_; ++i) {
        if (a.c_[i].is_zero()) continue;
        for (int j = 0; i + j <= r.trunc_; ++j) {
            if (b.c_[j].is_zero()) continue;
            r.c_[i + j] += a.c_[i] * b.c_[j];
        }
    }
    return r;
}

QSeries series_div(const QSeries& a, const QSeries& b) {
    KSYS_REQUIRE(!b.c_[0].is_zero(), Errc::not_a_unit,
                 "series division needs an invertible constant term");
    QSeries r(std::min(a.trunc_, b.trunc_));
    Cyclo inv0 = b.c_[0].inverse();
    for (int k = 0; k <= r.trunc_; ++k) {
        Cyclo acc = a.c_[k];
        for (int j = 1; j <= k; ++j) acc -= b.c_[j] * r.c_[k - j];
        r.c_[k] = acc * inv0;
    }
    return r;
}

std::string QSeries::str() const {
    std::ostringstream os;
    bool first = true;
    for (int k = 0; k <= trunc_; ++k) {
        if (c_[k].is_zero()) continue;
        std::string cs = c_[k].str();
        bool neg = cs.size() > 1 && cs[0] == '-' && c_[k].is_rational();
        if (first) {
            if (neg) {
                os << "-";
                cs = cs.substr(1);
            }
        } else {
            os << (neg ? " - " : " + ");
            if (neg) cs = cs.substr(1);
        }
        bool unit_coeff = (cs == "1");
        if (k == 0) {
            os << (c_[k].is_rational() ? cs : "(" + cs + ")");
        } else {
            if (!unit_coeff) os << (c_[k].is_rational() ? cs : "(" + cs + ")") << "*";
            os << "q";
            if (k > 1) os << "^" << k;
        }
        first = false;
    }
    if (first) os << "0";
    os << " + O(q^" << trunc_ + 1 << ")";
    return os.str();
}

}  // namespace ksys
