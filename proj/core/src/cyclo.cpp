#include "ksys/cyclo.hpp"

#include <map>
#include <mutex>
#include <numeric>
#include <sstream>

namespace ksys {

int totient(int n) {
    KSYS_REQUIRE(n >= 1, Errc::invalid_conductor, "conductor must be >= 1");
    int result = n, m = n;
    for (int p = 2; p * p <= m; ++p) {
        if (m % p) continue;
        while (m % p == 0) m /= p;
        result -= result / p;
    }
    if (m > 1) result -= result / m;
    return result;
}

namespace {

struct ConductorTable {
    int n = 1;
    int phi = 1;
    Poly<Rat> min_poly;
    // pow[e] = zeta^e in the reduced basis, for e = 0..n-1.
    std::vector<std::vector<Rat>> pow;
    // conj_basis[j] = conj(zeta^j) = zeta^{n-j} in the reduced basis.
    std::vector<std::vector<Rat>> conj_basis;
};

Poly<Rat> cyclotomic_poly_uncached(int n, const std::function<Poly<Rat>(int)>& rec) {
    if (n == 1) return Poly<Rat>(std::vector<Rat>{Rat(-1), Rat(1)});
    Poly<Rat> num = Poly<Rat>::monomial(n) - Poly<Rat>(1);  // q^n - 1
    for (int d = 1; d < n; ++d)
        if (n % d == 0) num = div_exact(num, rec(d));
    return num;
}

class TableCache {
  public:
    static TableCache& instance() {
        static TableCache cache;
        return cache;
    }

    Poly<Rat> cyclotomic(int n) {
        std::lock_guard<std::mutex> lk(mu_);
        return cyclotomic_locked(n);
    }

    const ConductorTable& table(int n) {
        std::lock_guard<std::mutex> lk(mu_);
        auto it = tables_.find(n);
        if (it != tables_.end()) return it->second;

        ConductorTable t;
        t.n = n;
        t.min_poly = cyclotomic_locked(n);
        t.phi = t.min_poly.degree();
        t.pow.resize(n);
        std::vector<Rat> cur(t.phi, Rat(0));
        cur[0] = 1;
        for (int e = 0; e < n; ++e) {
            t.pow[e] = cur;
            // multiply by zeta: shift, then fold zeta^phi = -(low part of Phi).
            Rat top = cur[t.phi - 1];
            for (int j = t.phi - 1; j > 0; --j) cur[j] = cur[j - 1];
            cur[0] = 0;
            if (!rat_is_zero(top))
                for (int j = 0; j < t.phi; ++j) cur[j] -= top * t.min_poly.coeff(j);
        }
        t.conj_basis.resize(t.phi);
        for (int j = 0; j < t.phi; ++j) t.conj_basis[j] = t.pow[(n - j) % n];
        return tables_.emplace(n, std::move(t)).first->second;
    }

  private:
    Poly<Rat> cyclotomic_locked(int n) {
        auto it = polys_.find(n);
        if (it != polys_.end()) return it->second;
        std::function<Poly<Rat>(int)> rec = [&](int d) { return cyclotomic_locked(d); };
        Poly<Rat> p = cyclotomic_poly_uncached(n, rec);
        polys_.emplace(n, p);
        return p;
    }

    std::mutex mu_;
    std::map<int, Poly<Rat>> polys_;
    std::map<int, ConductorTable> tables_;
};

std::vector<Rat> combine(const std::vector<std::vector<Rat>>& basis_images,
                         const std::vector<Rat>& coeffs, int out_len) {
    std::vector<Rat> out(out_len, Rat(0));
    for (size_t j = 0; j < coeffs.size(); ++j) {
        if (rat_is_zero(coeffs[j])) continue;
        const auto& img = basis_images[j];
        for (int i = 0; i < out_len; ++i) out[i] += coeffs[j] * img[i];
    }
    return out;
}

}  // namespace

Poly<Rat> cyclotomic_poly(int n) {
    KSYS_REQUIRE(n >= 1, Errc::invalid_conductor, "conductor must be >= 1");
    return TableCache::instance().cyclotomic(n);
}

Cyclo::Cyclo(int conductor, std::vector<Rat> reduced_coeffs) : n_(conductor), c_(std::move(reduced_coeffs)) {
    KSYS_REQUIRE(n_ >= 1, Errc::invalid_conductor, "conductor must be >= 1");
    KSYS_REQUIRE(static_cast<int>(c_.size()) == totient(n_), Errc::invalid_input,
                 "cyclotomic coefficient vector has wrong length");
}

Cyclo Cyclo::reduce(const std::vector<Rat>& coeffs, int conductor) {
    KSYS_REQUIRE(conductor >= 1, Errc::invalid_conductor, "conductor must be >= 1");
    if (conductor == 1) {
        Rat sum(0);
        for (const auto& c : coeffs) sum += c;  // zeta_1 = 1
        return Cyclo(std::move(sum));
    }
    const auto& t = TableCache::instance().table(conductor);
    std::vector<Rat> out(t.phi, Rat(0));
    for (size_t e = 0; e < coeffs.size(); ++e) {
        if (rat_is_zero(coeffs[e])) continue;
        const auto& img = t.pow[e % conductor];  // zeta^n = 1
        for (int i = 0; i < t.phi; ++i) out[i] += coeffs[e] * img[i];
    }
    return Cyclo(conductor, std::move(out));
}

Cyclo Cyclo::zeta(int conductor, long power) {
    KSYS_REQUIRE(conductor >= 1, Errc::invalid_conductor, "conductor must be >= 1");
    long e = power % conductor;
    if (e < 0) e += conductor;
    std::vector<Rat> coeffs(e + 1, Rat(0));
    coeffs[e] = 1;
    return reduce(coeffs, conductor);
}

bool Cyclo::is_zero() const {
    for (const auto& x : c_)
        if (!rat_is_zero(x)) return false;
    return true;
}

bool Cyclo::is_rational() const {
    for (size_t j = 1; j < c_.size(); ++j)
        if (!rat_is_zero(c_[j])) return false;
    return true;
}

Rat Cyclo::rational_value() const {
    KSYS_INVARIANT(is_rational(), "cyclotomic value is not rational");
    return c_[0];
}

Cyclo Cyclo::embedded(int new_conductor) const {
    if (new_conductor == n_) return *this;
    KSYS_REQUIRE(new_conductor % n_ == 0, Errc::invalid_conductor,
                 "conductor embedding requires divisibility");
    if (n_ == 1) {
        const auto& t = TableCache::instance().table(new_conductor);
        std::vector<Rat> out(t.phi, Rat(0));
        out[0] = c_[0];
        return Cyclo(new_conductor, std::move(out));
    }
    const auto& t = TableCache::instance().table(new_conductor);
    int step = new_conductor / n_;
    std::vector<Rat> out(t.phi, Rat(0));
    for (size_t j = 0; j < c_.size(); ++j) {
        if (rat_is_zero(c_[j])) continue;
        const auto& img = t.pow[(j * step) % new_conductor];
        for (int i = 0; i < t.phi; ++i) out[i] += c_[j] * img[i];
    }
    return Cyclo(new_conductor, std::move(out));
}

Cyclo Cyclo::conj() const {
    if (n_ == 1) return *this;
    const auto& t = TableCache::instance().table(n_);
    return Cyclo(n_, combine(t.conj_basis, c_, t.phi));
}

Cyclo Cyclo::inverse() const {
    KSYS_REQUIRE(!is_zero(), Errc::division_by_zero, "inverse of zero");
    if (is_rational()) {
        Cyclo r = *this;
        r.c_[0] = Rat(1) / r.c_[0];
        for (size_t j = 1; j < r.c_.size(); ++j) r.c_[j] = 0;
        return r;
    }
    // Extended Euclid in Q[t] for (value, Phi_n): a*value + b*Phi = 1.
    Poly<Rat> a(std::vector<Rat>(c_.begin(), c_.end()));
    Poly<Rat> r0 = cyclotomic_poly(n_), r1 = a;
    Poly<Rat> s0 = Poly<Rat>(0), s1 = Poly<Rat>(1);  // coefficients of `a`
    while (!r1.is_zero()) {
        auto [q, r2] = divrem(r0, r1);
        Poly<Rat> s2 = s0 - q * s1;
        r0 = std::move(r1);
        r1 = std::move(r2);
        s0 = std::move(s1);
        s1 = std::move(s2);
    }
    KSYS_INVARIANT(r0.degree() == 0, "cyclotomic inverse: gcd not constant");
    Poly<Rat> inv = s0.scaled(Rat(1) / r0.coeff(0));
    std::vector<Rat> coeffs(inv.coeffs());
    return reduce(coeffs, n_);
}

Cyclo Cyclo::operator-() const {
    Cyclo r = *this;
    for (auto& x : r.c_) x = -x;
    return r;
}

Cyclo& Cyclo::operator+=(const Cyclo& o) {
    if (n_ == o.n_) {
        for (size_t j = 0; j < c_.size(); ++j) c_[j] += o.c_[j];
        return *this;
    }
    int l = std::lcm(n_, o.n_);
    *this = embedded(l);
    return *this += o.embedded(l);
}

Cyclo& Cyclo::operator-=(const Cyclo& o) {
    if (n_ == o.n_) {
        for (size_t j = 0; j < c_.size(); ++j) c_[j] -= o.c_[j];
        return *this;
    }
    int l = std::lcm(n_, o.n_);
    *this = embedded(l);
    return *this -= o.embedded(l);
}

Cyclo operator*(const Cyclo& a, const Cyclo& b) {
    if (a.n_ != b.n_) {
        int l = std::lcm(a.n_, b.n_);
        return a.embedded(l) * b.embedded(l);
    }
    if (a.n_ == 1) return Cyclo(a.c_[0] * b.c_[0]);
    if (a.is_rational()) {
        if (rat_is_zero(a.c_[0])) return Cyclo(a.n_, std::vector<Rat>(a.c_.size(), Rat(0)));
        Cyclo r = b;
        for (auto& x : r.c_) x *= a.c_[0];
        return r;
    }
    if (b.is_rational()) return b * a;
    int phi = static_cast<int>(a.c_.size());
    std::vector<Rat> conv(2 * phi - 1, Rat(0));
    for (int i = 0; i < phi; ++i) {
        if (rat_is_zero(a.c_[i])) continue;
        for (int j = 0; j < phi; ++j) {
            if (rat_is_zero(b.c_[j])) continue;
            conv[i + j] += a.c_[i] * b.c_[j];
        }
    }
    return Cyclo::reduce(conv, a.n_);
}

void Cyclo::submul(const Cyclo& f, const Cyclo& b) {
    if (n_ == 1 && f.n_ == 1 && b.n_ == 1) {
        c_[0] -= f.c_[0] * b.c_[0];
        return;
    }
    *this -= f * b;
}

Cyclo& Cyclo::operator*=(const Cyclo& o) { return *this = *this * o; }

bool operator==(const Cyclo& a, const Cyclo& b) {
    if (a.n_ == b.n_) return a.c_ == b.c_;
    int l = std::lcm(a.n_, b.n_);
    return a.embedded(l).c_ == b.embedded(l).c_;
}

namespace {
bool coeffs_less(const std::vector<Rat>& x, const std::vector<Rat>& y) {
    for (size_t j = 0; j < x.size(); ++j) {
        int c = cmp(x[j], y[j]);
        if (c != 0) return c < 0;
    }
    return false;
}
}  // namespace

bool CycloLess::operator()(const Cyclo& a, const Cyclo& b) const {
    if (a.is_rational() && b.is_rational()) {
        int c = cmp(a.coeffs()[0], b.coeffs()[0]);
        if (c != 0) return c < 0;
        return false;
    }
    if (a.conductor() == b.conductor()) return coeffs_less(a.coeffs(), b.coeffs());
    int l = std::lcm(a.conductor(), b.conductor());
    return coeffs_less(a.embedded(l).coeffs(), b.embedded(l).coeffs());
}

std::string Cyclo::str() const {
    if (is_rational()) return rat_str(c_[0]);
    std::ostringstream os;
    bool first = true;
    for (size_t j = 0; j < c_.size(); ++j) {
        if (rat_is_zero(c_[j])) continue;
        Rat coeff = c_[j];
        if (first) {
            if (sgn(coeff) < 0) {
                os << "-";
                coeff = -coeff;
            }
        } else {
            os << (sgn(coeff) < 0 ? " - " : " + ");
            if (sgn(coeff) < 0) coeff = -coeff;
        }
        if (j == 0) {
            os << rat_str(coeff);
        } else {
            if (coeff != 1) os << rat_str(coeff) << "*";
            os << "zeta" << n_;
            if (j > 1) os << "^" << j;
        }
        first = false;
    }
    if (first) os << "0";
    return os.str();
}

}  // namespace ksys
