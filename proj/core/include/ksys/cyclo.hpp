#pragma once

#include <string>
#include <vector>

#include "ksys/poly.hpp"
#include "ksys/rational.hpp"

namespace ksys {

int totient(int n);
// The n-th cyclotomic polynomial, monic over Q.
Poly<Rat> cyclotomic_poly(int n);

// An element of the cyclotomic field Q(zeta_N), stored as the reduced residue
// modulo the N-th cyclotomic polynomial: coeffs()[j] multiplies zeta_N^j and
// the vector always has length totient(N). N = 1 embeds the rationals.
//
// Binary operations between different conductors unify into Q(zeta_lcm).
// Conductor 1 takes a fast scalar path throughout.
class Cyclo {
  public:
    Cyclo() : n_(1), c_(1, Rat(0)) {}
    Cyclo(long v) : n_(1), c_(1, Rat(v)) {}
    explicit Cyclo(Rat v) : n_(1), c_(1, std::move(v)) {}
    Cyclo(int conductor, std::vector<Rat> reduced_coeffs);

    // Residue of sum coeffs[k] * zeta_N^k (any length) modulo Phi_N.
    static Cyclo reduce(const std::vector<Rat>& coeffs, int conductor);
    static Cyclo zeta(int conductor, long power = 1);

    int conductor() const { return n_; }
    const std::vector<Rat>& coeffs() const { return c_; }

    bool is_zero() const;
    bool is_rational() const;
    Rat rational_value() const;  // requires is_rational()

    Cyclo embedded(int new_conductor) const;  // conductor() must divide new_conductor
    Cyclo conj() const;                       // zeta -> zeta^{-1}
    Cyclo inverse() const;

    Cyclo operator-() const;
    Cyclo& operator+=(const Cyclo& o);
    Cyclo& operator-=(const Cyclo& o);
    Cyclo& operator*=(const Cyclo& o);
    friend Cyclo operator+(Cyclo a, const Cyclo& b) { return a += b; }
    friend Cyclo operator-(Cyclo a, const Cyclo& b) { return a -= b; }
    friend Cyclo operator*(const Cyclo& a, const Cyclo& b);
    friend Cyclo operator/(const Cyclo& a, const Cyclo& b) { return a * b.inverse(); }

    // this -= f * b, the elimination kernel's inner operation.
    void submul(const Cyclo& f, const Cyclo& b);

    friend bool operator==(const Cyclo& a, const Cyclo& b);
    friend bool operator!=(const Cyclo& a, const Cyclo& b) { return !(a == b); }

    std::string str() const;  // "2/3", "zeta3", "-1 - zeta3", ...

  private:
    int n_;
    std::vector<Rat> c_;  // length totient(n_)
};

// Total order on field values (representation-independent); rational-vs-
// rational and equal-conductor comparisons take fast paths.
struct CycloLess {
    bool operator()(const Cyclo& a, const Cyclo& b) const;
};

}  // namespace ksys
