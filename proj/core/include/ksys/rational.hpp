#pragma once

#include <gmpxx.h>

#include <string>

#include "ksys/error.hpp"

namespace ksys {

// Exact big-integer rationals. mpq_class is kept canonical by the gmpxx
// operators; only construction from raw parts needs an explicit pass.
using Rat = mpq_class;

inline Rat rat(long num, long den = 1) {
    KSYS_REQUIRE(den != 0, Errc::division_by_zero, "rational with zero denominator");
    Rat r(num, den);
    r.canonicalize();
    return r;
}

inline Rat rat_parse(const std::string& s) {
    try {
        Rat r(s);
        KSYS_REQUIRE(r.get_den() != 0, Errc::schema, "rational with zero denominator: " + s);
        r.canonicalize();
        return r;
    } catch (const std::invalid_argument&) {
        fail(Errc::schema, "malformed rational: '" + s + "'");
    }
}

inline std::string rat_str(const Rat& x) { return x.get_str(); }

inline bool rat_is_zero(const Rat& x) { return sgn(x) == 0; }
inline bool rat_is_integer(const Rat& x) { return x.get_den() == 1; }

inline long rat_to_long(const Rat& x) {
    KSYS_INVARIANT(rat_is_integer(x) && x.get_num().fits_slong_p(), "rational is not a small integer");
    return x.get_num().get_si();
}

}  // namespace ksys
