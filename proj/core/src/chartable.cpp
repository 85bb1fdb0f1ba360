#include "ksys/chartable.hpp"

#include <sstream>

namespace ksys {

int CharacterTable::find(const std::string& name) const {
    for (size_t i = 0; i < names.size(); ++i)
        if (names[i] == name) return static_cast<int>(i);
    return -1;
}

int CharacterTable::find_or_fail(const std::string& name) const {
    int i = find(name);
    KSYS_REQUIRE(i >= 0, Errc::unresolved_source, "unknown character label '" + name + "'");
    return i;
}

int CharacterTable::trivial_index() const {
    for (int i = 0; i < num_chars(); ++i) {
        bool all_one = true;
        for (const auto& v : rows[i])
            if (!(v == Cyclo(1))) {
                all_one = false;
                break;
            }
        if (all_one) return i;
    }
    fail(Errc::validation, "table has no trivial character row");
}

void TableCheck::require(bool cond, const std::string& identity) {
    if (!cond) {
        ok = false;
        failures.push_back(identity);
    }
}

Cyclo char_inner(const ReflectionGroup& G, const CharacterTable& T, const std::vector<Cyclo>& f,
                 int chi) {
    Cyclo acc(0);
    for (int c = 0; c < G.num_classes(); ++c)
        acc += Cyclo(Rat(G.class_sizes[c])) * f[c] * T.rows[chi][c].conj();
    return acc * Cyclo(rat(1, G.order()));
}

std::vector<Cyclo> reflection_character(const ReflectionGroup& G) {
    std::vector<Cyclo> f(G.num_classes(), Cyclo(0));
    for (int c = 0; c < G.num_classes(); ++c) f[c] = G.elements[G.class_rep[c]].trace();
    return f;
}

TableCheck validate_character_table(const ReflectionGroup& G, const CharacterTable& T) {
    TableCheck chk;
    int k = G.num_classes();
    chk.require(T.num_chars() == k, "row count equals class count");
    if (!chk.ok) return chk;
    for (int i = 0; i < k; ++i)
        chk.require(static_cast<int>(T.rows[i].size()) == k,
                    "character '" + T.names[i] + "' has one value per class");
    if (!chk.ok) return chk;

    int id = G.identity_class();
    long dimsq = 0;
    for (int i = 0; i < k; ++i) {
        const Cyclo& d = T.rows[i][id];
        bool intdim = d.is_rational() && rat_is_integer(d.rational_value()) &&
                      sgn(d.rational_value()) > 0;
        chk.require(intdim, "dim of '" + T.names[i] + "' is a positive integer");
        if (intdim) dimsq += rat_to_long(d.rational_value()) * rat_to_long(d.rational_value());
    }
    chk.require(dimsq == G.order(), "sum of squared dims equals |W|");

    for (int i = 0; i < k; ++i)
        for (int j = 0; j < k; ++j) {
            Cyclo acc = char_inner(G, T, T.rows[i], j);
            bool ok = (i == j) ? acc == Cyclo(1) : acc.is_zero();
            if (!ok)
                chk.require(false, "row orthogonality <" + T.names[i] + ", " + T.names[j] + "> = " +
                                       std::string(i == j ? "1" : "0"));
        }
    for (int c = 0; c < k; ++c)
        for (int d = 0; d < k; ++d) {
            Cyclo acc(0);
            for (int i = 0; i < k; ++i) acc += T.rows[i][c] * T.rows[i][d].conj();
            Cyclo expect = (c == d) ? Cyclo(rat(G.order(), G.class_sizes[c])) : Cyclo(0);
            if (!(acc == expect))
                chk.require(false, "column orthogonality (class " + std::to_string(c) + ", class " +
                                       std::to_string(d) + ")");
        }

    std::vector<Cyclo> refl = reflection_character(G);
    for (int i = 0; i < k; ++i) {
        Cyclo m = char_inner(G, T, refl, i);
        bool ok = m.is_rational() && rat_is_integer(m.rational_value()) && sgn(m.rational_value()) >= 0;
        if (!ok)
            chk.require(false,
                        "reflection character multiplicity of '" + T.names[i] + "' is a nonnegative integer");
    }
    return chk;
}

int conjugate_character(const CharacterTable& T, int chi) {
    int k = T.num_chars();
    for (int j = 0; j < k; ++j) {
        bool match = true;
        for (size_t c = 0; c < T.rows[chi].size() && match; ++c)
            match = T.rows[j][c] == T.rows[chi][c].conj();
        if (match) return j;
    }
    fail(Errc::validation, "table not closed under complex conjugation at '" + T.names[chi] + "'");
}

}  // namespace ksys
