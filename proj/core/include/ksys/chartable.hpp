#pragma once

#include <string>
#include <vector>

#include "ksys/group.hpp"
#include "ksys/partition.hpp"

namespace ksys {

// Exact character table: one row per irreducible character, columns indexed
// by the conjugacy classes of the owning group, values in Q(zeta_N).
struct CharacterTable {
    std::vector<std::string> names;
    std::vector<std::vector<Cyclo>> rows;  // [character][class]
    std::vector<long> dims;                // chi(1)

    int num_chars() const { return static_cast<int>(rows.size()); }
    int find(const std::string& name) const;  // -1 if absent
    int find_or_fail(const std::string& name) const;
    int trivial_index() const;  // the all-ones row
};

struct TableCheck {
    bool ok = true;
    std::vector<std::string> failures;  // each names the violated identity
    void require(bool cond, const std::string& identity);
};

// Row/column orthogonality, sum of squared dimensions, and nonnegative
// integral decomposition of the reflection character.
TableCheck validate_character_table(const ReflectionGroup& G, const CharacterTable& T);

// Index of the complex-conjugate character; errors if the table is not closed
// under conjugation.
int conjugate_character(const CharacterTable& T, int chi);

// <f, chi> = (1/|W|) sum_c |C| f(c) conj(chi(c)) for a class function f.
Cyclo char_inner(const ReflectionGroup& G, const CharacterTable& T, const std::vector<Cyclo>& f,
                 int chi);

// Values of the reflection character w -> tr(w|_h) per class.
std::vector<Cyclo> reflection_character(const ReflectionGroup& G);

// Murnaghan-Nakayama character value chi_lambda on cycle type mu.
long mn_character_value(const Partition& lambda, const Partition& mu);

// Character table of S_n, rows and columns labeled by partitions of n in
// descending lex order; rows are named by partition_name. 1 <= n <= 8.
CharacterTable sn_character_table(int n);

}  // namespace ksys
