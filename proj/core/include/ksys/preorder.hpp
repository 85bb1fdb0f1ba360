#pragma once

#include <string>
#include <vector>

#include "ksys/chartable.hpp"

namespace ksys {

// Total preorder on the irreducible characters: an ordered partition of the
// row indices into phyla, listed from minimal to maximal. chi <= psi iff
// phylum_of[chi] <= phylum_of[psi].
struct Preorder {
    std::vector<std::vector<int>> phyla;  // ascending
    std::vector<int> phylum_of;

    int num_phyla() const { return static_cast<int>(phyla.size()); }
    bool strictly_below(int chi, int psi) const { return phylum_of[chi] < phylum_of[psi]; }
    bool same_phylum(int chi, int psi) const { return phylum_of[chi] == phylum_of[psi]; }

    // Character indices sorted phylum-ascending, table order within a phylum.
    std::vector<int> sorted_indices() const;
};

// Build from phylum label lists (ascending); every character must appear in
// exactly one phylum.
Preorder load_preorder(const CharacterTable& T, const std::vector<std::vector<std::string>>& phyla);

Preorder preorder_from_indices(int num_chars, std::vector<std::vector<int>> phyla);

struct MalleCheck {
    bool ok = true;
    std::string offending;  // name of a character whose conjugate leaves its phylum
};

// Malle condition: complex conjugation maps each phylum into itself.
MalleCheck validate_malle(const Preorder& P, const CharacterTable& T);

// Dominance order on partitions of n as singleton phyla, ascending from
// (1^n) to (n). Dominance is total only for n <= 5; larger ranks must supply
// an explicit linear extension by file.
Preorder dominance_preorder_sn(const CharacterTable& T, int n);

Preorder one_phylum_preorder(const CharacterTable& T);

}  // namespace ksys
