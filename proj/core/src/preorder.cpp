#include "ksys/preorder.hpp"

#include <algorithm>

namespace ksys {

std::vector<int> Preorder::sorted_indices() const {
    std::vector<int> order;
    for (const auto& ph : phyla) {
        std::vector<int> block = ph;
        std::sort(block.begin(), block.end());
        order.insert(order.end(), block.begin(), block.end());
    }
    return order;
}

Preorder preorder_from_indices(int num_chars, std::vector<std::vector<int>> phyla) {
    Preorder P;
    P.phyla = std::move(phyla);
    P.phylum_of.assign(num_chars, -1);
    for (size_t f = 0; f < P.phyla.size(); ++f) {
        KSYS_REQUIRE(!P.phyla[f].empty(), Errc::invalid_partition, "empty phylum");
        for (int chi : P.phyla[f]) {
            KSYS_REQUIRE(chi >= 0 && chi < num_chars, Errc::invalid_partition,
                         "character index out of range in phylum");
            KSYS_REQUIRE(P.phylum_of[chi] < 0, Errc::invalid_partition,
                         "character appears in two phyla");
            P.phylum_of[chi] = static_cast<int>(f);
        }
    }
    for (int chi = 0; chi < num_chars; ++chi)
        KSYS_REQUIRE(P.phylum_of[chi] >= 0, Errc::invalid_partition,
                     "character missing from every phylum");
    return P;
}

Preorder load_preorder(const CharacterTable& T, const std::vector<std::vector<std::string>>& phyla) {
    std::vector<std::vector<int>> idx;
    for (const auto& ph : phyla) {
        std::vector<int> block;
        for (const auto& name : ph) {
            int i = T.find(name);
            KSYS_REQUIRE(i >= 0, Errc::invalid_partition, "unknown character label '" + name + "'");
            block.push_back(i);
        }
        idx.push_back(std::move(block));
    }
    return preorder_from_indices(T.num_chars(), std::move(idx));
}

MalleCheck validate_malle(const Preorder& P, const CharacterTable& T) {
    MalleCheck chk;
    for (int chi = 0; chi < T.num_chars(); ++chi) {
        int bar = conjugate_character(T, chi);
        if (!P.same_phylum(chi, bar)) {
            chk.ok = false;
            chk.offending = T.names[chi];
            return chk;
        }
    }
    return chk;
}

Preorder dominance_preorder_sn(const CharacterTable& T, int n) {
    KSYS_REQUIRE(n >= 1, Errc::unsupported_rank, "rank must be positive");
    KSYS_REQUIRE(n <= 5, Errc::unsupported_rank,
                 "dominance is not a total order for n >= 6; supply a linear extension by file");
    std::vector<Partition> parts = all_partitions(n);
    std::sort(parts.begin(), parts.end(),
              [](const Partition& a, const Partition& b) { return a != b && dominates(b, a); });
    // A plain sort is enough only for total orders; verify totality defensively.
    for (size_t i = 0; i + 1 < parts.size(); ++i)
        KSYS_INVARIANT(dominates(parts[i + 1], parts[i]), "dominance not total at this rank");
    std::vector<std::vector<int>> phyla;
    for (const auto& p : parts) phyla.push_back({T.find_or_fail(partition_name(p))});
    return preorder_from_indices(T.num_chars(), std::move(phyla));
}

Preorder one_phylum_preorder(const CharacterTable& T) {
    std::vector<int> all(T.num_chars());
    for (int i = 0; i < T.num_chars(); ++i) all[i] = i;
    return preorder_from_indices(T.num_chars(), {all});
}

}  // namespace ksys
