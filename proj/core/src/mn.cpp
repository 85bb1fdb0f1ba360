#include <map>

#include "ksys/chartable.hpp"

namespace ksys {

namespace {

// Beta-set of lambda padded to m rows: {lambda_i + (m - i)}, strictly
// decreasing. Removing a rim hook of size t means moving one beta number down
// by t into a free slot; the height of the hook is the number of beta numbers
// jumped over, which fixes the sign.
long mn_recurse(const Partition& lambda, const Partition& mu, size_t mu_pos,
                std::map<std::pair<Partition, size_t>, long>& memo) {
    if (mu_pos == mu.size()) return lambda.empty() ? 1 : 0;
    auto key = std::make_pair(lambda, mu_pos);
    auto it = memo.find(key);
    if (it != memo.end()) return it->second;

    int t = mu[mu_pos];
    int m = static_cast<int>(lambda.size());
    std::vector<int> beta(m);
    for (int i = 0; i < m; ++i) beta[i] = lambda[i] + (m - 1 - i);  // decreasing

    long total = 0;
    for (int i = 0; i < m; ++i) {
        int target = beta[i] - t;
        if (target < 0) continue;
        bool occupied = false;
        int jumped = 0;
        for (int j = 0; j < m; ++j) {
            if (j == i) continue;
            if (beta[j] == target) occupied = true;
            if (beta[j] < beta[i] && beta[j] > target) ++jumped;
        }
        if (occupied) continue;
        std::vector<int> nb = beta;
        nb[i] = target;
        std::sort(nb.rbegin(), nb.rend());
        Partition next;
        for (int j = 0; j < m; ++j) {
            int part = nb[j] - (m - 1 - j);
            if (part > 0) next.push_back(part);
        }
        long sub = mn_recurse(next, mu, mu_pos + 1, memo);
        total += (jumped % 2 == 0) ? sub : -sub;
    }
    memo.emplace(key, total);
    return total;
}

}  // namespace

long mn_character_value(const Partition& lambda, const Partition& mu) {
    KSYS_REQUIRE(partition_sum(lambda) == partition_sum(mu), Errc::invalid_input,
                 "character value needs |lambda| = |mu|");
    std::map<std::pair<Partition, size_t>, long> memo;
    return mn_recurse(lambda, mu, 0, memo);
}

CharacterTable sn_character_table(int n) {
    KSYS_REQUIRE(n >= 1 && n <= 8, Errc::unsupported_rank,
                 "sn_character_table supports 1 <= n <= 8");
    std::vector<Partition> parts = all_partitions(n);
    CharacterTable T;
    for (const auto& lambda : parts) {
        std::vector<Cyclo> row;
        row.reserve(parts.size());
        for (const auto& mu : parts) row.emplace_back(Rat(mn_character_value(lambda, mu)));
        T.names.push_back(partition_name(lambda));
        T.dims.push_back(mn_character_value(lambda, Partition(n, 1)));
        T.rows.push_back(std::move(row));
    }
    return T;
}

}  // namespace ksys
