#pragma once

#include <string>
#include <vector>

namespace ksys {

// Integer partitions as weakly decreasing positive parts.
using Partition = std::vector<int>;

// All partitions of n in descending lex order: (n) first, (1,...,1) last.
std::vector<Partition> all_partitions(int n);

int partition_sum(const Partition& p);
bool dominates(const Partition& a, const Partition& b);  // a >= b in dominance
Partition conjugate_partition(const Partition& p);
long n_stat(const Partition& p);  // sum (i-1) * p_i

std::string partition_name(const Partition& p);  // "2,1"
Partition parse_partition(const std::string& s);

}  // namespace ksys
