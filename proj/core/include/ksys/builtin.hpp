#pragma once

#include <string>
#include <vector>

#include "ksys/groupio.hpp"
#include "ksys/preorder.hpp"

namespace ksys {

// Built-in groups: trivial, S2..S6, B2, G2, C3.
std::vector<std::string> builtin_group_names();
bool is_builtin_group(const std::string& name);
GroupData builtin_group(const std::string& name);

// Built-in preorders: "dominance" (S_n, n <= 5), "springer" (the shipped
// standard preorder of every built-in group; equals dominance for S_n) and
// "one-phylum".
Preorder builtin_preorder(const std::string& name, const GroupData& gd);
bool is_builtin_preorder(const std::string& name);

// Character label lookup with S_n conveniences: partition labels are
// canonical, "triv" = (n), "sgn" = (1^n), "std" = (n-1,1).
int resolve_character_label(const GroupData& gd, const std::string& label);

}  // namespace ksys
