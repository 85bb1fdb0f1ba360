#pragma once

#include <string>
#include <vector>

#include "ksys/chartable.hpp"
#include "ksys/group.hpp"

namespace ksys {

struct GroupData {
    ReflectionGroup group;
    CharacterTable table;
};

inline constexpr long kDefaultGroupBound = 2000;

// Group data document ("format": 1): {"name", "conductor", "dim_h",
// "generators": [[Cyclo,...],...], "characters": [{"name", "values"}],
// "class_reps": [word over generator indices], "class_sizes": [ints]}.
// Cyclo values are integers, "p/q" strings, or
// {"conductor": N, "coeffs": [["p","q"],...]}.
//
// The group is regenerated by closure and both the class data and the
// character table are validated; failures name the violated identity.
GroupData load_group_json(const std::string& json_text, long bound = kDefaultGroupBound);
GroupData load_group_file(const std::string& path, long bound = kDefaultGroupBound);

// Preorder document ("format": 1): {"phyla": [["name",...],...]} ascending.
std::vector<std::vector<std::string>> load_preorder_json(const std::string& json_text);
std::vector<std::vector<std::string>> load_preorder_file(const std::string& path);

std::string read_text_file(const std::string& path);

}  // namespace ksys
