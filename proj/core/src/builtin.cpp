#include "ksys/builtin.hpp"

#include <algorithm>

namespace ksys {

namespace {

const char* kB2Json = R"({
  "format": 1,
  "name": "B2",
  "conductor": 1,
  "dim_h": 2,
  "generators": [
    [[0, 1], [1, 0]],
    [[1, 0], [0, -1]]
  ],
  "class_reps": [[], [0, 1, 0, 1], [0, 1], [1], [0]],
  "class_sizes": [1, 1, 2, 2, 2],
  "characters": [
    {"name": "triv",     "values": [1, 1, 1, 1, 1]},
    {"name": "sgn",      "values": [1, 1, 1, -1, -1]},
    {"name": "eps_axis", "values": [1, 1, -1, 1, -1]},
    {"name": "eps_diag", "values": [1, 1, -1, -1, 1]},
    {"name": "std",      "values": [2, -2, 0, 0, 0]}
  ]
})";

const char* kG2Json = R"({
  "format": 1,
  "name": "G2",
  "conductor": 1,
  "dim_h": 2,
  "generators": [
    [[-1, 3], [0, 1]],
    [[1, 0], [1, -1]]
  ],
  "class_reps": [[], [0, 1, 0, 1, 0, 1], [0, 1], [0, 1, 0, 1], [0], [1]],
  "class_sizes": [1, 1, 2, 2, 3, 3],
  "characters": [
    {"name": "triv",  "values": [1, 1, 1, 1, 1, 1]},
    {"name": "sgn",   "values": [1, 1, 1, 1, -1, -1]},
    {"name": "eps_a", "values": [1, -1, -1, 1, 1, -1]},
    {"name": "eps_b", "values": [1, -1, -1, 1, -1, 1]},
    {"name": "phi1",  "values": [2, -2, 1, -1, 0, 0]},
    {"name": "phi2",  "values": [2, 2, -1, -1, 0, 0]}
  ]
})";

const char* kC3Json = R"({
  "format": 1,
  "name": "C3",
  "conductor": 3,
  "dim_h": 1,
  "generators": [
    [[{"conductor": 3, "coeffs": [["0", "1"], ["1", "1"]]}]]
  ],
  "class_reps": [[], [0], [0, 0]],
  "class_sizes": [1, 1, 1],
  "characters": [
    {"name": "chi0", "values": [1, 1, 1]},
    {"name": "chi1", "values": [1,
      {"conductor": 3, "coeffs": [["0", "1"], ["1", "1"]]},
      {"conductor": 3, "coeffs": [["-1", "1"], ["-1", "1"]]}]},
    {"name": "chi2", "values": [1,
      {"conductor": 3, "coeffs": [["-1", "1"], ["-1", "1"]]},
      {"conductor": 3, "coeffs": [["0", "1"], ["1", "1"]]}]}
  ]
})";

// Shipped standard preorders. For B2 and G2 these place each character in the
// phylum of its unipotent class under the Springer correspondence, with the
// two pure-reflection-sign characters assigned as in the classical tables;
// the assignment is input data, validated by the pipeline's checks.
const std::vector<std::vector<std::string>>& b2_springer_phyla() {
    static const std::vector<std::vector<std::string>> phyla = {
        {"sgn"}, {"eps_diag"}, {"std", "eps_axis"}, {"triv"}};
    return phyla;
}

const std::vector<std::vector<std::string>>& g2_springer_phyla() {
    static const std::vector<std::vector<std::string>> phyla = {
        {"sgn"}, {"eps_a"}, {"phi2"}, {"phi1", "eps_b"}, {"triv"}};
    return phyla;
}

const std::vector<std::vector<std::string>>& c3_standard_phyla() {
    static const std::vector<std::vector<std::string>> phyla = {{"chi1", "chi2"}, {"chi0"}};
    return phyla;
}

GroupData trivial_group() {
    GroupData gd;
    gd.group = generate_group({}, 1, 1, 10);
    gd.group.name = "trivial";
    gd.table.names = {"triv"};
    gd.table.rows = {{Cyclo(1)}};
    gd.table.dims = {1};
    return gd;
}

Matrix<Cyclo> an_reflection(int n, int i) {
    // Simple reflection s_i of S_n on the standard (n-1)-dimensional
    // representation in the simple-root basis.
    int r = n - 1;
    Matrix<Cyclo> m = Matrix<Cyclo>::identity(r);
    m.at(i, i) = Cyclo(-1);
    if (i > 0) m.at(i, i - 1) = Cyclo(1);
    if (i + 1 < r) m.at(i, i + 1) = Cyclo(1);
    return m;
}

GroupData sn_group(int n) {
    KSYS_REQUIRE(n >= 2 && n <= 6, Errc::unresolved_source,
                 "built-in S_n groups support 2 <= n <= 6");
    std::vector<Matrix<Cyclo>> gens;
    for (int i = 0; i < n - 1; ++i) gens.push_back(an_reflection(n, i));
    GroupData gd;
    long bound = 1;
    for (int i = 2; i <= n; ++i) bound *= i;
    gd.group = generate_group(gens, n - 1, 1, bound + 1);
    gd.group.name = "S" + std::to_string(n);
    KSYS_INVARIANT(gd.group.order() == bound, "S_n closure has wrong order");
    gd.table = sn_character_table(n);

    // Order classes by cycle type to match the table's column convention.
    std::vector<Partition> parts = all_partitions(n);
    std::vector<int> new_to_old(parts.size(), -1);
    for (int c = 0; c < gd.group.num_classes(); ++c) {
        std::vector<int> type =
            cycle_type_from_charpoly(char_poly_h(gd.group, gd.group.class_rep[c]), n);
        std::sort(type.rbegin(), type.rend());
        auto it = std::find(parts.begin(), parts.end(), Partition(type.begin(), type.end()));
        KSYS_INVARIANT(it != parts.end(), "unrecognized cycle type");
        int pos = static_cast<int>(it - parts.begin());
        KSYS_INVARIANT(new_to_old[pos] < 0, "two classes share a cycle type");
        new_to_old[pos] = c;
    }
    gd.group.reorder_classes(new_to_old);
    return gd;
}

std::string lower(std::string s) {
    std::transform(s.begin(), s.end(), s.begin(), [](unsigned char c) { return std::tolower(c); });
    return s;
}

}  // namespace

std::vector<std::string> builtin_group_names() {
    return {"trivial", "S2", "S3", "S4", "S5", "S6", "B2", "G2", "C3"};
}

bool is_builtin_group(const std::string& name) {
    auto names = builtin_group_names();
    return std::find(names.begin(), names.end(), name) != names.end();
}

GroupData builtin_group(const std::string& name) {
    if (name == "trivial") return trivial_group();
    if (name.size() == 2 && name[0] == 'S' && name[1] >= '2' && name[1] <= '6')
        return sn_group(name[1] - '0');
    if (name == "B2") return load_group_json(kB2Json);
    if (name == "G2") return load_group_json(kG2Json);
    if (name == "C3") return load_group_json(kC3Json);
    fail(Errc::unresolved_source, "unknown built-in group '" + name + "'");
}

bool is_builtin_preorder(const std::string& name) {
    std::string n = lower(name);
    return n == "dominance" || n == "springer" || n == "one-phylum";
}

Preorder builtin_preorder(const std::string& name, const GroupData& gd) {
    std::string n = lower(name);
    const std::string& g = gd.group.name;
    if (n == "one-phylum") return one_phylum_preorder(gd.table);
    bool is_sn = g.size() == 2 && g[0] == 'S' && std::isdigit(static_cast<unsigned char>(g[1]));
    if (n == "dominance" || (n == "springer" && (is_sn || g == "trivial"))) {
        if (g == "trivial") return one_phylum_preorder(gd.table);
        KSYS_REQUIRE(is_sn, Errc::unresolved_source,
                     "preorder 'dominance' applies to symmetric groups only");
        return dominance_preorder_sn(gd.table, g[1] - '0');
    }
    if (n == "springer") {
        if (g == "B2") return load_preorder(gd.table, b2_springer_phyla());
        if (g == "G2") return load_preorder(gd.table, g2_springer_phyla());
        if (g == "C3") return load_preorder(gd.table, c3_standard_phyla());
        fail(Errc::unresolved_source, "no shipped springer preorder for group '" + g + "'");
    }
    fail(Errc::unresolved_source, "unknown built-in preorder '" + name + "'");
}

int resolve_character_label(const GroupData& gd, const std::string& label) {
    int i = gd.table.find(label);
    if (i >= 0) return i;
    const std::string& g = gd.group.name;
    bool is_sn = g.size() == 2 && g[0] == 'S' && std::isdigit(static_cast<unsigned char>(g[1]));
    if (g == "trivial" && label == "triv") return 0;
    if (is_sn) {
        int n = g[1] - '0';
        std::string name;
        if (label == "triv") name = partition_name({n});
        if (label == "sgn") name = partition_name(Partition(n, 1));
        if (label == "std" && n >= 2) name = partition_name({n - 1, 1});
        if (!name.empty()) return gd.table.find_or_fail(name);
    }
    fail(Errc::unresolved_source, "unknown character label '" + label + "'");
}

}  // namespace ksys
