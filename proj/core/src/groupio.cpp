#include "ksys/groupio.hpp"

#include <fstream>
#include <json.hpp>
#include <sstream>

namespace ksys {

using nlohmann::json;

namespace {

Rat rat_from_json(const json& j) {
    if (j.is_number_integer()) return Rat(static_cast<long>(j.get<long long>()));
    if (j.is_string()) return rat_parse(j.get<std::string>());
    fail(Errc::schema, "expected a rational as integer or \"p/q\" string");
}

Cyclo cyclo_from_json(const json& j, int group_conductor) {
    if (j.is_number_integer() || j.is_string()) return Cyclo(rat_from_json(j));
    if (j.is_object()) {
        KSYS_REQUIRE(j.contains("conductor") && j.contains("coeffs"), Errc::schema,
                     "cyclotomic object needs 'conductor' and 'coeffs'");
        int n = j.at("conductor").get<int>();
        KSYS_REQUIRE(n >= 1, Errc::schema, "cyclotomic conductor must be >= 1");
        std::vector<Rat> coeffs;
        for (const auto& c : j.at("coeffs")) {
            if (c.is_array()) {
                KSYS_REQUIRE(c.size() == 2, Errc::schema, "coefficient pair must have two entries");
                Rat num = rat_from_json(c[0]);
                Rat den = rat_from_json(c[1]);
                KSYS_REQUIRE(sgn(den) != 0, Errc::schema, "coefficient with zero denominator");
                coeffs.push_back(num / den);
            } else {
                coeffs.push_back(rat_from_json(c));
            }
        }
        Cyclo value = Cyclo::reduce(coeffs, n);
        KSYS_REQUIRE(group_conductor % n == 0, Errc::schema,
                     "value conductor " + std::to_string(n) + " does not divide the group conductor");
        return value.embedded(group_conductor);
    }
    fail(Errc::schema, "malformed cyclotomic value");
}

json parse(const std::string& text) {
    json j = json::parse(text, nullptr, false);
    KSYS_REQUIRE(!j.is_discarded(), Errc::schema, "malformed JSON document");
    return j;
}

void require_format_1(const json& j) {
    KSYS_REQUIRE(j.is_object() && j.contains("format") && j.at("format").get<int>() == 1,
                 Errc::schema, "document must declare \"format\": 1");
}

}  // namespace

std::string read_text_file(const std::string& path) {
    std::ifstream in(path);
    KSYS_REQUIRE(in.good(), Errc::io, "cannot open file: " + path);
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

GroupData load_group_json(const std::string& json_text, long bound) {
    json j = parse(json_text);
    require_format_1(j);
    for (const char* key : {"name", "conductor", "dim_h", "generators", "characters",
                            "class_reps", "class_sizes"})
        KSYS_REQUIRE(j.contains(key), Errc::schema, std::string("group document missing '") + key + "'");

    int conductor = j.at("conductor").get<int>();
    int dim_h = j.at("dim_h").get<int>();
    KSYS_REQUIRE(conductor >= 1, Errc::schema, "conductor must be >= 1");
    KSYS_REQUIRE(dim_h >= 1, Errc::schema, "dim_h must be >= 1");

    std::vector<Matrix<Cyclo>> gens;
    for (const auto& gj : j.at("generators")) {
        KSYS_REQUIRE(gj.is_array() && static_cast<int>(gj.size()) == dim_h, Errc::schema,
                     "generator must be a dim_h x dim_h matrix");
        Matrix<Cyclo> m(dim_h, dim_h);
        for (int r = 0; r < dim_h; ++r) {
            KSYS_REQUIRE(gj[r].is_array() && static_cast<int>(gj[r].size()) == dim_h, Errc::schema,
                         "generator row has wrong length");
            for (int c = 0; c < dim_h; ++c) m.at(r, c) = cyclo_from_json(gj[r][c], conductor);
        }
        gens.push_back(std::move(m));
    }

    GroupData data;
    data.group = generate_group(gens, dim_h, conductor, bound);
    data.group.name = j.at("name").get<std::string>();
    ReflectionGroup& G = data.group;

    // Match declared classes to the computed ones and adopt the file order.
    const auto& reps_j = j.at("class_reps");
    const auto& sizes_j = j.at("class_sizes");
    KSYS_REQUIRE(static_cast<int>(reps_j.size()) == G.num_classes(), Errc::schema,
                 "class_reps count " + std::to_string(reps_j.size()) + " != computed class count " +
                     std::to_string(G.num_classes()));
    KSYS_REQUIRE(sizes_j.size() == reps_j.size(), Errc::schema,
                 "class_sizes count differs from class_reps count");
    std::vector<int> file_to_computed;
    std::vector<bool> seen(G.num_classes(), false);
    for (size_t f = 0; f < reps_j.size(); ++f) {
        std::vector<int> word = reps_j[f].get<std::vector<int>>();
        int el = G.element_of_word(word);
        int cls = G.class_of[el];
        KSYS_REQUIRE(!seen[cls], Errc::schema,
                     "two class representatives are conjugate (file classes " + std::to_string(f) + ")");
        seen[cls] = true;
        long declared = sizes_j[f].get<long>();
        KSYS_REQUIRE(declared == G.class_sizes[cls], Errc::schema,
                     "class size mismatch at file class " + std::to_string(f) + ": declared " +
                         std::to_string(declared) + ", computed " + std::to_string(G.class_sizes[cls]));
        file_to_computed.push_back(cls);
        // The representative becomes the file's chosen element.
        G.class_rep[cls] = el;
    }
    G.reorder_classes(file_to_computed);

    CharacterTable& T = data.table;
    for (const auto& cj : j.at("characters")) {
        KSYS_REQUIRE(cj.contains("name") && cj.contains("values"), Errc::schema,
                     "character entry needs 'name' and 'values'");
        KSYS_REQUIRE(static_cast<int>(cj.at("values").size()) == G.num_classes(), Errc::schema,
                     "character '" + cj.at("name").get<std::string>() + "' has wrong value count");
        std::vector<Cyclo> row;
        for (const auto& vj : cj.at("values")) row.push_back(cyclo_from_json(vj, conductor));
        T.names.push_back(cj.at("name").get<std::string>());
        T.rows.push_back(std::move(row));
    }
    int id = G.identity_class();
    for (int i = 0; i < T.num_chars(); ++i) {
        const Cyclo& d = T.rows[i][id];
        KSYS_REQUIRE(d.is_rational() && rat_is_integer(d.rational_value()), Errc::validation,
                     "dim of '" + T.names[i] + "' is not an integer");
        T.dims.push_back(rat_to_long(d.rational_value()));
    }

    TableCheck chk = validate_character_table(G, T);
    if (!chk.ok) fail(Errc::validation, "character table validation failed: " + chk.failures.front());
    return data;
}

GroupData load_group_file(const std::string& path, long bound) {
    return load_group_json(read_text_file(path), bound);
}

std::vector<std::vector<std::string>> load_preorder_json(const std::string& json_text) {
    json j = parse(json_text);
    require_format_1(j);
    KSYS_REQUIRE(j.contains("phyla") && j.at("phyla").is_array(), Errc::schema,
                 "preorder document needs 'phyla'");
    std::vector<std::vector<std::string>> phyla;
    for (const auto& ph : j.at("phyla")) {
        KSYS_REQUIRE(ph.is_array(), Errc::schema, "each phylum must be a list of labels");
        phyla.push_back(ph.get<std::vector<std::string>>());
    }
    return phyla;
}

std::vector<std::vector<std::string>> load_preorder_file(const std::string& path) {
    return load_preorder_json(read_text_file(path));
}

}  // namespace ksys
