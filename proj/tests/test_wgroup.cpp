#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "ksys/builtin.hpp"
#include "ksys/groupio.hpp"
#include "ksys/preorder.hpp"

using namespace ksys;

TEST_CASE("generate_group small cases") {
    Matrix<Cyclo> neg(1, 1);
    neg.at(0, 0) = Cyclo(-1);
    ReflectionGroup s2 = generate_group({neg}, 1, 1, 10);
    CHECK(s2.order() == 2);
    CHECK(s2.num_classes() == 2);

    ReflectionGroup triv = generate_group({}, 1, 1, 10);
    CHECK(triv.order() == 1);

    GroupData s3 = builtin_group("S3");
    CHECK(s3.group.order() == 6);
    CHECK(s3.group.num_classes() == 3);
    std::vector<long> sizes(s3.group.class_sizes);
    std::sort(sizes.begin(), sizes.end());
    CHECK(sizes == std::vector<long>{1, 2, 3});

    CHECK_THROWS_WITH_AS(generate_group({s3.group.generators[0], s3.group.generators[1]}, 2, 1, 4),
                         doctest::Contains("exceeds bound"), Error);
}

TEST_CASE("generated elements are pairwise distinct and closed") {
    GroupData s4 = builtin_group("S4");
    const auto& els = s4.group.elements;
    CHECK(els.size() == 24);
    for (size_t i = 0; i < els.size(); ++i)
        for (size_t j = i + 1; j < els.size(); ++j) CHECK(els[i] != els[j]);
    ElementIndex idx(s4.group);
    for (size_t i = 0; i < els.size(); ++i) {
        CHECK(idx.find(els[i] * els[(i * 7 + 3) % els.size()]) >= 0);
        CHECK(s4.group.elements[s4.group.inverse[i]] * els[i] == Matrix<Cyclo>::identity(3));
    }
}

TEST_CASE("murnaghan-nakayama values") {
    CHECK(mn_character_value({1, 1}, {2}) == -1);  // sign character of S2
    CHECK(mn_character_value({2, 1}, {1, 1, 1}) == 2);
    CHECK(mn_character_value({2, 1}, {3}) == -1);
    CHECK(mn_character_value({2, 1}, {2, 1}) == 0);
    // S4 table rows frozen from the standard tables
    CHECK(mn_character_value({3, 1}, {2, 1, 1}) == 1);
    CHECK(mn_character_value({3, 1}, {2, 2}) == -1);
    CHECK(mn_character_value({3, 1}, {4}) == -1);
    CHECK(mn_character_value({2, 2}, {2, 2}) == 2);
    CHECK(mn_character_value({2, 2}, {3, 1}) == -1);
    CHECK(mn_character_value({2, 1, 1}, {4}) == 1);
    CHECK(mn_character_value({2, 1, 1}, {2, 1, 1}) == -1);
    CHECK(mn_character_value({1, 1, 1, 1}, {2, 1, 1}) == -1);
}

TEST_CASE("sn tables validate and have expected structure") {
    for (int n = 2; n <= 5; ++n) {
        GroupData gd = builtin_group("S" + std::to_string(n));
        TableCheck chk = validate_character_table(gd.group, gd.table);
        if (!chk.ok) MESSAGE(chk.failures.front());
        CHECK(chk.ok);
        // all values are rational integers
        for (const auto& row : gd.table.rows)
            for (const auto& v : row) {
                CHECK(v.is_rational());
                CHECK(rat_is_integer(v.rational_value()));
            }
        // trivial and sign rows
        int triv = resolve_character_label(gd, "triv");
        int sgn = resolve_character_label(gd, "sgn");
        for (int c = 0; c < gd.group.num_classes(); ++c) {
            CHECK(gd.table.rows[triv][c] == Cyclo(1));
            CHECK(gd.table.rows[sgn][c] * gd.table.rows[sgn][c] == Cyclo(1));
        }
        // conjugation is the identity on real tables, and an involution
        for (int i = 0; i < gd.table.num_chars(); ++i) {
            CHECK(conjugate_character(gd.table, i) == i);
        }
    }
}

TEST_CASE("validate_character_table error paths name the identity") {
    GroupData s3 = builtin_group("S3");
    // swapped rows still pass
    CharacterTable swapped = s3.table;
    std::swap(swapped.rows[0], swapped.rows[2]);
    std::swap(swapped.names[0], swapped.names[2]);
    std::swap(swapped.dims[0], swapped.dims[2]);
    CHECK(validate_character_table(s3.group, swapped).ok);
    // one sign flip fails with a named identity
    CharacterTable bad = s3.table;
    bad.rows[0][1] = -bad.rows[0][1];  // trivial character on the transposition class
    TableCheck chk = validate_character_table(s3.group, bad);
    CHECK(!chk.ok);
    REQUIRE(!chk.failures.empty());
    CHECK(chk.failures.front().find("orthogonality") != std::string::npos);
}

TEST_CASE("char_poly_h") {
    GroupData s3 = builtin_group("S3");
    // identity: (1-q)^2
    Poly<Cyclo> id_poly = char_poly_h(s3.group, 0);
    Poly<Cyclo> one_minus_q = Poly<Cyclo>(1) - Poly<Cyclo>::monomial(1);
    CHECK(id_poly == one_minus_q * one_minus_q);
    // a transposition has eigenvalues +1, -1
    int transposition = -1;
    for (int c = 0; c < s3.group.num_classes(); ++c)
        if (s3.group.class_sizes[c] == 3) transposition = s3.group.class_rep[c];
    Poly<Cyclo> t_poly = char_poly_h(s3.group, transposition);
    CHECK(t_poly == (Poly<Cyclo>(1) - Poly<Cyclo>::monomial(1)) * (Poly<Cyclo>(1) + Poly<Cyclo>::monomial(1)));

    GroupData c3 = builtin_group("C3");
    Poly<Cyclo> g_poly = char_poly_h(c3.group, c3.group.class_rep[1]);
    CHECK(g_poly == Poly<Cyclo>(1) - Poly<Cyclo>::monomial(1, Cyclo::zeta(3)));
}

TEST_CASE("cycle types from characteristic polynomials") {
    GroupData s4 = builtin_group("S4");
    std::vector<Partition> parts = all_partitions(4);
    for (int c = 0; c < s4.group.num_classes(); ++c) {
        auto type = cycle_type_from_charpoly(char_poly_h(s4.group, s4.group.class_rep[c]), 4);
        std::sort(type.rbegin(), type.rend());
        CHECK(Partition(type.begin(), type.end()) == parts[c]);
    }
}

TEST_CASE("load_group_file for B2, G2, C3 data files") {
    for (std::string name : {"b2", "g2", "c3"}) {
        GroupData gd = load_group_file(std::string(KSYS_DATA_DIR) + "/" + name + ".json");
        GroupData embedded = builtin_group(gd.group.name);
        CHECK(gd.group.order() == embedded.group.order());
        CHECK(gd.table.names == embedded.table.names);
        for (int i = 0; i < gd.table.num_chars(); ++i) CHECK(gd.table.rows[i] == embedded.table.rows[i]);
    }
    GroupData b2 = builtin_group("B2");
    CHECK(b2.group.order() == 8);
    CHECK(b2.group.num_classes() == 5);
    GroupData c3 = builtin_group("C3");
    CHECK(c3.group.order() == 3);
    CHECK(c3.table.num_chars() == 3);
    // C3 conjugation swaps chi1 and chi2
    CHECK(conjugate_character(c3.table, c3.table.find("chi1")) == c3.table.find("chi2"));
    CHECK(conjugate_character(c3.table, c3.table.find("chi0")) == c3.table.find("chi0"));
}

TEST_CASE("corrupted group file fails naming the identity") {
    std::string text = read_text_file(std::string(KSYS_DATA_DIR) + "/b2.json");
    auto pos = text.find("[2, -2, 0, 0, 0]");
    REQUIRE(pos != std::string::npos);
    text.replace(pos, 16, "[2, 2, 0, 0, 0]");
    try {
        load_group_json(text);
        FAIL("expected validation error");
    } catch (const Error& e) {
        CHECK(e.code() == Errc::validation);
        CHECK(std::string(e.what()).find("orthogonality") != std::string::npos);
    }
}

TEST_CASE("preorders: construction, totality, malle") {
    GroupData s2 = builtin_group("S2");
    Preorder dom = builtin_preorder("dominance", s2);
    CHECK(dom.num_phyla() == 2);
    int sgn = resolve_character_label(s2, "sgn");
    int triv = resolve_character_label(s2, "triv");
    CHECK(dom.strictly_below(sgn, triv));
    CHECK(validate_malle(dom, s2.table).ok);

    Preorder one = builtin_preorder("one-phylum", s2);
    CHECK(one.num_phyla() == 1);

    CHECK_THROWS_AS(load_preorder(s2.table, {{"1,1"}}), Error);           // missing label
    CHECK_THROWS_AS(load_preorder(s2.table, {{"1,1"}, {"1,1", "2"}}), Error);  // duplicate

    GroupData s3 = builtin_group("S3");
    Preorder dom3 = builtin_preorder("dominance", s3);
    CHECK(dom3.phyla.size() == 3);
    CHECK(dom3.phyla[0] == std::vector<int>{s3.table.find("1,1,1")});
    CHECK(dom3.phyla[2] == std::vector<int>{s3.table.find("3")});

    GroupData s6 = builtin_group("S6");
    CHECK_THROWS_AS(builtin_preorder("dominance", s6), Error);
}

TEST_CASE("malle validation on C3") {
    GroupData c3 = builtin_group("C3");
    Preorder good = load_preorder(c3.table, {{"chi1", "chi2"}, {"chi0"}});
    CHECK(validate_malle(good, c3.table).ok);
    Preorder bad = load_preorder(c3.table, {{"chi1"}, {"chi2"}, {"chi0"}});
    MalleCheck chk = validate_malle(bad, c3.table);
    CHECK(!chk.ok);
    CHECK(chk.offending == "chi1");
    CHECK(validate_malle(builtin_preorder("springer", c3), c3.table).ok);
}

TEST_CASE("dominance order positions for S4 and S5") {
    GroupData s4 = builtin_group("S4");
    Preorder dom = builtin_preorder("dominance", s4);
    std::vector<std::string> expect = {"1,1,1,1", "2,1,1", "2,2", "3,1", "4"};
    for (size_t f = 0; f < expect.size(); ++f)
        CHECK(dom.phyla[f] == std::vector<int>{s4.table.find(expect[f])});
    GroupData s5 = builtin_group("S5");
    CHECK(builtin_preorder("dominance", s5).num_phyla() == 7);
}
