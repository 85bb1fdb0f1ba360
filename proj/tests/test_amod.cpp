#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "ksys/builtin.hpp"
#include "ksys/hom.hpp"
#include "ksys/trace.hpp"

using namespace ksys;

namespace {

// Reference route for trace quotients: materialize the ambient module, seed
// with the killed isotypic components of every positive grade, close up, and
// quotient. Used to pin the production construction on small inputs.
GradedClass trace_quotient_reference(const GroupData& gd, const Preorder& P, int chi,
                                     TraceMode mode, int N) {
    const auto& G = gd.group;
    const auto& T = gd.table;
    GradedModule E = ambient_isotypic(G, T, chi, N);
    GradedSubspace seeds = empty_subspace(E);
    for (int psi = 0; psi < T.num_chars(); ++psi) {
        bool killed = mode == TraceMode::strict ? P.strictly_below(psi, chi)
                                                : !P.strictly_below(chi, psi);
        if (!killed) continue;
        for (int k = 1; k <= N; ++k) {
            RowBasis<Cyclo> iso = isotypic_component(G, T, E, k, psi);
            for (const auto& row : iso.rows()) seeds.piece[k].insert(row);
        }
    }
    GradedSubspace S = generated_submodule(E, seeds);
    GradedModule Q = quotient_module(G, E, S);
    return graded_character(G, Q).scaled(Cyclo(rat(1, T.dims[chi])));
}

Cyclo refl_value(const GroupData& gd, const GradedClass& cls, int k) {
    // value at the unique reflection class of S2
    return cls.by_class[gd.group.class_of[1] == gd.group.identity_class() ? 0 : 1][k];
}

}  // namespace

TEST_CASE("ambient dimensions and characters") {
    GroupData triv = builtin_group("trivial");
    GradedModule e_triv = ambient_isotypic(triv.group, triv.table, 0, 2);
    CHECK(e_triv.dim_at(0) == 1);
    CHECK(e_triv.dim_at(1) == 1);
    CHECK(e_triv.dim_at(2) == 1);

    GroupData s2 = builtin_group("S2");
    int sgn = resolve_character_label(s2, "sgn");
    int tr = resolve_character_label(s2, "triv");
    GradedModule e_sgn = ambient_isotypic(s2.group, s2.table, sgn, 3);
    for (int k = 0; k <= 3; ++k) CHECK(e_sgn.dim_at(k) == 1);
    GradedClass cls = graded_character(s2.group, e_sgn);
    for (int k = 0; k <= 3; ++k)
        CHECK(refl_value(s2, cls, k) == Cyclo(k % 2 == 0 ? -1 : 1));  // sgn^{k+1}

    GradedModule e_tr = ambient_isotypic(s2.group, s2.table, tr, 1);
    CHECK(e_tr.dim_at(0) == 1);
    CHECK(e_tr.dim_at(1) == 1);
    GradedClass cls_tr = graded_character(s2.group, e_tr);
    CHECK(refl_value(s2, cls_tr, 1) == Cyclo(-1));  // grade 1 is the sign line

    // S3: ambient of the 2-dimensional character has dims (dim chi)^2 * S^k
    GroupData s3 = builtin_group("S3");
    int std2 = s3.table.find_or_fail("2,1");
    GradedModule e_std = ambient_isotypic(s3.group, s3.table, std2, 2);
    CHECK(e_std.dim_at(0) == 4);
    CHECK(e_std.dim_at(1) == 8);
    CHECK(e_std.dim_at(2) == 12);
}

TEST_CASE("isotypic components") {
    GroupData s2 = builtin_group("S2");
    int sgn = resolve_character_label(s2, "sgn");
    int tr = resolve_character_label(s2, "triv");
    GradedModule e_tr = ambient_isotypic(s2.group, s2.table, tr, 2);
    CHECK(isotypic_component(s2.group, s2.table, e_tr, 1, sgn).dim() == 1);
    CHECK(isotypic_component(s2.group, s2.table, e_tr, 1, tr).dim() == 0);

    GroupData s3 = builtin_group("S3");
    GradedModule e = ambient_isotypic(s3.group, s3.table, s3.table.find_or_fail("2,1"), 2);
    for (int k = 0; k <= 2; ++k) {
        int total = 0;
        for (int psi = 0; psi < s3.table.num_chars(); ++psi)
            total += isotypic_component(s3.group, s3.table, e, k, psi).dim();
        CHECK(total == e.dim_at(k));
    }
}

TEST_CASE("generated submodule") {
    GroupData s2 = builtin_group("S2");
    int sgn = resolve_character_label(s2, "sgn");
    int tr = resolve_character_label(s2, "triv");
    GradedModule e_tr = ambient_isotypic(s2.group, s2.table, tr, 4);

    GradedSubspace seeds = empty_subspace(e_tr);
    RowBasis<Cyclo> line = isotypic_component(s2.group, s2.table, e_tr, 1, sgn);
    for (const auto& row : line.rows()) seeds.piece[1].insert(row);
    GradedSubspace S = generated_submodule(e_tr, seeds);
    CHECK(S.dim_at(0) == 0);
    for (int k = 1; k <= 4; ++k) CHECK(S.dim_at(k) == 1);

    GradedSubspace none = generated_submodule(e_tr, empty_subspace(e_tr));
    for (int k = 0; k <= 4; ++k) CHECK(none.dim_at(k) == 0);

    GradedSubspace all0 = empty_subspace(e_tr);
    std::vector<Cyclo> full(1, Cyclo(1));
    all0.piece[0].insert(full);
    GradedSubspace everything = generated_submodule(e_tr, all0);
    for (int k = 0; k <= 4; ++k) CHECK(everything.dim_at(k) == e_tr.dim_at(k));

    // quotient character = ambient character - submodule character, gradewise
    GradedModule Q = quotient_module(s2.group, e_tr, S);
    GradedClass qc = graded_character(s2.group, Q);
    GradedClass ec = graded_character(s2.group, e_tr);
    for (int k = 0; k <= 4; ++k) {
        CHECK(Q.dim_at(k) == e_tr.dim_at(k) - S.dim_at(k));
        if (k >= 1) CHECK(qc.grade_is_zero(k));
    }
    CHECK(qc.grade(0) == ec.grade(0));
}

TEST_CASE("trace quotients for S2 with the dominance preorder") {
    GroupData s2 = builtin_group("S2");
    Preorder P = builtin_preorder("dominance", s2);
    int sgn = resolve_character_label(s2, "sgn");
    int tr = resolve_character_label(s2, "triv");

    TraceQuotient bar_sgn = trace_quotient(s2.group, s2.table, P, sgn, TraceMode::weak, 6);
    // grade 0 = sgn, grade 1 = triv, nothing above
    CHECK(bar_sgn.cls.grade(0) == std::vector<Cyclo>{Cyclo(1), Cyclo(-1)});
    CHECK(bar_sgn.cls.grade(1) == std::vector<Cyclo>{Cyclo(1), Cyclo(1)});
    for (int k = 2; k <= 6; ++k) CHECK(bar_sgn.cls.grade_is_zero(k));
    CHECK(certify_finite(bar_sgn.cls, 3));

    TraceQuotient bar_tr = trace_quotient(s2.group, s2.table, P, tr, TraceMode::weak, 6);
    CHECK(bar_tr.cls.grade(0) == std::vector<Cyclo>{Cyclo(1), Cyclo(1)});
    for (int k = 1; k <= 6; ++k) CHECK(bar_tr.cls.grade_is_zero(k));

    // sgn is minimal: the strict quotient equals the ambient module
    TraceQuotient nab_sgn = trace_quotient(s2.group, s2.table, P, sgn, TraceMode::strict, 6);
    GradedClass amb = graded_character(s2.group, ambient_isotypic(s2.group, s2.table, sgn, 6));
    for (int k = 0; k <= 6; ++k) CHECK(nab_sgn.cls.grade(k) == amb.grade(k));
    CHECK(!certify_finite(nab_sgn.cls, 1));

    CHECK(certify_finite(zero_class(2, 6), 1));
    CHECK_THROWS_AS(trace_quotient(s2.group, s2.table, P, sgn, TraceMode::weak, 0), Error);
}

TEST_CASE("production trace quotient matches the reference construction") {
    struct Case {
        const char* group;
        const char* preorder;
        int trunc;
    };
    for (Case c : {Case{"S2", "dominance", 6}, Case{"S3", "dominance", 5},
                   Case{"C3", "springer", 5}, Case{"B2", "springer", 4},
                   Case{"S3", "one-phylum", 4}}) {
        GroupData gd = builtin_group(c.group);
        Preorder P = builtin_preorder(c.preorder, gd);
        for (int chi = 0; chi < gd.table.num_chars(); ++chi) {
            for (TraceMode mode : {TraceMode::strict, TraceMode::weak}) {
                TraceQuotient fast = trace_quotient(gd.group, gd.table, P, chi, mode, c.trunc);
                GradedClass ref = trace_quotient_reference(gd, P, chi, mode, c.trunc);
                for (int k = 0; k <= c.trunc; ++k) {
                    CHECK(fast.cls.grade(k) == ref.grade(k));
                }
            }
        }
    }
}

TEST_CASE("weak trace quotients have the Kostka-system shape") {
    for (std::string name : {"S3", "B2", "C3"}) {
        GroupData gd = builtin_group(name);
        Preorder P = builtin_preorder("springer", gd);
        for (int chi = 0; chi < gd.table.num_chars(); ++chi) {
            TraceQuotient bar = trace_quotient(gd.group, gd.table, P, chi, TraceMode::weak, 12);
            CHECK(certify_finite(bar.cls, 3));
            // multiplicity of L_chi is 1, concentrated in grade 0
            for (int k = 0; k <= 12; ++k) {
                for (int psi = 0; psi < gd.table.num_chars(); ++psi) {
                    Cyclo m = grade_multiplicity(gd.group, gd.table, bar.cls, k, psi);
                    if (psi == chi) {
                        CHECK(m == Cyclo(k == 0 ? 1 : 0));
                    } else if (!m.is_zero()) {
                        CHECK(k > 0);
                        CHECK(P.strictly_below(chi, psi));
                    }
                }
            }
        }
    }
}

TEST_CASE("nabla quotients start at the defining character") {
    for (std::string name : {"S3", "C3"}) {
        GroupData gd = builtin_group(name);
        Preorder P = builtin_preorder("springer", gd);
        for (int chi = 0; chi < gd.table.num_chars(); ++chi) {
            TraceQuotient nab = trace_quotient(gd.group, gd.table, P, chi, TraceMode::strict, 6);
            for (int psi = 0; psi < gd.table.num_chars(); ++psi)
                CHECK(grade_multiplicity(gd.group, gd.table, nab.cls, 0, psi) ==
                      Cyclo(psi == chi ? 1 : 0));
        }
    }
}

TEST_CASE("graded hom on S2: orthogonality of the quotients") {
    GroupData s2 = builtin_group("S2");
    Preorder P = builtin_preorder("dominance", s2);
    int sgn = resolve_character_label(s2, "sgn");
    int tr = resolve_character_label(s2, "triv");
    auto bar_sgn = trace_quotient(s2.group, s2.table, P, sgn, TraceMode::weak, 6);
    auto bar_tr = trace_quotient(s2.group, s2.table, P, tr, TraceMode::weak, 6);
    auto nab_sgn = trace_quotient(s2.group, s2.table, P, sgn, TraceMode::strict, 6);
    auto nab_tr = trace_quotient(s2.group, s2.table, P, tr, TraceMode::strict, 6);

    CHECK(hom_graded(s2.group, bar_sgn.module, bar_sgn.module) == std::map<int, long>{{0, 1}});
    CHECK(hom_graded(s2.group, bar_sgn.module, bar_tr.module).empty());
    CHECK(hom_graded(s2.group, nab_tr.module, bar_sgn.module).empty());
    CHECK(hom_graded(s2.group, nab_sgn.module, bar_sgn.module) == std::map<int, long>{{0, 1}});
    CHECK(hom_graded(s2.group, nab_tr.module, bar_tr.module) == std::map<int, long>{{0, 1}});
    // no sign-isotypic vectors anywhere in bar nabla_triv
    CHECK(hom_graded(s2.group, nab_sgn.module, bar_tr.module).empty());

    // truncation precondition
    auto nab_tiny = trace_quotient(s2.group, s2.table, P, sgn, TraceMode::strict, 1);
    CHECK_THROWS_AS(hom_graded(s2.group, nab_tiny.module, bar_sgn.module), Error);
}

TEST_CASE("module json dump") {
    GroupData s2 = builtin_group("S2");
    GradedModule e = ambient_isotypic(s2.group, s2.table, 0, 2);
    std::string j = module_to_json(e);
    CHECK(j.find("\"format\": 1") != std::string::npos);
    CHECK(j.find("\"grades\"") != std::string::npos);
}
