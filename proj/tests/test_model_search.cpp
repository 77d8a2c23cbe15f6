// SPDX-License-Identifier: Apache-2.0

#include "pointfree/model_search.hpp"

#include <catch_amalgamated.hpp>

using namespace pointfree;

TEST_CASE("atom-graph class counts are the unlabeled graph counts") {
    CHECK(enumerate_bca(1).size() == 1);
    CHECK(enumerate_bca(2).size() == 2);
    CHECK(enumerate_bca(3).size() == 4);
    CHECK(enumerate_bca(4).size() == 11);
    CHECK_THROWS_AS(enumerate_bca(5), capability_error);
}

TEST_CASE("weak-contact class counts, frozen after the first verified run") {
    CHECK(enumerate_bwca(2).size() == 1);
    CHECK(enumerate_bwca(4).size() == 2);
    CHECK(enumerate_bwca(8).size() == 8);
    CHECK_THROWS_AS(enumerate_bwca(16), capability_error);
}

TEST_CASE("every enumerated weak structure passes C0-C3 and contains overlap") {
    for (int u : {2, 4, 8}) {
        for (const auto& cs : enumerate_bwca(u)) {
            for (AxiomId a : {AxiomId::C0, AxiomId::C1, AxiomId::C2, AxiomId::C3})
                CHECK(axiom_holds(cs, a));
            for (RegionCode x = 0; x < cs.universe_size(); ++x)
                CHECK((cs.overlap_row(x) & ~cs.contact_row(x)) == 0);
        }
    }
}

TEST_CASE("enumeration is deterministic and duplicate-free up to isomorphism") {
    auto a = enumerate_bwca(8);
    auto b = enumerate_bwca(8);
    REQUIRE(a.size() == b.size());
    for (std::size_t i = 0; i < a.size(); ++i)
        CHECK(describe_structure(a[i]) == describe_structure(b[i]));

    // no two yields are isomorphic: compare full relation signatures over
    // all atom permutations
    const auto perms = detail::atom_permutations(3);
    auto signature = [&](const ContactStructure& cs, const std::vector<int>& perm) {
        std::uint64_t sig = 0;
        for (RegionCode x = 0; x < 8; ++x)
            for (RegionCode y = 0; y < 8; ++y)
                if (cs.contact_codes(x, y)) {
                    RegionCode px = detail::permute_code(x, perm);
                    RegionCode py = detail::permute_code(y, perm);
                    sig |= std::uint64_t{1} << (px * 8 + py);
                }
        return sig;
    };
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = i + 1; j < a.size(); ++j) {
            bool isomorphic = false;
            for (const auto& perm : perms)
                if (signature(a[i], perm) == signature(a[j], perms.front())) isomorphic = true;
            CHECK_FALSE(isomorphic);
        }

    CHECK(a.size() == 8);
}

TEST_CASE("property parsing and evaluation") {
    SECTION("variables are collected in order of first appearance") {
        PropertyExpr e = PropertyExpr::parse("x << y -> x <= y");
        CHECK(e.variables() == std::vector<std::string>{"x", "y"});
    }
    SECTION("ascii and unicode spellings agree") {
        FiniteAlgebra alg(2);
        auto cs = ContactStructure::overlap_contact(alg);
        PropertyExpr ascii = PropertyExpr::parse("x<<u & y<<v -> x*y<<u*v");
        PropertyExpr uni = PropertyExpr::parse("x≪u ∧ y≪v → x·y≪u·v");
        CHECK(ascii.variables() == uni.variables());
        CHECK(!ascii.find_countermodel_binding(cs).has_value());
        CHECK(!uni.find_countermodel_binding(cs).has_value());
    }
    SECTION("axiom atoms and parenthesized terms") {
        FiniteAlgebra alg(2);
        auto cs = ContactStructure::overlap_contact(alg);
        PropertyExpr e = PropertyExpr::parse("C2 & (x * (y + z)) <= x");
        CHECK(e.variables().size() == 3);
        CHECK(!e.find_countermodel_binding(cs).has_value());
    }
    SECTION("parse errors carry positions") {
        CHECK_THROWS_AS(PropertyExpr::parse("x <<"), parse_error);
        CHECK_THROWS_AS(PropertyExpr::parse("x ? y"), parse_error);
        CHECK_THROWS_AS(PropertyExpr::parse("(x << y"), parse_error);
        CHECK_THROWS_AS(PropertyExpr::parse("C5 C5"), parse_error);
        // an axiom name cannot be a region term
        CHECK_THROWS_AS(PropertyExpr::parse("C5 << x"), parse_error);
    }
    SECTION("symmetry of contact holds everywhere") {
        PropertyExpr e = PropertyExpr::parse("x C y <-> y C x");
        for (const auto& cs : enumerate_bwca(8))
            CHECK(!e.find_countermodel_binding(cs).has_value());
    }
}

TEST_CASE("countermodel search over the enumerated families") {
    SECTION("strictness of << under C6 is confirmed") {
        EnumerationTask task;
        task.family = EnumerationTask::Family::bwca_universe;
        task.size = 8;
        auto out = search_countermodel("C6 -> (x<<y -> x<y or x=0 or x=1)", task);
        CHECK(out.status == SearchOutcome::Status::theorem_confirmed);
    }
    SECTION("C5 fails on the distinguished-region family") {
        EnumerationTask task;
        task.family = EnumerationTask::Family::d_contact;
        task.size = 3;
        auto out = search_countermodel("C5", task);
        REQUIRE(out.status == SearchOutcome::Status::countermodel_found);
        REQUIRE(out.model.has_value());
        CHECK_FALSE(axiom_holds(*out.model, AxiomId::C5));
        CHECK(out.model_summary.find("d_contact") == 0);
    }
    SECTION("meet-compatibility of << is confirmed on contact algebras") {
        EnumerationTask task;
        task.family = EnumerationTask::Family::bca_atom_graph;
        task.size = 3;
        auto out = search_countermodel("x<<u & y<<v -> x*y<<u*v", task);
        CHECK(out.status == SearchOutcome::Status::theorem_confirmed);
    }
    SECTION("a found countermodel re-evaluates to a violation") {
        EnumerationTask task;
        task.family = EnumerationTask::Family::bwca_universe;
        task.size = 8;
        auto out = search_countermodel("x C y -> x O y", task);
        REQUIRE(out.status == SearchOutcome::Status::countermodel_found);
        REQUIRE(out.model.has_value());
        REQUIRE(out.witness.size() == 2);
        // the witness names regions in contact but not overlapping
        PropertyExpr e = PropertyExpr::parse("x C y -> x O y");
        auto binding = e.find_countermodel_binding(*out.model);
        REQUIRE(binding.has_value());
        CHECK(out.model->contact_codes((*binding)[0], (*binding)[1]));
        CHECK(((*binding)[0] & (*binding)[1]) == 0);
    }
    SECTION("class filters restrict the family") {
        EnumerationTask task;
        task.family = EnumerationTask::Family::bwca_universe;
        task.size = 8;
        task.constraints = {{AxiomId::C4, false}};
        auto models = enumerate_models(task);
        CHECK(!models.empty());
        for (const auto& cs : models) CHECK_FALSE(axiom_holds(cs, AxiomId::C4));
    }
}

TEST_CASE("paper suite statuses") {
    auto outcomes = run_paper_suite();
    REQUIRE(!outcomes.empty());

    auto status_of = [&](std::string_view id) -> SearchOutcome::Status {
        for (const auto& o : outcomes)
            if (o.property == id) return o.status;
        FAIL("missing suite entry: " << id);
        return SearchOutcome::Status::inconclusive;
    };
    using S = SearchOutcome::Status;

    for (const char* id :
         {"fact-1-ll-implies-below", "fact-2-ll-antisymmetric", "fact-3-ll-below-chain",
          "fact-4-below-ll-chain", "fact-5-ll-transitive", "fact-6-ll-contraposition",
          "equiv-C5-DISC-EXT", "equiv-C6-ll-strict", "equiv-C6-product-form",
          "ll-meet-compatible-in-BCA", "gia-implies-meet-form", "d-contact-C0-C4",
          "d-contact-d-ll-d", "d-contact-C5-iff-no-proper-part", "d-contact-GIA",
          "d-contact-singleton-G-rep", "d-contact-G-point-structure",
          "atom-singleton-G-rep-under-C5", "atomic-C5-refutes-G-in-W",
          "QG-covering-equivalence", "QG-class-filter-bijection",
          "lemma-mutual-contact-iff-covering", "G-rep-covered-subset-closure",
          "covered-by-G-rep-implies-r3", "separated-parts-implication",
          "product-disjunctive-C0-C4"}) {
        CAPTURE(id);
        CHECK(status_of(id) == S::theorem_confirmed);
    }

    // recorded searches that do find countermodels
    CHECK(status_of("ll-meet-compatible-without-C4") == S::countermodel_found);
    CHECK(status_of("product-conjunctive-first-failure") == S::countermodel_found);
    // the atomless-carrier uniqueness claim is refuted at finite scale
    CHECK(status_of("d-contact-unique-G-point") == S::countermodel_found);
    // the meet form does not imply the interpolant form: the 3-atom path
    // graph separates them
    CHECK(status_of("gia-direct-vs-meet-form") == S::countermodel_found);

    for (const char* id : {"open:incomplete-overlap-BCA-with-W-representative",
                           "open:QW-omega-in-QG-independence-from-BCA+IA",
                           "open:GIA+C6-BCA-with-W-representative"}) {
        CAPTURE(id);
        CHECK(status_of(id) == S::inconclusive);
    }

    SECTION("the conjunctive-product failure is C1 with a checkable witness") {
        for (const auto& o : outcomes)
            if (o.property == "product-conjunctive-first-failure") {
                CHECK(o.note.find("C1") != std::string::npos);
                REQUIRE(o.model.has_value());
                CHECK_FALSE(axiom_holds(*o.model, AxiomId::C1));
            }
    }
}
