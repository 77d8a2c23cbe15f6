// SPDX-License-Identifier: Apache-2.0

#include "pointfree/representatives.hpp"

#include <catch_amalgamated.hpp>

#include <algorithm>

using namespace pointfree;

namespace {

// Slow re-implementation of the G-representative conditions straight from
// their definitions, using only contact() and region arithmetic. Kept free
// of the bitmask tables so it can serve as an independent oracle.
bool naive_is_g_representative(const ContactStructure& cs, const std::vector<Region>& q) {
    const FiniteAlgebra& alg = cs.algebra();
    if (q.empty()) return false;
    for (const Region& u : q)
        if (u.is_zero()) return false;
    auto naive_ll = [&](const Region& a, const Region& b) {
        return !cs.contact(a, complement(b));
    };
    for (const Region& u : q)
        for (const Region& v : q)
            if (!(u == v || naive_ll(u, v) || naive_ll(v, u))) return false;
    for (const Region& u : q) {
        bool found = false;
        for (const Region& v : q)
            if (naive_ll(v, u)) found = true;
        if (!found) return false;
    }
    for (RegionCode xc = 0; xc < alg.universe_size(); ++xc)
        for (RegionCode yc = 0; yc < alg.universe_size(); ++yc) {
            Region x = alg.region(xc), y = alg.region(yc);
            bool premise = true;
            for (const Region& u : q)
                if (!(overlap(u, x) && overlap(u, y))) premise = false;
            if (premise && !cs.contact(x, y)) return false;
        }
    return true;
}

std::vector<RegionSet> naive_enumerate(const ContactStructure& cs) {
    std::vector<RegionSet> out;
    const CodeMask all = (CodeMask{1} << cs.universe_size()) - 1;
    for (CodeMask m = 1; m <= all; ++m) {
        RegionSet s = RegionSet::from_mask(cs.algebra(), m);
        if (naive_is_g_representative(cs, s.members())) out.push_back(s);
    }
    return out;
}

ContactStructure weak_no_c4() {
    // overlap on 3 atoms plus the one extra symmetric pair ({a0},{a1,a2});
    // satisfies C0-C3, fails C4
    FiniteAlgebra alg(3);
    std::vector<std::pair<RegionCode, RegionCode>> pairs;
    for (RegionCode x = 1; x < 8; ++x)
        for (RegionCode y = 1; y < 8; ++y)
            if ((x & y) != 0) pairs.emplace_back(x, y);
    pairs.emplace_back(0b001, 0b110);
    pairs.emplace_back(0b110, 0b001);
    return ContactStructure::full_relation(alg, pairs);
}

} // namespace

TEST_CASE("covering basics") {
    FiniteAlgebra alg(2);
    RegionSet X(alg, {alg.region(0b01)});
    RegionSet Y(alg, {alg.region(0b11)});
    CHECK(covers(X, X));
    CHECK(covers(X, Y));
    CHECK_FALSE(covers(Y, X));
    CHECK_FALSE(coinitial(X, Y));
    CHECK(coinitial(X, X));

    CHECK_THROWS_AS(covers(RegionSet(alg, {}), X), usage_error);
    FiniteAlgebra other(2);
    CHECK_THROWS_AS(covers(X, RegionSet(other, {other.one()})), usage_error);
}

TEST_CASE("singleton of d is a G-representative of the d-contact") {
    for (int n = 1; n <= 3; ++n) {
        FiniteAlgebra alg(n);
        for (RegionCode d = 1; d < alg.universe_size(); ++d) {
            auto cs = ContactStructure::with_distinguished(alg.region(d));
            CHECK(is_g_representative(cs, RegionSet(alg, {alg.region(d)})).all());
        }
    }
}

TEST_CASE("under C5, the singleton of an atom is a G-representative") {
    for (int n = 1; n <= 4; ++n) {
        FiniteAlgebra alg(n);
        auto cs = ContactStructure::overlap_contact(alg); // satisfies C5
        REQUIRE(axiom_holds(cs, AxiomId::C5));
        for (const Region& a : alg.atoms())
            CHECK(is_g_representative(cs, RegionSet(alg, {a})).all());
    }
}

TEST_CASE("r3 failure carries the first separated pair") {
    FiniteAlgebra alg(2);
    auto cs = ContactStructure::overlap_contact(alg);
    auto rep = is_g_representative(cs, RegionSet(alg, {alg.one()}));
    CHECK(rep.r0);
    CHECK(rep.r1);
    CHECK(rep.r2);
    CHECK_FALSE(rep.r3);
    REQUIRE(rep.r3_witness.has_value());
    CHECK(rep.r3_witness->first == alg.region(0b01));
    CHECK(rep.r3_witness->second == alg.region(0b10));
    // both witnesses overlap 1, yet they are not in contact
    CHECK_FALSE(cs.contact(rep.r3_witness->first, rep.r3_witness->second));
}

TEST_CASE("enumeration agrees with the definition-level oracle") {
    std::vector<ContactStructure> structures;
    FiniteAlgebra a2(2), a3(3);
    structures.push_back(ContactStructure::overlap_contact(a2));
    structures.push_back(ContactStructure::overlap_contact(a3));
    structures.push_back(ContactStructure::total_contact(a2));
    structures.push_back(ContactStructure::total_contact(a3));
    for (RegionCode d = 1; d < 4; ++d)
        structures.push_back(ContactStructure::with_distinguished(a2.region(d)));
    structures.push_back(ContactStructure::with_distinguished(a3.region(0b011)));
    structures.push_back(ContactStructure::atom_graph(a3, {{0, 1}}));
    structures.push_back(weak_no_c4());

    for (const auto& cs : structures) {
        auto fast = enumerate_g_representatives(cs);
        auto slow = naive_enumerate(cs);
        REQUIRE(fast.size() == slow.size());
        for (std::size_t i = 0; i < fast.size(); ++i) CHECK(fast[i] == slow[i]);
    }
}

TEST_CASE("G-representatives of overlap contact are chains grounded at an atom") {
    FiniteAlgebra alg(3);
    auto cs = ContactStructure::overlap_contact(alg);
    auto reps = enumerate_g_representatives(cs);
    CHECK(reps.size() == 18); // 6 chains above each of the 3 atoms
    for (const auto& q : reps) {
        RegionCode min_code = alg.universe_size() - 1;
        for (const Region& r : q.members()) min_code &= r.code();
        CHECK(std::popcount(min_code) == 1);
        CHECK(q.contains(alg.region(min_code)));
    }
}

TEST_CASE("one-way covering between G-representatives implies mutual covering") {
    FiniteAlgebra alg(3);
    for (const auto& cs : {ContactStructure::overlap_contact(alg),
                           ContactStructure::with_distinguished(alg.region(0b011)),
                           ContactStructure::atom_graph(alg, {{0, 1}, {1, 2}})}) {
        auto reps = enumerate_g_representatives(cs);
        for (const auto& q1 : reps)
            for (const auto& q2 : reps)
                if (covers(q1, q2)) CHECK(covers(q2, q1));
    }
}

TEST_CASE("mutual contact between G-representatives is exactly covering") {
    FiniteAlgebra alg(3);
    for (const auto& cs : {ContactStructure::overlap_contact(alg),
                           ContactStructure::with_distinguished(alg.region(0b101)),
                           ContactStructure::total_contact(alg)}) {
        auto reps = enumerate_g_representatives(cs);
        for (const auto& q1 : reps)
            for (const auto& q2 : reps)
                CHECK(contact_all_pairs(cs, q1, q2) == covers(q1, q2));
    }
}

TEST_CASE("subsets of a G-representative covered by it are G-representatives") {
    FiniteAlgebra alg(3);
    auto cs = ContactStructure::overlap_contact(alg);
    for (const auto& q : enumerate_g_representatives(cs)) {
        // in particular: the part of Q below any region x, when nonempty
        for (RegionCode xc = 0; xc < 8; ++xc) {
            CodeMask below = 0;
            for (const Region& r : q.members())
                if ((r.code() & xc) == r.code()) below |= CodeMask{1} << r.code();
            if (below == 0) continue;
            RegionSet sub = RegionSet::from_mask(alg, below);
            REQUIRE(covers(sub, q));
            CHECK(is_g_representative(cs, sub).all());
        }
    }
}

TEST_CASE("sets covered by a G-representative satisfy r3") {
    FiniteAlgebra alg(2);
    for (const auto& cs : {ContactStructure::overlap_contact(alg),
                           ContactStructure::with_distinguished(alg.region(0b01))}) {
        auto reps = enumerate_g_representatives(cs);
        for (CodeMask m = 1; m < 16; ++m) {
            RegionSet x = RegionSet::from_mask(alg, m);
            bool covered_by_some = false;
            for (const auto& q : reps)
                if (covers(x, q)) covered_by_some = true;
            if (!covered_by_some) continue;
            // evaluate r3 for x directly
            bool r3 = true;
            for (RegionCode uc = 0; uc < 4 && r3; ++uc)
                for (RegionCode vc = 0; vc < 4; ++vc) {
                    bool premise = true;
                    for (const Region& r : x.members())
                        if (!((r.code() & uc) && (r.code() & vc))) premise = false;
                    if (premise && !cs.contact_codes(uc, vc)) {
                        r3 = false;
                        break;
                    }
                }
            CHECK(r3);
        }
    }
}

TEST_CASE("equivalence classes and G-points biject") {
    FiniteAlgebra alg(3);
    for (const auto& cs : {ContactStructure::overlap_contact(alg),
                           ContactStructure::with_distinguished(alg.region(0b011)),
                           ContactStructure::total_contact(alg),
                           ContactStructure::atom_graph(alg, {{0, 1}})}) {
        auto classes = equivalence_classes(cs);
        auto points = g_points(cs);
        CHECK(classes.classes.size() == points.size());
        // all members of one class generate the same filter
        for (const auto& cls : classes.classes) {
            REQUIRE(!cls.empty());
            GFilter first = filter_of(cs, cls.front());
            for (const auto& q : cls) CHECK(filter_of(cs, q) == first);
        }
    }
}

TEST_CASE("dense distinguished region: one class, one point") {
    FiniteAlgebra alg(3);
    auto cs = ContactStructure::with_distinguished(alg.one());
    auto classes = equivalence_classes(cs);
    auto points = g_points(cs);
    REQUIRE(classes.classes.size() == 1);
    REQUIRE(points.size() == 1);
    // the single point is the principal filter of d = 1
    GFilter expect = filter_of(cs, RegionSet(alg, {alg.one()}));
    CHECK(points[0] == expect);
    CHECK(points[0].contains(alg.one()));
}

TEST_CASE("d with atoms outside it has one extra G-point per such atom") {
    // The atomless-carrier uniqueness claim fails at finite scale: every
    // atom below -d grounds its own G-point.
    FiniteAlgebra alg(2);
    auto cs = ContactStructure::with_distinguished(alg.region(0b01));
    auto points = g_points(cs);
    REQUIRE(points.size() == 2);
    GFilter up_d = filter_of(cs, RegionSet(alg, {alg.region(0b01)}));
    GFilter up_b = filter_of(cs, RegionSet(alg, {alg.region(0b10)}));
    CHECK((points[0] == up_d || points[1] == up_d));
    CHECK((points[0] == up_b || points[1] == up_b));

    // general characterization on all small algebras and all d:
    // G-points = up(d) plus up(a) for every atom a <= -d
    for (int n = 1; n <= 3; ++n) {
        FiniteAlgebra a(n);
        for (RegionCode d = 1; d < a.universe_size(); ++d) {
            auto cd = ContactStructure::with_distinguished(a.region(d));
            int atoms_outside = 0;
            for (int i = 0; i < n; ++i)
                if (!(d >> i & 1)) ++atoms_outside;
            CHECK(g_points(cd).size() == 1 + static_cast<std::size_t>(atoms_outside));
        }
    }
}

TEST_CASE("filters contain 1 and verify their membership characterization") {
    FiniteAlgebra alg(3);
    auto cs = ContactStructure::overlap_contact(alg);
    for (const auto& q : enumerate_g_representatives(cs)) {
        GFilter f = filter_of(cs, q);
        CHECK(f.contains(alg.one()));
        CHECK_FALSE(f.contains(alg.zero()));
        // upward closed
        for (const Region& x : f.elements())
            for (RegionCode y = 0; y < 8; ++y)
                if ((x.code() & y) == x.code()) CHECK(f.contains(alg.region(y)));
    }
    CHECK_THROWS_AS(filter_of(cs, RegionSet(alg, {alg.one()})), usage_error);
}

TEST_CASE("no finite region set is abstractive") {
    FiniteAlgebra alg(3);
    auto cs = ContactStructure::overlap_contact(alg);
    for (CodeMask m = 1; m < 256; m += 3) { // a spread of sets
        RegionSet a = RegionSet::from_mask(alg, m);
        auto rep = is_abstractive(cs, a);
        CHECK_FALSE(rep.no_lower_bound_literal);
        CHECK_FALSE(rep.abstractive);
        if (rep.r0 && rep.r1) {
            // the meet of a nonzero chain is its nonzero minimum
            REQUIRE(rep.lower_bound_witness.has_value());
            CHECK_FALSE(rep.lower_bound_witness->is_zero());
            for (const Region& y : a.members()) CHECK(leq(*rep.lower_bound_witness, y));
        }
    }

    SECTION("singleton of 1 fails the lower-bound condition with witness 1") {
        auto rep = is_abstractive(cs, RegionSet(alg, {alg.one()}));
        CHECK(rep.r0);
        CHECK(rep.r1);
        CHECK_FALSE(rep.abstractive);
        REQUIRE(rep.lower_bound_witness.has_value());
        CHECK(*rep.lower_bound_witness == alg.one());
    }

    SECTION("an antichain can pass the nonzero lower-bound reading yet fail r1") {
        RegionSet antichain(alg, {alg.region(0b001), alg.region(0b010)});
        auto rep = is_abstractive(cs, antichain);
        CHECK(rep.no_lower_bound_nonzero);
        CHECK_FALSE(rep.r1);
        CHECK_FALSE(rep.abstractive);
    }
}

TEST_CASE("abstractive sets would satisfy strict r2; finite sets never do") {
    FiniteAlgebra alg(2);
    auto cs = ContactStructure::overlap_contact(alg);
    // contrapositive at finite scale: every chain has a minimum, which has
    // no strictly-below inward witness, so strict r2 fails for every
    // candidate and no candidate is abstractive
    for (CodeMask m = 1; m < 16; ++m) {
        RegionSet a = RegionSet::from_mask(alg, m);
        bool strict_r2 = true;
        for (const Region& x : a.members()) {
            bool found = false;
            for (const Region& y : a.members())
                if (cs.ll(y, x) && y != x) found = true;
            if (!found) strict_r2 = false;
        }
        CHECK_FALSE(strict_r2);
        CHECK_FALSE(is_abstractive(cs, a).abstractive);
    }
}

TEST_CASE("W-minimality check is vacuous on the finite backend") {
    FiniteAlgebra alg(2);
    auto cs = ContactStructure::overlap_contact(alg);
    RegionSet a(alg, {alg.region(0b01)});
    std::vector<RegionSet> candidates{RegionSet(alg, {alg.region(0b01), alg.one()})};
    auto rep = w_minimality_check(cs, a, candidates);
    CHECK_FALSE(rep.applicable);
    CHECK_FALSE(rep.refuted);
    CHECK(rep.candidates_checked == 0);
    CHECK(rep.note.find("atomic") != std::string::npos);
}

TEST_CASE("separated proper parts") {
    FiniteAlgebra alg(3);

    SECTION("overlap contact: {a0,a1} splits into separated atoms") {
        auto cs = ContactStructure::overlap_contact(alg);
        Region y = alg.region(0b001), z = alg.region(0b010);
        CHECK(lt(y, alg.region(0b011)));
        CHECK(lt(z, alg.region(0b011)));
        CHECK_FALSE(cs.contact(y, z));
        auto rep = check_separated_parts(cs);
        CHECK_FALSE(rep.conclusion); // atoms have no nonzero proper parts at all
        CHECK(rep.implication);      // premises never co-hold here
    }

    SECTION("total contact: premises fail and so does the conclusion") {
        auto cs = ContactStructure::total_contact(alg);
        auto rep = check_separated_parts(cs);
        CHECK_FALSE(rep.premise_c5);
        CHECK_FALSE(rep.premise_atomless);
        CHECK_FALSE(rep.conclusion);
        CHECK(rep.implication);
    }
}

TEST_CASE("product of two total factors: no atom singleton is a G-representative") {
    auto t2 = ContactStructure::total_contact(FiniteAlgebra(2));
    auto prod = ContactStructure::product_disjunctive(t2, t2);
    const FiniteAlgebra& alg = prod.algebra();
    REQUIRE(alg.atom_count() == 4);
    REQUIRE_FALSE(axiom_holds(prod, AxiomId::C5));
    for (const Region& a : alg.atoms()) {
        auto rep = is_g_representative(prod, RegionSet(alg, {a}));
        CHECK_FALSE(rep.all());
        CHECK_FALSE(rep.r2); // atoms are not their own nontangential parts here
    }
    // but the factor's G-representative paired with 0 is one
    RegionSet q(alg, {alg.region(0b0011)}); // <1, 0>
    CHECK(is_g_representative(prod, q).all());
    // and pairing with 1 breaks r3
    RegionSet q1(alg, {alg.one()});
    auto rep1 = is_g_representative(prod, q1);
    CHECK_FALSE(rep1.r3);
}
