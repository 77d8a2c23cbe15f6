// SPDX-License-Identifier: Apache-2.0

#include "pointfree/interval.hpp"

#include "topology_oracle.hpp"

#include <catch_amalgamated.hpp>

#include <random>

using namespace pointfree;

namespace {

AmbientSpace unit_interval() {
    return AmbientSpace({AmbientPiece::interval(ExtRat(0), ExtRat(1))});
}
AmbientSpace two_intervals() {
    return AmbientSpace({AmbientPiece::interval(ExtRat(0), ExtRat(1)),
                         AmbientPiece::interval(ExtRat(2), ExtRat(3))});
}
AmbientSpace interval_plus_point() {
    return AmbientSpace(
        {AmbientPiece::interval(ExtRat(0), ExtRat(1)), AmbientPiece::point(Rat(2))});
}
AmbientSpace half_line_plus_point() {
    return AmbientSpace(
        {AmbientPiece::interval(ExtRat::neg_inf(), ExtRat(0)), AmbientPiece::point(Rat(2))});
}

IntervalRegion open_interval(const AmbientSpace& amb, Rat lo, Rat hi) {
    RawRegion raw;
    raw.intervals.push_back({ExtRat(std::move(lo)), ExtRat(std::move(hi)), false, false});
    return regularize(amb, raw);
}

std::vector<AmbientSpace> suite_ambients() {
    return {AmbientSpace::real_line(), unit_interval(), two_intervals(), interval_plus_point(),
            half_line_plus_point()};
}

RawRegion random_raw(std::mt19937& rng) {
    std::uniform_int_distribution<int> comp_count(0, 3);
    std::uniform_int_distribution<int> numer(-48, 48);
    std::uniform_int_distribution<int> denom(1, 8);
    std::uniform_int_distribution<int> coin(0, 3);
    RawRegion raw;
    const int k = comp_count(rng);
    for (int i = 0; i < k; ++i) {
        Rat a(numer(rng), denom(rng));
        Rat b(numer(rng), denom(rng));
        if (a == b) b = a + Rat(1, 2);
        if (b < a) std::swap(a, b);
        raw.intervals.push_back({ExtRat(a), ExtRat(b), coin(rng) == 0, coin(rng) == 0});
    }
    if (coin(rng) == 0) raw.points.push_back(Rat(numer(rng), denom(rng)));
    return raw;
}

} // namespace

TEST_CASE("extended rationals order correctly") {
    CHECK(ExtRat::neg_inf() < ExtRat(0));
    CHECK(ExtRat(0) < ExtRat::pos_inf());
    CHECK(ExtRat::neg_inf() < ExtRat::pos_inf());
    CHECK_FALSE(ExtRat::neg_inf() < ExtRat::neg_inf());
    CHECK(ExtRat(Rat(1, 3)) < ExtRat(Rat(1, 2)));
    CHECK(ExtRat(Rat(2, 6)) == ExtRat(Rat(1, 3)));
    CHECK(ExtRat(Rat(1, 3)).to_string() == "1/3");
    CHECK(ExtRat::pos_inf().to_string() == "inf");
}

TEST_CASE("ambient validation") {
    CHECK_THROWS_AS(AmbientSpace({}), usage_error);
    CHECK_THROWS_AS(AmbientSpace({AmbientPiece::interval(ExtRat(1), ExtRat(0))}), usage_error);
    // touching pieces are rejected: gaps must be positive
    CHECK_THROWS_AS(AmbientSpace({AmbientPiece::interval(ExtRat(0), ExtRat(1)),
                                  AmbientPiece::interval(ExtRat(1), ExtRat(2))}),
                    usage_error);
    CHECK_THROWS_AS(AmbientSpace({AmbientPiece::interval(ExtRat(0), ExtRat(1)),
                                  AmbientPiece::point(Rat(1, 2))}),
                    usage_error);
    std::vector<AmbientPiece> many;
    for (int i = 0; i < 9; ++i) many.push_back(AmbientPiece::point(Rat(2 * i)));
    CHECK_THROWS_AS(AmbientSpace(std::move(many)), usage_error);

    CHECK(AmbientSpace::real_line().name() == "R");
    CHECK(two_intervals().name() == "[0,1]+[2,3]");
    CHECK(interval_plus_point().name() == "[0,1]+{2}");
}

TEST_CASE("regularization merges touching intervals") {
    AmbientSpace r = AmbientSpace::real_line();
    RawRegion raw;
    raw.intervals.push_back({ExtRat(0), ExtRat(1), false, false});
    raw.intervals.push_back({ExtRat(1), ExtRat(2), false, false});
    IntervalRegion reg = regularize(r, raw);
    REQUIRE(reg.components().size() == 1);
    CHECK(reg.components()[0].lo == ExtRat(0));
    CHECK(reg.components()[0].hi == ExtRat(2));
    CHECK(reg.literal() == "(0,2)");

    // join of the two intervals as separate regions closes the gap too
    IntervalRegion a = open_interval(r, 0, 1), b = open_interval(r, 1, 2);
    CHECK(ro_join(a, b) == reg);
    // but as sets they stay apart: meet empty, contact through the shared
    // endpoint
    CHECK(ro_meet(a, b).is_zero());
    CHECK(contact_T(a, b));
}

TEST_CASE("complement on the full line") {
    AmbientSpace r = AmbientSpace::real_line();
    IntervalRegion x = open_interval(r, 0, 1);
    IntervalRegion c = ro_complement(x);
    REQUIRE(c.components().size() == 2);
    CHECK(c.components()[0].lo.is_neg_inf());
    CHECK(c.components()[0].hi == ExtRat(0));
    CHECK(c.components()[1].lo == ExtRat(1));
    CHECK(c.components()[1].hi.is_pos_inf());
    CHECK(c.literal() == "(-inf,0)|(1,inf)");
    CHECK(ro_complement(c) == x);
}

TEST_CASE("subspace regularization reaches the piece boundary") {
    AmbientSpace amb = unit_interval();
    // the trace of (-1, 1/2) contains the boundary point 0
    IntervalRegion t = open_interval(amb, -1, Rat(1, 2));
    CHECK(region_contains(t, 0));
    CHECK_FALSE(region_contains(t, Rat(1, 2)));
    CHECK(t.literal() == "[0,1/2)");

    // (0, 1/2) is not regular open in [0,1]: its regularization adds 0
    IntervalRegion s = open_interval(amb, 0, Rat(1, 2));
    CHECK(s == t);
    CHECK(region_contains(s, 0));

    // an isolated raw point inside an interval piece vanishes
    RawRegion raw;
    raw.points.push_back(Rat(1, 2));
    CHECK(regularize(amb, raw).is_zero());
}

TEST_CASE("malformed raw intervals are rejected") {
    AmbientSpace r = AmbientSpace::real_line();
    RawRegion raw;
    raw.intervals.push_back({ExtRat(1), ExtRat(1), false, false});
    CHECK_THROWS_AS(regularize(r, raw), usage_error);
    raw.intervals[0] = {ExtRat(2), ExtRat(1), false, false};
    CHECK_THROWS_AS(regularize(r, raw), usage_error);
}

TEST_CASE("regularization against the membership oracle") {
    std::mt19937 rng(7011);
    for (const AmbientSpace& amb : suite_ambients()) {
        for (int iter = 0; iter < 400; ++iter) {
            RawRegion raw = random_raw(rng);
            IntervalRegion reg = regularize(amb, raw);
            auto line = oracle::SampleLine::build(
                oracle::critical_values(amb, &raw, {&reg}));
            auto in_x = oracle::ambient_membership(line, amb);
            auto in_u = oracle::intersect(oracle::raw_membership(line, raw), in_x);
            auto expected = oracle::interior_in(line, oracle::closure_in(line, in_u, in_x), in_x);
            auto actual = oracle::region_membership(line, reg);
            CAPTURE(amb.name(), reg.literal(), iter);
            REQUIRE(expected == actual);
        }
    }
}

TEST_CASE("regular-open invariant and idempotence") {
    std::mt19937 rng(9120);
    for (const AmbientSpace& amb : suite_ambients()) {
        for (int iter = 0; iter < 200; ++iter) {
            IntervalRegion reg = random_region(amb, rng);
            // Int Cl of the region is the region itself
            auto line = oracle::SampleLine::build(oracle::critical_values(amb, nullptr, {&reg}));
            auto in_x = oracle::ambient_membership(line, amb);
            auto r_mem = oracle::region_membership(line, reg);
            auto intcl = oracle::interior_in(line, oracle::closure_in(line, r_mem, in_x), in_x);
            REQUIRE(intcl == r_mem);
            // feeding the canonical form back through regularize is identity
            CHECK(regularize(amb, detail::to_raw(reg)) == reg);
        }
    }
}

TEST_CASE("boolean laws of the regular-open algebra, randomized") {
    std::mt19937 rng(20240818);
    for (const AmbientSpace& amb : suite_ambients()) {
        const IntervalRegion one = IntervalRegion::one(amb);
        const IntervalRegion zero = IntervalRegion::zero(amb);
        for (int iter = 0; iter < 150; ++iter) {
            IntervalRegion x = random_region(amb, rng);
            IntervalRegion y = random_region(amb, rng);
            IntervalRegion z = random_region(amb, rng);
            CAPTURE(amb.name(), x.literal(), y.literal(), z.literal());
            CHECK(ro_meet(x, y) == ro_meet(y, x));
            CHECK(ro_join(x, y) == ro_join(y, x));
            CHECK(ro_meet(x, ro_meet(y, z)) == ro_meet(ro_meet(x, y), z));
            CHECK(ro_join(x, ro_join(y, z)) == ro_join(ro_join(x, y), z));
            CHECK(ro_meet(x, ro_join(x, y)) == x);
            CHECK(ro_join(x, ro_meet(x, y)) == x);
            CHECK(ro_meet(x, ro_join(y, z)) ==
                  ro_join(ro_meet(x, y), ro_meet(x, z)));
            CHECK(ro_join(x, ro_meet(y, z)) ==
                  ro_meet(ro_join(x, y), ro_join(x, z)));
            CHECK(ro_complement(ro_complement(x)) == x);
            CHECK(ro_complement(ro_meet(x, y)) ==
                  ro_join(ro_complement(x), ro_complement(y)));
            CHECK(ro_meet(x, ro_complement(x)) == zero);
            CHECK(ro_join(x, ro_complement(x)) == one);
        }
    }
}

TEST_CASE("contact through shared closure points") {
    AmbientSpace r = AmbientSpace::real_line();
    CHECK(contact_T(open_interval(r, 0, 1), open_interval(r, 1, 2)));
    CHECK_FALSE(contact_T(open_interval(r, 0, 1), open_interval(r, 2, 3)));

    AmbientSpace y = interval_plus_point();
    IntervalRegion atom = piece_trace(y, 1);
    CHECK_FALSE(contact_T(atom, open_interval(y, 0, 1)));
    CHECK(contact_T(atom, atom));
}

TEST_CASE("contact agrees with the closure-overlap oracle") {
    std::mt19937 rng(5150);
    for (const AmbientSpace& amb : suite_ambients()) {
        for (int iter = 0; iter < 200; ++iter) {
            IntervalRegion x = random_region(amb, rng);
            IntervalRegion y = random_region(amb, rng);
            auto line = oracle::SampleLine::build(oracle::critical_values(amb, nullptr, {&x, &y}));
            auto in_amb = oracle::ambient_membership(line, amb);
            auto clx = oracle::closure_in(line, oracle::region_membership(line, x), in_amb);
            auto cly = oracle::closure_in(line, oracle::region_membership(line, y), in_amb);
            CAPTURE(amb.name(), x.literal(), y.literal());
            REQUIRE(contact_T(x, y) == oracle::any_common(clx, cly));
            // definition coherence for nontangential inclusion, two routes
            REQUIRE(ll_T(x, y) == !contact_T(x, ro_complement(y)));
            REQUIRE(ll_T(x, y) == oracle::subset(clx, oracle::region_membership(line, y)));
        }
    }
}

TEST_CASE("nontangential inclusion basics") {
    AmbientSpace r = AmbientSpace::real_line();
    CHECK(ll_T(open_interval(r, Rat(1, 4), Rat(1, 2)), open_interval(r, 0, 1)));
    CHECK_FALSE(ll_T(open_interval(r, 0, Rat(1, 2)), open_interval(r, 0, 1)));
    CHECK(ll_T(IntervalRegion::zero(r), open_interval(r, 0, 1)));

    // a clopen piece trace is nontangentially included in itself
    AmbientSpace two = two_intervals();
    IntervalRegion first = piece_trace(two, 0);
    CHECK(ll_T(first, first));
}

TEST_CASE("axiom reports per ambient") {
    SECTION("full line: everything passes, atomless") {
        auto reports = check_axioms_interval(AmbientSpace::real_line(), 120, 1);
        for (const auto& r : reports) {
            CAPTURE(r.property, r.note);
            CHECK(r.holds);
        }
    }
    SECTION("two intervals: C6 fails with the first piece as witness") {
        auto reports = check_axioms_interval(two_intervals(), 120, 2);
        for (const auto& r : reports) {
            CAPTURE(r.property, r.note);
            if (r.property == "C6") {
                CHECK_FALSE(r.holds);
                REQUIRE(r.witness.size() == 1);
                CHECK(r.witness[0] == "[0,1]");
            } else {
                CHECK(r.holds);
            }
        }
    }
    SECTION("interval plus point: C6 fails and the point is an atom") {
        auto reports = check_axioms_interval(interval_plus_point(), 120, 3);
        bool saw_atom = false;
        for (const auto& r : reports) {
            if (r.property == "atomless") {
                saw_atom = true;
                CHECK_FALSE(r.holds);
                REQUIRE(r.witness.size() == 1);
                CHECK(r.witness[0] == "{2}");
            }
            if (r.property == "C6") CHECK_FALSE(r.holds);
            if (r.property == "C5") CHECK(r.holds); // the atom is its own part
        }
        CHECK(saw_atom);
    }
}

TEST_CASE("atoms of the regular open algebra are the isolated points") {
    CHECK(ro_atoms(AmbientSpace::real_line()).empty());
    CHECK(ro_atoms(two_intervals()).empty());
    auto atoms = ro_atoms(interval_plus_point());
    REQUIRE(atoms.size() == 1);
    CHECK(atoms[0].literal() == "{2}");
    // the atom really is minimal: it is nontangentially included in itself
    CHECK(ll_T(atoms[0], atoms[0]));
}

TEST_CASE("interpolant construction") {
    AmbientSpace r = AmbientSpace::real_line();

    SECTION("plain padding") {
        IntervalRegion x = open_interval(r, Rat(1, 4), Rat(1, 2));
        IntervalRegion y = open_interval(r, 0, 1);
        IntervalRegion z = ia_interpolant(x, y);
        CHECK(ll_T(x, z));
        CHECK(ll_T(z, y));
    }
    SECTION("zero interpolates to zero") {
        IntervalRegion z = ia_interpolant(IntervalRegion::zero(r), open_interval(r, 0, 1));
        CHECK(z.is_zero());
    }
    SECTION("a clopen region interpolates to itself") {
        AmbientSpace two = two_intervals();
        IntervalRegion second = piece_trace(two, 1);
        IntervalRegion z = ia_interpolant(second, second);
        CHECK(z == second);
    }
    SECTION("precondition enforced") {
        IntervalRegion x = open_interval(r, 0, 1);
        CHECK_THROWS_AS(ia_interpolant(x, x), usage_error); // x is not << itself on R
    }
    SECTION("randomized contract") {
        std::mt19937 rng(31415);
        for (const AmbientSpace& amb : suite_ambients()) {
            for (int iter = 0; iter < 100; ++iter) {
                IntervalRegion y = random_region(amb, rng);
                if (y.is_zero()) continue;
                IntervalRegion x = shrink_witness(y);
                REQUIRE(ll_T(x, y));
                IntervalRegion z = ia_interpolant(x, y);
                CHECK(ll_T(x, z));
                CHECK(ll_T(z, y));
            }
        }
    }
}

TEST_CASE("shrink witness yields a nonzero nontangential part") {
    std::mt19937 rng(8899);
    for (const AmbientSpace& amb : suite_ambients()) {
        for (int iter = 0; iter < 150; ++iter) {
            IntervalRegion x = random_region(amb, rng);
            if (x.is_zero()) continue;
            IntervalRegion y = shrink_witness(x);
            CAPTURE(amb.name(), x.literal(), y.literal());
            CHECK_FALSE(y.is_zero());
            CHECK(ll_T(y, x));
        }
    }
}

TEST_CASE("mixed ambients are rejected") {
    AmbientSpace a = AmbientSpace::real_line(), b = unit_interval();
    CHECK_THROWS_AS(ro_meet(IntervalRegion::one(a), IntervalRegion::one(b)), usage_error);
    CHECK_THROWS_AS(contact_T(IntervalRegion::one(a), IntervalRegion::zero(b)), usage_error);
}
