// SPDX-License-Identifier: Apache-2.0

#include "pointfree/algebra.hpp"

#include <catch_amalgamated.hpp>

#include <random>

using namespace pointfree;

TEST_CASE("construction bounds and labels") {
    CHECK_THROWS_AS(FiniteAlgebra(0), usage_error);
    CHECK_THROWS_AS(FiniteAlgebra(6), usage_error);
    CHECK_THROWS_AS(FiniteAlgebra(std::vector<std::string>{"a", "a"}), usage_error);

    FiniteAlgebra alg(3);
    CHECK(alg.atom_count() == 3);
    CHECK(alg.universe_size() == 8);
    CHECK(alg.atom_labels() == std::vector<std::string>{"a0", "a1", "a2"});
    CHECK(alg.region_name(0) == "0");
    CHECK(alg.region_name(7) == "1");
    CHECK(alg.region_name(5) == "{a0,a2}");

    CHECK_THROWS_AS(alg.region(8), usage_error);
}

TEST_CASE("identity and complementation laws") {
    FiniteAlgebra alg(3);
    for (RegionCode c = 0; c < alg.universe_size(); ++c) {
        Region x = alg.region(c);
        CHECK(meet(alg.one(), x) == x);
        CHECK(join(x, complement(x)) == alg.one());
        CHECK(meet(x, complement(x)) == alg.zero());
        CHECK(leq(alg.zero(), x));
        CHECK_FALSE(overlap(x, complement(x)));
    }
}

TEST_CASE("pinned small evaluations") {
    FiniteAlgebra alg3(3);
    // {a0,a1} . {a1,a2} = {a1}
    CHECK(meet(alg3.region(0b011), alg3.region(0b110)) == alg3.region(0b010));

    FiniteAlgebra alg2(2);
    CHECK(lt(alg2.region(0b01), alg2.region(0b11)));
    CHECK_FALSE(lt(alg2.region(0b11), alg2.region(0b11)));
}

TEST_CASE("boolean laws, exhaustive for n <= 3") {
    for (int n = 1; n <= 3; ++n) {
        FiniteAlgebra alg(n);
        const RegionCode u = alg.universe_size();
        for (RegionCode a = 0; a < u; ++a)
            for (RegionCode b = 0; b < u; ++b) {
                Region x = alg.region(a), y = alg.region(b);
                CHECK(meet(x, y) == meet(y, x));
                CHECK(join(x, y) == join(y, x));
                CHECK(complement(meet(x, y)) == join(complement(x), complement(y)));
                CHECK(complement(join(x, y)) == meet(complement(x), complement(y)));
                CHECK(join(x, meet(x, y)) == x);
                CHECK(meet(x, join(x, y)) == x);
                for (RegionCode c = 0; c < u; ++c) {
                    Region z = alg.region(c);
                    CHECK(meet(x, meet(y, z)) == meet(meet(x, y), z));
                    CHECK(join(x, join(y, z)) == join(join(x, y), z));
                    CHECK(meet(x, join(y, z)) == join(meet(x, y), meet(x, z)));
                }
            }
        for (RegionCode a = 0; a < u; ++a)
            CHECK(complement(complement(alg.region(a))) == alg.region(a));
    }
}

TEST_CASE("boolean laws, randomized at the size bound") {
    FiniteAlgebra alg(5);
    std::mt19937 rng(20240817);
    std::uniform_int_distribution<RegionCode> pick(0, alg.universe_size() - 1);
    for (int i = 0; i < 2000; ++i) {
        Region x = alg.region(pick(rng)), y = alg.region(pick(rng)), z = alg.region(pick(rng));
        CAPTURE(x.code(), y.code(), z.code());
        CHECK(meet(x, join(y, z)) == join(meet(x, y), meet(x, z)));
        CHECK(join(x, meet(y, z)) == meet(join(x, y), join(x, z)));
        CHECK(complement(meet(x, y)) == join(complement(x), complement(y)));
        CHECK(minus(x, y) == meet(x, complement(y)));
    }
}

TEST_CASE("atoms and atomicity") {
    FiniteAlgebra alg(3);
    CHECK(alg.atoms().size() == 3);
    CHECK_FALSE(is_atom(alg.zero()));
    CHECK(is_atom(alg.atom(1)));
    CHECK_FALSE(is_atom(alg.one()));

    // overlap(a,b) iff some atom lies below both
    for (RegionCode a = 0; a < 8; ++a)
        for (RegionCode b = 0; b < 8; ++b) {
            Region x = alg.region(a), y = alg.region(b);
            bool shared = false;
            for (const Region& t : alg.atoms())
                if (leq(t, x) && leq(t, y)) shared = true;
            CHECK(overlap(x, y) == shared);
        }

    // every nonzero region is the join of the atoms below it
    for (RegionCode a = 1; a < 8; ++a) {
        Region x = alg.region(a);
        Region acc = alg.zero();
        for (const Region& t : atoms_below(x)) acc = join(acc, t);
        CHECK(acc == x);
    }
}

TEST_CASE("down_set enumerates exactly the parts") {
    FiniteAlgebra alg(3);
    auto parts = down_set(alg.region(0b011));
    REQUIRE(parts.size() == 4);
    CHECK(parts[0] == alg.zero());
    CHECK(parts[1] == alg.region(0b001));
    CHECK(parts[2] == alg.region(0b010));
    CHECK(parts[3] == alg.region(0b011));

    CHECK(down_set(alg.one()).size() == 8);
    CHECK(down_set(alg.zero()).size() == 1);
}

TEST_CASE("mixed-algebra operands are rejected") {
    FiniteAlgebra a(2), b(2);
    CHECK_THROWS_AS(meet(a.one(), b.one()), usage_error);
    CHECK_THROWS_AS(leq(a.zero(), b.zero()), usage_error);
    CHECK_FALSE(a.one() == b.one()); // never equal across algebras, but comparable
}
