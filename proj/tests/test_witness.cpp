#include <doctest.h>

#include <stdexcept>

#include "cantor/sampling.hpp"
#include "cantor/witness.hpp"

using namespace cantor;

TEST_CASE("generator tables and identities") {
    const Generators gen = generators();
    CHECK(gen.E == PrefixMap::parse("00->0,01->11,1->10"));
    CHECK(word_eval("C C D C A") == gen.E);
    CHECK(commutator(gen.A, gen.B) ==
          PrefixMap::parse("00->00,010->01,011->10,10->1100,110->1101,111->111"));
}

TEST_CASE("transitivity witness pinned examples") {
    Point zero = Point::parse("(0)");
    CHECK(transitivity_witness(zero, zero) == PrefixMap::identity());

    CHECK(transitivity_witness(zero, Point::parse("1(0)")) ==
          PrefixMap::parse("00->10,10->00,01->01,11->11"));

    // ((0), 01(0)): swap of C(000) and C(010), identity on the rest.
    PrefixMap g = transitivity_witness(zero, Point::parse("01(0)"));
    CHECK(g(zero) == Point::parse("01(0)"));
    CHECK(g.image_of_cylinder(BitWord("000")) == std::vector<BitWord>{BitWord("010")});
    CHECK(g.image_of_cylinder(BitWord("010")) == std::vector<BitWord>{BitWord("000")});
    CHECK(g.fixes_cylinder(BitWord("1")));
    CHECK(g.fixes_cylinder(BitWord("001")));

    CHECK_THROWS_AS(transitivity_witness(zero, Point::parse("(01)")), std::invalid_argument);
}

TEST_CASE("transitivity witness moves random dyadic pairs") {
    Rng rng(71);
    for (int t = 0; t < 200; ++t) {
        Point x = sampling::random_dyadic(rng);
        Point y = sampling::random_dyadic(rng);
        PrefixMap g = transitivity_witness(x, y);
        CHECK(g(x) == y);
        CHECK(g(y) == x);  // the witness is the cylinder swap
    }
}

TEST_CASE("tuple transitivity witness") {
    Point zero = Point::parse("(0)");
    Point one = Point::parse("1(0)");

    SUBCASE("swapping a pair") {
        PrefixMap g = tuple_transitivity_witness({zero, one}, {one, zero});
        CHECK(g(zero) == one);
        CHECK(g(one) == zero);
    }

    SUBCASE("identity tuples") {
        PrefixMap g = tuple_transitivity_witness({zero, one}, {zero, one});
        CHECK(g(zero) == zero);
        CHECK(g(one) == one);
    }

    SUBCASE("duplicates and length mismatches are rejected") {
        CHECK_THROWS_AS(tuple_transitivity_witness({zero, zero}, {zero, one}),
                        std::invalid_argument);
        CHECK_THROWS_AS(tuple_transitivity_witness({zero}, {zero, one}), std::invalid_argument);
    }

    SUBCASE("random 5-tuples, with back-and-forth fixing the points") {
        Rng rng(72);
        for (int t = 0; t < 100; ++t) {
            auto xs = sampling::random_distinct_dyadic(rng, 5);
            auto ys = sampling::random_distinct_dyadic(rng, 5);
            std::shuffle(ys.begin(), ys.end(), rng);
            PrefixMap g = tuple_transitivity_witness(xs, ys);
            for (std::size_t i = 0; i < xs.size(); ++i) CHECK(g(xs[i]) == ys[i]);
            PrefixMap back = tuple_transitivity_witness(ys, xs);
            for (std::size_t i = 0; i < xs.size(); ++i) {
                CHECK((back * g)(xs[i]) == xs[i]);
            }
        }
    }
}

TEST_CASE("commutator fix check pinned examples") {
    const Generators gen = generators();
    Point zero = Point::parse("(0)");

    // g = h gives the identity commutator.
    auto same = commutator_fix_check(gen.A, gen.A, zero);
    CHECK(same.verified);

    auto report = commutator_fix_check(gen.A, gen.E, zero);
    CHECK(report.L == 3);
    CHECK(report.fixed_cylinder == BitWord("000"));
    CHECK(report.verified);

    CHECK_THROWS_AS(commutator_fix_check(PrefixMap::parse("0->1,1->0"), gen.A, zero),
                    std::invalid_argument);
}

TEST_CASE("commutator fix check on random stabilizer pairs") {
    Rng rng(73);
    for (int t = 0; t < 100; ++t) {
        PrefixMap g = sampling::random_stabilizer_map(rng, 5);
        PrefixMap h = sampling::random_stabilizer_map(rng, 5);
        auto report = commutator_fix_check(g, h, Point::parse("(0)"));
        CHECK(report.verified);
        // Qualitatively the commutator fixes a neighborhood in either
        // orientation; the L bound belongs to g h g^-1 h^-1.
        CHECK(commutator(g, h).fixes_neighborhood(Point::parse("(0)")));
        CHECK((g * h * g.inverse() * h.inverse()).fixes_neighborhood(Point::parse("(0)")));
    }
}

TEST_CASE("derived witness pinned example") {
    PrefixMap h = PrefixMap::parse("0->0,10->11,11->10");
    auto witness = derived_witness(h, BitWord("0"), Point::parse("(0)"));
    CHECK(witness.r == BitWord("0000"));
    CHECK(witness.h_prime.fixes_cylinder(witness.r));

    // h = identity admits any conforming witness.
    CHECK_NOTHROW(derived_witness(PrefixMap::identity(), BitWord("0"), Point::parse("(0)")));

    // Preconditions: z outside U, h moving U.
    CHECK_THROWS_AS(derived_witness(h, BitWord("0"), Point::parse("1(0)")),
                    std::invalid_argument);
    CHECK_THROWS_AS(derived_witness(PrefixMap::parse("0->1,1->0"), BitWord("0"),
                                    Point::parse("(0)")),
                    std::invalid_argument);
}

TEST_CASE("derived witness postconditions on random inputs") {
    Rng rng(74);
    for (int t = 0; t < 100; ++t) {
        BitWord u = sampling::random_word(rng, 3);
        PrefixMap h = sampling::random_map_fixing_cylinder(rng, u, 4);
        Point z = sampling::random_point_in(rng, u);
        auto witness = derived_witness(h, u, z);  // self-checking
        CHECK(z.in_cylinder(witness.r));
        CHECK(u.is_prefix_of(witness.r));
        // Pointwise spot-check of (ii) outside C(U).
        PrefixMap c = commutator(witness.h_prime, h);
        for (int i = 0; i < 20; ++i) {
            Point x = sampling::random_point(rng);
            if (x.in_cylinder(u)) continue;
            CHECK(c(x) == h(x));
        }
    }
}

TEST_CASE("stab_h structure") {
    CHECK_THROWS_AS(stab_h(1), std::invalid_argument);
    for (std::size_t m : {2, 3, 4, 5}) {
        PrefixMap h = stab_h(m);
        CHECK(h.pieces().size() == 2 * m + 2);
        CHECK(h(Point::parse("(0)")) == Point::parse("(0)"));
        CHECK(h.fixes_cylinder(BitWord::zeros(m + 1)));
        // Everything outside C(0^M) lands in C(10).
        for (std::size_t k = 1; k <= m; ++k) {
            BitWord tk = BitWord::zeros(m - k).append(1);
            for (const auto& w : h.image_of_cylinder(tk)) {
                CHECK(BitWord("10").is_prefix_of(w));
            }
        }
    }
}

TEST_CASE("conjugation into the displaced cylinder") {
    SUBCASE("identity family") {
        auto result = conjugate_into_support({PrefixMap::identity()});
        CHECK(result.ok);
        CHECK(result.M == 2);
        CHECK(result.factors_fix_zero);
    }

    SUBCASE("an element fixing (0) without a neighborhood is rejected") {
        CHECK_THROWS_AS(conjugate_into_support({generators().E}), std::invalid_argument);
    }

    SUBCASE("random commutator families") {
        Rng rng(75);
        for (int t = 0; t < 20; ++t) {
            std::vector<PrefixMap> family;
            for (int i = 0; i < 3; ++i) {
                family.push_back(commutator(sampling::random_stabilizer_map(rng, 4),
                                            sampling::random_stabilizer_map(rng, 4)));
            }
            auto result = conjugate_into_support(family);
            CHECK(result.ok);
            CHECK(result.factors_fix_zero);
            // The conjugator really is [h', h] with both factors fixing (0).
            CHECK(result.conjugator ==
                  commutator(result.h_prime, result.h));
        }
    }
}

TEST_CASE("displacement check") {
    const Generators gen = generators();
    PrefixMap g = commutator(gen.A, gen.B);
    CHECK(displacement_check(g, BitWord("10"), 6));
    CHECK(!displacement_check(PrefixMap::identity(), BitWord("10"), 3));

    // The iterated images of C(10) stay inside C(110); under the inverse
    // they stay inside C(01).  Either containment gives the displacement.
    PrefixMap gk = PrefixMap::identity();
    PrefixMap hk = PrefixMap::identity();
    for (int k = 1; k <= 6; ++k) {
        gk = gk * g;
        hk = hk * g.inverse();
        for (const auto& w : gk.image_of_cylinder(BitWord("10"))) {
            CHECK(BitWord("110").is_prefix_of(w));
        }
        for (const auto& w : hk.image_of_cylinder(BitWord("10"))) {
            CHECK(BitWord("01").is_prefix_of(w));
        }
    }

    // Localized copies displace the localized cylinder.
    Rng rng(76);
    for (int t = 0; t < 50; ++t) {
        BitWord r = sampling::random_word(rng, 3);
        CHECK(displacement_check(localize(g, r), r.concat(BitWord("10")), 4));
    }
}
