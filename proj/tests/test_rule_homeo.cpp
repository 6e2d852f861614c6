#include <doctest.h>

#include <stdexcept>

#include "cantor/rule_homeo.hpp"
#include "cantor/sampling.hpp"

using namespace cantor;

namespace {

Point random_xu_point(Rng& rng, const DissipatorOrbits& orbits) {
    for (;;) {
        Point x = sampling::random_point(rng);
        if (orbits.in_xu(x)) return x;
    }
}

}  // namespace

TEST_CASE("dissipator M=3 acts by the tau rules") {
    const RuleHomeo gu = RuleHomeo::dissipator(3);
    const DissipatorOrbits orbits(3);

    // X_U = C(1); the image of C(1) under g_U is C(0111).
    CHECK(orbits.xu_cylinders() == std::vector<BitWord>{BitWord("1")});
    Rng rng(51);
    for (int t = 0; t < 50; ++t) {
        Point x = sampling::random_point(rng).with_prefix(BitWord("1"));
        CHECK(gu(x) == x.with_prefix(BitWord("011")));
        CHECK(gu(x).in_cylinder(BitWord("0111")));
    }

    CHECK(gu(Point::parse("(0)")) == Point::parse("(0)"));
    CHECK(gu(orbits.plus_fixed) == orbits.plus_fixed);
    CHECK(orbits.plus_fixed == Point::parse("(011)"));
    CHECK(orbits.minus_fixed == Point::parse("(010)"));

    // Dropping M coordinates on the negative orbit.
    Point in_p_minus_1 = Point::parse("1(0)").with_prefix(BitWord("010"));
    CHECK(gu(in_p_minus_1) == Point::parse("1(0)"));

    CHECK_THROWS_AS(RuleHomeo::dissipator(2), std::invalid_argument);
}

TEST_CASE("dissipator displacement axiom for M in {3,4,5}") {
    Rng rng(52);
    for (int m : {3, 4, 5}) {
        const RuleHomeo gu = RuleHomeo::dissipator(m);
        const DissipatorOrbits orbits(m);
        for (int t = 0; t < 50; ++t) {
            Point x = random_xu_point(rng, orbits);
            Point y = x;
            for (int k = 1; k <= 6; ++k) {
                y = gu(y);
                CHECK(!orbits.in_xu(y));
            }
        }
    }
}

TEST_CASE("orbit classification is coherent under the dissipator") {
    Rng rng(53);
    for (int m : {3, 4}) {
        const RuleHomeo gu = RuleHomeo::dissipator(m);
        const DissipatorOrbits orbits(m);
        for (int t = 0; t < 200; ++t) {
            Point x = sampling::random_point(rng);
            auto region = orbits.classify(x);
            using Kind = DissipatorOrbits::Region::Kind;
            switch (region.kind) {
                case Kind::Orbit: {
                    auto next = orbits.classify(gu(x));
                    REQUIRE(next.kind == Kind::Orbit);
                    CHECK(next.n == region.n + 1);
                    break;
                }
                case Kind::PlusInfinity:
                case Kind::MinusInfinity:
                case Kind::Outside:
                    CHECK(gu(x) == x);
                    break;
            }
            // The inverse undoes the step exactly.
            CHECK(gu.inverse()(gu(x)) == x);
        }
    }
}

TEST_CASE("binate phi pinned examples") {
    CHECK(RuleHomeo::binate_phi(PrefixMap::identity(), 3)(Point::parse("(011)")) ==
          Point::parse("(011)"));

    // Support violation: the first-bit flip moves C(0) for M=3 (U = C(0)).
    CHECK_THROWS_AS(RuleHomeo::binate_phi(PrefixMap::parse("0->1,1->0"), 3),
                    std::invalid_argument);

    Rng rng(54);
    const int m = 3;
    const BitWord u = BitWord::zeros(m - 2);
    const DissipatorOrbits orbits(m);
    for (int t = 0; t < 20; ++t) {
        PrefixMap h = sampling::random_map_fixing_cylinder(rng, u, 4);
        const RuleHomeo phi = RuleHomeo::binate_phi(h, m);
        // phi(h) is the identity on X_U itself and on the identity region.
        Point x0 = random_xu_point(rng, orbits);
        CHECK(phi(x0) == x0);
        CHECK(phi(Point::parse("(0)")) == Point::parse("(0)"));
        // On P_1 it is g_U h g_U^-1.
        const RuleHomeo gu = RuleHomeo::dissipator(m);
        Point x1 = gu(x0);
        CHECK(phi(x1) == gu(h(x0)));
    }
}

TEST_CASE("binate identity h = [g_U, psi(h)] pointwise") {
    Rng rng(55);
    for (int m : {3, 4}) {
        const BitWord u = BitWord::zeros(m - 2);
        const RuleHomeo gu = RuleHomeo::dissipator(m);
        for (int t = 0; t < 20; ++t) {
            PrefixMap h = sampling::random_map_fixing_cylinder(rng, u, 4);
            const RuleHomeo comm = RuleHomeo::commutator(gu, RuleHomeo::binate_psi(h, m));
            for (int i = 0; i < 50; ++i) {
                Point x = sampling::random_point(rng);
                CHECK(comm(x) == h(x));
            }
        }
    }
}

TEST_CASE("xor translation pinned examples") {
    CHECK(RuleHomeo::xor_translation(Point::parse("(0)"))(Point::parse("(101)")) ==
          Point::parse("(101)"));

    Point x = Point::parse("(0)");
    Point y = Point::parse("(01)");
    Point mask = xor_add(x, y);
    CHECK(mask == Point::parse("(01)"));
    CHECK(RuleHomeo::xor_translation(mask)(x) == y);
    CHECK(RuleHomeo::xor_translation(mask)(y) == x);

    Rng rng(56);
    for (int t = 0; t < 500; ++t) {
        Point mask2 = sampling::random_point(rng);
        const RuleHomeo f = RuleHomeo::xor_translation(mask2);
        Point a = sampling::random_point(rng);
        Point b = sampling::random_point(rng);
        CHECK(f(f(a)) == a);                      // involution
        CHECK(metric(f(a), f(b)) == metric(a, b));  // isometry
        CHECK(f.inverse()(f(a)) == a);
    }
}

TEST_CASE("interleave zeros pinned examples") {
    CHECK(interleave_with_zeros(Point::parse("(0)")) == Point::parse("(0)"));
    CHECK(interleave_with_zeros(Point::parse("(1)")) == Point::parse("(01)"));
    CHECK(RuleHomeo::interleave_zeros()(Point::parse("1(0)")) == Point::parse("01(0)"));
    CHECK_THROWS_AS(RuleHomeo::interleave_zeros().inverse(), std::invalid_argument);
}

TEST_CASE("interleave image contains no cylinder") {
    Rng rng(57);
    auto in_image = [](const Point& p) {
        // Odd positions must all be zero; eventually periodic, so checking
        // one preperiod+period window of odd positions suffices.
        std::uint64_t window = p.preperiod().level() + 2 * p.period().level() + 2;
        for (std::uint64_t n = 1; n <= window; n += 2) {
            if (p.bit(n) == 1) return false;
        }
        return true;
    };
    for (int t = 0; t < 200; ++t) {
        BitWord r = sampling::random_word(rng, 6);
        auto probe = interleave_image_contains_cylinder(r);
        CHECK(!probe.contains);
        CHECK(probe.witness.in_cylinder(r));
        CHECK(!in_image(probe.witness));
    }
    // Sanity: actual image points satisfy the pattern.
    for (int t = 0; t < 50; ++t) {
        Point x = sampling::random_point(rng);
        CHECK(in_image(interleave_with_zeros(x)));
    }
}
