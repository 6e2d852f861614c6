#include <doctest.h>

#include <stdexcept>

#include "cantor/prefix_injection.hpp"
#include "cantor/sampling.hpp"

using namespace cantor;

TEST_CASE("shrinking_to prepends and contracts by exactly 2^-|r|") {
    PrefixInjection tau = shrinking_to(BitWord("011"));
    CHECK(tau(Point::parse("(0)")) == Point::parse("011(0)"));
    CHECK_THROWS_AS(shrinking_to(BitWord{}), std::invalid_argument);

    Rng rng(41);
    for (int t = 0; t < 200; ++t) {
        BitWord r = sampling::random_word_exact(rng, 1 + rng() % 5);
        PrefixInjection s = shrinking_to(r);
        Point x = sampling::random_point(rng);
        Point y = sampling::random_point(rng);
        if (x == y) continue;
        Dist before = metric(x, y);
        Dist after = metric(s(x), s(y));
        CHECK(after.neg_exponent() == before.neg_exponent() + r.level());
    }
}

TEST_CASE("iterated shrinking image diameters collapse") {
    BitWord r("01");
    Point x = Point::parse("(0)");
    Point y = Point::parse("(1)");
    PrefixInjection tau = shrinking_to(r);
    std::uint64_t expected = 1;
    for (int n = 0; n < 6; ++n) {
        CHECK(metric(x, y) == Dist::pow2(expected));
        x = tau(x);
        y = tau(y);
        expected += r.level();
    }
}

TEST_CASE("shrinking fixed point is the periodic word") {
    CHECK(shrinking_fixed_point(BitWord("01")) == Point::parse("(01)"));
    PrefixInjection tau = shrinking_to(BitWord("01"));
    Point p = shrinking_fixed_point(BitWord("01"));
    CHECK(tau(p) == p);
}

TEST_CASE("squeeze pushes the image into the target while agreeing near (0)") {
    PrefixInjection h = PrefixInjection::prepend(BitWord("1"));
    auto result = squeeze(h, {BitWord("10")});
    // Image inside the target.
    for (const auto& w : result.injection.image_words()) {
        CHECK(BitWord("10").is_prefix_of(w));
    }
    // Agreement with h on C(0^N).
    const std::size_t n = result.agreement_level;
    CHECK(result.injection.restriction_to_zero_cylinder(n) ==
          h.restriction_to_zero_cylinder(n));
    Point deep = Point::parse("(0)").with_prefix(BitWord::zeros(n));
    CHECK(result.injection(deep) == h(deep));

    SUBCASE("already inside the target returns unchanged with N = 0") {
        auto again = squeeze(result.injection, {BitWord("10")});
        CHECK(again.agreement_level == 0);
        CHECK(again.injection == result.injection);
    }

    SUBCASE("a target missing the core is rejected") {
        CHECK_THROWS_AS(squeeze(h, {BitWord("0")}), std::invalid_argument);
    }
}

TEST_CASE("squeeze works from random injections") {
    Rng rng(42);
    for (int t = 0; t < 100; ++t) {
        PrefixMap g = sampling::random_prefix_map(rng, 4);
        PrefixInjection h = compose(g, PrefixInjection::prepend(sampling::random_word(rng, 3)));
        Point core = h(Point());
        BitWord target = core.prefix(core.preperiod().level() + 1 + rng() % 3);
        auto result = squeeze(h, {target});
        for (const auto& w : result.injection.image_words()) {
            CHECK(target.is_prefix_of(w));
        }
        CHECK(result.injection(Point()) == core);
        Point probe =
            sampling::random_point(rng).with_prefix(BitWord::zeros(result.agreement_level));
        CHECK(result.injection(probe) == h(probe));
    }
}

TEST_CASE("injection validation") {
    CHECK_THROWS_AS(PrefixInjection::parse("0->00,1->0"), std::invalid_argument);
    CHECK_THROWS_AS(PrefixInjection::parse("0->00"), std::invalid_argument);
    PrefixInjection ok = PrefixInjection::parse("0->00,1->10");
    CHECK(ok.image_words() == std::vector<BitWord>{BitWord("00"), BitWord("10")});
    CHECK(!ok.image_contains(Point::parse("(1)")));
    CHECK(ok.preimage(Point::parse("10(1)")) == Point::parse("1(1)"));
    CHECK_THROWS_AS(ok.preimage(Point::parse("(1)")), std::invalid_argument);
}
