#include <doctest.h>

#include <stdexcept>

#include "cantor/fat_point.hpp"
#include "cantor/sampling.hpp"

using namespace cantor;

TEST_CASE("make_fat_point validates the core") {
    CHECK_NOTHROW(make_fat_point(Point::parse("1(0)"), PrefixInjection::parse("e->1")));
    CHECK_THROWS_AS(make_fat_point(Point::parse("(0)"), PrefixInjection::parse("e->1")),
                    std::invalid_argument);
    CHECK_NOTHROW(make_fat_point(Point::parse("(0)"), PrefixInjection::parse("e->0")));
    CHECK(FatPoint::parse("1(0) @ e->1").core == Point::parse("1(0)"));
}

TEST_CASE("equivalence compares tissues near the core") {
    FatPoint p = FatPoint::parse("(0) @ e->0");
    CHECK(equivalent(p, p));

    // 0.y = 00.y only at y = (0), never on a cylinder.
    FatPoint q = FatPoint::parse("(0) @ e->00");
    CHECK(!equivalent(p, q));

    // Post-composing with an element fixing C(0) pointwise keeps the class.
    PrefixMap fixer = localize(PrefixMap::parse("0->1,1->0"), BitWord("1"));
    FatPoint r{p.core, compose(fixer, p.tissue)};
    CHECK(equivalent(p, r));
}

TEST_CASE("equivalence is an equivalence relation on sampled fat points") {
    Rng rng(61);
    for (int t = 0; t < 200; ++t) {
        FatPoint a = sampling::random_fat_point(rng);
        FatPoint b = sampling::random_fat_point(rng);
        FatPoint c = sampling::random_fat_point(rng);
        CHECK(equivalent(a, a));
        CHECK(equivalent(a, b) == equivalent(b, a));
        if (equivalent(a, b) && equivalent(b, c)) CHECK(equivalent(a, c));
    }
}

TEST_CASE("the V-action respects equivalence and disjointness") {
    Rng rng(62);
    for (int t = 0; t < 200; ++t) {
        FatPoint p = sampling::random_fat_point(rng);
        PrefixMap g = sampling::random_prefix_map(rng, 4);
        // Build an equivalent representative by squeezing.
        FatPoint q{p.core, squeeze(p.tissue, {p.core.prefix(3 + p.tissue.max_level())}).injection};
        CHECK(equivalent(p, q));
        CHECK(equivalent(act(g, p), act(g, q)));

        FatPoint other = sampling::random_fat_point(rng);
        auto rel = disjoint(p, other);
        CHECK(rel.disjoint == (p.core != other.core));
        if (rel.disjoint) {
            CHECK(rel.p_tissue.image_disjoint_from(rel.q_tissue));
            CHECK(disjoint(act(g, p), act(g, other)).disjoint);
        }
    }
}

TEST_CASE("class stabilizer is the rigid stabilizer of the core") {
    Rng rng(63);
    for (int t = 0; t < 300; ++t) {
        FatPoint p = sampling::random_fat_point(rng);
        PrefixMap g = sampling::random_prefix_map(rng, 4);
        CHECK(equivalent(act(g, p), p) == g.fixes_neighborhood(p.core));
    }
}

TEST_CASE("fat transitivity witness pinned example") {
    FatPoint src = FatPoint::parse("(0) @ e->0");
    FatPoint dst = FatPoint::parse("1(0) @ e->1");
    PrefixMap g = fat_transitivity_witness({src}, {dst});
    CHECK(g == PrefixMap::parse("0->1,1->0"));
    CHECK(equivalent(act(g, src), dst));

    SUBCASE("src = dst verifies equivalence") {
        PrefixMap h = fat_transitivity_witness({src}, {src});
        CHECK(equivalent(act(h, src), src));
    }

    SUBCASE("size mismatch is rejected") {
        CHECK_THROWS_AS(fat_transitivity_witness({src}, {src, dst}), std::invalid_argument);
    }
}

TEST_CASE("fat transitivity on random tuples") {
    Rng rng(64);
    for (int t = 0; t < 50; ++t) {
        std::size_t k = 1 + rng() % 3;
        auto src = sampling::random_fat_tuple(rng, k);
        auto dst = sampling::random_fat_tuple(rng, k);
        PrefixMap g = fat_transitivity_witness(src, dst);
        for (std::size_t i = 0; i < k; ++i) {
            CHECK(equivalent(act(g, src[i]), dst[i]));
        }
    }
}

TEST_CASE("fresh fat point is disjoint from any finite family") {
    Rng rng(65);
    CHECK(fresh_fat_point({}).core == Point::parse("(0)"));
    for (int t = 0; t < 50; ++t) {
        auto family = sampling::random_fat_tuple(rng, 1 + rng() % 4);
        FatPoint fresh = fresh_fat_point(family);
        for (const auto& p : family) {
            CHECK(disjoint(fresh, p).disjoint);
        }
    }
}
