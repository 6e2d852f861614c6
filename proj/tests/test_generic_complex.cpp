#include <doctest.h>

#include <stdexcept>

#include "cantor/generic_complex.hpp"
#include "cantor/sampling.hpp"

using namespace cantor;

namespace {

std::vector<Element> dyadic_tuple(std::initializer_list<const char*> texts) {
    std::vector<Element> out;
    for (const char* t : texts) out.emplace_back(Point::parse(t));
    return out;
}

std::vector<std::vector<Element>> sample_dyadic_tuples(Rng& rng, std::size_t arity,
                                                       std::size_t count) {
    std::vector<std::vector<Element>> tuples;
    while (tuples.size() < count) {
        std::vector<Element> tuple;
        for (const auto& p : sampling::random_distinct_dyadic(rng, arity)) {
            tuple.emplace_back(p);
        }
        tuples.push_back(std::move(tuple));
    }
    return tuples;
}

std::vector<std::vector<Element>> sample_fat_tuples(Rng& rng, std::size_t arity,
                                                    std::size_t count) {
    std::vector<std::vector<Element>> tuples;
    while (tuples.size() < count) {
        std::vector<Element> tuple;
        for (const auto& p : sampling::random_fat_tuple(rng, arity)) tuple.emplace_back(p);
        tuples.push_back(std::move(tuple));
    }
    return tuples;
}

}  // namespace

TEST_CASE("is_generic_tuple") {
    CHECK(is_generic_tuple(Relation::DistinctDyadic, dyadic_tuple({"(0)", "1(0)"})));
    CHECK(!is_generic_tuple(Relation::DistinctDyadic, dyadic_tuple({"(0)", "(0)"})));
    CHECK(!is_generic_tuple(Relation::DistinctDyadic, dyadic_tuple({"(0)", "(01)"})));

    FatPoint a = FatPoint::parse("(0) @ e->0");
    FatPoint b = FatPoint::parse("(0) @ e->00");
    std::vector<Element> fat{a, b};
    CHECK(!is_generic_tuple(Relation::FatDisjoint, fat));
    std::vector<Element> ok{a, Element{FatPoint::parse("1(0) @ e->1")}};
    CHECK(is_generic_tuple(Relation::FatDisjoint, ok));
}

TEST_CASE("fresh_point follows the deterministic rule") {
    CHECK(std::get<Point>(fresh_point(Relation::DistinctDyadic, {})) == Point::parse("(0)"));

    std::vector<Element> f1 = dyadic_tuple({"(0)", "1(0)"});
    CHECK(std::get<Point>(fresh_point(Relation::DistinctDyadic, f1)) == Point::parse("01(0)"));

    std::vector<Element> f2 = dyadic_tuple({"(0)", "01(0)"});
    CHECK(std::get<Point>(fresh_point(Relation::DistinctDyadic, f2)) == Point::parse("001(0)"));

    Rng rng(81);
    for (int t = 0; t < 50; ++t) {
        auto tuples = sample_dyadic_tuples(rng, 4, 1);
        Element fresh = fresh_point(Relation::DistinctDyadic, tuples.front());
        auto extended = tuples.front();
        extended.push_back(fresh);
        CHECK(is_generic_tuple(Relation::DistinctDyadic, extended));
    }
    for (int t = 0; t < 50; ++t) {
        auto tuples = sample_fat_tuples(rng, 3, 1);
        Element fresh = fresh_point(Relation::FatDisjoint, tuples.front());
        auto extended = tuples.front();
        extended.push_back(fresh);
        CHECK(is_generic_tuple(Relation::FatDisjoint, extended));
    }
}

TEST_CASE("coboundary pinned examples") {
    // d(const 1 on 1-tuples) = 1 - 1 = 0.
    Cochain d1 = Cochain::constant(1, Rat(1)).coboundary();
    CHECK(d1.eval(dyadic_tuple({"(0)", "1(0)"})) == Rat(0));

    // d(const 1 on 2-tuples) = 1 - 1 + 1 = 1.
    Cochain d2 = Cochain::constant(2, Rat(1)).coboundary();
    CHECK(d2.eval(dyadic_tuple({"(0)", "01(0)", "1(0)"})) == Rat(1));

    // d(lex indicator) at ((0), 01(0), 1(0)): [01(0)<1(0)] - [(0)<1(0)] + [(0)<01(0)] = 1.
    Cochain dlex = Cochain::lex_indicator().coboundary();
    CHECK(dlex.eval(dyadic_tuple({"(0)", "01(0)", "1(0)"})) == Rat(1));

    // Bound grows by the term count.
    CHECK(dlex.bound() == Rat(3));
}

TEST_CASE("homotopy pinned examples") {
    Element base{Point::parse("(0)")};

    Cochain theta_const = Cochain::constant(2, Rat(1)).homotopy(base);
    CHECK(theta_const.arity() == 1);
    CHECK(theta_const.eval(dyadic_tuple({"1(0)"})) == Rat(1));

    Cochain theta_lex = Cochain::lex_indicator().homotopy(base);
    CHECK(theta_lex.eval(dyadic_tuple({"1(0)"})) == Rat(1));  // (0) < 1(0)

    // Base collision is a genericity violation at evaluation time.
    CHECK_THROWS_AS(theta_lex.eval(dyadic_tuple({"(0)"})), std::domain_error);
}

TEST_CASE("homotopy identity holds exactly under both relations") {
    Rng rng(82);
    for (std::size_t arity = 1; arity <= 4; ++arity) {
        auto tuples = sample_dyadic_tuples(rng, arity, 50);
        CHECK(verify_homotopy_identity(Relation::DistinctDyadic,
                                       Cochain::constant(arity, Rat(7, 3)), tuples));
        if (arity == 2) {
            CHECK(verify_homotopy_identity(Relation::DistinctDyadic, Cochain::lex_indicator(),
                                           tuples));
            CHECK(verify_homotopy_identity(
                Relation::DistinctDyadic,
                Cochain::lex_indicator().pullback(sampling::random_prefix_map(rng, 4)), tuples));
        }
        auto fat = sample_fat_tuples(rng, arity, 20);
        CHECK(verify_homotopy_identity(Relation::FatDisjoint,
                                       Cochain::constant(arity, Rat(-5, 2)), fat));
    }
}

TEST_CASE("dd = 0 and equivariance on sampled tuples") {
    Rng rng(83);
    for (std::size_t arity = 1; arity <= 3; ++arity) {
        std::vector<Cochain> fs{Cochain::constant(arity, Rat(2, 9))};
        if (arity == 2) fs.push_back(Cochain::lex_indicator());
        for (const auto& f : fs) {
            Cochain dd = f.coboundary().coboundary();
            for (const auto& t : sample_dyadic_tuples(rng, arity + 2, 20)) {
                CHECK(dd.eval(t) == Rat(0));
            }
            PrefixMap g = sampling::random_prefix_map(rng, 4);
            Cochain a = f.pullback(g).coboundary();
            Cochain b = f.coboundary().pullback(g);
            for (const auto& t : sample_dyadic_tuples(rng, arity + 1, 20)) {
                CHECK(a.eval(t) == b.eval(t));
            }
        }
    }
}

TEST_CASE("linear combinations stay within the declared bound") {
    Rng rng(84);
    Cochain f = Cochain::linear({{Rat(1, 2), Cochain::lex_indicator()},
                                 {Rat(-3, 4), Cochain::constant(2, Rat(2))}});
    CHECK(f.bound() == Rat(1, 2) + Rat(3, 2));
    for (const auto& t : sample_dyadic_tuples(rng, 2, 50)) {
        Rat v = f.eval(t);
        if (v < Rat(0)) v = -v;
        CHECK(v <= f.bound());
    }
    CHECK_THROWS_AS(Cochain::linear({{Rat(1), Cochain::constant(1, Rat(1))},
                                     {Rat(1), Cochain::constant(2, Rat(1))}}),
                    std::invalid_argument);
}

TEST_CASE("delta pattern alternates up to arity 8") {
    auto rows = invariant_delta_pattern(8);
    REQUIRE(rows.size() == 8);
    for (const auto& row : rows) {
        if (row.arity % 2 == 1) {
            CHECK(row.vanishes);
            CHECK(row.sample_value == Rat(0));
        } else {
            CHECK(!row.vanishes);
            CHECK(row.sample_value == Rat(1));
        }
    }
}

TEST_CASE("rationals print as p/q") {
    CHECK(rat_str(Rat(3, 7)) == "3/7");
    CHECK(rat_str(Rat(0)) == "0/1");
    CHECK(rat_str(Rat(-4, 8)) == "-1/2");
}
