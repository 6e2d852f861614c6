#include <doctest.h>

#include <stdexcept>

#include "cantor/verify.hpp"

using namespace cantor;

TEST_CASE("identical seeds give byte-identical reports") {
    VerifyOptions opts;
    opts.seed = 42;
    opts.trials = 20;
    for (const char* suite : {"group-axioms", "transitivity", "fat-points"}) {
        VerifyReport a = run_suite(suite, opts);
        VerifyReport b = run_suite(suite, opts);
        CHECK(a.text() == b.text());
        CHECK(a.json() == b.json());
        CHECK(a.passed());
    }
}

TEST_CASE("unknown suites are rejected") {
    CHECK_THROWS_AS(run_suite("nosuch", VerifyOptions{}), std::invalid_argument);
}

TEST_CASE("all runs every suite") {
    VerifyOptions opts;
    opts.trials = 5;
    opts.arity = 2;
    opts.kmax = 4;
    VerifyReport report = run_suite("all", opts);
    CHECK(report.passed());
    CHECK(report.suite == "all");
}
