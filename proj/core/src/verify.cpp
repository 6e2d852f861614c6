#include "cantor/verify.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <sstream>
#include <stdexcept>

#include <nlohmann/json.hpp>

#include "cantor/generic_complex.hpp"
#include "cantor/rule_homeo.hpp"
#include "cantor/sampling.hpp"
#include "cantor/witness.hpp"

namespace cantor {

std::string VerifyReport::text() const {
    std::ostringstream out;
    out << "suite: " << suite << "\nseed: " << seed << "\ntrials: " << trials << "\n";
    std::vector<VerifyFailure> sorted = failures;
    std::sort(sorted.begin(), sorted.end(),
              [](const VerifyFailure& a, const VerifyFailure& b) { return a.input < b.input; });
    for (const auto& f : sorted) {
        out << "FAIL input=" << f.input << " expected=" << f.expected << " got=" << f.got
            << "\n";
    }
    out << (failures.empty() ? "result: pass" : "result: fail") << " ("
        << failures.size() << " failures)\n";
    return out.str();
}

std::string VerifyReport::json() const {
    nlohmann::json j;
    j["suite"] = suite;
    j["seed"] = seed;
    j["trials"] = trials;
    std::vector<VerifyFailure> sorted = failures;
    std::sort(sorted.begin(), sorted.end(),
              [](const VerifyFailure& a, const VerifyFailure& b) { return a.input < b.input; });
    j["failures"] = nlohmann::json::array();
    for (const auto& f : sorted) {
        j["failures"].push_back({{"input", f.input}, {"expected", f.expected}, {"got", f.got}});
    }
    return j.dump(2);
}

namespace {

using sampling::random_code;
using sampling::random_distinct_dyadic;
using sampling::random_dyadic;
using sampling::random_fat_point;
using sampling::random_fat_tuple;
using sampling::random_map_fixing_cylinder;
using sampling::random_point;
using sampling::random_point_in;
using sampling::random_prefix_map;
using sampling::random_stabilizer_map;
using sampling::random_word;

struct Check {
    VerifyReport* report;
    void expect(bool ok, const std::string& input, const std::string& expected,
                const std::string& got) const {
        if (!ok) report->failures.push_back(VerifyFailure{input, expected, got});
    }
    void expect_true(bool ok, const std::string& input, const std::string& got) const {
        expect(ok, input, "true", got);
    }
};

std::uint64_t defaulted(std::uint64_t trials, std::uint64_t fallback) {
    return trials == 0 ? fallback : trials;
}

void suite_generators(const VerifyOptions& opts, VerifyReport& report) {
    (void)opts;
    Check check{&report};
    const Generators gen = generators();
    report.trials = 5;

    const PrefixMap e_word = word_eval("C C D C A");
    check.expect(e_word == gen.E, "word C C D C A", gen.E.str(), e_word.str());

    const PrefixMap g = commutator(gen.A, gen.B);
    const PrefixMap g_table =
        PrefixMap::parse("00->00,010->01,011->10,10->1100,110->1101,111->111");
    check.expect(g == g_table, "[A,B]", g_table.str(), g.str());

    check.expect(word_eval("") == PrefixMap::identity(), "word <empty>", "e->e",
                 word_eval("").str());
    check.expect(word_eval("A A'") == PrefixMap::identity(), "word A A'", "e->e",
                 word_eval("A A'").str());

    const std::map<std::string, std::pair<PrefixMap, MembershipClass::Kind>> table{
        {"A", {gen.A, MembershipClass::Kind::F}},
        {"B", {gen.B, MembershipClass::Kind::F}},
        {"C", {gen.C, MembershipClass::Kind::TOnly}},
        {"D", {gen.D, MembershipClass::Kind::VOnly}},
        {"E", {gen.E, MembershipClass::Kind::VOnly}},
    };
    for (const auto& [name, entry] : table) {
        const auto kind = entry.first.membership_class().kind;
        check.expect(kind == entry.second, "class " + name,
                     MembershipClass::name(entry.second), MembershipClass::name(kind));
    }
}

void suite_group_axioms(const VerifyOptions& opts, VerifyReport& report) {
    Check check{&report};
    Rng rng(opts.seed);
    report.trials = defaulted(opts.trials, 200);

    for (std::uint64_t t = 0; t < report.trials; ++t) {
        PrefixMap f = random_prefix_map(rng, 5);
        PrefixMap g = random_prefix_map(rng, 5);
        PrefixMap h = random_prefix_map(rng, 5);
        check.expect((f * g) * h == f * (g * h), "assoc " + f.str() + " ; " + g.str(),
                     "equal", "differ");
        check.expect(f * f.inverse() == PrefixMap::identity(), "inverse " + f.str(),
                     "e->e", (f * f.inverse()).str());
        check.expect(f * PrefixMap::identity() == f && PrefixMap::identity() * f == f,
                     "identity " + f.str(), "f", "differ");

        Point x = random_point(rng);
        Point lhs = (f * g)(x);
        Point rhs = f(g(x));
        check.expect(lhs == rhs, "coherence " + f.str() + " ; " + g.str() + " @ " + x.str(),
                     rhs.str(), lhs.str());
    }
}

void suite_commutator_fix(const VerifyOptions& opts, VerifyReport& report) {
    Check check{&report};
    Rng rng(opts.seed);
    report.trials = defaulted(opts.trials, 100);

    for (std::uint64_t t = 0; t < report.trials; ++t) {
        PrefixMap g = random_stabilizer_map(rng, 5);
        PrefixMap h = random_stabilizer_map(rng, 5);
        auto result = commutator_fix_check(g, h, Point());
        check.expect_true(result.verified,
                          "commutator-fix " + g.str() + " ; " + h.str(),
                          "not fixed on C(" + result.fixed_cylinder.display() + ")");
    }
}

void suite_derived_witness(const VerifyOptions& opts, VerifyReport& report) {
    Check check{&report};
    Rng rng(opts.seed);
    report.trials = defaulted(opts.trials, 100);

    for (std::uint64_t t = 0; t < report.trials; ++t) {
        BitWord u = random_word(rng, 3);
        PrefixMap h = random_map_fixing_cylinder(rng, u, 4);
        Point z = random_point_in(rng, u);
        try {
            auto witness = derived_witness(h, u, z);
            check.expect_true(z.in_cylinder(witness.r),
                              "derived-witness " + h.str() + " U=" + u.display(),
                              "z outside C(r)");
        } catch (const std::exception& e) {
            check.expect_true(false, "derived-witness " + h.str() + " U=" + u.display(),
                              e.what());
        }
    }
}

void suite_transitivity(const VerifyOptions& opts, VerifyReport& report) {
    Check check{&report};
    Rng rng(opts.seed);
    report.trials = defaulted(opts.trials, 100);

    for (std::uint64_t t = 0; t < report.trials; ++t) {
        const std::size_t k = 1 + static_cast<std::size_t>(rng() % 5);
        std::vector<Point> xs = random_distinct_dyadic(rng, k);
        std::vector<Point> ys = random_distinct_dyadic(rng, k);
        std::shuffle(ys.begin(), ys.end(), rng);
        try {
            PrefixMap g = tuple_transitivity_witness(xs, ys);
            PrefixMap back = tuple_transitivity_witness(ys, xs);
            PrefixMap round = back * g;
            for (std::size_t i = 0; i < k; ++i) {
                check.expect(round(xs[i]) == xs[i], "round-trip " + xs[i].str(),
                             xs[i].str(), round(xs[i]).str());
            }
        } catch (const std::exception& e) {
            check.expect_true(false, "tuple witness k=" + std::to_string(k), e.what());
        }
    }
}

void suite_dissipator(const VerifyOptions& opts, VerifyReport& report) {
    Check check{&report};
    Rng rng(opts.seed);
    report.trials = defaulted(opts.trials, 50);

    std::vector<int> levels = opts.M > 0 ? std::vector<int>{opts.M} : std::vector<int>{3, 4, 5};
    for (int m : levels) {
        const DissipatorOrbits orbits(m);
        const RuleHomeo gu = RuleHomeo::dissipator(m);
        check.expect(gu(Point()) == Point(), "g_U((0)) M=" + std::to_string(m), "(0)",
                     gu(Point()).str());
        check.expect(gu(orbits.plus_fixed) == orbits.plus_fixed, "g_U fixes P_inf",
                     orbits.plus_fixed.str(), gu(orbits.plus_fixed).str());
        check.expect(gu(orbits.minus_fixed) == orbits.minus_fixed, "g_U fixes P_-inf",
                     orbits.minus_fixed.str(), gu(orbits.minus_fixed).str());

        for (std::uint64_t t = 0; t < report.trials; ++t) {
            Point x = random_point(rng);
            while (!orbits.in_xu(x)) x = random_point(rng);

            Point y = x;
            for (int k = 1; k <= 6; ++k) {
                y = gu(y);
                check.expect(!orbits.in_xu(y),
                             "displacement M=" + std::to_string(m) + " x=" + x.str() +
                                 " k=" + std::to_string(k),
                             "outside X_U", y.str());
            }

            // The orbit index advances by one under g_U.
            Point z = random_point(rng);
            auto before = orbits.classify(z);
            auto after = orbits.classify(gu(z));
            if (before.kind == DissipatorOrbits::Region::Kind::Orbit) {
                check.expect(after.kind == DissipatorOrbits::Region::Kind::Orbit &&
                                 after.n == before.n + 1,
                             "orbit step M=" + std::to_string(m) + " z=" + z.str(),
                             "P_" + std::to_string(before.n + 1),
                             "P_" + std::to_string(after.n));
            } else {
                check.expect(gu(z) == z, "identity region M=" + std::to_string(m), z.str(),
                             gu(z).str());
            }
        }
    }
}

void suite_binate(const VerifyOptions& opts, VerifyReport& report) {
    Check check{&report};
    Rng rng(opts.seed);
    report.trials = defaulted(opts.trials, 20);
    const std::uint64_t points_per_trial = 50;

    std::vector<int> levels = opts.M > 0 ? std::vector<int>{opts.M} : std::vector<int>{3, 4};
    for (int m : levels) {
        const BitWord u = BitWord::zeros(static_cast<std::size_t>(m) - 2);
        for (std::uint64_t t = 0; t < report.trials; ++t) {
            PrefixMap h = random_map_fixing_cylinder(rng, u, 4);
            const RuleHomeo gu = RuleHomeo::dissipator(m);
            const RuleHomeo psi = RuleHomeo::binate_psi(h, m);
            const RuleHomeo comm = RuleHomeo::commutator(gu, psi);
            for (std::uint64_t i = 0; i < points_per_trial; ++i) {
                Point x = random_point(rng);
                Point expected = h(x);
                Point got = comm(x);
                check.expect(got == expected,
                             "binate M=" + std::to_string(m) + " h=" + h.str() +
                                 " x=" + x.str(),
                             expected.str(), got.str());
            }
        }
    }
}

void suite_displacement(const VerifyOptions& opts, VerifyReport& report) {
    Check check{&report};
    Rng rng(opts.seed);
    report.trials = defaulted(opts.trials, 20);
    const Generators gen = generators();
    const PrefixMap g = commutator(gen.A, gen.B);

    check.expect_true(displacement_check(g, BitWord("10"), 6), "displacement [A,B] X0=10",
                      "overlap found");
    check.expect(!displacement_check(PrefixMap::identity(), BitWord("10"), 1),
                 "displacement identity", "false", "true");

    // Localized copies displace the localized cylinder.
    for (std::uint64_t t = 0; t < report.trials; ++t) {
        BitWord r = random_word(rng, 3);
        PrefixMap local = localize(g, r);
        check.expect_true(displacement_check(local, r.concat(BitWord("10")), 4),
                          "localized displacement r=" + r.display(), "overlap found");
    }

    for (std::uint64_t t = 0; t < report.trials; ++t) {
        std::vector<PrefixMap> family;
        for (int i = 0; i < 3; ++i) {
            family.push_back(
                commutator(random_stabilizer_map(rng, 4), random_stabilizer_map(rng, 4)));
        }
        try {
            auto result = conjugate_into_support(family);
            check.expect_true(result.ok && result.factors_fix_zero,
                              "conjugate family trial " + std::to_string(t),
                              result.ok ? "factors moved (0)" : "support escapes C(10)");
        } catch (const std::exception& e) {
            check.expect_true(false, "conjugate family trial " + std::to_string(t), e.what());
        }
    }
}

std::vector<std::vector<Element>> sample_tuples(Rng& rng, Relation rel, std::size_t arity,
                                                std::size_t count) {
    std::vector<std::vector<Element>> tuples;
    while (tuples.size() < count) {
        std::vector<Element> tuple;
        if (rel == Relation::DistinctDyadic) {
            for (const auto& p : random_distinct_dyadic(rng, arity)) tuple.emplace_back(p);
        } else {
            for (const auto& p : random_fat_tuple(rng, arity)) tuple.emplace_back(p);
        }
        if (is_generic_tuple(rel, tuple)) tuples.push_back(std::move(tuple));
    }
    return tuples;
}

void suite_homotopy(const VerifyOptions& opts, VerifyReport& report) {
    Check check{&report};
    Rng rng(opts.seed);
    report.trials = defaulted(opts.trials, 50);

    for (Relation rel : {Relation::DistinctDyadic, Relation::FatDisjoint}) {
        const std::string rel_name = rel == Relation::DistinctDyadic ? "dyadic" : "fat";
        for (std::size_t arity = 1; arity <= opts.arity; ++arity) {
            std::vector<Cochain> cochains;
            cochains.push_back(Cochain::constant(arity, Rat(3, 7)));
            if (arity == 2) {
                cochains.push_back(Cochain::lex_indicator());
                cochains.push_back(Cochain::lex_indicator().pullback(random_prefix_map(rng, 4)));
            }
            cochains.push_back(Cochain::constant(arity, Rat(-2, 5)).pullback(
                random_prefix_map(rng, 4)));
            if (arity >= 2) {
                cochains.push_back(Cochain::linear(
                    {{Rat(1, 2), Cochain::constant(arity - 1, Rat(4))},
                     {Rat(-3), Cochain::constant(arity - 1, Rat(1, 3))}}).coboundary());
                if (arity == 3) {
                    cochains.push_back(Cochain::lex_indicator().coboundary());
                }
            }

            auto tuples = sample_tuples(rng, rel, arity, report.trials);
            for (std::size_t ci = 0; ci < cochains.size(); ++ci) {
                const std::string label = rel_name + " arity=" + std::to_string(arity) +
                                          " cochain#" + std::to_string(ci);
                check.expect_true(verify_homotopy_identity(rel, cochains[ci], tuples),
                                  "homotopy " + label, "identity broke");

                // d o d = 0 pointwise.
                const Cochain dd = cochains[ci].coboundary().coboundary();
                auto big = sample_tuples(rng, rel, arity + 2, 5);
                for (const auto& tuple : big) {
                    check.expect(dd.eval(tuple) == Rat(0), "dd=0 " + label, "0",
                                 rat_str(dd.eval(tuple)));
                }

                // d commutes with pullback.
                PrefixMap g = random_prefix_map(rng, 4);
                const Cochain a = cochains[ci].pullback(g).coboundary();
                const Cochain b = cochains[ci].coboundary().pullback(g);
                for (const auto& tuple : sample_tuples(rng, rel, arity + 1, 5)) {
                    check.expect(a.eval(tuple) == b.eval(tuple), "equivariance " + label,
                                 rat_str(b.eval(tuple)), rat_str(a.eval(tuple)));
                }

                // Declared bound dominates sampled values.
                for (const auto& tuple : tuples) {
                    Rat v = cochains[ci].eval(tuple);
                    if (v < Rat(0)) v = -v;
                    check.expect(v <= cochains[ci].bound(), "bound " + label,
                                 "<= " + rat_str(cochains[ci].bound()), rat_str(v));
                }
            }

            // Fresh points are generic over their family.
            std::vector<Element> family = tuples.front();
            Element fresh = fresh_point(rel, family);
            std::vector<Element> extended = family;
            extended.push_back(fresh);
            check.expect_true(is_generic_tuple(rel, extended),
                              "fresh " + rel_name + " arity=" + std::to_string(arity),
                              element_str(fresh));
        }
    }
}

void suite_delta_pattern(const VerifyOptions& opts, VerifyReport& report) {
    Check check{&report};
    report.trials = opts.kmax;
    for (const auto& row : invariant_delta_pattern(opts.kmax)) {
        const bool expect_zero = row.arity % 2 == 1;
        check.expect(row.vanishes == expect_zero,
                     "delta-pattern arity=" + std::to_string(row.arity),
                     expect_zero ? "0" : "const", rat_str(row.sample_value));
    }
}

void suite_fat_points(const VerifyOptions& opts, VerifyReport& report) {
    Check check{&report};
    Rng rng(opts.seed);
    report.trials = defaulted(opts.trials, 50);

    for (std::uint64_t t = 0; t < report.trials; ++t) {
        FatPoint p = random_fat_point(rng);
        FatPoint q = random_fat_point(rng);
        PrefixMap g = random_prefix_map(rng, 4);

        check.expect_true(equivalent(p, p), "fat reflexive " + p.str(), "false");
        check.expect(equivalent(p, q) == equivalent(q, p), "fat symmetric", "match",
                     "differ");

        // Post-composing with an element fixing the agreed cylinder keeps
        // the class.
        const std::size_t n = p.tissue.max_level() + 1;
        BitWord w = p.tissue.restriction_to_zero_cylinder(n);
        PrefixMap fixer = localize(random_prefix_map(rng, 3), w.sibling());
        FatPoint variant{p.core, compose(fixer, p.tissue)};
        if (fixer(p.core) == p.core) {
            check.expect_true(equivalent(p, variant) == fixer.fixes_neighborhood(p.core),
                              "fat stabilizer " + p.str(), "mismatch");
        }

        // The action preserves equivalence and the relation.
        if (equivalent(p, q)) {
            check.expect_true(equivalent(act(g, p), act(g, q)), "fat action equiv", "broken");
        }
        auto rel = disjoint(p, q);
        check.expect(rel.disjoint == (p.core != q.core), "fat disjoint cores",
                     p.core != q.core ? "true" : "false", rel.disjoint ? "true" : "false");
        if (rel.disjoint) {
            check.expect_true(rel.p_tissue.image_disjoint_from(rel.q_tissue),
                              "fat witness images", "overlap");
            auto moved = disjoint(act(g, p), act(g, q));
            check.expect_true(moved.disjoint, "fat action disjoint", "broken");
        }

        // g stabilizes the class of p iff it fixes a neighborhood of the core.
        check.expect(equivalent(act(g, p), p) == g.fixes_neighborhood(p.core),
                     "fat stabilizer characterization " + g.str() + " @ " + p.str(),
                     g.fixes_neighborhood(p.core) ? "equivalent" : "not equivalent",
                     equivalent(act(g, p), p) ? "equivalent" : "not equivalent");
    }

    // Fresh fat point over a random family, and tuple transitivity.
    for (std::uint64_t t = 0; t < 10; ++t) {
        auto family = random_fat_tuple(rng, 3);
        FatPoint fresh = fresh_fat_point(family);
        for (const auto& p : family) {
            check.expect_true(disjoint(fresh, p).disjoint, "fresh fat disjoint", fresh.str());
        }
        auto dst = random_fat_tuple(rng, 3);
        try {
            PrefixMap g = fat_transitivity_witness(family, dst);
            for (std::size_t i = 0; i < family.size(); ++i) {
                check.expect_true(equivalent(act(g, family[i]), dst[i]),
                                  "fat transitivity " + std::to_string(i), "not equivalent");
            }
        } catch (const std::exception& e) {
            check.expect_true(false, "fat transitivity trial " + std::to_string(t), e.what());
        }
    }
}

const std::map<std::string, std::function<void(const VerifyOptions&, VerifyReport&)>>&
suite_table() {
    static const std::map<std::string, std::function<void(const VerifyOptions&, VerifyReport&)>>
        table{
            {"generators", suite_generators},
            {"group-axioms", suite_group_axioms},
            {"commutator-fix", suite_commutator_fix},
            {"derived-witness", suite_derived_witness},
            {"transitivity", suite_transitivity},
            {"dissipator", suite_dissipator},
            {"binate", suite_binate},
            {"displacement", suite_displacement},
            {"homotopy", suite_homotopy},
            {"delta-pattern", suite_delta_pattern},
            {"fat-points", suite_fat_points},
        };
    return table;
}

}  // namespace

const std::vector<std::string>& suite_names() {
    static const std::vector<std::string> names = [] {
        std::vector<std::string> out;
        for (const auto& [name, fn] : suite_table()) out.push_back(name);
        return out;
    }();
    return names;
}

VerifyReport run_suite(const std::string& name, const VerifyOptions& opts) {
    VerifyReport report;
    report.suite = name;
    report.seed = opts.seed;
    if (name == "all") {
        for (const auto& [suite, fn] : suite_table()) {
            VerifyReport sub;
            sub.suite = suite;
            sub.seed = opts.seed;
            fn(opts, sub);
            report.trials += sub.trials;
            for (auto& f : sub.failures) {
                f.input = suite + ": " + f.input;
                report.failures.push_back(std::move(f));
            }
        }
        return report;
    }
    auto it = suite_table().find(name);
    if (it == suite_table().end()) {
        throw std::invalid_argument("unknown suite '" + name + "'");
    }
    it->second(opts, report);
    return report;
}

}  // namespace cantor
