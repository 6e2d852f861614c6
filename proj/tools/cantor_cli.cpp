// Command-line front end: element/point evaluation, witness construction,
// verification suites, and tree-pair DOT export.
//
// Exit codes: 0 success, 1 usage/parse error, 2 verification failure.

#include <algorithm>
#include <cstdint>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "cantor/dot.hpp"
#include "cantor/generic_complex.hpp"
#include "cantor/rule_homeo.hpp"
#include "cantor/sampling.hpp"
#include "cantor/verify.hpp"
#include "cantor/witness.hpp"

namespace {

using namespace cantor;

std::vector<std::string> split(const std::string& text, char sep) {
    std::vector<std::string> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, sep)) {
        if (!item.empty()) out.push_back(item);
    }
    return out;
}

// Strips a "key=" prefix from a positional argument.
std::string keyed(const std::string& arg, const std::string& key) {
    const std::string prefix = key + "=";
    if (arg.rfind(prefix, 0) != 0) {
        throw std::invalid_argument("expected '" + key + "=...', got '" + arg + "'");
    }
    return arg.substr(prefix.size());
}

// Constructor syntax: "dissipator M=3", "phi g=<element> M=3",
// "xor mask=<point>", "shrink r=<bits>".
Point apply_rule_text(const std::string& text, const Point& x) {
    std::vector<std::string> tokens;
    {
        std::stringstream ss(text);
        std::string tok;
        while (ss >> tok) tokens.push_back(tok);
    }
    if (tokens.empty()) throw std::invalid_argument("empty rule constructor");
    const std::string& kind = tokens[0];
    if (kind == "dissipator") {
        if (tokens.size() != 2) throw std::invalid_argument("usage: dissipator M=<level>");
        int m = std::stoi(keyed(tokens[1], "M"));
        return RuleHomeo::dissipator(m)(x);
    }
    if (kind == "phi") {
        if (tokens.size() != 3) throw std::invalid_argument("usage: phi g=<element> M=<level>");
        PrefixMap g = PrefixMap::parse(keyed(tokens[1], "g"));
        int m = std::stoi(keyed(tokens[2], "M"));
        return RuleHomeo::binate_phi(g, m)(x);
    }
    if (kind == "xor") {
        if (tokens.size() != 2) throw std::invalid_argument("usage: xor mask=<point>");
        return RuleHomeo::xor_translation(Point::parse(keyed(tokens[1], "mask")))(x);
    }
    if (kind == "shrink") {
        if (tokens.size() != 2) throw std::invalid_argument("usage: shrink r=<bits>");
        return shrinking_to(BitWord::parse(keyed(tokens[1], "r")))(x);
    }
    throw std::invalid_argument("unknown rule constructor '" + kind + "'");
}

int run(int argc, char** argv) {
    CLI::App app{"Exact computations in Thompson's group V on the dyadic Cantor space"};
    app.require_subcommand(1);

    // eval <element> <point>
    std::string eval_element, eval_point;
    auto* eval_cmd = app.add_subcommand("eval", "Apply a prefix-substitution element to a point");
    eval_cmd->add_option("element", eval_element)->required();
    eval_cmd->add_option("point", eval_point)->required();

    // rule "<constructor>" <point>
    std::string rule_spec, rule_point;
    auto* rule_cmd =
        app.add_subcommand("rule", "Apply a rule homeomorphism (dissipator/phi/xor/shrink)");
    rule_cmd->add_option("constructor", rule_spec)->required();
    rule_cmd->add_option("point", rule_point)->required();

    // export-dot <element>
    std::string dot_element;
    auto* dot_cmd = app.add_subcommand("export-dot", "Tree-pair diagram as Graphviz text");
    dot_cmd->add_option("element", dot_element)->required();

    // witness <kind> <args...>
    auto* witness_cmd = app.add_subcommand("witness", "Explicit elements from the constructions");
    std::vector<std::string> witness_args;
    witness_cmd->add_option("args", witness_args)->expected(-1);

    // verify <suite> [--seed --trials --json --arity --M --kmax]
    std::string suite;
    VerifyOptions verify_opts;
    bool as_json = false;
    auto* verify_cmd = app.add_subcommand("verify", "Run a property suite");
    verify_cmd->add_option("suite", suite)->required();
    verify_cmd->add_option("--seed", verify_opts.seed);
    verify_cmd->add_option("--trials", verify_opts.trials);
    verify_cmd->add_option("--arity", verify_opts.arity);
    verify_cmd->add_option("--M", verify_opts.M);
    verify_cmd->add_option("--kmax", verify_opts.kmax);
    verify_cmd->add_flag("--json", as_json);

    // complex verify-homotopy / delta-pattern
    auto* complex_cmd = app.add_subcommand("complex", "Generic-tuple cochain complex checks");
    complex_cmd->require_subcommand(1);
    std::string relation = "dyadic";
    std::size_t cx_arity = 2;
    std::uint64_t cx_samples = 50;
    std::uint64_t cx_seed = 0;
    auto* homotopy_cmd = complex_cmd->add_subcommand(
        "verify-homotopy", "Check (dQ + Qd)f = f at sampled generic tuples");
    homotopy_cmd->add_option("--relation", relation)
        ->check(CLI::IsMember({"dyadic", "fat"}));
    homotopy_cmd->add_option("--arity", cx_arity);
    homotopy_cmd->add_option("--samples", cx_samples);
    homotopy_cmd->add_option("--seed", cx_seed);
    std::size_t cx_kmax = 8;
    auto* pattern_cmd =
        complex_cmd->add_subcommand("delta-pattern", "d(const) alternation up to kmax");
    pattern_cmd->add_option("--kmax", cx_kmax);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 1;  // usage errors are exit code 1
    }

    if (eval_cmd->parsed()) {
        PrefixMap g = PrefixMap::parse(eval_element);
        std::cout << g(Point::parse(eval_point)).str() << "\n";
        return 0;
    }

    if (rule_cmd->parsed()) {
        std::cout << apply_rule_text(rule_spec, Point::parse(rule_point)).str() << "\n";
        return 0;
    }

    if (dot_cmd->parsed()) {
        std::cout << tree_pair_dot(PrefixMap::parse(dot_element));
        return 0;
    }

    if (witness_cmd->parsed()) {
        if (witness_args.empty()) throw std::invalid_argument("witness: missing kind");
        const std::string kind = witness_args[0];
        if (kind == "transitivity") {
            if (witness_args.size() != 3) {
                throw std::invalid_argument("usage: witness transitivity x=<point> y=<point>");
            }
            Point x = Point::parse(keyed(witness_args[1], "x"));
            Point y = Point::parse(keyed(witness_args[2], "y"));
            std::cout << transitivity_witness(x, y).str() << "\n";
            return 0;
        }
        if (kind == "tuple") {
            if (witness_args.size() != 3) {
                throw std::invalid_argument("usage: witness tuple xs=<p;p;..> ys=<p;p;..>");
            }
            std::vector<Point> xs, ys;
            for (const auto& s : split(keyed(witness_args[1], "xs"), ';')) {
                xs.push_back(Point::parse(s));
            }
            for (const auto& s : split(keyed(witness_args[2], "ys"), ';')) {
                ys.push_back(Point::parse(s));
            }
            std::cout << tuple_transitivity_witness(xs, ys).str() << "\n";
            return 0;
        }
        if (kind == "derived") {
            if (witness_args.size() != 4) {
                throw std::invalid_argument(
                    "usage: witness derived h=<element> U=<bits> z=<point>");
            }
            PrefixMap h = PrefixMap::parse(keyed(witness_args[1], "h"));
            BitWord u = BitWord::parse(keyed(witness_args[2], "U"));
            Point z = Point::parse(keyed(witness_args[3], "z"));
            auto witness = derived_witness(h, u, z);
            std::cout << "r=" << witness.r.display() << "\n";
            std::cout << "h'=" << witness.h_prime.str() << "\n";
            return 0;
        }
        if (kind == "conjugate") {
            if (witness_args.size() != 2) {
                throw std::invalid_argument("usage: witness conjugate gs=<el;el;..>");
            }
            std::vector<PrefixMap> gs;
            for (const auto& s : split(keyed(witness_args[1], "gs"), ';')) {
                gs.push_back(PrefixMap::parse(s));
            }
            auto result = conjugate_into_support(gs);
            std::cout << "M=" << result.M << "\n";
            std::cout << "c=" << result.conjugator.str() << "\n";
            std::cout << "ok=" << (result.ok ? "true" : "false") << "\n";
            return result.ok ? 0 : 2;
        }
        throw std::invalid_argument("unknown witness kind '" + kind + "'");
    }

    if (verify_cmd->parsed()) {
        if (suite != "all") {
            const auto& names = suite_names();
            if (std::find(names.begin(), names.end(), suite) == names.end()) {
                std::cerr << "unknown suite '" << suite << "'; known:";
                for (const auto& n : names) std::cerr << " " << n;
                std::cerr << " all\n";
                return 1;
            }
        }
        VerifyReport report = run_suite(suite, verify_opts);
        std::cout << (as_json ? report.json() + "\n" : report.text());
        return report.passed() ? 0 : 2;
    }

    if (homotopy_cmd->parsed()) {
        const Relation rel =
            relation == "dyadic" ? Relation::DistinctDyadic : Relation::FatDisjoint;
        Rng rng(cx_seed);
        std::vector<std::vector<Element>> tuples;
        while (tuples.size() < cx_samples) {
            std::vector<Element> tuple;
            if (rel == Relation::DistinctDyadic) {
                for (const auto& p : sampling::random_distinct_dyadic(rng, cx_arity)) {
                    tuple.emplace_back(p);
                }
            } else {
                for (const auto& p : sampling::random_fat_tuple(rng, cx_arity)) {
                    tuple.emplace_back(p);
                }
            }
            if (is_generic_tuple(rel, tuple)) tuples.push_back(std::move(tuple));
        }
        std::vector<std::pair<std::string, Cochain>> cochains;
        cochains.emplace_back("constant", Cochain::constant(cx_arity, Rat(3, 7)));
        if (cx_arity == 2) cochains.emplace_back("lex-indicator", Cochain::lex_indicator());
        cochains.emplace_back(
            "pullback",
            Cochain::constant(cx_arity, Rat(5, 2)).pullback(sampling::random_prefix_map(rng, 4)));
        bool all_ok = true;
        for (const auto& [name, f] : cochains) {
            bool ok = verify_homotopy_identity(rel, f, tuples);
            all_ok = all_ok && ok;
            std::cout << name << " arity=" << cx_arity << " relation=" << relation
                      << " samples=" << tuples.size() << " f(sample)="
                      << rat_str(f.eval(tuples.front())) << " identity="
                      << (ok ? "pass" : "fail") << "\n";
        }
        return all_ok ? 0 : 2;
    }

    if (pattern_cmd->parsed()) {
        bool ok = true;
        for (const auto& row : invariant_delta_pattern(cx_kmax)) {
            const bool expect_zero = row.arity % 2 == 1;
            ok = ok && row.vanishes == expect_zero;
            std::cout << "arity=" << row.arity << " d(const 1) = " << rat_str(row.sample_value)
                      << (row.vanishes ? " (vanishes)" : " (survives)") << "\n";
        }
        std::cout << (ok ? "alternation: pass" : "alternation: fail") << "\n";
        return ok ? 0 : 2;
    }

    return 1;
}

}  // namespace

int main(int argc, char** argv) {
    try {
        return run(argc, argv);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
