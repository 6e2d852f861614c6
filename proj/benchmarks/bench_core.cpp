#include <benchmark/benchmark.h>

#include "cantor/generic_complex.hpp"
#include "cantor/rule_homeo.hpp"
#include "cantor/sampling.hpp"
#include "cantor/witness.hpp"

using namespace cantor;

namespace {

std::vector<PrefixMap> elements(std::size_t count, std::size_t splits) {
    Rng rng(99);
    std::vector<PrefixMap> out;
    for (std::size_t i = 0; i < count; ++i) {
        out.push_back(sampling::random_prefix_map(rng, splits));
    }
    return out;
}

void BM_compose(benchmark::State& state) {
    auto els = elements(64, static_cast<std::size_t>(state.range(0)));
    std::size_t i = 0;
    for (auto _ : state) {
        benchmark::DoNotOptimize(els[i % els.size()] * els[(i + 1) % els.size()]);
        ++i;
    }
}
BENCHMARK(BM_compose)->Arg(4)->Arg(8)->Arg(16);

void BM_apply(benchmark::State& state) {
    auto els = elements(64, 8);
    Rng rng(7);
    Point x = sampling::random_point(rng, 12, 8);
    std::size_t i = 0;
    for (auto _ : state) {
        benchmark::DoNotOptimize(els[i % els.size()](x));
        ++i;
    }
}
BENCHMARK(BM_apply);

void BM_complete_partition(benchmark::State& state) {
    Rng rng(13);
    auto code = sampling::random_code(rng, static_cast<std::size_t>(state.range(0)));
    std::vector<BitWord> inputs;
    for (std::size_t i = 0; i < code.size(); i += 2) inputs.push_back(code[i]);
    for (auto _ : state) {
        benchmark::DoNotOptimize(complete_partition(inputs));
    }
}
BENCHMARK(BM_complete_partition)->Arg(4)->Arg(8);

void BM_dissipator_classify(benchmark::State& state) {
    const DissipatorOrbits orbits(static_cast<int>(state.range(0)));
    Rng rng(17);
    std::vector<Point> points;
    for (int i = 0; i < 64; ++i) points.push_back(sampling::random_point(rng, 10, 6));
    std::size_t i = 0;
    for (auto _ : state) {
        benchmark::DoNotOptimize(orbits.classify(points[i % points.size()]));
        ++i;
    }
}
BENCHMARK(BM_dissipator_classify)->Arg(3)->Arg(5);

void BM_homotopy_identity(benchmark::State& state) {
    Rng rng(23);
    std::vector<std::vector<Element>> tuples;
    for (int i = 0; i < 10; ++i) {
        std::vector<Element> tuple;
        for (const auto& p : sampling::random_distinct_dyadic(rng, 3)) tuple.emplace_back(p);
        tuples.push_back(std::move(tuple));
    }
    const Cochain f = Cochain::constant(3, Rat(1, 3));
    for (auto _ : state) {
        benchmark::DoNotOptimize(verify_homotopy_identity(Relation::DistinctDyadic, f, tuples));
    }
}
BENCHMARK(BM_homotopy_identity);

void BM_tuple_witness(benchmark::State& state) {
    Rng rng(29);
    auto xs = sampling::random_distinct_dyadic(rng, 5);
    auto ys = sampling::random_distinct_dyadic(rng, 5);
    for (auto _ : state) {
        benchmark::DoNotOptimize(tuple_transitivity_witness(xs, ys));
    }
}
BENCHMARK(BM_tuple_witness);

}  // namespace

BENCHMARK_MAIN();
