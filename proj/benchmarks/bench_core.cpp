#include <benchmark/benchmark.h>

#include "cremona/corpus.hpp"
#include "cremona/text.hpp"

using namespace cremona;

namespace {

static void BM_NewtonDual(benchmark::State& state) {
    Rng rng(1);
    auto ring = make_ring_x(static_cast<std::size_t>(state.range(0)));
    auto map = random_canonical_map(rng, ring, ring->nvars(), 3, 5);
    for (auto _ : state) {
        auto dual = newton_dual(map);
        benchmark::DoNotOptimize(dual);
    }
}
BENCHMARK(BM_NewtonDual)->Arg(3)->Arg(5)->Arg(8);

static void BM_InvertMonomial(benchmark::State& state) {
    auto maps = seeded_monomial_cremona(static_cast<std::size_t>(state.range(0)), 3, 8, 17);
    for (auto _ : state) {
        for (const auto& m : maps) {
            auto res = is_monomial_cremona(m);
            benchmark::DoNotOptimize(res);
        }
    }
}
BENCHMARK(BM_InvertMonomial)->Arg(3)->Arg(4);

static void BM_Buchberger_TwistedCubic(benchmark::State& state) {
    auto ring = make_ring({"x", "y", "z", "w"});
    std::vector<Poly> gens{parse_poly("y^2-x*z", ring), parse_poly("y*z-x*w", ring),
                           parse_poly("z^2-y*w", ring)};
    for (auto _ : state) {
        auto gb = buchberger(Ideal{ring, gens});
        benchmark::DoNotOptimize(gb);
    }
}
BENCHMARK(BM_Buchberger_TwistedCubic);

static void BM_FiberDegree_Magnus(benchmark::State& state) {
    auto map = map_from_strings(make_ring({"x", "y", "z"}), {"y*z", "x*z", "x*y"});
    for (auto _ : state) {
        auto cert = topological_degree(map, DegreeOptions{});
        benchmark::DoNotOptimize(cert);
    }
}
BENCHMARK(BM_FiberDegree_Magnus);

static void BM_CmCertify_SubHankel3(benchmark::State& state) {
    auto ring = make_ring({"x1", "x2", "x3"});
    std::vector<Poly> gens{parse_poly("x3^2", ring), parse_poly("x2*x3", ring),
                           parse_poly("2*x1*x3-x2^2", ring)};
    Ideal I{ring, gens};
    for (auto _ : state) {
        auto cert = cm_certify_modular(I, 2);
        benchmark::DoNotOptimize(cert);
    }
}
BENCHMARK(BM_CmCertify_SubHankel3);

static void BM_SubHankel(benchmark::State& state) {
    for (auto _ : state) {
        auto res = subhankel_family(state.range(0), 1);
        benchmark::DoNotOptimize(res);
    }
}
BENCHMARK(BM_SubHankel)->Arg(3)->Arg(4)->Arg(5);

} // namespace

BENCHMARK_MAIN();
