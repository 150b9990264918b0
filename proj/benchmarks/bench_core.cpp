#include <benchmark/benchmark.h>

#include "asw/dilatation.hpp"
#include "asw/expr.hpp"
#include "asw/suites.hpp"

using namespace asw;

namespace {

Character make_char(int p, std::initializer_list<const char*> comps) {
    std::map<std::string, Var> vars{{"t", Var::pi}, {"x", Var::x}};
    WittVec a(p, static_cast<int>(comps.size()));
    int i = static_cast<int>(comps.size()) - 1;
    for (const char* e : comps) a.comp[i--] = parse_expression(e, p, vars);
    return Character(p, a);
}

void BM_witt_add(benchmark::State& state) {
    int p = static_cast<int>(state.range(0));
    int s = static_cast<int>(state.range(1));
    Rng rng(1);
    WittVec a = random_witt(rng, p, s, -3, 3);
    WittVec b = random_witt(rng, p, s, -3, 3);
    build_universal_tables(p, s);
    for (auto _ : state) benchmark::DoNotOptimize(witt_add(a, b));
}
BENCHMARK(BM_witt_add)->Args({2, 2})->Args({2, 3})->Args({3, 3})->Args({7, 2});

void BM_swan_conductor(benchmark::State& state) {
    Character chi = make_char(2, {"x/t", "1/t^5"});
    for (auto _ : state) benchmark::DoNotOptimize(swan_conductor(chi).sw);
}
BENCHMARK(BM_swan_conductor);

void BM_cform_exceptional(benchmark::State& state) {
    Character chi = make_char(2, {"x", "(x^3+x)/t^2"});
    for (auto _ : state) benchmark::DoNotOptimize(cform(chi)->level);
}
BENCHMARK(BM_cform_exceptional);

void BM_geometric_cform(benchmark::State& state) {
    Character chi = make_char(3, {"x/t^4"});
    for (auto _ : state) benchmark::DoNotOptimize(geometric_cform(chi)->level);
}
BENCHMARK(BM_geometric_cform);

void BM_ratfunc_arith(benchmark::State& state) {
    RatFunc u = parse_expression("1 + t*x", 3, {{"t", Var::pi}, {"x", Var::x}});
    RatFunc f = parse_expression("x/t^3", 3, {{"t", Var::pi}, {"x", Var::x}}) / u.pow(4);
    for (auto _ : state) benchmark::DoNotOptimize(f + f * f);
}
BENCHMARK(BM_ratfunc_arith);

}  // namespace

BENCHMARK_MAIN();
