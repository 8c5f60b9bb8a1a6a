#include <polyz/laurent.hpp>
#include <polyz/quadform.hpp>
#include <polyz/smith.hpp>

#include <benchmark/benchmark.h>

#include <random>

using namespace polyz;

namespace {

IntMatrix random_matrix(std::mt19937& rng, std::size_t n, int bound) {
    std::uniform_int_distribution<int> d(-bound, bound);
    IntMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) m.at(i, j) = d(rng);
    return m;
}

void bm_smith_normal_form(benchmark::State& state) {
    std::mt19937 rng(1);
    std::vector<IntMatrix> inputs;
    for (int i = 0; i < 32; ++i)
        inputs.push_back(random_matrix(rng, static_cast<std::size_t>(state.range(0)), 50));
    std::size_t i = 0;
    for (auto _ : state) {
        benchmark::DoNotOptimize(smith_normal_form(inputs[i % inputs.size()]));
        ++i;
    }
}
BENCHMARK(bm_smith_normal_form)->Arg(4)->Arg(8)->Arg(12);

void bm_reduce_cycle(benchmark::State& state) {
    // x^2 - d y^2 for nonsquare d: cycle length grows with the regulator
    Int d = state.range(0);
    BQForm f{1, 0, -d};
    for (auto _ : state) benchmark::DoNotOptimize(reduce_cycle(f));
}
BENCHMARK(bm_reduce_cycle)->Arg(7)->Arg(61)->Arg(1234567);

void bm_e1_unit_test(benchmark::State& state) {
    std::mt19937 rng(2);
    std::vector<IntMatrix> inputs;
    while (inputs.size() < 16) {
        IntMatrix m = random_matrix(rng, 3, 3);
        if (abs(determinant(m)) == 1) inputs.push_back(m);
    }
    std::size_t i = 0;
    for (auto _ : state) {
        benchmark::DoNotOptimize(is_unit_ideal(elementary_ideal_E1(inputs[i % inputs.size()])));
        ++i;
    }
}
BENCHMARK(bm_e1_unit_test);

} // namespace

BENCHMARK_MAIN();
