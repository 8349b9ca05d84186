/*
   Copyright 2026 the multcode authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#include <benchmark/benchmark.h>

#include <random>

#include "multcode/mvdec.hpp"
#include "multcode/unidec.hpp"

using namespace multcode;

namespace {

std::mt19937_64 rng(12345);

MultiPoly random_poly(const PrimeField& field, int vars, std::int64_t degree) {
    MultiPoly out(field, vars);
    for (const Exponents& e : monomials_up_to(vars, degree))
        out.set_coeff(e, field.element(rng() % field.modulus()));
    return out;
}

Grid range_grid(const PrimeField& field, int vars, std::size_t n) {
    std::vector<FieldElement> t;
    for (std::size_t i = 0; i < n; ++i) t.push_back(field.element(i));
    return Grid(field, std::vector<std::vector<FieldElement>>(static_cast<std::size_t>(vars), t));
}

void bm_field_mul(benchmark::State& state) {
    PrimeField field(2305843009213693951ull);
    FieldElement a = field.element(rng()), b = field.element(rng());
    for (auto _ : state) {
        a = a * b + field.one();
        benchmark::DoNotOptimize(a);
    }
}
BENCHMARK(bm_field_mul);

void bm_field_inv(benchmark::State& state) {
    PrimeField field(2305843009213693951ull);
    FieldElement a = field.element(987654321);
    for (auto _ : state) {
        a = a.inv() + field.one();
        benchmark::DoNotOptimize(a);
    }
}
BENCHMARK(bm_field_inv);

void bm_eval_jet(benchmark::State& state) {
    PrimeField field(13);
    const int m = static_cast<int>(state.range(0));
    const int s = static_cast<int>(state.range(1));
    MultiPoly p = random_poly(field, m, 5);
    std::vector<FieldElement> a;
    for (int v = 0; v < m; ++v) a.push_back(field.element(rng() % 13));
    for (auto _ : state) benchmark::DoNotOptimize(eval_jet(p, a, s));
}
BENCHMARK(bm_eval_jet)->Args({2, 2})->Args({2, 3})->Args({3, 2});

void bm_encode(benchmark::State& state) {
    PrimeField field(13);
    CodeParams params(range_grid(field, 2, 6), 2, 5);
    MultiPoly p = random_poly(field, 2, 5);
    for (auto _ : state) benchmark::DoNotOptimize(encode(p, params));
}
BENCHMARK(bm_encode);

void bm_unidec(benchmark::State& state) {
    PrimeField field(13);
    std::vector<FieldElement> pts;
    for (int i = 0; i < 8; ++i) pts.push_back(field.element(static_cast<std::uint64_t>(i)));
    std::vector<int> svec(8, 2);
    UniPoly truth(field.modulus(), {field.element(3), field.element(5), field.element(1)});
    std::vector<Jet> jets = encode_varying(truth, pts, svec);
    jets[2].set_coeff({0}, jets[2].coeff1(0) + field.element(4));
    for (auto _ : state) {
        UniDecodeInstance inst(pts, 2, svec, jets);
        benchmark::DoNotOptimize(decode(inst));
    }
}
BENCHMARK(bm_unidec);

void bm_bivariate_decode(benchmark::State& state) {
    PrimeField field(13);
    const std::int64_t n = state.range(0);
    CodeParams params(range_grid(field, 2, static_cast<std::size_t>(n)), 2, n - 1);
    MultiPoly p = random_poly(field, 2, n - 1);
    ReceivedWord w = encode(p, params);
    // a handful of full-symbol errors
    for (std::size_t i = 0; i < 3; ++i) {
        Jet jet = w.symbol(i * 2);
        Exponents zero{0, 0};
        jet.set_coeff(zero, jet.coeff(zero) + field.element(1));
        w.set_symbol(i * 2, std::move(jet));
    }
    for (auto _ : state) benchmark::DoNotOptimize(decode(w));
}
BENCHMARK(bm_bivariate_decode)->Arg(4)->Arg(6)->Arg(8)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
