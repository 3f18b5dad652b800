#include <benchmark/benchmark.h>

#include "chered/psph.hpp"
#include "chered/relations.hpp"

using namespace chered;

namespace {

void BM_act_sigma_power(benchmark::State& state) {
    auto ctx = Context::make(2, 1, 2);
    PolyRepElement f = embed_upoly(ParamPoly::u(*ctx, 1) * ParamPoly::u(*ctx, 2), *ctx);
    Word w = word_for(PsphGenerator::sigma_power(), *ctx);
    for (auto _ : state) {
        benchmark::DoNotOptimize(act_word(w, f));
    }
}
BENCHMARK(BM_act_sigma_power);

void BM_act_xsigma(benchmark::State& state) {
    auto ctx = Context::make(4, 2, 2);
    PolyRepElement f = embed_upoly(ParamPoly::u(*ctx, 1), *ctx);
    Word w = word_for(PsphGenerator::xsigma(), *ctx);
    for (auto _ : state) {
        benchmark::DoNotOptimize(act_word(w, f));
    }
}
BENCHMARK(BM_act_xsigma);

void BM_relation_suite_small(benchmark::State& state) {
    auto ctx = Context::make(2, 2, 2);
    for (auto _ : state) {
        benchmark::DoNotOptimize(verify_relations(*ctx, 1, 1));
    }
}
BENCHMARK(BM_relation_suite_small)->Unit(benchmark::kMillisecond);

} // namespace
