#include <benchmark/benchmark.h>

#include "tcsp/builtins.hpp"
#include "tcsp/classify.hpp"
#include "tcsp/forms.hpp"
#include "tcsp/nelson_oppen.hpp"
#include "tcsp/preserve.hpp"
#include "tcsp/rmix.hpp"
#include "tcsp/solvers.hpp"

using namespace tcsp;

static void BM_enumerate_weak_orders(benchmark::State& state) {
    int n = static_cast<int>(state.range(0));
    for (auto _ : state) {
        benchmark::DoNotOptimize(enumerate_weak_orders(n));
    }
}
BENCHMARK(BM_enumerate_weak_orders)->Arg(4)->Arg(6)->Arg(8);

static void BM_preserves_mix_rmix_n(benchmark::State& state) {
    auto rel = rmix_n(static_cast<int>(state.range(0)));
    OpSpec mix = OpSpec::parse("mix");
    for (auto _ : state) {
        benchmark::DoNotOptimize(preserves(mix, rel).preserved);
    }
}
BENCHMARK(BM_preserves_mix_rmix_n)->Arg(3)->Arg(4)->Arg(5)->Unit(benchmark::kMillisecond);

static void BM_preserves_ll_marker(benchmark::State& state) {
    const auto& rel = builtin("Sep");
    OpSpec ll = OpSpec::parse("ll");
    for (auto _ : state) {
        benchmark::DoNotOptimize(preserves(ll, rel).preserved);
    }
}
BENCHMARK(BM_preserves_ll_marker);

static void BM_synthesize_min_form(benchmark::State& state) {
    const auto& rel = builtin("Rmix");
    for (auto _ : state) {
        benchmark::DoNotOptimize(synthesize_form(rel, Form::min));
    }
}
BENCHMARK(BM_synthesize_min_form);

static void BM_eval_pp_rmix5(benchmark::State& state) {
    auto base = TemporalStructure::of_builtins("B", {"Lt", "Rmix"});
    auto formula = rmix_n_inductive(5);
    for (auto _ : state) {
        benchmark::DoNotOptimize(eval_pp(formula, base));
    }
}
BENCHMARK(BM_eval_pp_rmix5)->Unit(benchmark::kMillisecond);

static void BM_solve_oracle_7vars(benchmark::State& state) {
    auto s = std::make_shared<TemporalStructure>(
        TemporalStructure::of_builtins("A", {"Lt", "Rmi", "RminLeq"}));
    Instance inst(s, {"a", "b", "c", "d", "e", "f", "g"});
    inst.add_by_name("Rmi", {"a", "b", "c"});
    inst.add_by_name("RminLeq", {"d", "e", "f"});
    inst.add_by_name("Lt", {"f", "g"});
    inst.add_by_name("Lt", {"g", "a"});
    for (auto _ : state) {
        benchmark::DoNotOptimize(solve_oracle(inst).sat);
    }
}
BENCHMARK(BM_solve_oracle_7vars)->Unit(benchmark::kMillisecond);

static void BM_solve_min_closed(benchmark::State& state) {
    auto s = std::make_shared<TemporalStructure>(
        TemporalStructure::of_builtins("A", {"Lt", "Rmi", "RminLeq"}));
    Instance inst(s, {"a", "b", "c", "d", "e", "f", "g"});
    inst.add_by_name("Rmi", {"a", "b", "c"});
    inst.add_by_name("RminLeq", {"d", "e", "f"});
    inst.add_by_name("Lt", {"f", "g"});
    inst.add_by_name("Lt", {"g", "a"});
    for (auto _ : state) {
        benchmark::DoNotOptimize(solve_min_closed(inst).sat);
    }
}
BENCHMARK(BM_solve_min_closed);

static void BM_classify_temporal(benchmark::State& state) {
    auto a = TemporalStructure::of_builtins("A", {"Lt", "RminLeq", "Neq"});
    for (auto _ : state) {
        benchmark::DoNotOptimize(classify_temporal(a).outcome);
    }
}
BENCHMARK(BM_classify_temporal)->Unit(benchmark::kMillisecond);

static void BM_combine_nelson_oppen(benchmark::State& state) {
    CombinedInstance ci;
    ci.structure1 = std::make_shared<TemporalStructure>(
        TemporalStructure::of_builtins("A1", {"Lt", "Leq"}));
    ci.structure2 = std::make_shared<TemporalStructure>(
        TemporalStructure::of_builtins("A2", {"Lt", "Leq"}));
    for (int v = 0; v < 5; ++v) ci.add_variable("v" + std::to_string(v));
    for (int v = 0; v + 1 < 5; ++v) {
        ci.side1.push_back({"Leq", {v, v + 1}});
        ci.side2.push_back({"Leq", {v + 1, v}});
    }
    auto ep1 = ep_from_less(*ci.structure1);
    auto ep2 = ep_from_less(*ci.structure2);
    for (auto _ : state) {
        benchmark::DoNotOptimize(combine_nelson_oppen(ci, ep1, ep2).sat);
    }
}
BENCHMARK(BM_combine_nelson_oppen)->Unit(benchmark::kMillisecond);

static void BM_extract_rmix_t3(benchmark::State& state) {
    auto a = TemporalStructure::of_builtins("A", {"Lt", "T3"});
    for (auto _ : state) {
        benchmark::DoNotOptimize(extract_rmix_definition(a).applicable());
    }
}
BENCHMARK(BM_extract_rmix_t3)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
