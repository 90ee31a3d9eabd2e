#include <benchmark/benchmark.h>

#include "gqed3/amplitude.hpp"
#include "gqed3/clifford.hpp"
#include "gqed3/cross_section.hpp"
#include "gqed3/report.hpp"

#include <random>
#include <vector>

using namespace gqed3;

static void BM_TraceTripleBruteforce(benchmark::State& state) {
    const CmMomenta mom = cm_kinematics({2.55, 1.1, 0.51});
    for (auto _ : state) {
        TraceTriple tr = trace_triple_bruteforce(mom.p, mom.q, mom.p_out, mom.q_out, 0.51);
        benchmark::DoNotOptimize(tr);
    }
}
BENCHMARK(BM_TraceTripleBruteforce);

static void BM_TraceReduce(benchmark::State& state) {
    const GammaRep& rep = gamma_rep();
    std::mt19937_64 rng(1);
    std::uniform_real_distribution<double> c(-2.0, 2.0);
    std::vector<GammaFactor> fs;
    for (long i = 0; i < state.range(0); ++i)
        fs.push_back(GammaFactor::slashed({c(rng), c(rng), c(rng)}));
    for (auto _ : state) {
        Complex tr = trace_reduce(rep, fs);
        benchmark::DoNotOptimize(tr);
    }
}
BENCHMARK(BM_TraceReduce)->DenseRange(2, 12, 2);

static void BM_DsigmaDtCanonical(benchmark::State& state) {
    PhysicalParams params;
    params.m_e = 0.51;
    params.m_P = 320.0;
    const MandelstamSet ms = mandelstam_cm({5.1, 0.9, 0.51});
    const TraceSource src = state.range(0) ? TraceSource::brute_force
                                           : TraceSource::closed_form;
    for (auto _ : state) {
        double v = dsigma_dt(ms, params, src);
        benchmark::DoNotOptimize(v);
    }
}
BENCHMARK(BM_DsigmaDtCanonical)->Arg(0)->Arg(1);

static void BM_AngularScan(benchmark::State& state) {
    PhysicalParams params;
    params.m_e = 0.51;
    params.m_P = 65.77;
    const auto thetas = linspace(0.05, M_PI - 0.05, state.range(0));
    for (auto _ : state) {
        double acc = 0.0;
        for (double th : thetas) acc += dsigma_dtheta_cm(2.0, th, params);
        benchmark::DoNotOptimize(acc);
    }
    state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_AngularScan)->RangeMultiplier(4)->Range(64, 4096)->Complexity();

static void BM_IntegrateCm(benchmark::State& state) {
    PhysicalParams params;
    params.m_e = 0.51;
    for (auto _ : state) {
        double v = integrate_dsigma(FormulaId::cm, 2.0, 0.4, 2.7, params);
        benchmark::DoNotOptimize(v);
    }
}
BENCHMARK(BM_IntegrateCm);

static void BM_ConsistencyReport(benchmark::State& state) {
    ReportGrid grid = default_report_grid();
    grid.theta_steps = 40;
    grid.small_theta_steps = 50;
    grid.dual_oracle_strings = 200;
    for (auto _ : state) {
        auto records = consistency_report(grid);
        benchmark::DoNotOptimize(records);
    }
}
BENCHMARK(BM_ConsistencyReport);

BENCHMARK_MAIN();
