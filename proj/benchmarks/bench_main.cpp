#include <benchmark/benchmark.h>

#include <random>

#include "lctk/laplace.hpp"
#include "lctk/margins.hpp"
#include "lctk/mna.hpp"
#include "lctk/realizations.hpp"
#include "lctk/tf_io.hpp"
#include "lctk/ufss.hpp"

using namespace lctk;

namespace {

SPoly dense_spoly(unsigned degree, int seed) {
    std::mt19937 rng(seed);
    std::uniform_int_distribution<int> num(-50, 50);
    std::uniform_int_distribution<int> den(1, 9);
    std::vector<ParamPoly> coeffs;
    for (unsigned k = 0; k <= degree; ++k) {
        Rational c{BigInt(num(rng) == 0 ? 1 : num(rng)), BigInt(den(rng))};
        coeffs.push_back(ParamPoly::term(c, Monomial::var("K1", k % 3)));
    }
    return SPoly(std::move(coeffs));
}

void BM_SpolyMulDegree20(benchmark::State& state) {
    SPoly a = dense_spoly(20, 1);
    SPoly b = dense_spoly(20, 2);
    for (auto _ : state) {
        benchmark::DoNotOptimize(a * b);
    }
}
BENCHMARK(BM_SpolyMulDegree20);

void BM_TransferFunctionOrder20(benchmark::State& state) {
    std::vector<ParamPoly> alpha;
    std::vector<ParamPoly> beta;
    for (int k = 0; k <= 20; ++k) alpha.push_back(ParamPoly(Rational(k + 1)));
    for (int k = 0; k <= 19; ++k) beta.push_back(ParamPoly(Rational(k + 2)));
    OdeSystem sys{alpha, beta};
    for (auto _ : state) {
        benchmark::DoNotOptimize(transfer_function(sys));
    }
}
BENCHMARK(BM_TransferFunctionOrder20);

void BM_PidNetlistTf(benchmark::State& state) {
    Netlist net = realize_controller(ControllerKind::PID);
    for (auto _ : state) {
        benchmark::DoNotOptimize(netlist_tf(net));
    }
}
BENCHMARK(BM_PidNetlistTf);

void BM_LaplaceSymbolic(benchmark::State& state) {
    TimeExprPtr expr = te::add(te::exp_mul(-2, te::mod_cos(3, te::power(2))),
                               te::integ(te::sine(1)));
    for (auto _ : state) {
        benchmark::DoNotOptimize(laplace_symbolic(*expr));
    }
}
BENCHMARK(BM_LaplaceSymbolic);

void BM_LaplaceNumeric(benchmark::State& state) {
    TimeExprPtr expr = te::exponential(-1);
    for (auto _ : state) {
        benchmark::DoNotOptimize(laplace_numeric(*expr, {1.0, 0.0}, 1e-8));
    }
}
BENCHMARK(BM_LaplaceNumeric);

void BM_BodeSweepDefault(benchmark::State& state) {
    TransferFunction g = tf_from_text("1/(s*(s+1))");
    for (auto _ : state) {
        benchmark::DoNotOptimize(bode_sweep(g, {}, 1e-3, 1e3, 200));
    }
}
BENCHMARK(BM_BodeSweepDefault);

void BM_RouthDegree6(benchmark::State& state) {
    SPoly den = tf_from_text("s^6+3*s^5+7*s^4+9*s^3+8*s^2+4*s+1").num();
    for (auto _ : state) {
        benchmark::DoNotOptimize(routh_stability(den, {}));
    }
}
BENCHMARK(BM_RouthDegree6);

void BM_SimulateFirstOrder(benchmark::State& state) {
    OdeSystem sys{{ParamPoly(1), ParamPoly(1)}, {ParamPoly(1)}};
    for (auto _ : state) {
        benchmark::DoNotOptimize(simulate(sys, {}, InputSignal::step(), 1e-3, 10.0));
    }
}
BENCHMARK(BM_SimulateFirstOrder);

void BM_UfssMarginReport(benchmark::State& state) {
    TransferFunction tf = ufss_pitch_tf(UfssParams::numeric(1, 1));
    for (auto _ : state) {
        benchmark::DoNotOptimize(margin_report(tf, TransferFunction::one(), {}));
    }
}
BENCHMARK(BM_UfssMarginReport);

}  // namespace

int main(int argc, char** argv) {
    benchmark::Initialize(&argc, argv);
    if (benchmark::ReportUnrecognizedArguments(argc, argv)) return 1;
    benchmark::RunSpecifiedBenchmarks();
    benchmark::Shutdown();
    return 0;
}
