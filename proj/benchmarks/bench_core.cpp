#include <benchmark/benchmark.h>

#include <cmath>
#include <complex>

#include "statdg/evolution.hpp"
#include "statdg/kernel.hpp"
#include "statdg/projectors.hpp"
#include "statdg/setups.hpp"
#include "statdg/solver.hpp"

namespace {

using namespace statdg;

void BM_AcousticRhs(benchmark::State& state) {
  const int K = static_cast<int>(state.range(0));
  const Grid grid{50, 50, 1.0, 1.0};
  const Solver solver(acoustics(), acoustic_flux(FluxKind::lowmach), grid, K);
  DGField q = project_to_dg(grid, K, 3, acoustic_vortex());
  DGField out(grid, K, 3);
  for (auto _ : state) {
    solver.rhs(q, out);
    benchmark::DoNotOptimize(out.data().data());
    benchmark::ClobberMemory();
  }
  state.SetItemsProcessed(state.iterations() * grid.cells());
}
BENCHMARK(BM_AcousticRhs)->Arg(0)->Arg(1)->Arg(2)->Arg(3)->Unit(benchmark::kMicrosecond);

void BM_EulerRhs(benchmark::State& state) {
  const int K = static_cast<int>(state.range(0));
  const Grid grid{25, 25, 1.0, 1.0};
  const EulerModel model{1.4, FluxKind::rusanov, 0.1};
  const Solver solver(model, grid, K);
  DGField q = project_to_dg(grid, K, 4, gresho_vortex(0.1));
  DGField out(grid, K, 4);
  for (auto _ : state) {
    solver.rhs(q, out);
    benchmark::DoNotOptimize(out.data().data());
    benchmark::ClobberMemory();
  }
  state.SetItemsProcessed(state.iterations() * grid.cells());
}
BENCHMARK(BM_EulerRhs)->Arg(0)->Arg(1)->Arg(2)->Unit(benchmark::kMicrosecond);

void BM_StencilCompile(benchmark::State& state) {
  const int K = static_cast<int>(state.range(0));
  const LinearModel model = acoustics();
  const FluxMatrices flux = acoustic_flux(FluxKind::lowmach);
  for (auto _ : state) {
    LinearStencil s = compile_linear_stencil(model, flux, K, 0.04, 0.04);
    benchmark::DoNotOptimize(s.blocks.data());
  }
}
BENCHMARK(BM_StencilCompile)->Arg(1)->Arg(3)->Unit(benchmark::kMicrosecond);

void BM_EvolutionMatrix(benchmark::State& state) {
  const int K = static_cast<int>(state.range(0));
  const LinearModel model = acoustics();
  const FluxMatrices flux = acoustic_flux(FluxKind::lowmach);
  const BasisSet basis(K);
  const ShiftBlocks blocks = evolution_blocks(model, flux, basis, 0.1, 0.07);
  const std::complex<double> tx = std::exp(std::complex<double>(0.0, 0.43));
  const std::complex<double> ty = std::exp(std::complex<double>(0.0, 1.21));
  for (auto _ : state) {
    Eigen::MatrixXcd E = evolution_matrix(blocks, tx, ty);
    benchmark::DoNotOptimize(E.data());
  }
}
BENCHMARK(BM_EvolutionMatrix)->Arg(1)->Arg(2)->Arg(3)->Unit(benchmark::kMicrosecond);

void BM_KernelNullSpace(benchmark::State& state) {
  const int K = static_cast<int>(state.range(0));
  const bool refined = state.range(1) != 0;
  const LinearModel model = acoustics();
  const FluxMatrices flux = acoustic_flux(FluxKind::lowmach);
  const BasisSet basis(K);
  const Eigen::MatrixXcd E =
      assemble_evolution_matrix(model, flux, basis, 1.0, 0.7, 0.01, 0.01);
  for (auto _ : state) {
    KernelSample s = null_space(E, 1e-9, refined);
    benchmark::DoNotOptimize(s.basis.data());
  }
}
BENCHMARK(BM_KernelNullSpace)
    ->Args({1, 0})
    ->Args({2, 0})
    ->Args({3, 0})
    ->Args({1, 1})
    ->Args({2, 1})
    ->Args({3, 1})
    ->Unit(benchmark::kMillisecond);

void BM_SteadyOrderLadder(benchmark::State& state) {
  const LinearModel model = acoustics();
  const FluxMatrices flux = acoustic_flux(FluxKind::upwind);
  std::vector<double> ladder;
  for (int p = 3; p <= 8; ++p) ladder.push_back(std::pow(2.0, -p));
  for (auto _ : state) {
    StationarityOrder ord = steady_order_fit(model, flux, 1, 1.0, 0.7, ladder);
    benchmark::DoNotOptimize(ord.fit.slope);
  }
}
BENCHMARK(BM_SteadyOrderLadder)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
