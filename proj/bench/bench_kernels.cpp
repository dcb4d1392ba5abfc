#include <benchmark/benchmark.h>

#include "versalkit/algebra.hpp"
#include "versalkit/determinants.hpp"
#include "versalkit/local_ops.hpp"
#include "versalkit/models.hpp"

using namespace vk;

namespace {

const AssocAlgebra& group_algebra_b() {
  static const AssocAlgebra alg = [] {
    GroupModel m = models::model_b();
    return AssocAlgebra::group_algebra(m.G, std::make_shared<const LocalRing>(LocalRing::residue_field(m.k)));
  }();
  return alg;
}

const ChAlgebra& ch_f_dual() {
  static const ChAlgebra ch = [] {
    GroupModel m = models::model_f();
    RingPtr D = dual_numbers(m.k);
    auto GA = std::make_shared<const AssocAlgebra>(AssocAlgebra::group_algebra(m.G, D));
    return ch_quotient(GA, split_pair(m, D));
  }();
  return ch;
}

const MatrixRep& versal_a() {
  static const MatrixRep rho = [] {
    GroupModel m = models::model_a();
    auto K = std::make_shared<const LocalRing>(LocalRing::residue_field(m.k));
    return versal_matrix_model(m, split_pair(m, K)).rho;
  }();
  return rho;
}

kernels::Mode mode_of(const benchmark::State& s) {
  return s.range(0) == 0 ? kernels::Mode::Serial : kernels::Mode::Parallel;
}

void BM_GroupAlgebraAssociativity(benchmark::State& state) {
  const AssocAlgebra& A = group_algebra_b();
  for (auto _ : state) benchmark::DoNotOptimize(A.associativity_failure(mode_of(state)));
  state.SetLabel(state.range(0) == 0 ? "serial" : "openmp");
}

void BM_ChAssociativity(benchmark::State& state) {
  const AssocAlgebra& A = ch_f_dual().alg();
  for (auto _ : state) benchmark::DoNotOptimize(A.associativity_failure(mode_of(state)));
  state.SetLabel(state.range(0) == 0 ? "serial" : "openmp");
}

void BM_VersalMultiplicativity(benchmark::State& state) {
  const MatrixRep& rho = versal_a();
  for (auto _ : state) benchmark::DoNotOptimize(multiplicativity_failure(rho, mode_of(state)));
  state.SetLabel(state.range(0) == 0 ? "serial" : "openmp");
}

void BM_DeterminantValidation(benchmark::State& state) {
  GroupModel m = models::model_f();
  DeterminantPair det = split_pair(m, dual_numbers(m.k));
  for (auto _ : state) benchmark::DoNotOptimize(validate(det, &m, mode_of(state)));
  state.SetLabel(state.range(0) == 0 ? "serial" : "openmp");
}

}  // namespace

BENCHMARK(BM_GroupAlgebraAssociativity)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_ChAssociativity)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_VersalMultiplicativity)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_DeterminantValidation)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
