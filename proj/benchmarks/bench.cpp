#include <benchmark/benchmark.h>

#include <random>

#include "s6p/flows.hpp"
#include "s6p/g2.hpp"
#include "s6p/hdw.hpp"
#include "s6p/octonion.hpp"
#include "s6p/sphere.hpp"

using namespace s6p;

namespace {

const G2Basis& g2() {
  static const G2Basis basis = compute_g2_basis();
  return basis;
}

}  // namespace

static void BM_ComputeG2Basis(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(compute_g2_basis());
}
BENCHMARK(BM_ComputeG2Basis);

static void BM_WedgeOmegaOmega(benchmark::State& state) {
  const PolyForm& w = omega_tilde();
  for (auto _ : state) benchmark::DoNotOptimize(wedge(w, w));
}
BENCHMARK(BM_WedgeOmegaOmega);

static void BM_ExteriorDerivativeTheta(benchmark::State& state) {
  const PolyForm theta = theta_tilde();
  for (auto _ : state) benchmark::DoNotOptimize(exterior_derivative(theta));
}
BENCHMARK(BM_ExteriorDerivativeTheta);

static void BM_HdwDim1(benchmark::State& state) {
  const Mat7Q xi = g2().elements[0];
  for (auto _ : state) benchmark::DoNotOptimize(hdw_dim1(xi));
}
BENCHMARK(BM_HdwDim1);

static void BM_NijenhuisOracle(benchmark::State& state) {
  std::mt19937_64 rng(1);
  const SpherePointQ p = random_rational_sphere_point(rng);
  Vec7Q u, v;
  for (auto& x : u) x = random_rational(rng, 3, 3);
  for (auto& x : v) x = random_rational(rng, 3, 3);
  for (auto _ : state) benchmark::DoNotOptimize(nijenhuis_oracle(p, u, v));
}
BENCHMARK(BM_NijenhuisOracle);

static void BM_MatrixExp(benchmark::State& state) {
  const Mat7d xi = to_mat7d(g2().elements[3]);
  double t = 0.0;
  for (auto _ : state) {
    t += 0.1;
    benchmark::DoNotOptimize(matrix_exp(t * xi));
  }
}
BENCHMARK(BM_MatrixExp);

static void BM_OrbitClassify(benchmark::State& state) {
  const CartanPair pair = cartan_subalgebra(g2(), 7);
  const Mat7d xi = to_mat7d(pair.h1);
  const Vec7d p = Vec7d::Ones().normalized();
  for (auto _ : state)
    benchmark::DoNotOptimize(orbit_closure_classify(xi, p));
}
BENCHMARK(BM_OrbitClassify);

static void BM_DriftReport(benchmark::State& state) {
  const Trajectory traj = flow_dim1(to_mat7d(g2().elements[0]),
                                    Vec7d::Ones().normalized(), 0.0, 10.0,
                                    0.1);
  for (auto _ : state) benchmark::DoNotOptimize(drift_report(traj));
}
BENCHMARK(BM_DriftReport);

BENCHMARK_MAIN();
