#include <benchmark/benchmark.h>

#include "demb/catalog.hpp"
#include "demb/emb.hpp"
#include "demb/lattice.hpp"

using namespace demb;

static void BM_HullPentagon(benchmark::State& state) {
  std::vector<QVector> pts = catalog_pentagon().vertices;
  for (auto _ : state) {
    Polytope p = hull_from_vertices(pts);
    benchmark::DoNotOptimize(p);
  }
}
BENCHMARK(BM_HullPentagon);

static void BM_HullCube4D(benchmark::State& state) {
  std::vector<QVector> pts = catalog_cube(4, Rational(1)).vertices;
  for (auto _ : state) {
    Polytope p = hull_from_vertices(pts);
    benchmark::DoNotOptimize(p);
  }
}
BENCHMARK(BM_HullCube4D);

static void BM_EmbPentagon(benchmark::State& state) {
  Polytope pent = catalog_pentagon();
  for (auto _ : state) {
    StepFunction sf = emb_function(pent);
    benchmark::DoNotOptimize(sf);
  }
}
BENCHMARK(BM_EmbPentagon);

static void BM_EmbCpProduct22(benchmark::State& state) {
  Polytope p = catalog_cp_product(2, 2, Rational(3, 2));
  for (auto _ : state) {
    StepFunction sf = emb_function(p);
    benchmark::DoNotOptimize(sf);
  }
}
BENCHMARK(BM_EmbCpProduct22);

static void BM_UnimodularImageInvariant(benchmark::State& state) {
  Polytope pent = catalog_pentagon();
  std::uint64_t seed = 1;
  for (auto _ : state) {
    ZMatrix a = random_unimodular(2, seed++, Int(10));
    StepFunction sf = emb_function(map_affine(pent, a, {Rational(1), Rational(-2)}));
    benchmark::DoNotOptimize(sf);
  }
}
BENCHMARK(BM_UnimodularImageInvariant);

static void BM_ValidateDelzant(benchmark::State& state) {
  Polytope p = catalog_cube(3, Rational(2));
  for (auto _ : state) {
    DelzantReport rep = validate_delzant(p);
    benchmark::DoNotOptimize(rep);
  }
}
BENCHMARK(BM_ValidateDelzant);

BENCHMARK_MAIN();
