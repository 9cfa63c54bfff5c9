#include <benchmark/benchmark.h>

#include "flagchow/bundles.hpp"
#include "flagchow/chow.hpp"
#include "flagchow/classify.hpp"
#include "flagchow/polynomial.hpp"

using namespace flagchow;

namespace {

static void BM_PolynomialMul(benchmark::State& state) {
  Polynomial a = parse_polynomial("(T+X1)*(T+X2)*(T+X3)*(T+X1+X2+X3)", 3);
  Polynomial b = parse_polynomial("(T-X1)*(T-X2)*(T-X3)*(T-2*X1-X2)", 3);
  for (auto _ : state) {
    benchmark::DoNotOptimize(a * b);
  }
}
BENCHMARK(BM_PolynomialMul);

static void BM_TruncatedInverse(benchmark::State& state) {
  Polynomial p = parse_polynomial("(1+X1)*(1+X2)*(1+X3)", 3);
  for (auto _ : state) {
    benchmark::DoNotOptimize(truncated_inverse(p, 5));
  }
}
BENCHMARK(BM_TruncatedInverse);

static void BM_LinearFactorization(benchmark::State& state) {
  Polynomial p = parse_polynomial("(T+X1)*(T+X2)*(T+2*X1-X2)*(T+X1+X2)", 2);
  for (auto _ : state) {
    benchmark::DoNotOptimize(linear_t_factorization(p));
  }
}
BENCHMARK(BM_LinearFactorization);

static void BM_RingEqual(benchmark::State& state) {
  FlagSpace flag = FlagSpace::three_step_flag(2, 4);
  Polynomial lhs = parse_polynomial("(T-X3)*(T+X1+X2+X3)", 3);
  Polynomial rhs =
      parse_polynomial("T^2 + (X1+X2)*T + X1^2 + X1*X2 + X2^2", 3);
  for (auto _ : state) {
    benchmark::DoNotOptimize(ring_equal(flag, lhs, rhs));
  }
}
BENCHMARK(BM_RingEqual);

static void BM_GradedDimensionTop(benchmark::State& state) {
  for (auto _ : state) {
    FlagSpace g = FlagSpace::grassmannian(3, 8);
    benchmark::DoNotOptimize(graded_dimension(g, 15));
  }
}
BENCHMARK(BM_GradedDimensionTop);

static void BM_MatchCase(benchmark::State& state) {
  ChernPolynomial c = chern_pullback(
      *BundleExpr::sum(BundleExpr::dual(BundleExpr::sub()), BundleExpr::line(1)),
      2, 6);
  for (auto _ : state) {
    benchmark::DoNotOptimize(match_case(c, 2, 6));
  }
}
BENCHMARK(BM_MatchCase);

}  // namespace

BENCHMARK_MAIN();
