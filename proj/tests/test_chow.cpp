#include <doctest.h>

#include <algorithm>
#include <thread>

#include "flagchow/chow.hpp"

using namespace flagchow;

namespace {

Polynomial P(const std::string& text, int m) { return parse_polynomial(text, m); }

// Independent Gaussian-binomial oracle via the Pascal recurrence
// [n k]_q = [n-1 k-1]_q + q^k [n-1 k]_q, as ascending coefficient vectors.
std::vector<long long> q_binomial(int n, int k) {
  std::vector<std::vector<std::vector<long long>>> table(
      n + 1, std::vector<std::vector<long long>>(k + 1));
  for (int i = 0; i <= n; ++i) {
    for (int j = 0; j <= std::min(i, k); ++j) {
      if (j == 0 || j == i) {
        table[i][j] = {1};
        continue;
      }
      std::vector<long long> value = table[i - 1][j - 1];
      const auto& shifted = table[i - 1][j];
      if (value.size() < shifted.size() + j) value.resize(shifted.size() + j, 0);
      for (std::size_t t = 0; t < shifted.size(); ++t) value[t + j] += shifted[t];
      table[i][j] = value;
    }
  }
  return table[n][k];
}

// Block-symmetrization of a monomial, for ideal-closure checks.
Polynomial orbit_sum(const ExponentRow& row, const BlockPartition& partition,
                     int m) {
  std::vector<ExponentRow> orbit{row};
  for (const auto& block : partition.blocks) {
    std::vector<int> exponents;
    for (int i : block) exponents.push_back(row[i]);
    std::sort(exponents.begin(), exponents.end());
    std::vector<std::vector<int>> arrangements;
    do {
      arrangements.push_back(exponents);
    } while (std::next_permutation(exponents.begin(), exponents.end()));
    std::vector<ExponentRow> next;
    for (const auto& base : orbit) {
      for (const auto& arrangement : arrangements) {
        ExponentRow permuted = base;
        for (std::size_t t = 0; t < block.size(); ++t) {
          permuted[block[t]] = arrangement[t];
        }
        next.push_back(permuted);
      }
    }
    orbit = std::move(next);
  }
  std::sort(orbit.begin(), orbit.end());
  orbit.erase(std::unique(orbit.begin(), orbit.end()), orbit.end());
  Polynomial sum(m);
  for (const auto& exponents : orbit) {
    sum += Polynomial::monomial(exponents, 1);
  }
  return sum;
}

void monomials_rec(int m, int pos, int remaining, ExponentRow& row,
                   std::vector<ExponentRow>& out) {
  if (pos == m) {
    if (remaining == 0) out.push_back(row);
    return;
  }
  for (int e = 0; e <= remaining; ++e) {
    row[pos + 1] = e;
    monomials_rec(m, pos + 1, remaining - e, row, out);
  }
  row[pos + 1] = 0;
}

}  // namespace

TEST_CASE("flag space descriptors") {
  FlagSpace g = FlagSpace::grassmannian(2, 4);
  CHECK(g.variable_count() == 2);
  CHECK(g.generator_degrees() == std::vector<int>{3, 4});
  FlagSpace f = FlagSpace::three_step_flag(2, 4);
  CHECK(f.variable_count() == 3);
  CHECK(f.generator_degrees() == std::vector<int>{2, 3, 4});
  CHECK(FlagSpace::three_step_flag(2, 6).generator_degrees() ==
        std::vector<int>{4, 5, 6});
  CHECK_THROWS_AS(FlagSpace::grassmannian(1, 4), Error);
  CHECK_THROWS_AS(FlagSpace::grassmannian(3, 5), Error);
}

TEST_CASE("ideal generators are the truncated complete homogeneous sums") {
  auto gens = ideal_generators(FlagSpace::grassmannian(2, 4));
  REQUIRE(gens.size() == 2);
  CHECK(gens[0] == sigma({1, 2}, 3, 2));
  CHECK(gens[1] == sigma({1, 2}, 4, 2));
  auto flag_gens = ideal_generators(FlagSpace::three_step_flag(2, 4));
  REQUIRE(flag_gens.size() == 3);
  CHECK(flag_gens[0] == sigma({1, 2, 3}, 2, 3));
}

TEST_CASE("in_ideal answers membership per graded piece") {
  FlagSpace flag24 = FlagSpace::three_step_flag(2, 4);
  CHECK(in_ideal(flag24, sigma({1, 2, 3}, 2, 3)));
  CHECK(in_ideal(flag24, Polynomial(3)));
  FlagSpace g24 = FlagSpace::grassmannian(2, 4);
  CHECK_FALSE(in_ideal(g24, P("X1^3 + X2^3", 2)));
  CHECK(in_ideal(g24, P("X1^3 + X1^2*X2 + X1*X2^2 + X2^3", 2)));
  CHECK_THROWS_AS(in_ideal(g24, P("X1", 2) * P("X1 + 2*X2", 2)), Error);
  CHECK_THROWS_AS(in_ideal(g24, P("X1*X2 + X1 + X2", 2)), Error);
}

TEST_CASE("ring_equal spec examples") {
  FlagSpace flag24 = FlagSpace::three_step_flag(2, 4);
  Polynomial p = P("T^2 + (X1+X2)*T + X1^2 + X1*X2 + X2^2", 3);
  CHECK(ring_equal(flag24, p, p));
  CHECK(ring_equal(flag24, P("(T-X3)*(T+X1+X2+X3)", 3), p));
  FlagSpace g24 = FlagSpace::grassmannian(2, 4);
  CHECK_FALSE(ring_equal(g24, P("T", 2), P("T + X1 + X2", 2)));
}

TEST_CASE("graded dimensions match the Gaussian binomial oracle") {
  FlagSpace g24 = FlagSpace::grassmannian(2, 4);
  std::vector<int> dims;
  for (int degree = 0; degree <= 4; ++degree) {
    dims.push_back(graded_dimension(g24, degree));
  }
  CHECK(dims == std::vector<int>{1, 1, 2, 1, 1});
  CHECK(graded_dimension(FlagSpace::grassmannian(2, 5), 6) == 1);
  CHECK(graded_dimension(FlagSpace::three_step_flag(3, 7), 0) == 1);

  auto oracle = q_binomial(4, 2);
  for (int degree = 0; degree <= 4; ++degree) {
    CHECK(dims[degree] == oracle[degree]);
  }
}

TEST_CASE("flag-space dimensions match the flag Euler characteristics") {
  // F(1,2,3,4) is the complete flag of C^4: its cohomology is the
  // coinvariant algebra, Poincare vector (1,3,5,6,5,3,1), total 24.
  FlagSpace f24 = FlagSpace::three_step_flag(2, 4);
  std::vector<int> expected{1, 3, 5, 6, 5, 3, 1};
  int total = 0;
  for (int degree = 0; degree <= 6; ++degree) {
    CHECK(graded_dimension(f24, degree) == expected[degree]);
    total += graded_dimension(f24, degree);
  }
  CHECK(total == 24);

  // F(2,3,4;6) has chi = C(6,2) C(4,1) C(3,1) = 180 and dimension 13; the
  // graded dimensions are symmetric about the middle degree.
  FlagSpace f36 = FlagSpace::three_step_flag(3, 6);
  std::vector<int> dims;
  int total36 = 0;
  for (int degree = 0; degree <= 13; ++degree) {
    dims.push_back(graded_dimension(f36, degree));
    total36 += dims.back();
  }
  CHECK(total36 == 180);
  for (int degree = 0; degree <= 13; ++degree) {
    CHECK(dims[degree] == dims[13 - degree]);
  }
}

TEST_CASE("min_ideal_degree equals n - d_k + 1") {
  CHECK(min_ideal_degree(FlagSpace::three_step_flag(2, 6)) == 4);
  CHECK(min_ideal_degree(FlagSpace::three_step_flag(2, 4)) == 2);
  CHECK(min_ideal_degree(FlagSpace::grassmannian(2, 4)) == 3);
}

TEST_CASE("ideal closure under block-symmetric multiples") {
  for (FlagSpace space : {FlagSpace::grassmannian(2, 5),
                          FlagSpace::three_step_flag(2, 4),
                          FlagSpace::three_step_flag(3, 6)}) {
    int m = space.variable_count();
    auto gens = ideal_generators(space);
    auto degrees = space.generator_degrees();
    for (std::size_t g = 0; g < gens.size(); ++g) {
      for (int extra = 0; degrees[g] + extra <= space.d() + 2; ++extra) {
        std::vector<ExponentRow> monomials;
        ExponentRow row(1 + m, 0);
        monomials_rec(m, 0, extra, row, monomials);
        for (const auto& mu : monomials) {
          Polynomial multiplier = orbit_sum(mu, space.blocks(), m);
          CHECK(in_ideal(space, multiplier * gens[g]));
        }
      }
    }
  }
}

TEST_CASE("ring_equal is an equivalence on ideal-shifted triples") {
  FlagSpace flag24 = FlagSpace::three_step_flag(2, 4);
  Polynomial base = P("X1*X2 + X2*X3 + X1*X3", 3);
  Polynomial a = base;
  Polynomial b = base + sigma({1, 2, 3}, 2, 3);
  Polynomial c = base + Rational(3) * sigma({1, 2, 3}, 2, 3);
  CHECK(ring_equal(flag24, a, a));
  CHECK(ring_equal(flag24, a, b));
  CHECK(ring_equal(flag24, b, a));
  CHECK(ring_equal(flag24, b, c));
  CHECK(ring_equal(flag24, a, c));
}

TEST_CASE("reduce gives canonical normal forms") {
  FlagSpace flag24 = FlagSpace::three_step_flag(2, 4);
  CHECK(reduce(flag24, sigma({1, 2, 3}, 2, 3)).is_zero());
  Polynomial p = P("(T-X3)*(T+X1+X2+X3)", 3);
  Polynomial r = reduce(flag24, p);
  CHECK(reduce(flag24, r) == r);
  CHECK(ring_equal(flag24, p, r));
}

TEST_CASE("symmetric_representative produces X-free symmetric forms") {
  FlagSpace flag24 = FlagSpace::three_step_flag(2, 4);
  Polynomial p = P("(T-X3)*(T+X1+X2+X3)", 3);
  Polynomial rep = symmetric_representative(flag24, p);
  CHECK(rep == P("T^2 + (X1+X2)*T + X1^2 + X1*X2 + X2^2", 3));
  BlockPartition first_two{{{1, 2}, {3}}};
  CHECK(is_block_symmetric(rep, first_two));
  CHECK(ring_equal(flag24, rep, p));
}

TEST_CASE("graded piece cache tolerates concurrent readers") {
  FlagSpace g25 = FlagSpace::grassmannian(2, 5);
  std::vector<std::thread> workers;
  std::vector<int> results(4, -1);
  for (int i = 0; i < 4; ++i) {
    workers.emplace_back([&results, i, g25] {
      results[i] = graded_dimension(g25, 3);
    });
  }
  for (auto& worker : workers) worker.join();
  for (int value : results) CHECK(value == 2);
}
