#include <doctest.h>

#include "flagchow/bundles.hpp"

using namespace flagchow;

namespace {
Polynomial P(const std::string& text, int m) { return parse_polynomial(text, m); }

Polynomial sigma1(int d, int m) {
  Polynomial s(m);
  for (int i = 1; i <= d; ++i) s += Polynomial::x(i, m);
  return s;
}
}  // namespace

TEST_CASE("bundle grammar round trips") {
  for (const char* text : {"O(2)", "H", "Q", "H*", "Q*", "dual(H + O(1))",
                           "sym2(H)", "H*(3) + O(-1)", "(H + Q)(2)"}) {
    BundlePtr e = parse_bundle(text);
    CHECK(parse_bundle(e->str())->str() == e->str());
  }
  CHECK_THROWS_AS(parse_bundle("sym2(H"), ParseError);
  CHECK_THROWS_AS(parse_bundle("R"), ParseError);
}

TEST_CASE("ranks follow the catalog") {
  CHECK(rank(*parse_bundle("H"), 3, 7) == 3);
  CHECK(rank(*parse_bundle("Q"), 3, 7) == 4);
  CHECK(rank(*parse_bundle("sym2(H)"), 2, 5) == 3);
  CHECK(rank(*parse_bundle("H* + O(0)"), 2, 5) == 3);
  CHECK_THROWS_AS(rank(*parse_bundle("sym2(H)"), 3, 7), Error);
}

TEST_CASE("Picard generator anchors") {
  for (auto [d, n] : std::vector<std::pair<int, int>>{{2, 4}, {3, 6}}) {
    int m = d + 1;
    CHECK(chern_pullback(*parse_bundle("O(1)"), d, n).poly ==
          Polynomial::t(m) + sigma1(d, m));
    CHECK(chern_pullback(*BundleExpr::taut_sub(), d, n).poly ==
          Polynomial::t(m) + Polynomial::x(d, m));
    CHECK(chern_pullback(*BundleExpr::taut_quot(), d, n).poly ==
          Polynomial::t(m) - Polynomial::x(d + 1, m));
  }
  CHECK(chern_pullback(*parse_bundle("O(0)"), 2, 5).poly == P("T", 3));
}

TEST_CASE("universal bundle Chern polynomials") {
  CHECK(chern_pullback(*parse_bundle("H*"), 2, 4).poly ==
        P("(T+X1)*(T+X2)", 3));
  ChernPolynomial q = chern_pullback(*parse_bundle("Q"), 2, 4);
  CHECK(q.poly == P("T^2 + (X1+X2)*T + X1^2 + X1*X2 + X2^2", 3));
  CHECK(ring_equal(FlagSpace::three_step_flag(2, 4), q.poly,
                   P("(T-X3)*(T+X1+X2+X3)", 3)));
}

TEST_CASE("dualize and twist transforms") {
  ChernPolynomial taut = chern_pullback(*BundleExpr::taut_sub(), 2, 5);
  CHECK(dualize(taut).poly == P("T - X2", 3));
  ChernPolynomial h_dual = chern_pullback(*parse_bundle("H*"), 2, 5);
  CHECK(dualize(h_dual).poly == P("(T-X1)*(T-X2)", 3));
  ChernPolynomial line = chern_pullback(*parse_bundle("O(0)"), 2, 5);
  CHECK(twist(line, 1).poly == P("T + X1 + X2", 3));
  CHECK(twist(h_dual, 0).poly == h_dual.poly);
  CHECK(twist(twist(h_dual, 2), -2).poly == h_dual.poly);
}

TEST_CASE("splitting types are table driven") {
  SplittingType ho = splitting_type(*parse_bundle("H* + O(1)"), 2, 5);
  CHECK(ho.u == std::vector<int>{1, 0});
  CHECK(ho.r == std::vector<int>{2, 1});
  SplittingType s2 = splitting_type(*parse_bundle("sym2(H)"), 2, 5);
  CHECK(s2.u == std::vector<int>{0, -1, -2});
  CHECK(s2.r == std::vector<int>{1, 1, 1});
  SplittingType line = splitting_type(*parse_bundle("O(3)"), 2, 5);
  CHECK(line.u == std::vector<int>{3});
  CHECK(line.r == std::vector<int>{1});
  SplittingType quot = splitting_type(*parse_bundle("Q"), 2, 6);
  CHECK(quot.u == std::vector<int>{1, 0});
  CHECK(quot.r == std::vector<int>{1, 3});
  SplittingType dual_quot = splitting_type(*parse_bundle("Q*"), 2, 6);
  CHECK(dual_quot.u == std::vector<int>{0, -1});
  CHECK(dual_quot.r == std::vector<int>{3, 1});
}

TEST_CASE("splitting types compose through dual and twist") {
  SplittingType st = splitting_type(*parse_bundle("dual(sym2(H))(1)"), 2, 5);
  CHECK(st.u == std::vector<int>{3, 2, 1});
  CHECK(st.r == std::vector<int>{1, 1, 1});
  SplittingType merged =
      splitting_type(*parse_bundle("H* + Q + O(1)"), 2, 6);
  CHECK(merged.u == std::vector<int>{1, 0});
  CHECK(merged.r == std::vector<int>{3, 4});
  CHECK_THROWS_AS(splitting_type(*BundleExpr::taut_sub(), 2, 5), Error);
}

TEST_CASE("consecutive gap reduction") {
  CHECK(consecutive_gap_reduction({{1, 0}, {1, 1}}));
  CHECK_FALSE(consecutive_gap_reduction({{2, 0}, {1, 1}}));
  CHECK(consecutive_gap_reduction({{0, -1, -2}, {1, 1, 1}}));
  CHECK(consecutive_gap_reduction({{5}, {3}}));
}

TEST_CASE("Whitney product over direct sums") {
  for (const char* lhs : {"O(1)", "H", "H*", "Q"}) {
    for (const char* rhs : {"O(-1)", "H*", "sym2(H)"}) {
      BundlePtr a = parse_bundle(lhs);
      BundlePtr b = parse_bundle(rhs);
      ChernPolynomial sum = chern_pullback(*BundleExpr::sum(a, b), 2, 5);
      CHECK(sum.poly ==
            chern_pullback(*a, 2, 5).poly * chern_pullback(*b, 2, 5).poly);
      CHECK(sum.rank == rank(*a, 2, 5) + rank(*b, 2, 5));
    }
  }
}

TEST_CASE("exact sequence: total classes of H and Q invert each other") {
  // Tested per X-degree: the degree-0 part is 1 and every positive-degree
  // part lies in the ideal.
  for (auto [d, n] : std::vector<std::pair<int, int>>{
           {2, 4}, {2, 5}, {2, 6}, {3, 6}, {3, 7}}) {
    FlagSpace g = FlagSpace::grassmannian(d, n);
    Polynomial product = total_chern_class(*BundleExpr::sub(), d, n) *
                         total_chern_class(*BundleExpr::quot(), d, n);
    CHECK(product.constant_term() == 1);
    for (int degree = 1; degree <= product.total_degree(); ++degree) {
      CHECK(in_ideal(g, product.homogeneous_component(degree)));
    }
  }
}

TEST_CASE("rank and degree coherence of produced Chern polynomials") {
  for (const char* text : {"O(2)", "H", "H*", "Q", "Q*", "sym2(H)(1)",
                           "H + O(1)", "Q*(2)"}) {
    ChernPolynomial c = chern_pullback(*parse_bundle(text), 2, 5);
    CHECK(c.poly.t_degree() == c.rank);
    auto info = homogeneous_degree(c.poly);
    CHECK(info.is_homogeneous_of(c.rank));
    ExponentRow lead(1 + 3, 0);
    lead[0] = c.rank;
    CHECK(c.poly.coefficient(lead) == 1);
  }
}

TEST_CASE("line specialization reads the splitting degree sum") {
  // Sending X1..X_{d-1} -> 0, X_d -> -h, X_{d+1} -> h turns the T^{rank-1}
  // coefficient into -(sum u_i r_i) * h.
  for (const char* text :
       {"O(1)", "O(-2)", "H", "H*", "Q", "Q*", "sym2(H)", "H* + O(3)"}) {
    int d = 2, n = 4;
    BundlePtr e = parse_bundle(text);
    ChernPolynomial c = chern_pullback(*e, d, n);
    SplittingType st = splitting_type(*e, d, n);
    Polynomial slice = c.poly.t_coefficient(c.rank - 1);
    // Zero the head variables first, then reuse X1 as the line parameter h.
    Polynomial zeroed = substitute_variable(slice, 1, Polynomial(3));
    Polynomial h = Polynomial::x(1, 3);
    Polynomial specialized =
        substitute_variable(substitute_variable(zeroed, 2, -h), 3, h);
    CHECK(specialized == Rational(-st.degree_sum()) * h);
  }
}
