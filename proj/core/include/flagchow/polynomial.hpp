#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "flagchow/rational.hpp"

namespace flagchow {

// Exponent row of a term: entry 0 is the T exponent, entries 1..m are X1..Xm.
using ExponentRow = std::vector<int>;

// Sparse multivariate polynomial in T, X1..Xm over exact rationals.
//
// Terms are kept in lexicographic exponent-row order with T first, which
// fixes canonical printing and deterministic iteration.  Zero coefficients
// are never stored, so two polynomials are equal iff their term maps are.
// Every operation is a pure function over immutable values.
class Polynomial {
 public:
  using TermMap = std::map<ExponentRow, Rational>;

  Polynomial() : vars_(0) {}
  explicit Polynomial(int variable_count) : vars_(variable_count) {}

  static Polynomial constant(const Rational& value, int variable_count);
  static Polynomial t(int variable_count);
  static Polynomial x(int index, int variable_count);  // index is 1-based
  static Polynomial monomial(const ExponentRow& row, const Rational& coeff);

  int variable_count() const { return vars_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t term_count() const { return terms_.size(); }
  const TermMap& terms() const { return terms_; }

  Rational coefficient(const ExponentRow& row) const;
  Rational constant_term() const;

  // -1 on the zero polynomial.
  int t_degree() const;
  int total_degree() const;

  // The coefficient of T^k as a polynomial in the X variables alone.
  Polynomial t_coefficient(int k) const;
  // The sum of all terms of the given total degree.
  Polynomial homogeneous_component(int degree) const;

  bool operator==(const Polynomial& other) const {
    return vars_ == other.vars_ && terms_ == other.terms_;
  }

  Polynomial operator-() const;
  Polynomial& operator+=(const Polynomial& other);
  Polynomial& operator-=(const Polynomial& other);
  friend Polynomial operator+(Polynomial lhs, const Polynomial& rhs) {
    lhs += rhs;
    return lhs;
  }
  friend Polynomial operator-(Polynomial lhs, const Polynomial& rhs) {
    lhs -= rhs;
    return lhs;
  }
  friend Polynomial operator*(const Polynomial& lhs, const Polynomial& rhs);
  friend Polynomial operator*(const Rational& scalar, const Polynomial& p);

  // Canonical form: terms in descending term order, reduced fractions.
  std::string str() const;

 private:
  void add_term(const ExponentRow& row, const Rational& coeff);
  void check_same_arity(const Polynomial& other) const;

  int vars_;
  TermMap terms_;
};

Polynomial pow(const Polynomial& base, int exponent);

// Monic-in-T linear form t_coeff*T + sum_i x_coeffs[i]*X_{i+1}.
struct LinearForm {
  Rational t_coeff;
  std::vector<Rational> x_coeffs;

  int variable_count() const { return static_cast<int>(x_coeffs.size()); }
  bool is_zero() const;
  Polynomial to_polynomial() const;
  bool operator==(const LinearForm& other) const = default;
  std::string str() const;
};

// Ordered disjoint index sets covering {1..m}.
struct BlockPartition {
  std::vector<std::vector<int>> blocks;

  static BlockPartition single(int m);
  void validate(int m) const;
};

// Expression parser for the ASCII grammar: variables T, X1..Xm, integer and
// rational literals p/q, operators + - * ^ with ^ tightest, parentheses.
Polynomial parse_polynomial(const std::string& text, int variable_count);

enum class Homogeneity { Zero, Homogeneous, Mixed };

struct HomogeneityInfo {
  Homogeneity kind;
  int degree;  // meaningful only when kind == Homogeneous

  bool is_zero() const { return kind == Homogeneity::Zero; }
  bool is_homogeneous_of(int d) const {
    return kind == Homogeneity::Zero ||
           (kind == Homogeneity::Homogeneous && degree == d);
  }
};

HomogeneityInfo homogeneous_degree(const Polynomial& p);

// True iff p is invariant under every transposition of adjacent indices
// within each block; those transpositions generate the block-symmetric group.
bool is_block_symmetric(const Polynomial& p, const BlockPartition& partition);

// Complete homogeneous symmetric polynomial of the given degree over the
// listed X variables (1-based indices); sigma(_, 0, m) == 1.
Polynomial sigma(const std::vector<int>& variables, int degree,
                 int variable_count);

// Replace T by form.t_coeff*T + sum form.x_coeffs[i]*X_{i+1}.
// Requires t_coeff == 1 so the substitution preserves monicity in T.
Polynomial substitute_t(const Polynomial& p, const LinearForm& form);

// Replace one variable (0 = T, 1..m = X index) by an arbitrary polynomial.
Polynomial substitute_variable(const Polynomial& p, int index,
                               const Polynomial& value);

// Exact quotient of p by the monic linear form, or nullopt when the
// division leaves a remainder.
std::optional<Polynomial> divide_by_linear(const Polynomial& p,
                                           const LinearForm& divisor);

// All distinct monic-in-T linear forms dividing p (p monic in T with
// T-degree equal to its total degree), in deterministic order.
std::vector<LinearForm> linear_divisors(const Polynomial& p);

// Full multiset of monic linear forms whose product is p, when p splits
// over the rationals; nullopt otherwise.  Pre: p homogeneous and monic in T
// of T-degree equal to its total degree.
std::optional<std::vector<LinearForm>> linear_t_factorization(
    const Polynomial& p);

// q with p*q == 1 modulo all terms of total degree > max_degree.
// Throws unless the constant term of p is 1.
Polynomial truncated_inverse(const Polynomial& p, int max_degree);

// Rational roots (with multiplicity) of a monic univariate polynomial given
// by ascending coefficients; coeffs.back() must be 1.
std::vector<Rational> rational_roots(std::vector<Rational> coeffs);

// Dense ascending T-coefficients of p after substituting the X variables at
// a rational point.
std::vector<Rational> specialize_x(const Polynomial& p,
                                   const std::vector<Rational>& point);

// Reinterpret p in a ring with more or fewer X variables.  Shrinking throws
// if any dropped variable actually occurs.
Polynomial with_variable_count(const Polynomial& p, int variable_count);

}  // namespace flagchow
