#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "flagchow/chow.hpp"
#include "flagchow/polynomial.hpp"

namespace flagchow {

class BundleExpr;
using BundlePtr = std::shared_ptr<const BundleExpr>;

// Symbolic bundle expression on G(d,n).  Leaves are the catalog bundles;
// Dual, Twist, Sym2 and DirectSum build on them.  TautSub and TautQuot are
// the tautological line bundles living on F(d-1,d,d+1,n).
class BundleExpr {
 public:
  enum class Kind {
    Line,      // O(a)
    Sub,       // H_d
    Quot,      // Q_{n-d}
    TautSub,   // tautological line bundle of the H_d^* side
    TautQuot,  // tautological line bundle of the Q_{n-d} side
    Dual,
    Twist,
    Sym2,
    Sum,
  };

  static BundlePtr line(int a);
  static BundlePtr sub();
  static BundlePtr quot();
  static BundlePtr taut_sub();
  static BundlePtr taut_quot();
  static BundlePtr dual(BundlePtr e);
  static BundlePtr twist(BundlePtr e, int t);
  static BundlePtr sym2(BundlePtr e);
  static BundlePtr sum(BundlePtr lhs, BundlePtr rhs);

  Kind kind() const { return kind_; }
  int amount() const { return amount_; }  // a for Line, t for Twist
  const BundlePtr& left() const { return left_; }
  const BundlePtr& right() const { return right_; }

  std::string str() const;

 private:
  BundleExpr(Kind kind, int amount, BundlePtr left, BundlePtr right)
      : kind_(kind), amount_(amount), left_(std::move(left)),
        right_(std::move(right)) {}

  Kind kind_;
  int amount_;
  BundlePtr left_, right_;
};

// Grammar: O(a), H, Q, dual(E), sym2(E), E* for dual, E(t) for twist,
// E + F for direct sum; parentheses as usual.
BundlePtr parse_bundle(const std::string& text);

int rank(const BundleExpr& e, int d, int n);

// Chern polynomial pulled back to F(d-1,d,d+1,n): monic in T of T-degree
// equal to the rank, homogeneous of that total degree, in X1..X_{d+1}.
struct ChernPolynomial {
  Polynomial poly;
  int rank;
  FlagSpace space;  // ThreeStepFlag(d, n)
};

ChernPolynomial chern_pullback(const BundleExpr& e, int d, int n);

// Chern roots as X-linear forms (coefficient vectors of length d+1), when
// the expression admits them in the materialized ring.
std::optional<std::vector<std::vector<Rational>>> chern_roots(
    const BundleExpr& e, int d, int n);

// poly -> (-1)^rank poly(-T); an involution.
ChernPolynomial dualize(const ChernPolynomial& c);

// poly -> poly(T + t(X1+...+Xd)); twist(s) after twist(t) is twist(s+t).
ChernPolynomial twist(const ChernPolynomial& c, int t);

// Total Chern class 1 + c1 + c2 + ... as a polynomial in X1..Xd.
Polynomial total_chern_class(const BundleExpr& e, int d, int n);

// Restriction data on lines: exponents u strictly decreasing with positive
// multiplicities r summing to the rank.
struct SplittingType {
  std::vector<int> u;
  std::vector<int> r;

  int parts() const { return static_cast<int>(u.size()); }
  int total_rank() const;
  int degree_sum() const;  // sum u_i * r_i
  std::string str() const;
  bool operator==(const SplittingType& other) const = default;
};

SplittingType splitting_type(const BundleExpr& e, int d, int n);

// True iff every gap u_i - u_{i+1} equals 1; any larger gap means the
// bundle is an extension of two uniform bundles and is not classified
// directly.
bool consecutive_gap_reduction(const SplittingType& st);

}  // namespace flagchow
