#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "flagchow/bundles.hpp"
#include "flagchow/chow.hpp"
#include "flagchow/polynomial.hpp"

namespace flagchow {

enum class Regime { Small, Boundary, Equal };  // d<n-d-1, d=n-d-1, d=n-d

Regime regime_of(int d, int n);
std::string regime_name(Regime regime);

// Irreducible-factor shape T + sum_i lambda_{block(i)} X_i with the blocks
// given by an ascending partition of d and pairwise distinct lambdas.
struct FactorShape {
  std::vector<int> partition;
  std::vector<Rational> lambdas;

  void validate(int d) const;
  // Product of all distinct symmetrizations of the factor over S_d.
  Polynomial symmetrized_product(int d, int variable_count) const;
};

// Ascending partitions of d whose symmetrization orbit d!/(prod k_i!) has
// size at most r.
std::vector<std::vector<int>> admissible_partitions(int d, int r);

struct Transform {
  int twist = 0;
  bool dualized = false;
};

struct NormalFormCase {
  std::string label;
  Regime regime;
  Polynomial poly;   // in X1..X_{d+1}, monic in T, homogeneous of degree d+1
  BundlePtr family;  // null when no family exists (case 6 for d >= 3)
  std::string family_note;
};

// The admissible Chern-polynomial normal forms for uniform rank-(d+1)
// bundles in the given regime, with their matching bundle families.
std::vector<NormalFormCase> normal_form_cases(int d, Regime regime);

// Twist anchoring: shifts T so the coefficient of T^{rank-1} becomes
// lambda * (X1+...+Xd) with lambda in [0, rank).  Never dualizes; the
// dualized flag in the returned transform is always false.
std::pair<Polynomial, Transform> normalize(const ChernPolynomial& c);

struct MatchResult {
  NormalFormCase matched;
  Transform transform;  // applied to the input before comparing
};

struct AmbiguousMatch : Error {
  using Error::Error;
};

// Tests the input against each normal-form case for the regime of (d,n),
// modulo the ideal of F(d-1,d,d+1,n).  Prefers the non-dualized transform;
// two distinct cases matching in the same pass raise AmbiguousMatch.
std::optional<MatchResult> match_case(const ChernPolynomial& c, int d, int n);

// One instance of the master equation: E = prod_i S_i(T + u_i X_d; ...) +
// (a T + b(X_1+...+X_{d-1}) + c X_d + e X_{d+1}) Sigma_{n-d}(X_1..X_{d+1})
// + f Sigma_{n-d+1}(X_1..X_d), in the d = n-d regime.
struct CurlyEInstance {
  int d = 0;
  int n = 0;
  std::vector<int> u;         // strictly decreasing shift exponents
  std::vector<Polynomial> S;  // block-symmetric, monic in T, homogeneous
  Rational a, b, c, e, f;
  std::optional<int> shift_index;  // 0-based index of the applied shift

  void validate() const;
};

Polynomial build_curly_e(const CurlyEInstance& inst);

// Substitutes T -> T - u_j(X1+...+Xd) through the instance and re-extracts
// the correction coefficients exactly; a, e, f are shift-invariant.
CurlyEInstance shift_instance(const CurlyEInstance& inst, int j);

enum class Constraint { EPlusF, BCZero, MDivisibility };

// Checks the named proposition's conclusion on the concrete instance.
// BCZero requires a == 0, MDivisibility requires a != 0; both locate the
// index j0 whose S_{j0} has no X_{d+1}^{r_{j0}} term.
bool verify_constraint(const CurlyEInstance& inst, Constraint which);

// Unique decomposition of a polynomial over the correction basis
// {T Sigma_{n-d}, (X1+...+X_{d-1}) Sigma_{n-d}, X_d Sigma_{n-d},
//  X_{d+1} Sigma_{n-d}, Sigma_{n-d+1}(X1..Xd)}.
std::optional<std::array<Rational, 5>> decompose_correction(
    const Polynomial& correction, int d, int n);

struct SearchLimits {
  long long max_correction_tuples = 10'000'000;
};

// Brute-force oracle for the d = n-d = 2 regime: for every integer
// correction tuple in [-bound, bound]^5 and every composition of d+1 into
// |u| parts, finds all S_i solving the identity exactly.  Deterministic.
std::vector<CurlyEInstance> search_factorizations(
    const Polynomial& target, int d, int n, const std::vector<int>& u,
    int bound, const SearchLimits& limits = {});

struct ReportEntry {
  std::string family;
  SplittingType type;
  std::string regime;
  std::string case_id;
  Transform transform;
  bool verified = false;
  std::string note;
};

struct TheoremReport {
  int d = 0;
  int n = 0;
  std::string regime;
  std::vector<ReportEntry> entries;
  std::vector<std::string> diagnostics;
  bool all_verified = false;

  std::vector<std::string> matched_case_labels() const;
  std::string text() const;
  std::string json() const;
};

// Runs every catalog family for (d,n) through chern_pullback and
// match_case; a family that fails to match, fails verification, or matches
// ambiguously makes all_verified false and adds a diagnostic.
TheoremReport classify_theorem(int d, int n);

}  // namespace flagchow
