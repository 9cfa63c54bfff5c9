#include <algorithm>
#include <set>

#include "flagchow/polynomial.hpp"

namespace flagchow {

namespace {

// Integer divisors of |n| in ascending order; n must be nonzero.
std::vector<Integer> divisors(Integer n) {
  if (n < 0) n = -n;
  std::vector<Integer> small, large;
  for (Integer d = 1; d * d <= n; ++d) {
    if (n % d == 0) {
      small.push_back(d);
      if (d * d != n) large.push_back(n / d);
    }
  }
  small.insert(small.end(), large.rbegin(), large.rend());
  return small;
}

Rational eval(const std::vector<Rational>& coeffs, const Rational& x) {
  Rational value(0);
  for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) {
    value = value * x + *it;
  }
  return value;
}

// Deflate by the root: coeffs := coeffs / (X - root).  Exact by assumption.
void deflate(std::vector<Rational>& coeffs, const Rational& root) {
  std::vector<Rational> quotient(coeffs.size() - 1, Rational(0));
  Rational carry(0);
  for (std::size_t k = coeffs.size() - 1; k >= 1; --k) {
    quotient[k - 1] = coeffs[k] + carry;
    carry = quotient[k - 1] * root;
  }
  coeffs = quotient;
}

}  // namespace

std::vector<Rational> rational_roots(std::vector<Rational> coeffs) {
  while (coeffs.size() > 1 && coeffs.back() == 0) coeffs.pop_back();
  if (coeffs.empty() || coeffs.back() != 1) {
    throw Error("rational_roots requires a monic polynomial");
  }
  std::vector<Rational> roots;
  // Strip roots at zero first.
  while (coeffs.size() > 1 && coeffs.front() == 0) {
    roots.emplace_back(0);
    coeffs.erase(coeffs.begin());
  }
  while (coeffs.size() > 1) {
    // Substituting X = S/L with L the lcm of denominators makes the
    // polynomial monic with integer coefficients in S, so every rational
    // root of the original is (integer divisor of the constant term)/L.
    Integer lcm_den(1);
    for (const auto& c : coeffs) {
      Integer den = denominator(c);
      lcm_den = lcm_den / gcd(lcm_den, den) * den;
    }
    int degree = static_cast<int>(coeffs.size()) - 1;
    std::vector<Integer> scaled(coeffs.size());
    Integer power(1);
    for (int k = degree; k >= 0; --k) {
      Rational value = coeffs[k] * Rational(power);
      scaled[k] = numerator(value);
      power *= lcm_den;
    }
    if (scaled[0] == 0) {
      roots.emplace_back(0);
      deflate(coeffs, Rational(0));
      continue;
    }
    bool found = false;
    for (const Integer& d : divisors(scaled[0])) {
      for (int sign : {1, -1}) {
        Rational candidate(sign * d, lcm_den);
        if (eval(coeffs, candidate) == 0) {
          roots.push_back(candidate);
          deflate(coeffs, candidate);
          found = true;
          break;
        }
      }
      if (found) break;
    }
    if (!found) break;
  }
  return roots;
}

namespace {

// Candidate values for each X coefficient of a monic-in-T linear divisor of
// p, obtained by specializing at the coordinate points e_i: any divisor
// T + sum lambda_j X_j forces -lambda_i to be a root of p(T, e_i).
std::vector<std::set<Rational>> divisor_candidates(const Polynomial& p,
                                                   bool* splits_everywhere) {
  int m = p.variable_count();
  int degree = p.t_degree();
  std::vector<std::set<Rational>> candidates(m);
  *splits_everywhere = true;
  for (int i = 0; i < m; ++i) {
    std::vector<Rational> point(m, Rational(0));
    point[i] = 1;
    auto roots = rational_roots(specialize_x(p, point));
    if (static_cast<int>(roots.size()) != degree) *splits_everywhere = false;
    for (const auto& r : roots) candidates[i].insert(-r);
  }
  return candidates;
}

std::vector<LinearForm> assemble_forms(
    const std::vector<std::set<Rational>>& candidates) {
  // Cartesian product of the per-coordinate candidate sets, in sorted order.
  std::vector<LinearForm> forms;
  int m = static_cast<int>(candidates.size());
  std::vector<std::vector<Rational>> pools(m);
  for (int i = 0; i < m; ++i) {
    pools[i].assign(candidates[i].begin(), candidates[i].end());
    if (pools[i].empty()) return forms;
  }
  std::vector<std::size_t> index(m, 0);
  while (true) {
    LinearForm form;
    form.t_coeff = 1;
    form.x_coeffs.resize(m);
    for (int i = 0; i < m; ++i) form.x_coeffs[i] = pools[i][index[i]];
    forms.push_back(std::move(form));
    int level = m - 1;
    while (level >= 0 && ++index[level] == pools[level].size()) {
      index[level] = 0;
      --level;
    }
    if (level < 0) break;
  }
  return forms;
}

void require_monic_total(const Polynomial& p, const char* who) {
  if (p.is_zero()) throw Error(std::string(who) + " requires a nonzero input");
  int r = p.t_degree();
  if (p.total_degree() != r) {
    throw Error(std::string(who) + " requires total degree equal to T-degree");
  }
  ExponentRow lead(1 + p.variable_count(), 0);
  lead[0] = r;
  if (p.coefficient(lead) != 1) {
    throw Error(std::string(who) + " requires a polynomial monic in T");
  }
}

}  // namespace

std::vector<LinearForm> linear_divisors(const Polynomial& p) {
  require_monic_total(p, "linear_divisors");
  std::vector<LinearForm> result;
  if (p.t_degree() == 0) return result;
  bool splits = false;
  auto candidates = divisor_candidates(p, &splits);
  for (const auto& form : assemble_forms(candidates)) {
    if (divide_by_linear(p, form)) result.push_back(form);
  }
  return result;
}

std::optional<std::vector<LinearForm>> linear_t_factorization(
    const Polynomial& p) {
  require_monic_total(p, "linear_t_factorization");
  auto info = homogeneous_degree(p);
  if (info.kind != Homogeneity::Homogeneous) {
    throw Error("linear_t_factorization requires a homogeneous input");
  }
  int m = p.variable_count();
  if (m == 0) {
    return std::vector<LinearForm>(p.t_degree(),
                                   LinearForm{Rational(1), {}});
  }
  bool splits = true;
  auto candidates = divisor_candidates(p, &splits);
  // A product of monic linear T-forms splits completely under every
  // specialization, so one bad specialization certifies irreducibility.
  if (!splits) return std::nullopt;
  std::vector<LinearForm> factors;
  Polynomial remaining = p;
  for (const auto& form : assemble_forms(candidates)) {
    while (true) {
      auto quotient = divide_by_linear(remaining, form);
      if (!quotient) break;
      factors.push_back(form);
      remaining = *quotient;
      if (remaining.total_degree() == 0) break;
    }
    if (remaining.total_degree() == 0) break;
  }
  if (!(remaining == Polynomial::constant(1, m))) return std::nullopt;
  return factors;
}

}  // namespace flagchow
