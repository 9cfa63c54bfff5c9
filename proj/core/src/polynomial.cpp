#include "flagchow/polynomial.hpp"

#include <algorithm>
#include <sstream>

namespace flagchow {

namespace {

int row_total_degree(const ExponentRow& row) {
  int total = 0;
  for (int e : row) total += e;
  return total;
}

}  // namespace

Polynomial Polynomial::constant(const Rational& value, int variable_count) {
  Polynomial p(variable_count);
  p.add_term(ExponentRow(1 + variable_count, 0), value);
  return p;
}

Polynomial Polynomial::t(int variable_count) {
  ExponentRow row(1 + variable_count, 0);
  row[0] = 1;
  return monomial(row, 1);
}

Polynomial Polynomial::x(int index, int variable_count) {
  if (index < 1 || index > variable_count) {
    throw Error("variable index X" + std::to_string(index) +
                " out of range for m=" + std::to_string(variable_count));
  }
  ExponentRow row(1 + variable_count, 0);
  row[index] = 1;
  return monomial(row, 1);
}

Polynomial Polynomial::monomial(const ExponentRow& row, const Rational& coeff) {
  Polynomial p(static_cast<int>(row.size()) - 1);
  p.add_term(row, coeff);
  return p;
}

Rational Polynomial::coefficient(const ExponentRow& row) const {
  auto it = terms_.find(row);
  return it == terms_.end() ? Rational(0) : it->second;
}

Rational Polynomial::constant_term() const {
  return coefficient(ExponentRow(1 + vars_, 0));
}

int Polynomial::t_degree() const {
  int degree = -1;
  for (const auto& [row, coeff] : terms_) degree = std::max(degree, row[0]);
  return degree;
}

int Polynomial::total_degree() const {
  int degree = -1;
  for (const auto& [row, coeff] : terms_) {
    degree = std::max(degree, row_total_degree(row));
  }
  return degree;
}

Polynomial Polynomial::t_coefficient(int k) const {
  Polynomial slice(vars_);
  for (const auto& [row, coeff] : terms_) {
    if (row[0] == k) {
      ExponentRow flat = row;
      flat[0] = 0;
      slice.add_term(flat, coeff);
    }
  }
  return slice;
}

Polynomial Polynomial::homogeneous_component(int degree) const {
  Polynomial part(vars_);
  for (const auto& [row, coeff] : terms_) {
    if (row_total_degree(row) == degree) part.add_term(row, coeff);
  }
  return part;
}

Polynomial Polynomial::operator-() const {
  Polynomial result(vars_);
  for (const auto& [row, coeff] : terms_) result.terms_.emplace(row, -coeff);
  return result;
}

Polynomial& Polynomial::operator+=(const Polynomial& other) {
  check_same_arity(other);
  for (const auto& [row, coeff] : other.terms_) add_term(row, coeff);
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& other) {
  check_same_arity(other);
  for (const auto& [row, coeff] : other.terms_) add_term(row, -coeff);
  return *this;
}

Polynomial operator*(const Polynomial& lhs, const Polynomial& rhs) {
  lhs.check_same_arity(rhs);
  Polynomial result(lhs.vars_);
  ExponentRow row(1 + lhs.vars_);
  for (const auto& [ra, ca] : lhs.terms_) {
    for (const auto& [rb, cb] : rhs.terms_) {
      for (std::size_t i = 0; i < row.size(); ++i) row[i] = ra[i] + rb[i];
      result.add_term(row, ca * cb);
    }
  }
  return result;
}

Polynomial operator*(const Rational& scalar, const Polynomial& p) {
  Polynomial result(p.vars_);
  if (scalar == 0) return result;
  for (const auto& [row, coeff] : p.terms_) {
    result.terms_.emplace(row, scalar * coeff);
  }
  return result;
}

Polynomial pow(const Polynomial& base, int exponent) {
  if (exponent < 0) throw Error("negative polynomial exponent");
  Polynomial result = Polynomial::constant(1, base.variable_count());
  for (int i = 0; i < exponent; ++i) result = result * base;
  return result;
}

void Polynomial::add_term(const ExponentRow& row, const Rational& coeff) {
  if (static_cast<int>(row.size()) != 1 + vars_) {
    throw Error("exponent row length mismatch");
  }
  if (coeff == 0) return;
  auto [it, inserted] = terms_.emplace(row, coeff);
  if (!inserted) {
    it->second += coeff;
    if (it->second == 0) terms_.erase(it);
  }
}

void Polynomial::check_same_arity(const Polynomial& other) const {
  if (vars_ != other.vars_) {
    throw Error("variable count mismatch: " + std::to_string(vars_) + " vs " +
                std::to_string(other.vars_));
  }
}

std::string Polynomial::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  // Descending term order puts the leading T power first.
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [row, coeff] = *it;
    Rational abs_coeff = coeff < 0 ? Rational(-coeff) : coeff;
    if (first) {
      if (coeff < 0) out << "-";
      first = false;
    } else {
      out << (coeff < 0 ? " - " : " + ");
    }
    std::vector<std::string> factors;
    if (abs_coeff != 1 || row_total_degree(row) == 0) {
      factors.push_back(abs_coeff.str());
    }
    for (std::size_t i = 0; i < row.size(); ++i) {
      if (row[i] == 0) continue;
      std::string name = i == 0 ? "T" : "X" + std::to_string(i);
      if (row[i] > 1) name += "^" + std::to_string(row[i]);
      factors.push_back(name);
    }
    for (std::size_t i = 0; i < factors.size(); ++i) {
      if (i > 0) out << "*";
      out << factors[i];
    }
  }
  return out.str();
}

bool LinearForm::is_zero() const {
  if (t_coeff != 0) return false;
  for (const auto& c : x_coeffs) {
    if (c != 0) return false;
  }
  return true;
}

Polynomial LinearForm::to_polynomial() const {
  int m = variable_count();
  Polynomial p(m);
  p += t_coeff * Polynomial::t(m);
  for (int i = 0; i < m; ++i) {
    p += x_coeffs[i] * Polynomial::x(i + 1, m);
  }
  return p;
}

std::string LinearForm::str() const { return to_polynomial().str(); }

BlockPartition BlockPartition::single(int m) {
  BlockPartition partition;
  partition.blocks.emplace_back();
  for (int i = 1; i <= m; ++i) partition.blocks.back().push_back(i);
  return partition;
}

void BlockPartition::validate(int m) const {
  std::vector<bool> seen(m + 1, false);
  for (const auto& block : blocks) {
    for (int i : block) {
      if (i < 1 || i > m || seen[i]) throw Error("invalid block partition");
      seen[i] = true;
    }
  }
  for (int i = 1; i <= m; ++i) {
    if (!seen[i]) throw Error("block partition does not cover {1..m}");
  }
}

HomogeneityInfo homogeneous_degree(const Polynomial& p) {
  if (p.is_zero()) return {Homogeneity::Zero, 0};
  int degree = -1;
  for (const auto& [row, coeff] : p.terms()) {
    int d = 0;
    for (int e : row) d += e;
    if (degree == -1) {
      degree = d;
    } else if (degree != d) {
      return {Homogeneity::Mixed, 0};
    }
  }
  return {Homogeneity::Homogeneous, degree};
}

namespace {

Polynomial swap_variables(const Polynomial& p, int a, int b) {
  Polynomial result(p.variable_count());
  Polynomial swapped(p.variable_count());
  for (const auto& [row, coeff] : p.terms()) {
    ExponentRow permuted = row;
    std::swap(permuted[a], permuted[b]);
    swapped += Polynomial::monomial(permuted, coeff);
  }
  return swapped;
}

}  // namespace

bool is_block_symmetric(const Polynomial& p, const BlockPartition& partition) {
  partition.validate(p.variable_count());
  for (const auto& block : partition.blocks) {
    for (std::size_t i = 0; i + 1 < block.size(); ++i) {
      if (!(swap_variables(p, block[i], block[i + 1]) == p)) return false;
    }
  }
  return true;
}

namespace {

void sigma_rec(const std::vector<int>& variables, std::size_t pos,
               int remaining, ExponentRow& row, Polynomial& out) {
  if (pos + 1 == variables.size()) {
    row[variables[pos]] = remaining;
    out += Polynomial::monomial(row, 1);
    row[variables[pos]] = 0;
    return;
  }
  for (int e = 0; e <= remaining; ++e) {
    row[variables[pos]] = e;
    sigma_rec(variables, pos + 1, remaining - e, row, out);
  }
  row[variables[pos]] = 0;
}

}  // namespace

Polynomial sigma(const std::vector<int>& variables, int degree,
                 int variable_count) {
  if (degree < 0) throw Error("sigma degree must be non-negative");
  if (degree == 0 || variables.empty()) {
    return degree == 0 ? Polynomial::constant(1, variable_count)
                       : Polynomial(variable_count);
  }
  for (int v : variables) {
    if (v < 1 || v > variable_count) throw Error("sigma variable out of range");
  }
  Polynomial out(variable_count);
  ExponentRow row(1 + variable_count, 0);
  sigma_rec(variables, 0, degree, row, out);
  return out;
}

Polynomial substitute_t(const Polynomial& p, const LinearForm& form) {
  if (form.variable_count() != p.variable_count()) {
    throw Error("linear form arity mismatch");
  }
  if (form.t_coeff != 1) {
    throw Error("substitute_t requires a monic linear form");
  }
  return substitute_variable(p, 0, form.to_polynomial());
}

Polynomial substitute_variable(const Polynomial& p, int index,
                               const Polynomial& value) {
  int m = p.variable_count();
  if (value.variable_count() != m) throw Error("substitution arity mismatch");
  if (index < 0 || index > m) throw Error("substitution index out of range");
  int degree = 0;
  for (const auto& [row, coeff] : p.terms()) {
    degree = std::max(degree, row[index]);
  }
  // Horner scheme in the substituted variable.
  std::vector<Polynomial> slices(degree + 1, Polynomial(m));
  for (const auto& [row, coeff] : p.terms()) {
    ExponentRow flat = row;
    flat[index] = 0;
    slices[row[index]] += Polynomial::monomial(flat, coeff);
  }
  Polynomial result(m);
  for (int k = degree; k >= 0; --k) {
    result = result * value + slices[k];
  }
  return result;
}

std::optional<Polynomial> divide_by_linear(const Polynomial& p,
                                           const LinearForm& divisor) {
  if (p.is_zero()) throw Error("divide_by_linear requires a nonzero dividend");
  if (divisor.variable_count() != p.variable_count()) {
    throw Error("divisor arity mismatch");
  }
  if (divisor.t_coeff != 1) {
    throw Error("divisor must be monic in T");
  }
  int m = p.variable_count();
  Polynomial ell(m);  // divisor minus T
  for (int i = 0; i < m; ++i) {
    ell += divisor.x_coeffs[i] * Polynomial::x(i + 1, m);
  }
  int degree = p.t_degree();
  std::vector<Polynomial> slices(degree + 1, Polynomial(m));
  for (const auto& [row, coeff] : p.terms()) {
    ExponentRow flat = row;
    flat[0] = 0;
    slices[row[0]] += Polynomial::monomial(flat, coeff);
  }
  // Synthetic division by T + ell.
  std::vector<Polynomial> quotient(std::max(degree, 0), Polynomial(m));
  Polynomial carry(m);
  for (int k = degree; k >= 1; --k) {
    Polynomial q = slices[k] - carry;
    quotient[k - 1] = q;
    carry = ell * q;
  }
  Polynomial remainder = slices[0] - carry;
  if (!remainder.is_zero()) return std::nullopt;
  Polynomial result(m);
  for (int k = 0; k < static_cast<int>(quotient.size()); ++k) {
    result += quotient[k] * pow(Polynomial::t(m), k);
  }
  return result;
}

Polynomial truncated_inverse(const Polynomial& p, int max_degree) {
  if (p.constant_term() != 1) {
    throw Error("truncated_inverse requires constant term 1");
  }
  int m = p.variable_count();
  Polynomial u = p - Polynomial::constant(1, m);
  Polynomial result = Polynomial::constant(1, m);
  Polynomial power = Polynomial::constant(1, m);
  for (int j = 1; j <= max_degree; ++j) {
    power = -power * u;
    // u has no constant term, so power j has minimum degree j; drop
    // everything above the truncation order as we go.
    Polynomial trimmed(m);
    for (const auto& [row, coeff] : power.terms()) {
      int d = 0;
      for (int e : row) d += e;
      if (d <= max_degree) trimmed += Polynomial::monomial(row, coeff);
    }
    power = trimmed;
    if (power.is_zero()) break;
    result += power;
  }
  return result;
}

std::vector<Rational> specialize_x(const Polynomial& p,
                                   const std::vector<Rational>& point) {
  if (static_cast<int>(point.size()) != p.variable_count()) {
    throw Error("specialization point arity mismatch");
  }
  std::vector<Rational> coeffs(std::max(p.t_degree() + 1, 1), Rational(0));
  for (const auto& [row, coeff] : p.terms()) {
    Rational value = coeff;
    for (std::size_t i = 0; i < point.size(); ++i) {
      for (int e = 0; e < row[i + 1]; ++e) value *= point[i];
    }
    coeffs[row[0]] += value;
  }
  return coeffs;
}

Polynomial with_variable_count(const Polynomial& p, int variable_count) {
  Polynomial result(variable_count);
  for (const auto& [row, coeff] : p.terms()) {
    ExponentRow adjusted(1 + variable_count, 0);
    for (std::size_t i = 0; i < row.size(); ++i) {
      if (row[i] == 0) continue;
      if (i >= adjusted.size()) {
        throw Error("cannot drop an occupied variable");
      }
      adjusted[i] = row[i];
    }
    result += Polynomial::monomial(adjusted, coeff);
  }
  return result;
}

}  // namespace flagchow
