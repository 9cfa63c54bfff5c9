#include <array>
#include <map>

#include "flagchow/classify.hpp"
#include "flagchow/linalg.hpp"

namespace flagchow {

namespace {

std::vector<int> range_vars(int from, int to) {
  std::vector<int> vars;
  for (int i = from; i <= to; ++i) vars.push_back(i);
  return vars;
}

// The five correction basis polynomials of the master equation, in order
// T*S_{n-d}, (X1+..+X_{d-1})*S_{n-d}, X_d*S_{n-d}, X_{d+1}*S_{n-d},
// S_{n-d+1}(X1..Xd).
std::array<Polynomial, 5> correction_basis(int d, int n) {
  int m = d + 1;
  Polynomial sig_nd = sigma(range_vars(1, d + 1), n - d, m);
  Polynomial head(m);
  for (int i = 1; i <= d - 1; ++i) head += Polynomial::x(i, m);
  return {
      Polynomial::t(m) * sig_nd,
      head * sig_nd,
      Polynomial::x(d, m) * sig_nd,
      Polynomial::x(d + 1, m) * sig_nd,
      sigma(range_vars(1, d), n - d + 1, m),
  };
}

Polynomial correction_polynomial(const CurlyEInstance& inst) {
  auto basis = correction_basis(inst.d, inst.n);
  return inst.a * basis[0] + inst.b * basis[1] + inst.c * basis[2] +
         inst.e * basis[3] + inst.f * basis[4];
}

// The S_i are symmetric about X1..X_{d-1} and about the pair X_d, X_{d+1}.
BlockPartition s_factor_blocks(int d) {
  BlockPartition partition;
  std::vector<int> head;
  for (int i = 1; i <= d - 1; ++i) head.push_back(i);
  partition.blocks.push_back(head);
  partition.blocks.push_back({d, d + 1});
  return partition;
}

int monic_degree(const Polynomial& s, int m) {
  int degree = s.t_degree();
  auto info = homogeneous_degree(s);
  if (info.kind != Homogeneity::Homogeneous || info.degree != degree) {
    throw Error("S_i must be homogeneous of its T-degree");
  }
  ExponentRow lead(1 + m, 0);
  lead[0] = degree;
  if (s.coefficient(lead) != 1) throw Error("S_i must be monic in T");
  return degree;
}

}  // namespace

void CurlyEInstance::validate() const {
  if (d != n - d) throw Error("curly-E instance requires d = n-d");
  if (u.size() != S.size() || u.empty()) {
    throw Error("curly-E instance needs matching u and S lists");
  }
  for (std::size_t i = 0; i + 1 < u.size(); ++i) {
    if (u[i] <= u[i + 1]) throw Error("exponents u must be strictly decreasing");
  }
  int m = d + 1;
  BlockPartition partition = s_factor_blocks(d);
  int total = 0;
  for (const auto& s : S) {
    if (s.variable_count() != m) throw Error("S_i arity mismatch");
    total += monic_degree(s, m);
    if (!is_block_symmetric(s, partition)) {
      throw Error("S_i must be block-symmetric");
    }
  }
  if (total != d + 1) {
    throw Error("degree bookkeeping violation: sum deg S_i != d+1");
  }
}

Polynomial build_curly_e(const CurlyEInstance& inst) {
  inst.validate();
  int m = inst.d + 1;
  Polynomial product = Polynomial::constant(1, m);
  for (std::size_t i = 0; i < inst.S.size(); ++i) {
    LinearForm shift;
    shift.t_coeff = 1;
    shift.x_coeffs.assign(m, Rational(0));
    shift.x_coeffs[inst.d - 1] = inst.u[i];  // T + u_i X_d
    product = product * substitute_t(inst.S[i], shift);
  }
  return product + correction_polynomial(inst);
}

std::optional<std::array<Rational, 5>> decompose_correction(
    const Polynomial& correction, int d, int n) {
  auto basis = correction_basis(d, n);
  // Index the union of the supports.
  std::map<ExponentRow, int> index;
  auto index_terms = [&index](const Polynomial& p) {
    for (const auto& [row, coeff] : p.terms()) {
      index.emplace(row, static_cast<int>(index.size()));
    }
  };
  for (const auto& b : basis) index_terms(b);
  index_terms(correction);
  auto vectorize = [&index](const Polynomial& p) {
    RatRow row(index.size(), Rational(0));
    for (const auto& [exp, coeff] : p.terms()) row[index.at(exp)] = coeff;
    return row;
  };
  std::vector<RatRow> columns;
  for (const auto& b : basis) columns.push_back(vectorize(b));
  auto solution = solve_unique(columns, vectorize(correction));
  if (!solution) return std::nullopt;
  return std::array<Rational, 5>{(*solution)[0], (*solution)[1], (*solution)[2],
                                 (*solution)[3], (*solution)[4]};
}

CurlyEInstance shift_instance(const CurlyEInstance& inst, int j) {
  inst.validate();
  if (j < 0 || j >= static_cast<int>(inst.u.size())) {
    throw Error("shift index out of range");
  }
  int d = inst.d;
  int m = d + 1;
  int uj = inst.u[j];

  Polynomial shifted_e;
  {
    LinearForm full_shift;  // T -> T - u_j(X1+...+Xd)
    full_shift.t_coeff = 1;
    full_shift.x_coeffs.assign(m, Rational(0));
    for (int i = 0; i < d; ++i) full_shift.x_coeffs[i] = -uj;
    shifted_e = substitute_t(build_curly_e(inst), full_shift);
  }

  CurlyEInstance result = inst;
  result.shift_index = j;
  LinearForm head_shift;  // T -> T - u_j(X1+...+X_{d-1})
  head_shift.t_coeff = 1;
  head_shift.x_coeffs.assign(m, Rational(0));
  for (int i = 0; i < d - 1; ++i) head_shift.x_coeffs[i] = -uj;
  for (auto& s : result.S) s = substitute_t(s, head_shift);
  for (auto& exponent : result.u) exponent -= uj;

  Polynomial product = Polynomial::constant(1, m);
  for (std::size_t i = 0; i < result.S.size(); ++i) {
    LinearForm slot;
    slot.t_coeff = 1;
    slot.x_coeffs.assign(m, Rational(0));
    slot.x_coeffs[d - 1] = result.u[i];
    product = product * substitute_t(result.S[i], slot);
  }
  auto coeffs = decompose_correction(shifted_e - product, d, inst.n);
  if (!coeffs) {
    throw Error("shifted polynomial fails to fit the E-shape");
  }
  result.a = (*coeffs)[0];
  result.b = (*coeffs)[1];
  result.c = (*coeffs)[2];
  result.e = (*coeffs)[3];
  result.f = (*coeffs)[4];
  return result;
}

namespace {

// Index whose S_i has no X_{d+1}^{r_i} monomial; the degree comparison in
// the master equation forces one to exist for bundle instances.
std::optional<int> locate_j0(const CurlyEInstance& inst) {
  int m = inst.d + 1;
  for (std::size_t i = 0; i < inst.S.size(); ++i) {
    int r = inst.S[i].t_degree();
    ExponentRow probe(1 + m, 0);
    probe[m] = r;
    if (inst.S[i].coefficient(probe) == 0) return static_cast<int>(i);
  }
  return std::nullopt;
}

}  // namespace

bool verify_constraint(const CurlyEInstance& inst, Constraint which) {
  inst.validate();
  switch (which) {
    case Constraint::EPlusF:
      return inst.e + inst.f == 0;
    case Constraint::BCZero: {
      if (inst.a != 0) throw Error("b_c_zero requires hypothesis a = 0");
      auto j0 = locate_j0(inst);
      if (!j0) throw Error("no index j0 with vanishing X_{d+1} top power");
      CurlyEInstance shifted = shift_instance(inst, *j0);
      return shifted.b == 0 && shifted.c == 0;
    }
    case Constraint::MDivisibility: {
      if (inst.a == 0) throw Error("m_divisibility requires hypothesis a != 0");
      auto j0 = locate_j0(inst);
      if (!j0) throw Error("no index j0 with vanishing X_{d+1} top power");
      CurlyEInstance shifted = shift_instance(inst, *j0);
      int d = inst.d;
      int m = d + 1;
      LinearForm divisor;
      divisor.t_coeff = 1;
      divisor.x_coeffs.assign(m, Rational(0));
      Rational m1 = shifted.b / shifted.a;
      Rational m2 = shifted.c / shifted.a;
      for (int i = 0; i < d - 1; ++i) divisor.x_coeffs[i] = m1;
      divisor.x_coeffs[d - 1] = m2;
      if (!divide_by_linear(shifted.S[*j0], divisor)) return false;
      Polynomial residual = build_curly_e(shifted) -
                            shifted.f * sigma(range_vars(1, d), inst.n - d + 1, m);
      return divide_by_linear(residual, divisor).has_value();
    }
  }
  throw Error("unknown constraint");
}

}  // namespace flagchow
