#include <algorithm>
#include <set>

#include "flagchow/classify.hpp"

namespace flagchow {

namespace {

Polynomial unshift(const Polynomial& s, int u, int d) {
  LinearForm shift;
  shift.t_coeff = 1;
  shift.x_coeffs.assign(d + 1, Rational(0));
  shift.x_coeffs[d - 1] = -u;
  return substitute_t(s, shift);
}

bool valid_s_shape(const Polynomial& s, int degree, int d) {
  if (s.t_degree() != degree) return false;
  auto info = homogeneous_degree(s);
  if (info.kind != Homogeneity::Homogeneous || info.degree != degree) {
    return false;
  }
  ExponentRow lead(1 + d + 1, 0);
  lead[0] = degree;
  if (s.coefficient(lead) != 1) return false;
  // Symmetric about X1..X_{d-1} and about the pair X_d, X_{d+1}.
  BlockPartition partition;
  std::vector<int> head;
  for (int i = 1; i <= d - 1; ++i) head.push_back(i);
  partition.blocks.push_back(head);
  partition.blocks.push_back({d, d + 1});
  return is_block_symmetric(s, partition);
}

void compositions_rec(int remaining, int parts, std::vector<int>& current,
                      std::vector<std::vector<int>>& out) {
  if (parts == 1) {
    if (remaining >= 1) {
      current.push_back(remaining);
      out.push_back(current);
      current.pop_back();
    }
    return;
  }
  for (int first = 1; first + parts - 1 <= remaining; ++first) {
    current.push_back(first);
    compositions_rec(remaining - first, parts - 1, current, out);
    current.pop_back();
  }
}

}  // namespace

std::vector<CurlyEInstance> search_factorizations(const Polynomial& target,
                                                  int d, int n,
                                                  const std::vector<int>& u,
                                                  int bound,
                                                  const SearchLimits& limits) {
  if (d != 2 || n != 4) {
    throw Error("search_factorizations is implemented for d = n-d = 2 only");
  }
  if (bound < 0 || bound > 3) {
    throw Error("search_factorizations requires 0 <= bound <= 3");
  }
  if (u.empty() || u.size() > 3) throw Error("u must have 1..3 parts");
  for (std::size_t i = 0; i + 1 < u.size(); ++i) {
    if (u[i] <= u[i + 1]) throw Error("u must be strictly decreasing");
  }
  int m = d + 1;
  if (target.variable_count() != m) throw Error("target arity mismatch");
  {
    auto info = homogeneous_degree(target);
    ExponentRow lead(1 + m, 0);
    lead[0] = d + 1;
    if (info.kind != Homogeneity::Homogeneous || info.degree != d + 1 ||
        target.t_degree() != d + 1 || target.coefficient(lead) != 1) {
      throw Error("target must be monic of degree d+1 in T");
    }
  }
  long long span = 2LL * bound + 1;
  long long tuple_count = span * span * span * span * span;
  if (tuple_count > limits.max_correction_tuples) {
    throw Error("search space exceeds the ceiling: " +
                std::to_string(tuple_count) + " correction tuples");
  }

  const Polynomial sig2 = sigma({1, 2, 3}, 2, m);
  const Polynomial sig3_head = sigma({1, 2}, 3, m);
  const Polynomial basis_t = Polynomial::t(m) * sig2;
  const Polynomial basis_b = Polynomial::x(1, m) * sig2;
  const Polynomial basis_c = Polynomial::x(2, m) * sig2;
  const Polynomial basis_e = Polynomial::x(3, m) * sig2;

  int k = static_cast<int>(u.size());
  std::vector<std::vector<int>> comps;
  {
    std::vector<int> current;
    compositions_rec(d + 1, k, current, comps);
  }

  std::vector<CurlyEInstance> solutions;
  std::set<std::string> seen;
  auto emit = [&](const std::vector<Polynomial>& S, int a, int b, int c, int e,
                  int f) {
    CurlyEInstance inst;
    inst.d = d;
    inst.n = n;
    inst.u = u;
    inst.S = S;
    inst.a = a;
    inst.b = b;
    inst.c = c;
    inst.e = e;
    inst.f = f;
    if (!(build_curly_e(inst) == target)) {
      throw Error("search produced an uncertified solution");
    }
    std::string key = std::to_string(a) + "|" + std::to_string(b) + "|" +
                      std::to_string(c) + "|" + std::to_string(e) + "|" +
                      std::to_string(f);
    for (const auto& s : S) key += "|" + s.str();
    if (seen.insert(key).second) solutions.push_back(std::move(inst));
  };

  for (int a = -bound; a <= bound; ++a) {
    for (int b = -bound; b <= bound; ++b) {
      for (int c = -bound; c <= bound; ++c) {
        for (int e = -bound; e <= bound; ++e) {
          for (int f = -bound; f <= bound; ++f) {
            Polynomial g = target - Rational(a) * basis_t -
                           Rational(b) * basis_b - Rational(c) * basis_c -
                           Rational(e) * basis_e - Rational(f) * sig3_head;
            std::vector<LinearForm> divisors;
            std::optional<std::vector<LinearForm>> factors;
            if (k == 2) divisors = linear_divisors(g);
            if (k == 3) factors = linear_t_factorization(g);
            for (const auto& r : comps) {
              if (k == 1) {
                Polynomial s = unshift(g, u[0], d);
                if (valid_s_shape(s, d + 1, d)) emit({s}, a, b, c, e, f);
              } else if (k == 2) {
                int linear_slot = r[0] == 1 ? 0 : 1;
                int other_slot = 1 - linear_slot;
                for (const auto& divisor : divisors) {
                  // The shifted linear factor S(T + u X_2) must come from a
                  // block-symmetric S: X2 and X3 coefficients differ by u.
                  if (divisor.x_coeffs[1] - divisor.x_coeffs[2] !=
                      u[linear_slot]) {
                    continue;
                  }
                  auto quotient = divide_by_linear(g, divisor);
                  if (!quotient) continue;
                  Polynomial s_linear =
                      unshift(divisor.to_polynomial(), u[linear_slot], d);
                  Polynomial s_other = unshift(*quotient, u[other_slot], d);
                  if (!valid_s_shape(s_other, 2, d)) continue;
                  std::vector<Polynomial> S(2, Polynomial(m));
                  S[linear_slot] = s_linear;
                  S[other_slot] = s_other;
                  emit(S, a, b, c, e, f);
                }
              } else {
                if (!factors) continue;
                // Assign the three linear factors to the three slots; the
                // X2-X3 coefficient gap of a factor must equal the slot's u.
                std::vector<int> order{0, 1, 2};
                do {
                  bool ok = true;
                  std::vector<Polynomial> S;
                  for (int slot = 0; slot < 3 && ok; ++slot) {
                    const LinearForm& factor = (*factors)[order[slot]];
                    if (factor.x_coeffs[1] - factor.x_coeffs[2] != u[slot]) {
                      ok = false;
                      break;
                    }
                    S.push_back(unshift(factor.to_polynomial(), u[slot], d));
                  }
                  if (ok) emit(S, a, b, c, e, f);
                } while (std::next_permutation(order.begin(), order.end()));
              }
            }
          }
        }
      }
    }
  }
  return solutions;
}

}  // namespace flagchow
