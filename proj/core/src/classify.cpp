#include "flagchow/classify.hpp"

#include <algorithm>
#include <set>

namespace flagchow {

Regime regime_of(int d, int n) {
  if (d < 2 || d > n - d) throw Error("regime requires 2 <= d <= n-d");
  if (d == n - d) return Regime::Equal;
  if (d == n - d - 1) return Regime::Boundary;
  return Regime::Small;
}

std::string regime_name(Regime regime) {
  switch (regime) {
    case Regime::Small:
      return "d<n-d-1";
    case Regime::Boundary:
      return "d=n-d-1";
    case Regime::Equal:
      return "d=n-d";
  }
  return "?";
}

void FactorShape::validate(int d) const {
  if (partition.empty() || partition.size() != lambdas.size()) {
    throw Error("factor shape arity mismatch");
  }
  int total = 0;
  for (std::size_t i = 0; i < partition.size(); ++i) {
    if (partition[i] <= 0) throw Error("factor shape parts must be positive");
    if (i > 0 && partition[i] < partition[i - 1]) {
      throw Error("factor shape partition must be ascending");
    }
    total += partition[i];
  }
  if (total != d) throw Error("factor shape partition must sum to d");
  for (std::size_t i = 0; i < lambdas.size(); ++i) {
    for (std::size_t j = i + 1; j < lambdas.size(); ++j) {
      if (lambdas[i] == lambdas[j]) throw Error("factor shape lambdas must differ");
    }
  }
}

namespace {

void assignments_rec(const std::vector<int>& sizes, std::size_t block,
                     std::vector<int>& slot, std::vector<int>& remaining,
                     std::set<std::vector<int>>& out) {
  if (block == sizes.size()) {
    out.insert(slot);
    return;
  }
  // Choose which variables land in this block.
  const int need = sizes[block];
  std::vector<int> pool = remaining;
  std::vector<bool> pick(pool.size(), false);
  std::fill(pick.end() - need, pick.end(), true);
  std::sort(pick.begin(), pick.end());
  do {
    std::vector<int> next_remaining;
    for (std::size_t i = 0; i < pool.size(); ++i) {
      if (pick[i]) {
        slot[pool[i] - 1] = static_cast<int>(block);
      } else {
        next_remaining.push_back(pool[i]);
      }
    }
    remaining = next_remaining;
    assignments_rec(sizes, block + 1, slot, remaining, out);
    remaining = pool;
  } while (std::next_permutation(pick.begin(), pick.end()));
}

}  // namespace

Polynomial FactorShape::symmetrized_product(int d, int variable_count) const {
  validate(d);
  std::set<std::vector<int>> assignments;
  std::vector<int> slot(d, -1);
  std::vector<int> remaining;
  for (int i = 1; i <= d; ++i) remaining.push_back(i);
  assignments_rec(partition, 0, slot, remaining, assignments);
  Polynomial product = Polynomial::constant(1, variable_count);
  for (const auto& assignment : assignments) {
    Polynomial factor = Polynomial::t(variable_count);
    for (int i = 1; i <= d; ++i) {
      factor += lambdas[assignment[i - 1]] * Polynomial::x(i, variable_count);
    }
    product = product * factor;
  }
  return product;
}

namespace {

Integer factorial(int n) {
  Integer result(1);
  for (int i = 2; i <= n; ++i) result *= i;
  return result;
}

void partitions_rec(int remaining, int minimum, std::vector<int>& current,
                    std::vector<std::vector<int>>& out) {
  if (remaining == 0) {
    out.push_back(current);
    return;
  }
  for (int part = minimum; part <= remaining; ++part) {
    current.push_back(part);
    partitions_rec(remaining - part, part, current, out);
    current.pop_back();
  }
}

}  // namespace

std::vector<std::vector<int>> admissible_partitions(int d, int r) {
  if (d < 2 || r < 1) throw Error("admissible_partitions requires d>=2, r>=1");
  std::vector<std::vector<int>> all;
  std::vector<int> current;
  partitions_rec(d, 1, current, all);
  std::vector<std::vector<int>> admissible;
  for (const auto& partition : all) {
    Integer orbit = factorial(d);
    for (int part : partition) orbit /= factorial(part);
    if (orbit <= r) admissible.push_back(partition);
  }
  return admissible;
}

namespace {

Polynomial sigma1_head(int d, int m) {
  Polynomial s(m);
  for (int i = 1; i <= d; ++i) s += Polynomial::x(i, m);
  return s;
}

// c_{Q_rank}(T) = sum_j Sigma_j(X_1..X_d) T^{rank-j}, the series form of the
// quotient-bundle Chern polynomial; sign = -1 gives the dual.
Polynomial quotient_form(int d, int m, int rank, int sign) {
  std::vector<int> head;
  for (int i = 1; i <= d; ++i) head.push_back(i);
  Polynomial p(m);
  Rational s(1);
  for (int j = 0; j <= rank; ++j) {
    p += s * sigma(head, j, m) * pow(Polynomial::t(m), rank - j);
    s *= sign;
  }
  return p;
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

std::vector<std::vector<int>> compositions_of(int total, int parts) {
  std::vector<std::vector<int>> out;
  std::vector<int> current;
  compositions_rec(total, parts, current, out);
  return out;
}

BundlePtr line_sum_family(const std::vector<int>& multiplicities) {
  int k = static_cast<int>(multiplicities.size());
  BundlePtr family;
  for (int i = 0; i < k; ++i) {
    for (int copy = 0; copy < multiplicities[i]; ++copy) {
      BundlePtr line = BundleExpr::line(k - 1 - i);
      family = family ? BundleExpr::sum(family, line) : line;
    }
  }
  return family;
}

// lambda with slice == lambda * (X1+...+Xd), if the slice has that shape.
std::optional<Rational> sigma_multiple(const Polynomial& slice, int d) {
  if (slice.is_zero()) return Rational(0);
  int m = slice.variable_count();
  ExponentRow probe(1 + m, 0);
  probe[1] = 1;
  Rational lambda = slice.coefficient(probe);
  if (slice == lambda * sigma1_head(d, m)) return lambda;
  return std::nullopt;
}

std::optional<Rational> leading_anchor(const Polynomial& poly, int rank, int d) {
  return sigma_multiple(poly.t_coefficient(rank - 1), d);
}

struct CaseBuilder {
  int d;
  int m;
  const FlagSpace* flag;
  std::vector<NormalFormCase> entries;
  std::vector<Polynomial> anchors;  // twist-canonical shadows for dedup

  // Appends the case with its listed polynomial, unless its twist anchor is
  // already ring-equal to an existing entry's anchor (twist-equivalent
  // cases collapse; the note records the merged label).
  void add(Regime regime, const std::string& label, const Polynomial& poly,
           BundlePtr family, const std::string& note) {
    ChernPolynomial c{poly, poly.t_degree(), *flag};
    Polynomial anchored = normalize(c).first;
    for (std::size_t i = 0; i < entries.size(); ++i) {
      if (ring_equal(*flag, anchors[i], anchored)) {
        auto& existing = entries[i];
        existing.family_note += existing.family_note.empty() ? "" : "; ";
        existing.family_note += "also " + label;
        if (!note.empty()) existing.family_note += " (" + note + ")";
        return;
      }
    }
    entries.push_back({label, regime, poly, std::move(family), note});
    anchors.push_back(std::move(anchored));
  }
};

}  // namespace

std::vector<NormalFormCase> normal_form_cases(int d, Regime regime) {
  if (d < 2) throw Error("normal_form_cases requires d >= 2");
  int m = d + 1;
  // The flag space used for mod-I deduplication of the generated entries;
  // only the d = n-d regime has ideal elements in degree <= d+1.
  int n = regime == Regime::Equal ? 2 * d : (regime == Regime::Boundary ? 2 * d + 1 : 2 * d + 2);
  FlagSpace flag = FlagSpace::three_step_flag(d, n);

  CaseBuilder builder{d, m, &flag, {}, {}};
  const Polynomial t = Polynomial::t(m);
  const Polynomial sigma1 = sigma1_head(d, m);

  // Case 1: products of (T + u_i Sigma1)^{r_i} with consecutive exponents.
  for (int k = 1; k <= d + 1; ++k) {
    for (const auto& r : compositions_of(d + 1, k)) {
      Polynomial poly = Polynomial::constant(1, m);
      std::string detail = "k=" + std::to_string(k) + ";r=";
      for (int i = 0; i < k; ++i) {
        poly = poly * pow(t + Rational(k - 1 - i) * sigma1, r[i]);
        detail += (i ? "," : "") + std::to_string(r[i]);
      }
      std::string label = "1[" + detail + "]";
      std::string note;
      if (regime == Regime::Boundary && k == 1) label = "B";
      if (regime == Regime::Equal && k == 2 && r[0] == 1 && r[1] == d) {
        note = "also case B-ii";
      }
      builder.add(regime, label, poly, line_sum_family(r), note);
    }
  }

  // Cases 2..6: prod (T + lambda1 X_i + lambda2(rest)) * (T + lambda3 Sigma1).
  struct Classical {
    const char* label;
    int lambda1;
    int lambda3;
    int line_twist;
  };
  const Classical classical[] = {
      {"2", 1, -1, -1}, {"3", 1, 0, 0}, {"4", 1, 1, 1}, {"5", 1, 2, 2},
  };
  FactorShape shape;
  shape.partition = {1, d - 1};
  for (const auto& entry : classical) {
    shape.lambdas = {Rational(entry.lambda1), Rational(0)};
    Polynomial head = shape.symmetrized_product(d, m);
    Polynomial poly = head * (t + Rational(entry.lambda3) * sigma1);
    BundlePtr family = BundleExpr::sum(BundleExpr::dual(BundleExpr::sub()),
                                       BundleExpr::line(entry.line_twist));
    std::string note = regime == Regime::Equal && entry.line_twist == 0
                           ? "also case B-i"
                           : "";
    builder.add(regime, entry.label, poly, family, note);
  }
  {
    shape.lambdas = {Rational(2), Rational(0)};
    Polynomial head = shape.symmetrized_product(d, m);
    Polynomial poly = head * (t + sigma1);
    BundlePtr family =
        d == 2 ? BundleExpr::twist(BundleExpr::sym2(BundleExpr::sub()), 2)
               : nullptr;
    builder.add(regime, "6", poly, family,
                d == 2 ? "" : "no uniform bundle for d >= 3");
  }

  if (regime == Regime::Boundary) {
    // Case C: the rank-(d+1) quotient bundle and its dual.
    builder.add(regime, "C-Q", quotient_form(d, m, d + 1, 1),
                BundleExpr::quot(), "");
    builder.add(regime, "C-Q*", quotient_form(d, m, d + 1, -1),
                BundleExpr::dual(BundleExpr::quot()), "");
  }

  if (regime == Regime::Equal) {
    // O(v) + Q_d(s) classes from the k=2 and k=3 quotient routes.
    struct QCase {
      const char* label;
      int line_twist;
      int quot_twist;
      bool dual_quot;
    };
    const QCase q_cases[] = {
        {"C-i", 1, 0, false},     // O(1) + Q(0)
        {"C-ii", 0, 0, true},     // O(0) + Q*(0)
        {"B-iii+", 2, 0, false},  // O(2) + Q(0)
        {"B-iii-", 0, 1, false},  // O(0) + Q(1)
    };
    for (const auto& q : q_cases) {
      BundlePtr quot = BundleExpr::quot();
      if (q.dual_quot) quot = BundleExpr::dual(quot);
      if (q.quot_twist != 0) quot = BundleExpr::twist(quot, q.quot_twist);
      BundlePtr family = BundleExpr::sum(BundleExpr::line(q.line_twist), quot);
      Polynomial poly = chern_pullback(*family, d, n).poly;
      builder.add(regime, q.label, poly, family, "");
    }
    if (d == 2) {
      BundlePtr family =
          BundleExpr::twist(BundleExpr::sym2(BundleExpr::quot()), 2);
      Polynomial poly = chern_pullback(*family, d, n).poly;
      builder.add(regime, "B-iii-S2Q", poly, family, "middle-exponent quotient route, d=2 only");
    }
  }

  return builder.entries;
}

std::pair<Polynomial, Transform> normalize(const ChernPolynomial& c) {
  int r = c.rank;
  int d = c.space.d();
  auto lambda = leading_anchor(c.poly, r, d);
  if (!lambda) {
    throw Error("normalize: T^{rank-1} coefficient is not a multiple of X1+...+Xd");
  }
  // Choose the twist putting lambda into [0, rank).
  Integer shift = -rational_floor(*lambda / r);
  int t = static_cast<int>(shift);
  Polynomial anchored = twist(c, t).poly;
  return {anchored, Transform{t, false}};
}

std::optional<MatchResult> match_case(const ChernPolynomial& c, int d, int n) {
  Regime regime = regime_of(d, n);
  FlagSpace flag = FlagSpace::three_step_flag(d, n);
  int r = c.rank;

  std::vector<NormalFormCase> cases;
  if (r == d + 1) {
    cases = normal_form_cases(d, regime);
  } else if (r == d && regime == Regime::Equal) {
    // Rank-d matching against the Guyot catalog plus the quotient branch.
    int m = d + 1;
    CaseBuilder builder{d, m, &flag, {}, {}};
    builder.add(regime, "Q(s)", quotient_form(d, m, d, 1), BundleExpr::quot(),
                "");
    builder.add(regime, "Q*(t)", quotient_form(d, m, d, -1),
                BundleExpr::dual(BundleExpr::quot()), "");
    builder.add(regime, "H(a)", chern_pullback(*BundleExpr::sub(), d, n).poly,
                BundleExpr::sub(), "");
    builder.add(regime, "H*(b)",
                chern_pullback(*BundleExpr::dual(BundleExpr::sub()), d, n).poly,
                BundleExpr::dual(BundleExpr::sub()), "");
    for (int k = 1; k <= d; ++k) {
      for (const auto& comp : compositions_of(d, k)) {
        Polynomial poly = Polynomial::constant(1, m);
        for (int i = 0; i < k; ++i) {
          poly = poly * pow(Polynomial::t(m) +
                                Rational(k - 1 - i) * sigma1_head(d, m),
                            comp[i]);
        }
        builder.add(regime, "O-sum", poly, line_sum_family(comp), "");
      }
    }
    cases = builder.entries;
  } else {
    return std::nullopt;
  }

  for (bool dualized : {false, true}) {
    ChernPolynomial candidate = dualized ? dualize(c) : c;
    auto lambda_in = leading_anchor(candidate.poly, r, d);
    if (!lambda_in) continue;
    std::vector<MatchResult> matches;
    for (const auto& entry : cases) {
      auto lambda_case = leading_anchor(entry.poly, r, d);
      if (!lambda_case) continue;
      Rational step = (*lambda_case - *lambda_in) / r;
      if (denominator(step) != 1) continue;
      int t = static_cast<int>(numerator(step));
      Polynomial shifted = twist(candidate, t).poly;
      if (ring_equal(flag, shifted, entry.poly)) {
        matches.push_back({entry, Transform{t, dualized}});
      }
    }
    if (matches.size() > 1) {
      std::string message = "ambiguous match:";
      for (const auto& match : matches) message += " " + match.matched.label;
      throw AmbiguousMatch(message);
    }
    if (matches.size() == 1) return matches.front();
  }
  return std::nullopt;
}

}  // namespace flagchow
