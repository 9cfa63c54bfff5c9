#include "flagchow/bundles.hpp"

#include <algorithm>
#include <cctype>
#include <set>

namespace flagchow {

BundlePtr BundleExpr::line(int a) {
  return BundlePtr(new BundleExpr(Kind::Line, a, nullptr, nullptr));
}
BundlePtr BundleExpr::sub() {
  return BundlePtr(new BundleExpr(Kind::Sub, 0, nullptr, nullptr));
}
BundlePtr BundleExpr::quot() {
  return BundlePtr(new BundleExpr(Kind::Quot, 0, nullptr, nullptr));
}
BundlePtr BundleExpr::taut_sub() {
  return BundlePtr(new BundleExpr(Kind::TautSub, 0, nullptr, nullptr));
}
BundlePtr BundleExpr::taut_quot() {
  return BundlePtr(new BundleExpr(Kind::TautQuot, 0, nullptr, nullptr));
}
BundlePtr BundleExpr::dual(BundlePtr e) {
  return BundlePtr(new BundleExpr(Kind::Dual, 0, std::move(e), nullptr));
}
BundlePtr BundleExpr::twist(BundlePtr e, int t) {
  return BundlePtr(new BundleExpr(Kind::Twist, t, std::move(e), nullptr));
}
BundlePtr BundleExpr::sym2(BundlePtr e) {
  return BundlePtr(new BundleExpr(Kind::Sym2, 0, std::move(e), nullptr));
}
BundlePtr BundleExpr::sum(BundlePtr lhs, BundlePtr rhs) {
  return BundlePtr(new BundleExpr(Kind::Sum, 0, std::move(lhs), std::move(rhs)));
}

std::string BundleExpr::str() const {
  switch (kind_) {
    case Kind::Line:
      return "O(" + std::to_string(amount_) + ")";
    case Kind::Sub:
      return "H";
    case Kind::Quot:
      return "Q";
    case Kind::TautSub:
      return "tautH";
    case Kind::TautQuot:
      return "tautQ";
    case Kind::Dual: {
      std::string inner = left_->str();
      if (inner.size() == 1 || left_->kind() == Kind::Line) return inner + "*";
      return "dual(" + inner + ")";
    }
    case Kind::Twist: {
      std::string inner = left_->str();
      bool atomic = left_->kind() != Kind::Sum;
      if (!atomic) inner = "(" + inner + ")";
      return inner + "(" + std::to_string(amount_) + ")";
    }
    case Kind::Sym2:
      return "sym2(" + left_->str() + ")";
    case Kind::Sum:
      return left_->str() + " + " + right_->str();
  }
  return "?";
}

namespace {

// Minimal recursive-descent parser for bundle expressions.
class BundleParser {
 public:
  explicit BundleParser(const std::string& text) : text_(text) {}

  BundlePtr run() {
    BundlePtr e = parse_sum();
    skip_space();
    if (pos_ != text_.size()) throw ParseError("unexpected trailing input", pos_);
    return e;
  }

 private:
  BundlePtr parse_sum() {
    BundlePtr e = parse_postfix();
    while (true) {
      skip_space();
      if (peek() != '+') break;
      take();
      e = BundleExpr::sum(e, parse_postfix());
    }
    return e;
  }

  BundlePtr parse_postfix() {
    BundlePtr e = parse_atom();
    while (true) {
      skip_space();
      if (peek() == '*') {
        take();
        e = BundleExpr::dual(e);
      } else if (peek() == '(') {
        std::size_t save = pos_;
        take();
        skip_space();
        bool negative = false;
        if (peek() == '-') {
          negative = true;
          take();
        }
        if (!std::isdigit(peek())) {
          pos_ = save;
          break;
        }
        int value = parse_int();
        skip_space();
        if (peek() != ')') throw ParseError("expected ')'", pos_);
        take();
        e = BundleExpr::twist(e, negative ? -value : value);
      } else {
        break;
      }
    }
    return e;
  }

  BundlePtr parse_atom() {
    skip_space();
    if (peek() == '(') {
      take();
      BundlePtr e = parse_sum();
      skip_space();
      if (peek() != ')') throw ParseError("expected ')'", pos_);
      take();
      return e;
    }
    if (match_word("dual")) return parse_unary(&BundleExpr::dual);
    if (match_word("sym2")) return parse_unary(&BundleExpr::sym2);
    if (match_word("tautH")) return BundleExpr::taut_sub();
    if (match_word("tautQ")) return BundleExpr::taut_quot();
    if (peek() == 'O') {
      take();
      skip_space();
      if (peek() != '(') throw ParseError("expected '(' after O", pos_);
      take();
      skip_space();
      bool negative = false;
      if (peek() == '-') {
        negative = true;
        take();
      }
      int value = parse_int();
      skip_space();
      if (peek() != ')') throw ParseError("expected ')'", pos_);
      take();
      return BundleExpr::line(negative ? -value : value);
    }
    if (peek() == 'H') {
      take();
      return BundleExpr::sub();
    }
    if (peek() == 'Q') {
      take();
      return BundleExpr::quot();
    }
    throw ParseError("unexpected character in bundle expression", pos_);
  }

  BundlePtr parse_unary(BundlePtr (*ctor)(BundlePtr)) {
    skip_space();
    if (peek() != '(') throw ParseError("expected '('", pos_);
    take();
    BundlePtr inner = parse_sum();
    skip_space();
    if (peek() != ')') throw ParseError("expected ')'", pos_);
    take();
    return ctor(inner);
  }

  bool match_word(const std::string& word) {
    skip_space();
    if (text_.compare(pos_, word.size(), word) != 0) return false;
    std::size_t end = pos_ + word.size();
    if (end < text_.size() &&
        std::isalnum(static_cast<unsigned char>(text_[end]))) {
      return false;
    }
    pos_ = end;
    return true;
  }

  int parse_int() {
    if (!std::isdigit(peek())) throw ParseError("expected integer", pos_);
    int value = 0;
    while (std::isdigit(peek())) {
      value = value * 10 + (take() - '0');
      if (value > 1000000) throw ParseError("integer too large", pos_);
    }
    return value;
  }

  void skip_space() {
    while (pos_ < text_.size() &&
           std::isspace(static_cast<unsigned char>(text_[pos_]))) {
      ++pos_;
    }
  }

  char peek() const { return pos_ < text_.size() ? text_[pos_] : '\0'; }
  char take() { return text_[pos_++]; }

  const std::string& text_;
  std::size_t pos_ = 0;
};

std::vector<Rational> sigma_x_vector(int d, int m) {
  std::vector<Rational> v(m, Rational(0));
  for (int i = 0; i < d; ++i) v[i] = 1;
  return v;
}

}  // namespace

BundlePtr parse_bundle(const std::string& text) {
  return BundleParser(text).run();
}

int rank(const BundleExpr& e, int d, int n) {
  switch (e.kind()) {
    case BundleExpr::Kind::Line:
    case BundleExpr::Kind::TautSub:
    case BundleExpr::Kind::TautQuot:
      return 1;
    case BundleExpr::Kind::Sub:
      return d;
    case BundleExpr::Kind::Quot:
      return n - d;
    case BundleExpr::Kind::Dual:
    case BundleExpr::Kind::Twist:
      return rank(*e.left(), d, n);
    case BundleExpr::Kind::Sym2: {
      if (rank(*e.left(), d, n) != 2) {
        throw Error("sym2 requires a rank-2 bundle");
      }
      return 3;
    }
    case BundleExpr::Kind::Sum:
      return rank(*e.left(), d, n) + rank(*e.right(), d, n);
  }
  throw Error("unknown bundle expression");
}

std::optional<std::vector<std::vector<Rational>>> chern_roots(
    const BundleExpr& e, int d, int n) {
  int m = d + 1;
  using Roots = std::vector<std::vector<Rational>>;
  switch (e.kind()) {
    case BundleExpr::Kind::Line: {
      std::vector<Rational> root = sigma_x_vector(d, m);
      for (auto& c : root) c *= -e.amount();
      return Roots{root};
    }
    case BundleExpr::Kind::Sub: {
      Roots roots;
      for (int i = 0; i < d; ++i) {
        std::vector<Rational> root(m, Rational(0));
        root[i] = 1;
        roots.push_back(root);
      }
      return roots;
    }
    case BundleExpr::Kind::TautSub: {
      std::vector<Rational> root(m, Rational(0));
      root[d - 1] = -1;
      return Roots{root};
    }
    case BundleExpr::Kind::TautQuot: {
      std::vector<Rational> root(m, Rational(0));
      root[d] = 1;
      return Roots{root};
    }
    case BundleExpr::Kind::Quot: {
      // Only the rank-2 quotient has roots in the materialized ring:
      // mod I, c_Q factors as (T - X_{d+1})(T + X_1 + ... + X_{d+1}).
      if (n - d != 2) return std::nullopt;
      std::vector<Rational> first(m, Rational(0));
      first[d] = 1;
      std::vector<Rational> second(m, Rational(-1));
      return Roots{first, second};
    }
    case BundleExpr::Kind::Dual: {
      auto inner = chern_roots(*e.left(), d, n);
      if (!inner) return std::nullopt;
      for (auto& root : *inner) {
        for (auto& c : root) c = -c;
      }
      return inner;
    }
    case BundleExpr::Kind::Twist: {
      auto inner = chern_roots(*e.left(), d, n);
      if (!inner) return std::nullopt;
      auto shift = sigma_x_vector(d, m);
      for (auto& root : *inner) {
        for (int i = 0; i < m; ++i) root[i] -= e.amount() * shift[i];
      }
      return inner;
    }
    case BundleExpr::Kind::Sym2: {
      auto inner = chern_roots(*e.left(), d, n);
      if (!inner || inner->size() != 2) return std::nullopt;
      const auto& r1 = (*inner)[0];
      const auto& r2 = (*inner)[1];
      Roots roots;
      std::vector<Rational> mixed(m);
      std::vector<Rational> first(m), second(m);
      for (int i = 0; i < m; ++i) {
        first[i] = 2 * r1[i];
        mixed[i] = r1[i] + r2[i];
        second[i] = 2 * r2[i];
      }
      return Roots{first, mixed, second};
    }
    case BundleExpr::Kind::Sum: {
      auto lhs = chern_roots(*e.left(), d, n);
      auto rhs = chern_roots(*e.right(), d, n);
      if (!lhs || !rhs) return std::nullopt;
      lhs->insert(lhs->end(), rhs->begin(), rhs->end());
      return lhs;
    }
  }
  return std::nullopt;
}

namespace {

Polynomial poly_from_roots(const std::vector<std::vector<Rational>>& roots,
                           int m) {
  Polynomial result = Polynomial::constant(1, m);
  for (const auto& root : roots) {
    Polynomial factor = Polynomial::t(m);
    for (int i = 0; i < m; ++i) {
      factor -= root[i] * Polynomial::x(i + 1, m);
    }
    result = result * factor;
  }
  return result;
}

}  // namespace

ChernPolynomial chern_pullback(const BundleExpr& e, int d, int n) {
  FlagSpace flag = FlagSpace::three_step_flag(d, n);
  int m = d + 1;
  rank(e, d, n);  // validates Sym2 arity throughout the tree
  switch (e.kind()) {
    case BundleExpr::Kind::Line: {
      Polynomial p = Polynomial::t(m);
      for (int i = 1; i <= d; ++i) p += e.amount() * Polynomial::x(i, m);
      return {p, 1, flag};
    }
    case BundleExpr::Kind::TautSub:
      return {Polynomial::t(m) + Polynomial::x(d, m), 1, flag};
    case BundleExpr::Kind::TautQuot:
      return {Polynomial::t(m) - Polynomial::x(d + 1, m), 1, flag};
    case BundleExpr::Kind::Sub: {
      auto roots = chern_roots(e, d, n);
      return {poly_from_roots(*roots, m), d, flag};
    }
    case BundleExpr::Kind::Quot: {
      // Total class of Q is the series inverse of the total class of H,
      // truncated at the rank.
      Polynomial total_sub = Polynomial::constant(1, m);
      for (int i = 1; i <= d; ++i) {
        total_sub = total_sub * (Polynomial::constant(1, m) + Polynomial::x(i, m));
      }
      Polynomial total_quot = truncated_inverse(total_sub, n - d);
      Polynomial p(m);
      for (int i = 0; i <= n - d; ++i) {
        Polynomial ci = total_quot.homogeneous_component(i);
        Rational sign = i % 2 == 0 ? Rational(1) : Rational(-1);
        p += sign * ci * pow(Polynomial::t(m), n - d - i);
      }
      return {p, n - d, flag};
    }
    case BundleExpr::Kind::Dual:
      return dualize(chern_pullback(*e.left(), d, n));
    case BundleExpr::Kind::Twist:
      return twist(chern_pullback(*e.left(), d, n), e.amount());
    case BundleExpr::Kind::Sum: {
      ChernPolynomial lhs = chern_pullback(*e.left(), d, n);
      ChernPolynomial rhs = chern_pullback(*e.right(), d, n);
      return {lhs.poly * rhs.poly, lhs.rank + rhs.rank, flag};
    }
    case BundleExpr::Kind::Sym2: {
      auto roots = chern_roots(e, d, n);
      if (roots) return {poly_from_roots(*roots, m), 3, flag};
      // Fall back to factoring the operand's polynomial.
      ChernPolynomial base = chern_pullback(*e.left(), d, n);
      auto factors = linear_t_factorization(base.poly);
      if (!factors || factors->size() != 2) {
        throw Error("sym2 operand does not split into linear T-factors");
      }
      std::vector<std::vector<Rational>> base_roots;
      for (const auto& factor : *factors) {
        std::vector<Rational> root(m);
        for (int i = 0; i < m; ++i) root[i] = -factor.x_coeffs[i];
        base_roots.push_back(root);
      }
      std::vector<std::vector<Rational>> squared{
          base_roots[0], base_roots[0], base_roots[1]};
      for (int i = 0; i < m; ++i) {
        squared[0][i] = 2 * base_roots[0][i];
        squared[1][i] = base_roots[0][i] + base_roots[1][i];
        squared[2][i] = 2 * base_roots[1][i];
      }
      return {poly_from_roots(squared, m), 3, flag};
    }
  }
  throw Error("unknown bundle expression");
}

ChernPolynomial dualize(const ChernPolynomial& c) {
  int m = c.poly.variable_count();
  Polynomial flipped(m);
  for (const auto& [row, coeff] : c.poly.terms()) {
    int sign_power = c.rank + row[0];
    Rational sign = sign_power % 2 == 0 ? Rational(1) : Rational(-1);
    flipped += Polynomial::monomial(row, sign * coeff);
  }
  return {flipped, c.rank, c.space};
}

ChernPolynomial twist(const ChernPolynomial& c, int t) {
  int m = c.poly.variable_count();
  int d = c.space.d();
  LinearForm shift;
  shift.t_coeff = 1;
  shift.x_coeffs.assign(m, Rational(0));
  for (int i = 0; i < d; ++i) shift.x_coeffs[i] = t;
  return {substitute_t(c.poly, shift), c.rank, c.space};
}

Polynomial total_chern_class(const BundleExpr& e, int d, int n) {
  ChernPolynomial c = chern_pullback(e, d, n);
  Polynomial total(d);
  for (int i = 0; i <= c.rank; ++i) {
    Polynomial slice = c.poly.t_coefficient(c.rank - i);
    Rational sign = i % 2 == 0 ? Rational(1) : Rational(-1);
    total += sign * with_variable_count(slice, d);
  }
  return total;
}

int SplittingType::total_rank() const {
  int total = 0;
  for (int m : r) total += m;
  return total;
}

int SplittingType::degree_sum() const {
  int total = 0;
  for (std::size_t i = 0; i < u.size(); ++i) total += u[i] * r[i];
  return total;
}

std::string SplittingType::str() const {
  std::string out = "(k=" + std::to_string(parts()) + "; u=";
  for (std::size_t i = 0; i < u.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(u[i]);
  }
  out += "; r=";
  for (std::size_t i = 0; i < r.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(r[i]);
  }
  return out + ")";
}

namespace {

// Exponent multiset of the restriction to a line, then merged to a type.
std::multiset<int> line_degrees(const BundleExpr& e, int d, int n);

std::multiset<int> line_degrees(const BundleExpr& e, int d, int n) {
  switch (e.kind()) {
    case BundleExpr::Kind::Line:
      return {e.amount()};
    case BundleExpr::Kind::Sub: {
      std::multiset<int> degrees;
      for (int i = 0; i < d - 1; ++i) degrees.insert(0);
      degrees.insert(-1);
      return degrees;
    }
    case BundleExpr::Kind::Quot: {
      std::multiset<int> degrees;
      degrees.insert(1);
      for (int i = 0; i < n - d - 1; ++i) degrees.insert(0);
      return degrees;
    }
    case BundleExpr::Kind::TautSub:
    case BundleExpr::Kind::TautQuot:
      throw Error("tautological line bundles have no splitting type on G(d,n)");
    case BundleExpr::Kind::Dual: {
      std::multiset<int> degrees;
      for (int v : line_degrees(*e.left(), d, n)) degrees.insert(-v);
      return degrees;
    }
    case BundleExpr::Kind::Twist: {
      std::multiset<int> degrees;
      for (int v : line_degrees(*e.left(), d, n)) degrees.insert(v + e.amount());
      return degrees;
    }
    case BundleExpr::Kind::Sym2: {
      auto inner = line_degrees(*e.left(), d, n);
      if (inner.size() != 2) throw Error("sym2 requires a rank-2 bundle");
      auto it = inner.begin();
      int v1 = *it++;
      int v2 = *it;
      return {2 * v1, v1 + v2, 2 * v2};
    }
    case BundleExpr::Kind::Sum: {
      auto degrees = line_degrees(*e.left(), d, n);
      for (int v : line_degrees(*e.right(), d, n)) degrees.insert(v);
      return degrees;
    }
  }
  throw Error("unknown bundle expression");
}

}  // namespace

SplittingType splitting_type(const BundleExpr& e, int d, int n) {
  std::multiset<int> degrees = line_degrees(e, d, n);
  SplittingType st;
  for (auto it = degrees.rbegin(); it != degrees.rend(); ++it) {
    if (!st.u.empty() && st.u.back() == *it) {
      ++st.r.back();
    } else {
      st.u.push_back(*it);
      st.r.push_back(1);
    }
  }
  return st;
}

bool consecutive_gap_reduction(const SplittingType& st) {
  for (std::size_t i = 0; i + 1 < st.u.size(); ++i) {
    if (st.u[i] - st.u[i + 1] != 1) return false;
  }
  return true;
}

}  // namespace flagchow
