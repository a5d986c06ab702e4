#ifndef BECK_MAGMA_HPP
#define BECK_MAGMA_HPP

// Free magma terms (bracketed products of variables), their linear
// combinations, and the equation DSL:
//
//   equation    := ["-"] signed_term { ("+"|"-") signed_term }
//   signed_term := [coeff "*"] (factor | factor "*" factor)
//   factor      := var | "(" factor "*" factor ")"
//   coeff       := integer | integer "/" integer
//   var         := letter { letter | digit }
//
// Products are binary and nonassociative, so "x*y*z" is rejected.

#include <cctype>
#include <compare>
#include <cstddef>
#include <map>
#include <memory>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "beck/algebra.hpp"
#include "beck/errors.hpp"
#include "beck/scalar.hpp"

namespace beck {

using Variable = std::string;

/// Immutable binary tree; copies share structure.
class MagmaTerm {
 public:
  static MagmaTerm leaf(Variable name) {
    auto n = std::make_shared<Node>();
    n->name = std::move(name);
    n->weight = 1;
    return MagmaTerm(std::move(n));
  }

  static MagmaTerm product(const MagmaTerm& l, const MagmaTerm& r) {
    auto n = std::make_shared<Node>();
    n->left = l.node_;
    n->right = r.node_;
    n->weight = l.weight() + r.weight();
    return MagmaTerm(std::move(n));
  }

  bool is_leaf() const noexcept { return !node_->left; }
  const Variable& name() const noexcept { return node_->name; }
  MagmaTerm left() const { return MagmaTerm(node_->left); }
  MagmaTerm right() const { return MagmaTerm(node_->right); }

  /// Number of leaves.
  std::size_t weight() const noexcept { return node_->weight; }

  /// Canonical order: weight, then leaf < node, leaves by name, nodes by
  /// left subtree then right subtree.
  friend std::strong_ordering operator<=>(const MagmaTerm& a, const MagmaTerm& b) {
    return compare(a.node_.get(), b.node_.get());
  }
  friend bool operator==(const MagmaTerm& a, const MagmaTerm& b) {
    return compare(a.node_.get(), b.node_.get()) == 0;
  }

  /// Occurrences of `v` among the leaves.
  std::size_t degree_in(const Variable& v) const {
    if (is_leaf()) return name() == v ? 1 : 0;
    return left().degree_in(v) + right().degree_in(v);
  }

  void collect_variables(std::set<Variable>& out) const {
    if (is_leaf()) {
      out.insert(name());
      return;
    }
    left().collect_variables(out);
    right().collect_variables(out);
  }

  /// Top level printed without parentheses: "(x*y)*z".
  std::string to_string() const { return is_leaf() ? name() : print(*this, false); }

  /// Node(l, r) becomes Node(reverse r, reverse l).
  MagmaTerm reversed() const {
    if (is_leaf()) return *this;
    return product(right().reversed(), left().reversed());
  }

  /// Left-bracketed power x^{(k}: ((x x) x) ... x.
  static MagmaTerm left_power(const Variable& x, std::size_t k) {
    MagmaTerm t = leaf(x);
    for (std::size_t i = 1; i < k; ++i) t = product(t, leaf(x));
    return t;
  }

  /// Right-bracketed power x^{k)}: x (x (... x)).
  static MagmaTerm right_power(const Variable& x, std::size_t k) {
    MagmaTerm t = leaf(x);
    for (std::size_t i = 1; i < k; ++i) t = product(leaf(x), t);
    return t;
  }

 private:
  struct Node {
    Variable name;
    std::shared_ptr<const Node> left, right;
    std::size_t weight = 1;
  };

  explicit MagmaTerm(std::shared_ptr<const Node> n) : node_(std::move(n)) {}

  static std::strong_ordering compare(const Node* a, const Node* b) {
    if (a == b) return std::strong_ordering::equal;
    if (auto c = a->weight <=> b->weight; c != 0) return c;
    const bool la = !a->left, lb = !b->left;
    if (la != lb) return la ? std::strong_ordering::less : std::strong_ordering::greater;
    if (la) return a->name.compare(b->name) <=> 0;
    if (auto c = compare(a->left.get(), b->left.get()); c != 0) return c;
    return compare(a->right.get(), b->right.get());
  }

  static std::string print(const MagmaTerm& t, bool parens) {
    if (t.is_leaf()) return t.name();
    std::string s = print(t.left(), true) + "*" + print(t.right(), true);
    return parens ? "(" + s + ")" : s;
  }

  std::shared_ptr<const Node> node_;
};

/// Element of the free magmatic algebra: finite sum of terms with nonzero
/// coefficients.
class MagmaPolynomial {
 public:
  using TermMap = std::map<MagmaTerm, Scalar>;

  explicit MagmaPolynomial(FieldSpec field) : field_(field) {}

  static MagmaPolynomial monomial(const MagmaTerm& t, const Scalar& c) {
    MagmaPolynomial p(c.field());
    p.add_term(t, c);
    return p;
  }

  const FieldSpec& field() const noexcept { return field_; }
  const TermMap& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }

  void add_term(const MagmaTerm& t, const Scalar& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.try_emplace(t, c);
    if (!inserted) {
      it->second += c;
      if (it->second.is_zero()) terms_.erase(it);
    }
  }

  MagmaPolynomial& operator+=(const MagmaPolynomial& o) {
    for (const auto& [t, c] : o.terms_) add_term(t, c);
    return *this;
  }
  MagmaPolynomial& operator-=(const MagmaPolynomial& o) {
    for (const auto& [t, c] : o.terms_) add_term(t, -c);
    return *this;
  }
  friend MagmaPolynomial operator+(MagmaPolynomial a, const MagmaPolynomial& b) { return a += b; }
  friend MagmaPolynomial operator-(MagmaPolynomial a, const MagmaPolynomial& b) { return a -= b; }
  friend MagmaPolynomial operator*(const Scalar& c, const MagmaPolynomial& p) {
    MagmaPolynomial out(p.field_);
    for (const auto& [t, d] : p.terms_) out.add_term(t, c * d);
    return out;
  }

  /// Bilinear extension of the magma product.
  friend MagmaPolynomial operator*(const MagmaPolynomial& a, const MagmaPolynomial& b) {
    MagmaPolynomial out(a.field_);
    for (const auto& [s, c] : a.terms_)
      for (const auto& [t, d] : b.terms_) out.add_term(MagmaTerm::product(s, t), c * d);
    return out;
  }

  friend bool operator==(const MagmaPolynomial& a, const MagmaPolynomial& b) {
    if (a.terms_.size() != b.terms_.size()) return false;
    auto i = a.terms_.begin();
    for (auto j = b.terms_.begin(); j != b.terms_.end(); ++i, ++j)
      if (!(i->first == j->first) || !(i->second == j->second)) return false;
    return true;
  }

  std::set<Variable> variables() const {
    std::set<Variable> out;
    for (const auto& [t, c] : terms_) t.collect_variables(out);
    return out;
  }

  std::size_t max_weight() const {
    std::size_t w = 0;
    for (const auto& [t, c] : terms_) w = std::max(w, t.weight());
    return w;
  }

  /// Largest number of occurrences of a single variable in a single term.
  std::size_t max_variable_degree() const {
    std::size_t d = 0;
    for (const auto& v : variables())
      for (const auto& [t, c] : terms_) d = std::max(d, t.degree_in(v));
    return d;
  }

  MagmaPolynomial reversed() const {
    MagmaPolynomial out(field_);
    for (const auto& [t, c] : terms_) out.add_term(t.reversed(), c);
    return out;
  }

  /// Canonical text, terms in descending canonical order; parses back to
  /// an equal polynomial.
  std::string to_string() const {
    if (terms_.empty()) return "0";
    std::string out;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
      const Scalar& c = it->second;
      const bool neg = c.is_negative();
      const Scalar mag = neg ? -c : c;
      if (out.empty())
        out += neg ? "-" : "";
      else
        out += neg ? " - " : " + ";
      if (!mag.is_one()) out += mag.to_string() + "*";
      const std::string body = it->first.to_string();
      // "2*x*y" would not parse back, so a scaled product keeps parentheses.
      out += (!mag.is_one() && !it->first.is_leaf()) ? "(" + body + ")" : body;
    }
    return out;
  }

 private:
  FieldSpec field_;
  TermMap terms_;
};

inline MagmaPolynomial reverse(const MagmaPolynomial& p) { return p.reversed(); }
inline std::size_t weight(const MagmaTerm& t) { return t.weight(); }

struct ParsedEquation {
  std::vector<Variable> variables;  // sorted, exactly those appearing
  MagmaPolynomial polynomial;
};

namespace detail {

class EquationParser {
 public:
  EquationParser(const std::string& text, const FieldSpec& field) : s_(text), field_(field) {}

  MagmaPolynomial parse() {
    MagmaPolynomial out(field_);
    skip();
    if (pos_ == s_.size()) throw EmptyEquation();
    bool negate = false;
    if (peek() == '-') {
      negate = true;
      ++pos_;
    } else if (peek() == '+') {
      ++pos_;
    }
    for (;;) {
      auto [coeff, term] = signed_term();
      out.add_term(term, negate ? -coeff : coeff);
      skip();
      if (pos_ == s_.size()) break;
      const char c = s_[pos_];
      if (c == '+' || c == '-') {
        negate = c == '-';
        ++pos_;
        continue;
      }
      if (c == '*') fail("products are binary; parenthesize nested products");
      fail(std::string("unexpected '") + c + "'");
    }
    if (out.is_zero()) throw EmptyEquation();
    return out;
  }

 private:
  std::pair<Scalar, MagmaTerm> signed_term() {
    skip();
    Scalar coeff = Scalar::one(field_);
    if (std::isdigit(static_cast<unsigned char>(peek()))) {
      coeff = coefficient();
      skip();
      if (peek() != '*') fail("expected '*' after coefficient");
      ++pos_;
    }
    MagmaTerm t = factor();
    skip();
    if (peek() == '*') {
      ++pos_;
      MagmaTerm r = factor();
      t = MagmaTerm::product(t, r);
    }
    return {coeff, t};
  }

  Scalar coefficient() {
    mpz_class num(integer());
    mpz_class den(1);
    skip();
    if (peek() == '/') {
      ++pos_;
      skip();
      const std::size_t at = pos_;
      den = mpz_class(integer());
      if (den == 0) throw SyntaxError("zero denominator", at);
    }
    try {
      return Scalar::from_rational(field_, num, den);
    } catch (const DivisionByZero&) {
      throw SyntaxError("denominator vanishes in " + field_.to_string(), pos_);
    }
  }

  std::string integer() {
    const std::size_t start = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    if (start == pos_) fail("expected integer");
    return s_.substr(start, pos_ - start);
  }

  MagmaTerm factor() {
    skip();
    const char c = peek();
    if (c == '(') {
      ++pos_;
      MagmaTerm l = factor();
      skip();
      if (peek() != '*') fail("expected '*' inside parentheses");
      ++pos_;
      MagmaTerm r = factor();
      skip();
      if (peek() == '*') fail("products are binary; parenthesize nested products");
      if (peek() != ')') fail("expected ')'");
      ++pos_;
      return MagmaTerm::product(l, r);
    }
    if (std::isalpha(static_cast<unsigned char>(c))) {
      const std::size_t start = pos_;
      while (pos_ < s_.size() && std::isalnum(static_cast<unsigned char>(s_[pos_]))) ++pos_;
      return MagmaTerm::leaf(s_.substr(start, pos_ - start));
    }
    if (pos_ == s_.size()) fail("unexpected end of input");
    fail(std::string("expected variable or '(' but found '") + c + "'");
  }

  char peek() const { return pos_ < s_.size() ? s_[pos_] : '\0'; }
  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  [[noreturn]] void fail(const std::string& what) const { throw SyntaxError(what, pos_); }

  const std::string& s_;
  FieldSpec field_;
  std::size_t pos_ = 0;
};

}  // namespace detail

inline ParsedEquation parse_equation(const std::string& text, const FieldSpec& field) {
  detail::EquationParser parser(text, field);
  MagmaPolynomial p = parser.parse();
  auto vars = p.variables();
  return ParsedEquation{std::vector<Variable>(vars.begin(), vars.end()), std::move(p)};
}

/// One equation per line; blank lines and '#' comments are skipped.
inline std::vector<MagmaPolynomial> parse_equation_list(const std::string& text,
                                                        const FieldSpec& field) {
  std::vector<MagmaPolynomial> out;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string::npos) end = text.size();
    std::string line = text.substr(start, end - start);
    if (auto h = line.find('#'); h != std::string::npos) line.erase(h);
    bool blank = true;
    for (char c : line)
      if (!std::isspace(static_cast<unsigned char>(c))) blank = false;
    if (!blank) {
      try {
        out.push_back(parse_equation(line, field).polynomial);
      } catch (const SyntaxError& e) {
        throw SyntaxError(std::string(e.what()) + " (line starting at offset " +
                              std::to_string(start) + ")",
                          start + e.position());
      }
    }
    start = end + 1;
  }
  return out;
}

using Assignment = std::map<Variable, AlgebraElement>;

inline AlgebraElement evaluate_term(const MagmaTerm& t, const Assignment& a,
                                    const StructureAlgebra& alg) {
  if (t.is_leaf()) {
    auto it = a.find(t.name());
    if (it == a.end()) throw UnboundVariable(t.name());
    if (it->second.rank() != alg.rank()) throw RankMismatch(alg.rank(), it->second.rank());
    return it->second;
  }
  return alg.multiply(evaluate_term(t.left(), a, alg), evaluate_term(t.right(), a, alg));
}

/// Image of `poly` under the algebra map induced by the assignment.
inline AlgebraElement evaluate_term(const MagmaPolynomial& poly, const Assignment& a,
                                    const StructureAlgebra& alg) {
  AlgebraElement out = alg.zero();
  for (const auto& [t, c] : poly.terms()) out.add_scaled(c, evaluate_term(t, a, alg));
  return out;
}

}  // namespace beck

#endif  // BECK_MAGMA_HPP
