#ifndef BECK_FREE_ALGEBRA_HPP
#define BECK_FREE_ALGEBRA_HPP

// Words and polynomials in the generators l_1, r_1, ..., l_n, r_n of the
// free associative algebra on A + A. Letter codes: l_i -> 2(i-1),
// r_i -> 2(i-1)+1. Default generator rank: l_n > r_n > ... > l_1 > r_1.

#include <algorithm>
#include <cctype>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "beck/errors.hpp"
#include "beck/scalar.hpp"

namespace beck {

enum class Side : std::uint8_t { Left, Right };

class FreeWord {
 public:
  FreeWord() = default;
  explicit FreeWord(std::string codes) : letters_(std::move(codes)) {}

  static char code(Side side, std::size_t index0) {
    return static_cast<char>(2 * index0 + (side == Side::Right ? 1 : 0));
  }
  static FreeWord letter(Side side, std::size_t index0) {
    return FreeWord(std::string(1, code(side, index0)));
  }
  static Side side_of(char c) { return (static_cast<unsigned char>(c) & 1) ? Side::Right : Side::Left; }
  static std::size_t index_of(char c) { return static_cast<unsigned char>(c) >> 1; }

  std::size_t size() const noexcept { return letters_.size(); }
  std::size_t weight() const noexcept { return letters_.size(); }
  bool empty() const noexcept { return letters_.empty(); }
  char operator[](std::size_t i) const { return letters_[i]; }
  const std::string& codes() const noexcept { return letters_; }

  FreeWord prefix(std::size_t k) const { return FreeWord(letters_.substr(0, k)); }
  FreeWord suffix_from(std::size_t k) const { return FreeWord(letters_.substr(k)); }

  friend FreeWord operator+(const FreeWord& a, const FreeWord& b) {
    return FreeWord(a.letters_ + b.letters_);
  }
  friend bool operator==(const FreeWord&, const FreeWord&) = default;

  /// Position of the first occurrence of `factor`, or npos.
  std::size_t find(const FreeWord& factor) const { return letters_.find(factor.letters_); }
  bool divides(const FreeWord& other) const { return other.find(*this) != std::string::npos; }

  /// "l1.r2.l3"; "1" for the empty word. With `q_form`, l is printed as q.
  std::string to_string(bool q_form = false) const {
    if (letters_.empty()) return "1";
    std::string out;
    for (std::size_t i = 0; i < letters_.size(); ++i) {
      if (i) out += ".";
      const char c = letters_[i];
      out += side_of(c) == Side::Left ? (q_form ? "q" : "l") : "r";
      out += std::to_string(index_of(c) + 1);
    }
    return out;
  }

 private:
  std::string letters_;
};

/// Position of a letter in the default generator rank; larger is greater.
constexpr unsigned letter_rank(char c) noexcept { return static_cast<unsigned char>(c) ^ 1u; }

/// Default monomial order: weight first, then left-lexicographic with
/// l_n > r_n > ... > l_1 > r_1.
inline int compare_words(const FreeWord& u, const FreeWord& v) {
  if (u.size() != v.size()) return u.size() < v.size() ? -1 : 1;
  for (std::size_t i = 0; i < u.size(); ++i) {
    const unsigned a = letter_rank(u[i]), b = letter_rank(v[i]);
    if (a != b) return a > b ? 1 : -1;
  }
  return 0;
}

/// Strict "comes first when listing in descending monomial order".
struct WordGreater {
  bool operator()(const FreeWord& a, const FreeWord& b) const { return compare_words(a, b) > 0; }
};

struct WordHash {
  std::size_t operator()(const FreeWord& w) const { return std::hash<std::string>{}(w.codes()); }
};

/// Sparse polynomial; terms sorted in descending monomial order, no zero
/// coefficients.
class FreePolynomial {
 public:
  struct Term {
    FreeWord word;
    Scalar coeff;
  };

  explicit FreePolynomial(FieldSpec field) : field_(field) {}

  static FreePolynomial monomial(const FreeWord& w, const Scalar& c) {
    FreePolynomial p(c.field());
    if (!c.is_zero()) p.terms_.push_back({w, c});
    return p;
  }
  static FreePolynomial constant(const Scalar& c) { return monomial(FreeWord(), c); }

  /// Builds from unsorted terms, combining duplicates.
  static FreePolynomial from_terms(const FieldSpec& field, std::vector<Term> terms) {
    std::map<FreeWord, Scalar, WordGreater> acc;
    for (auto& t : terms) {
      auto [it, inserted] = acc.try_emplace(std::move(t.word), t.coeff);
      if (!inserted) it->second += t.coeff;
    }
    FreePolynomial p(field);
    for (auto& [w, c] : acc)
      if (!c.is_zero()) p.terms_.push_back({w, c});
    return p;
  }

  /// Terms already strictly descending with nonzero coefficients.
  static FreePolynomial from_sorted_terms(const FieldSpec& field, std::vector<Term> terms) {
    FreePolynomial p(field);
    p.terms_ = std::move(terms);
    return p;
  }

  const FieldSpec& field() const noexcept { return field_; }
  const std::vector<Term>& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  std::size_t size() const noexcept { return terms_.size(); }

  const FreeWord& leading_word() const { return terms_.front().word; }
  const Scalar& leading_coeff() const { return terms_.front().coeff; }
  std::size_t weight() const { return terms_.empty() ? 0 : terms_.front().word.size(); }
  std::size_t min_weight() const { return terms_.empty() ? 0 : terms_.back().word.size(); }
  bool is_homogeneous() const { return weight() == min_weight(); }
  bool is_monic() const { return !terms_.empty() && leading_coeff().is_one(); }

  Scalar coefficient(const FreeWord& w) const {
    auto it = std::lower_bound(terms_.begin(), terms_.end(), w,
                               [](const Term& t, const FreeWord& x) { return WordGreater{}(t.word, x); });
    if (it != terms_.end() && it->word == w) return it->coeff;
    return Scalar::zero(field_);
  }

  /// this += c * other, by merging.
  void add_scaled(const Scalar& c, const FreePolynomial& other) {
    if (c.is_zero() || other.is_zero()) return;
    std::vector<Term> out;
    out.reserve(terms_.size() + other.terms_.size());
    std::size_t i = 0, j = 0;
    const WordGreater before;
    while (i < terms_.size() || j < other.terms_.size()) {
      if (j == other.terms_.size() || (i < terms_.size() && before(terms_[i].word, other.terms_[j].word))) {
        out.push_back(std::move(terms_[i++]));
      } else if (i == terms_.size() || before(other.terms_[j].word, terms_[i].word)) {
        out.push_back({other.terms_[j].word, c * other.terms_[j].coeff});
        ++j;
      } else {
        Scalar s = terms_[i].coeff + c * other.terms_[j].coeff;
        if (!s.is_zero()) out.push_back({std::move(terms_[i].word), std::move(s)});
        ++i;
        ++j;
      }
    }
    terms_ = std::move(out);
  }

  FreePolynomial& operator+=(const FreePolynomial& o) {
    add_scaled(Scalar::one(field_), o);
    return *this;
  }
  FreePolynomial& operator-=(const FreePolynomial& o) {
    add_scaled(-Scalar::one(field_), o);
    return *this;
  }
  FreePolynomial& operator*=(const Scalar& c) {
    if (c.is_zero()) {
      terms_.clear();
      return *this;
    }
    for (auto& t : terms_) t.coeff *= c;
    return *this;
  }
  friend FreePolynomial operator+(FreePolynomial a, const FreePolynomial& b) { return a += b; }
  friend FreePolynomial operator-(FreePolynomial a, const FreePolynomial& b) { return a -= b; }
  friend FreePolynomial operator*(const Scalar& c, FreePolynomial a) { return a *= c; }

  /// s * this * t. The order is multiplicative, so sortedness is kept.
  FreePolynomial sandwich(const FreeWord& s, const FreeWord& t) const {
    FreePolynomial out(field_);
    out.terms_.reserve(terms_.size());
    for (const auto& term : terms_) out.terms_.push_back({s + term.word + t, term.coeff});
    return out;
  }

  friend FreePolynomial operator*(const FreePolynomial& a, const FreePolynomial& b) {
    std::vector<Term> prod;
    prod.reserve(a.size() * b.size());
    for (const auto& x : a.terms_)
      for (const auto& y : b.terms_) prod.push_back({x.word + y.word, x.coeff * y.coeff});
    return from_terms(a.field_, std::move(prod));
  }

  FreePolynomial monic() const {
    if (terms_.empty() || leading_coeff().is_one()) return *this;
    FreePolynomial out = *this;
    out *= leading_coeff().inv();
    return out;
  }

  friend bool operator==(const FreePolynomial& a, const FreePolynomial& b) {
    if (a.terms_.size() != b.terms_.size()) return false;
    for (std::size_t i = 0; i < a.terms_.size(); ++i)
      if (!(a.terms_[i].word == b.terms_[i].word) || !(a.terms_[i].coeff == b.terms_[i].coeff))
        return false;
    return true;
  }

  /// "l1.l2 + r2.r1 - 3*l1 + 1"; "0" for the zero polynomial.
  std::string to_string(bool q_form = false) const {
    if (terms_.empty()) return "0";
    std::string out;
    for (const auto& t : terms_) {
      const bool neg = t.coeff.is_negative();
      const Scalar mag = neg ? -t.coeff : t.coeff;
      if (out.empty())
        out += neg ? "-" : "";
      else
        out += neg ? " - " : " + ";
      if (t.word.empty()) {
        out += mag.to_string();
      } else {
        if (!mag.is_one()) out += mag.to_string() + "*";
        out += t.word.to_string(q_form);
      }
    }
    return out;
  }

 private:
  FieldSpec field_;
  std::vector<Term> terms_;
};

namespace detail {

class FreePolynomialParser {
 public:
  FreePolynomialParser(const std::string& s, const FieldSpec& f) : s_(s), field_(f) {}

  FreePolynomial parse() {
    std::vector<FreePolynomial::Term> terms;
    skip();
    bool neg = false;
    if (peek() == '-' || peek() == '+') {
      neg = peek() == '-';
      ++pos_;
    }
    for (;;) {
      skip();
      Scalar c = Scalar::one(field_);
      FreeWord w;
      if (std::isdigit(static_cast<unsigned char>(peek()))) {
        c = coefficient();
        skip();
        if (peek() == '*') {
          ++pos_;
          w = word();
        }
      } else {
        w = word();
      }
      terms.push_back({w, neg ? -c : c});
      skip();
      if (pos_ == s_.size()) break;
      if (peek() != '+' && peek() != '-') throw SyntaxError("expected '+' or '-'", pos_);
      neg = peek() == '-';
      ++pos_;
    }
    return FreePolynomial::from_terms(field_, std::move(terms));
  }

 private:
  Scalar coefficient() {
    const std::string num = digits();
    std::string den = "1";
    if (peek() == '/') {
      ++pos_;
      den = digits();
    }
    try {
      return Scalar::from_rational(field_, mpz_class(num), mpz_class(den));
    } catch (const DivisionByZero&) {
      throw SyntaxError("zero denominator", pos_);
    }
  }

  FreeWord word() {
    std::string codes;
    for (;;) {
      skip();
      const char c = peek();
      if (c != 'l' && c != 'r' && c != 'q') throw SyntaxError("expected letter l<i> or r<i>", pos_);
      if (c == 'q') throw SyntaxError("q-form is display only", pos_);
      ++pos_;
      const std::size_t at = pos_;
      const std::string d = digits();
      const unsigned long idx = std::stoul(d);
      if (idx == 0 || idx > 127) throw SyntaxError("letter index out of range", at);
      codes.push_back(FreeWord::code(c == 'l' ? Side::Left : Side::Right, idx - 1));
      if (peek() != '.') break;
      ++pos_;
    }
    return FreeWord(std::move(codes));
  }

  std::string digits() {
    const std::size_t start = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    if (start == pos_) throw SyntaxError("expected digits", pos_);
    return s_.substr(start, pos_ - start);
  }

  char peek() const { return pos_ < s_.size() ? s_[pos_] : '\0'; }
  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }

  const std::string& s_;
  FieldSpec field_;
  std::size_t pos_ = 0;
};

}  // namespace detail

/// Inverse of FreePolynomial::to_string (l/r letters only).
inline FreePolynomial parse_free_polynomial(const std::string& text, const FieldSpec& field) {
  return detail::FreePolynomialParser(text, field).parse();
}

/// Rewrites in the letters q_i = l_i + r_i and r_i by substituting
/// l_i = q_i - r_i; the result reuses the l codes for q and prints with
/// to_string(true).
inline FreePolynomial to_q_basis(const FreePolynomial& p) {
  std::vector<FreePolynomial::Term> acc;
  for (const auto& t : p.terms()) {
    std::vector<FreePolynomial::Term> partial{{FreeWord(), t.coeff}};
    for (std::size_t i = 0; i < t.word.size(); ++i) {
      const char c = t.word[i];
      std::vector<FreePolynomial::Term> next;
      for (const auto& pt : partial) {
        if (FreeWord::side_of(c) == Side::Right) {
          next.push_back({pt.word + FreeWord(std::string(1, c)), pt.coeff});
        } else {
          const std::size_t idx = FreeWord::index_of(c);
          next.push_back({pt.word + FreeWord::letter(Side::Left, idx), pt.coeff});
          next.push_back({pt.word + FreeWord::letter(Side::Right, idx), -pt.coeff});
        }
      }
      partial = std::move(next);
    }
    acc.insert(acc.end(), partial.begin(), partial.end());
  }
  return FreePolynomial::from_terms(p.field(), std::move(acc));
}

}  // namespace beck

#endif  // BECK_FREE_ALGEBRA_HPP
