#ifndef BECK_DERIVE_HPP
#define BECK_DERIVE_HPP

// Noncommutative partial derivatives of magma polynomials. The derivative
// of a term lives in the free associative algebra on symbols L[m], R[m]
// (left and right multiplication by the magma term m):
//
//   d x / d x = 1,   d y / d x = 0,
//   d (a b) / d x = (d a / d x) R[b] + (d b / d x) L[a].

#include <compare>
#include <cstddef>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "beck/algebra.hpp"
#include "beck/free_algebra.hpp"
#include "beck/magma.hpp"
#include "beck/scalar.hpp"

namespace beck {

struct MultSymbol {
  Side side;
  MagmaTerm subscript;

  friend std::strong_ordering operator<=>(const MultSymbol& a, const MultSymbol& b) {
    if (auto c = a.side <=> b.side; c != 0) return c;
    return a.subscript <=> b.subscript;
  }
  friend bool operator==(const MultSymbol& a, const MultSymbol& b) {
    return a.side == b.side && a.subscript == b.subscript;
  }

  std::string to_string() const {
    return std::string(side == Side::Left ? "L[" : "R[") + subscript.to_string() + "]";
  }
};

/// Product of symbols, left to right; empty is the unit.
using MultWord = std::vector<MultSymbol>;

inline std::string mult_word_to_string(const MultWord& w) {
  if (w.empty()) return "1";
  std::string out;
  for (std::size_t i = 0; i < w.size(); ++i) out += (i ? "." : "") + w[i].to_string();
  return out;
}

/// Total subscript weight of a word.
inline std::size_t subscript_weight(const MultWord& w) {
  std::size_t s = 0;
  for (const auto& sym : w) s += sym.subscript.weight();
  return s;
}

class MultPolynomial {
 public:
  using WordMap = std::map<MultWord, Scalar>;

  explicit MultPolynomial(FieldSpec field) : field_(field) {}

  static MultPolynomial unit(const FieldSpec& f) {
    MultPolynomial p(f);
    p.words_.emplace(MultWord{}, Scalar::one(f));
    return p;
  }
  static MultPolynomial symbol(const FieldSpec& f, Side side, const MagmaTerm& m) {
    MultPolynomial p(f);
    p.words_.emplace(MultWord{MultSymbol{side, m}}, Scalar::one(f));
    return p;
  }

  const FieldSpec& field() const noexcept { return field_; }
  const WordMap& words() const noexcept { return words_; }
  bool is_zero() const noexcept { return words_.empty(); }

  void add_term(const MultWord& w, const Scalar& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = words_.try_emplace(w, c);
    if (!inserted) {
      it->second += c;
      if (it->second.is_zero()) words_.erase(it);
    }
  }

  void add_scaled(const Scalar& c, const MultPolynomial& o) {
    for (const auto& [w, d] : o.words_) add_term(w, c * d);
  }

  MultPolynomial& operator+=(const MultPolynomial& o) {
    add_scaled(Scalar::one(field_), o);
    return *this;
  }
  MultPolynomial& operator-=(const MultPolynomial& o) {
    add_scaled(-Scalar::one(field_), o);
    return *this;
  }
  friend MultPolynomial operator+(MultPolynomial a, const MultPolynomial& b) { return a += b; }
  friend MultPolynomial operator-(MultPolynomial a, const MultPolynomial& b) { return a -= b; }

  friend MultPolynomial operator*(const MultPolynomial& a, const MultPolynomial& b) {
    MultPolynomial out(a.field_);
    for (const auto& [u, c] : a.words_)
      for (const auto& [v, d] : b.words_) {
        MultWord w = u;
        w.insert(w.end(), v.begin(), v.end());
        out.add_term(w, c * d);
      }
    return out;
  }

  /// Appends one symbol to every word.
  MultPolynomial times_symbol(Side side, const MagmaTerm& m) const {
    MultPolynomial out(field_);
    for (const auto& [w, c] : words_) {
      MultWord x = w;
      x.push_back(MultSymbol{side, m});
      out.words_.emplace(std::move(x), c);
    }
    return out;
  }

  /// Right multiplication by L[p] or R[p] with p expanded linearly.
  MultPolynomial times_symbol(Side side, const MagmaPolynomial& p) const {
    MultPolynomial out(field_);
    for (const auto& [m, c] : p.terms()) out.add_scaled(c, times_symbol(side, m));
    return out;
  }

  friend bool operator==(const MultPolynomial& a, const MultPolynomial& b) {
    if (a.words_.size() != b.words_.size()) return false;
    auto i = a.words_.begin();
    for (auto j = b.words_.begin(); j != b.words_.end(); ++i, ++j)
      if (!(i->first == j->first) || !(i->second == j->second)) return false;
    return true;
  }

  std::string to_string() const {
    if (words_.empty()) return "0";
    std::string out;
    for (const auto& [w, c] : words_) {
      const bool neg = c.is_negative();
      const Scalar mag = neg ? -c : c;
      if (out.empty())
        out += neg ? "-" : "";
      else
        out += neg ? " - " : " + ";
      if (w.empty()) {
        out += mag.to_string();
        continue;
      }
      if (!mag.is_one()) out += mag.to_string() + "*";
      out += mult_word_to_string(w);
    }
    return out;
  }

 private:
  FieldSpec field_;
  WordMap words_;
};

/// Memoized derivative with respect to one variable.
class Differentiator {
 public:
  Differentiator(Variable x, FieldSpec field) : x_(std::move(x)), field_(field) {}

  const MultPolynomial& of(const MagmaTerm& t) {
    if (auto it = memo_.find(t); it != memo_.end()) return it->second;
    MultPolynomial d(field_);
    if (t.is_leaf()) {
      if (t.name() == x_) d = MultPolynomial::unit(field_);
    } else {
      const MagmaTerm a = t.left(), b = t.right();
      d = of(a).times_symbol(Side::Right, b);
      d += of(b).times_symbol(Side::Left, a);
    }
    return memo_.emplace(t, std::move(d)).first->second;
  }

  MultPolynomial of(const MagmaPolynomial& p) {
    MultPolynomial out(field_);
    for (const auto& [t, c] : p.terms()) out.add_scaled(c, of(t));
    return out;
  }

 private:
  Variable x_;
  FieldSpec field_;
  std::map<MagmaTerm, MultPolynomial> memo_;
};

inline MultPolynomial partial(const MagmaPolynomial& omega, const Variable& x) {
  return Differentiator(x, omega.field()).of(omega);
}

/// sum_i a_i * letter(side, i)
inline FreePolynomial linear_form(Side side, const AlgebraElement& a) {
  std::vector<FreePolynomial::Term> terms;
  for (std::size_t i = 0; i < a.rank(); ++i)
    if (!a[i].is_zero()) terms.push_back({FreeWord::letter(side, i), a[i]});
  return FreePolynomial::from_terms(a.field(), std::move(terms));
}

/// Evaluates every subscript under the assignment and expands L/R into the
/// letters l_i, r_i of the algebra's basis.
inline FreePolynomial specialize(const MultPolynomial& mp, const Assignment& assignment,
                                 const StructureAlgebra& alg) {
  FreePolynomial out(alg.field());
  std::map<MagmaTerm, FreePolynomial> forms[2];
  for (const auto& [w, c] : mp.words()) {
    FreePolynomial prod = FreePolynomial::constant(c);
    for (const auto& sym : w) {
      auto& cache = forms[sym.side == Side::Left ? 0 : 1];
      auto it = cache.find(sym.subscript);
      if (it == cache.end())
        it = cache
                 .emplace(sym.subscript,
                          linear_form(sym.side, evaluate_term(sym.subscript, assignment, alg)))
                 .first;
      prod = prod * it->second;
      if (prod.is_zero()) break;
    }
    out += prod;
  }
  return out;
}

}  // namespace beck

#endif  // BECK_DERIVE_HPP
