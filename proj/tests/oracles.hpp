#ifndef BECK_TESTS_ORACLES_HPP
#define BECK_TESTS_ORACLES_HPP

// Reference computations that avoid the engine's generic expansion,
// derivative machinery and Groebner code. Words are strings of letter codes
// l_i -> 2(i-1), r_i -> 2(i-1)+1.

#include <cstddef>
#include <functional>
#include <map>
#include <random>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "beck/algebra.hpp"
#include "beck/magma.hpp"
#include "beck/scalar.hpp"

namespace oracle {

using beck::AlgebraElement;
using beck::FieldSpec;
using beck::MagmaPolynomial;
using beck::MagmaTerm;
using beck::Scalar;
using beck::StructureAlgebra;
using beck::Variable;

using Word = std::string;

struct Greater {
  bool operator()(const Word& a, const Word& b) const {
    if (a.size() != b.size()) return a.size() > b.size();
    return a < b;
  }
};

using Vec = std::map<Word, Scalar, Greater>;

inline void axpy(Vec& v, const Scalar& c, const Vec& w) {
  for (const auto& [k, x] : w) {
    auto [it, fresh] = v.try_emplace(k, c * x);
    if (!fresh) {
      it->second += c * x;
      if (it->second.is_zero()) v.erase(it);
    }
  }
}

inline char letter(bool right, std::size_t i) { return static_cast<char>(2 * i + (right ? 1 : 0)); }

// A + M with M free on all words: (a, m)(b, n) = (ab, m r_b + n l_a).
struct Point {
  AlgebraElement a;
  Vec m;
};

inline Vec act(const Vec& m, const AlgebraElement& b, bool right) {
  Vec out;
  for (const auto& [w, c] : m)
    for (std::size_t i = 0; i < b.rank(); ++i)
      if (!b[i].is_zero()) axpy(out, c * b[i], Vec{{w + letter(right, i), Scalar::one(c.field())}});
  return out;
}

inline Point multiply(const StructureAlgebra& A, const Point& u, const Point& v) {
  Point p{A.multiply(u.a, v.a), act(u.m, v.a, true)};
  axpy(p.m, Scalar::one(A.field()), act(v.m, u.a, false));
  return p;
}

inline Point evaluate(const StructureAlgebra& A, const MagmaTerm& t, const std::map<Variable, Point>& at) {
  if (t.is_leaf()) return at.at(t.name());
  return multiply(A, evaluate(A, t.left(), at), evaluate(A, t.right(), at));
}

inline Point evaluate(const StructureAlgebra& A, const MagmaPolynomial& p, const std::map<Variable, Point>& at) {
  Point out{A.zero(), {}};
  for (const auto& [t, c] : p.terms()) {
    Point v = evaluate(A, t, at);
    v.a *= c;
    out.a += v.a;
    axpy(out.m, c, v.m);
  }
  return out;
}

/// d(omega)/dx evaluated at `values`, as a polynomial in the letters.
inline Vec derivative_at(const StructureAlgebra& A, const MagmaPolynomial& omega, const Variable& x,
                         const std::map<Variable, AlgebraElement>& values) {
  std::map<Variable, Point> at;
  for (const auto& [v, a] : values) {
    Point p{a, {}};
    if (v == x) p.m.emplace(Word(), Scalar::one(A.field()));
    at.emplace(v, std::move(p));
  }
  return evaluate(A, omega, at).m;
}

template <class Rng>
AlgebraElement random_element(const StructureAlgebra& A, Rng& rng, long long range = 7) {
  std::vector<Scalar> c;
  for (std::size_t i = 0; i < A.rank(); ++i) c.push_back(Scalar::random(A.field(), rng, range));
  return AlgebraElement(A.field(), std::move(c));
}

/// Row echelon form keyed by leading word.
class Echelon {
 public:
  /// Returns true when v was independent of the rows so far.
  bool add(Vec v) {
    reduce_head(v);
    if (v.empty()) return false;
    const Scalar inv = v.begin()->second.inv();
    for (auto& [w, c] : v) c *= inv;
    const Word lead = v.begin()->first;
    rows_.emplace(lead, std::move(v));
    return true;
  }

  bool contains(Vec v) const {
    reduce_head(v);
    return v.empty();
  }

  std::size_t rank() const { return rows_.size(); }

  std::map<std::size_t, std::size_t> pivots_by_weight() const {
    std::map<std::size_t, std::size_t> out;
    for (const auto& [w, r] : rows_) ++out[w.size()];
    return out;
  }

 private:
  void reduce_head(Vec& v) const {
    while (!v.empty()) {
      auto it = rows_.find(v.begin()->first);
      if (it == rows_.end()) return;
      const Scalar c = -v.begin()->second;
      axpy(v, c, it->second);
    }
  }

  std::map<Word, Vec, Greater> rows_;
};

inline std::vector<Word> all_words(std::size_t letters, std::size_t length) {
  std::vector<Word> out{Word()};
  for (std::size_t k = 0; k < length; ++k) {
    std::vector<Word> next;
    for (const auto& w : out)
      for (std::size_t c = 0; c < letters; ++c) next.push_back(w + static_cast<char>(c));
    out = std::move(next);
  }
  return out;
}

/// Ideal generators spanned pointwise: d(omega)/dx at many random points.
inline Echelon relation_span(const StructureAlgebra& A, const std::vector<MagmaPolynomial>& eqs, std::size_t points,
                             unsigned seed = 7) {
  std::mt19937_64 rng(seed);
  Echelon e;
  for (const auto& omega : eqs) {
    const auto vars = omega.variables();
    for (std::size_t p = 0; p < points; ++p) {
      std::map<Variable, AlgebraElement> values;
      for (const auto& v : vars) values.emplace(v, random_element(A, rng));
      for (const auto& x : vars) e.add(derivative_at(A, omega, x, values));
    }
  }
  return e;
}

/// Quotient dimension per weight 0..report of the free algebra on
/// `letters` letters by the ideal generated by `gens`, from the span of all
/// u g v of weight at most `depth`. Exact once `depth` is large enough; for
/// homogeneous generators depth = report suffices.
inline std::vector<std::size_t> quotient_dims(const std::vector<Vec>& gens, std::size_t letters, std::size_t report,
                                              std::size_t depth) {
  Echelon e;
  std::vector<std::vector<Word>> words(depth + 1);
  for (std::size_t k = 0; k <= depth; ++k) words[k] = all_words(letters, k);
  for (const auto& g : gens) {
    if (g.empty()) continue;
    const std::size_t gw = g.begin()->first.size();
    for (std::size_t total = gw; total <= depth; ++total)
      for (std::size_t lu = 0; lu <= total - gw; ++lu)
        for (const auto& u : words[lu])
          for (const auto& v : words[total - gw - lu]) {
            Vec row;
            for (const auto& [w, c] : g) row.emplace(u + w + v, c);
            e.add(std::move(row));
          }
  }
  const auto piv = e.pivots_by_weight();
  std::vector<std::size_t> out;
  std::size_t free_count = 1;
  for (std::size_t w = 0; w <= report; ++w) {
    const auto it = piv.find(w);
    out.push_back(free_count - (it == piv.end() ? 0 : it->second));
    free_count *= letters;
  }
  return out;
}

/// Closed form d(x^{(k})/dx = sum_{j=0}^{k-2} L[x^{(k-1-j}] R[x]^j + R[x]^{k-1},
/// as (symbol list) words; symbol = (right?, subscript).
using Symbol = std::pair<bool, MagmaTerm>;
using SymbolWord = std::vector<Symbol>;

inline std::vector<SymbolWord> left_power_derivative(const Variable& x, std::size_t k) {
  std::vector<SymbolWord> out;
  const MagmaTerm leaf = MagmaTerm::leaf(x);
  for (std::size_t j = 0; j + 2 <= k; ++j) {
    SymbolWord w{{false, MagmaTerm::left_power(x, k - 1 - j)}};
    for (std::size_t r = 0; r < j; ++r) w.push_back({true, leaf});
    out.push_back(w);
  }
  SymbolWord last;
  for (std::size_t r = 0; r + 1 < k; ++r) last.push_back({true, leaf});
  out.push_back(last);
  return out;
}

/// Closed form d(x^{k)})/dx = sum_{j=0}^{k-2} R[x^{k-1-j)}] L[x]^j + L[x]^{k-1}.
inline std::vector<SymbolWord> right_power_derivative(const Variable& x, std::size_t k) {
  std::vector<SymbolWord> out;
  const MagmaTerm leaf = MagmaTerm::leaf(x);
  for (std::size_t j = 0; j + 2 <= k; ++j) {
    SymbolWord w{{true, MagmaTerm::right_power(x, k - 1 - j)}};
    for (std::size_t r = 0; r < j; ++r) w.push_back({false, leaf});
    out.push_back(w);
  }
  SymbolWord last;
  for (std::size_t r = 0; r + 1 < k; ++r) last.push_back({false, leaf});
  out.push_back(last);
  return out;
}

inline mpz_class binomial(unsigned long n, unsigned long k) {
  mpz_class r;
  mpz_bin_uiui(r.get_mpz_t(), n, k);
  return r;
}

}  // namespace oracle

#endif  // BECK_TESTS_ORACLES_HPP
