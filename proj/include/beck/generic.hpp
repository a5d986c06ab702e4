#ifndef BECK_GENERIC_HPP
#define BECK_GENERIC_HPP

// Evaluation at a generic point: each variable x is sent to
// sum_i t_{x,i} e_i with commuting formal parameters t, and results are
// polynomials in the parameters with algebra-element coefficients.

#include <cstddef>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "beck/algebra.hpp"
#include "beck/magma.hpp"

namespace beck {

/// Sorted multiset of parameter indices; index = var_position * rank + i.
using ParamMonomial = std::vector<std::uint16_t>;

inline ParamMonomial param_product(const ParamMonomial& a, const ParamMonomial& b) {
  ParamMonomial out;
  out.reserve(a.size() + b.size());
  std::size_t i = 0, j = 0;
  while (i < a.size() || j < b.size()) {
    if (j == b.size() || (i < a.size() && a[i] <= b[j]))
      out.push_back(a[i++]);
    else
      out.push_back(b[j++]);
  }
  return out;
}

/// "t[x,e1]^2*t[y,e3]"; "1" for the empty monomial.
inline std::string param_monomial_to_string(const ParamMonomial& m,
                                            const std::vector<Variable>& vars,
                                            const std::vector<std::string>& basis) {
  if (m.empty()) return "1";
  std::string out;
  const std::size_t n = basis.size();
  for (std::size_t i = 0; i < m.size();) {
    std::size_t j = i;
    while (j < m.size() && m[j] == m[i]) ++j;
    if (!out.empty()) out += "*";
    out += "t[" + vars.at(m[i] / n) + "," + basis.at(m[i] % n) + "]";
    if (j - i > 1) out += "^" + std::to_string(j - i);
    i = j;
  }
  return out;
}

class GenericValue {
 public:
  using Map = std::map<ParamMonomial, AlgebraElement>;

  GenericValue() = default;

  static GenericValue variable(const StructureAlgebra& alg, std::size_t var_position) {
    GenericValue v;
    for (std::size_t i = 0; i < alg.rank(); ++i)
      v.terms_.emplace(ParamMonomial{static_cast<std::uint16_t>(var_position * alg.rank() + i)},
                       alg.basis_element(i));
    return v;
  }

  const Map& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }

  void add_scaled(const Scalar& c, const GenericValue& o) {
    for (const auto& [m, v] : o.terms_) add(m, c * v);
  }

  void add(const ParamMonomial& m, const AlgebraElement& v) {
    if (v.is_zero()) return;
    auto [it, inserted] = terms_.try_emplace(m, v);
    if (!inserted) {
      it->second += v;
      if (it->second.is_zero()) terms_.erase(it);
    }
  }

  static GenericValue multiply(const GenericValue& a, const GenericValue& b,
                               const StructureAlgebra& alg) {
    GenericValue out;
    for (const auto& [ma, va] : a.terms_)
      for (const auto& [mb, vb] : b.terms_) {
        AlgebraElement p = alg.multiply(va, vb);
        if (!p.is_zero()) out.add(param_product(ma, mb), p);
      }
    return out;
  }

 private:
  Map terms_;
};

/// Generic evaluation of magma terms with a per-evaluator memo keyed by term.
class GenericEvaluator {
 public:
  GenericEvaluator(const StructureAlgebra& alg, std::vector<Variable> vars)
      : alg_(alg), vars_(std::move(vars)) {}

  const std::vector<Variable>& variables() const noexcept { return vars_; }

  const GenericValue& evaluate(const MagmaTerm& t) {
    if (auto it = memo_.find(t); it != memo_.end()) return it->second;
    GenericValue v;
    if (t.is_leaf()) {
      std::size_t pos = vars_.size();
      for (std::size_t i = 0; i < vars_.size(); ++i)
        if (vars_[i] == t.name()) pos = i;
      if (pos == vars_.size()) throw UnboundVariable(t.name());
      v = GenericValue::variable(alg_, pos);
    } else {
      const GenericValue l = evaluate(t.left());
      const GenericValue r = evaluate(t.right());
      v = GenericValue::multiply(l, r, alg_);
    }
    return memo_.emplace(t, std::move(v)).first->second;
  }

  GenericValue evaluate(const MagmaPolynomial& p) {
    GenericValue out;
    for (const auto& [t, c] : p.terms()) out.add_scaled(c, evaluate(t));
    return out;
  }

 private:
  const StructureAlgebra& alg_;
  std::vector<Variable> vars_;
  std::map<MagmaTerm, GenericValue> memo_;
};

}  // namespace beck

#endif  // BECK_GENERIC_HPP
