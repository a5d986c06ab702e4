#ifndef BECK_IDENTITY_HPP
#define BECK_IDENTITY_HPP

#include <optional>
#include <string>
#include <vector>

#include "beck/algebra.hpp"
#include "beck/generic.hpp"
#include "beck/magma.hpp"

namespace beck {

struct SatisfactionReport {
  enum class Verdict { HoldsIdentically, Fails };

  struct Witness {
    ParamMonomial monomial;
    AlgebraElement coefficient;  // nonzero
    std::string description;     // "t[x,a]^2*t[y,c] -> a + b"
  };

  Verdict verdict = Verdict::HoldsIdentically;
  std::optional<Witness> witness;
  std::optional<Assignment> counterexample;
  AlgebraElement counterexample_value = AlgebraElement(FieldSpec::rationals(), 0);

  bool holds() const noexcept { return verdict == Verdict::HoldsIdentically; }
};

namespace detail {

// Candidate values for concrete counterexamples: basis vectors, then sums of
// two distinct basis vectors.
inline std::vector<AlgebraElement> witness_candidates(const StructureAlgebra& alg) {
  std::vector<AlgebraElement> out;
  for (std::size_t i = 0; i < alg.rank(); ++i) out.push_back(alg.basis_element(i));
  for (std::size_t i = 0; i < alg.rank(); ++i)
    for (std::size_t j = i + 1; j < alg.rank(); ++j)
      out.push_back(alg.basis_element(i) + alg.basis_element(j));
  return out;
}

inline std::optional<Assignment> search_counterexample(const StructureAlgebra& alg,
                                                       const MagmaPolynomial& eq,
                                                       const std::vector<Variable>& vars) {
  const auto candidates = witness_candidates(alg);
  if (candidates.empty()) return std::nullopt;
  // Odometer over candidates^vars with the first variable varying slowest;
  // capped so large algebras stay cheap.
  std::vector<std::size_t> idx(vars.size(), 0);
  for (std::size_t tries = 0; tries < 200000; ++tries) {
    Assignment a;
    for (std::size_t v = 0; v < vars.size(); ++v) a.emplace(vars[v], candidates[idx[v]]);
    if (!evaluate_term(eq, a, alg).is_zero()) return a;
    std::size_t v = vars.size();
    while (v > 0) {
      --v;
      if (++idx[v] < candidates.size()) break;
      idx[v] = 0;
      if (v == 0) return std::nullopt;
    }
    if (vars.empty()) return std::nullopt;
  }
  return std::nullopt;
}

}  // namespace detail

/// Decides whether `alg` satisfies `eq` by expansion at a generic point.
inline SatisfactionReport check_identity(const StructureAlgebra& alg, const MagmaPolynomial& eq) {
  const auto var_set = eq.variables();
  const std::vector<Variable> vars(var_set.begin(), var_set.end());
  GenericEvaluator ev(alg, vars);
  const GenericValue value = ev.evaluate(eq);

  SatisfactionReport report;
  if (value.is_zero()) return report;

  report.verdict = SatisfactionReport::Verdict::Fails;
  const auto& [mono, coeff] = *value.terms().begin();
  report.witness = SatisfactionReport::Witness{
      mono, coeff,
      param_monomial_to_string(mono, vars, alg.basis_names()) + " -> " +
          alg.element_to_string(coeff)};
  if (auto a = detail::search_counterexample(alg, eq, vars)) {
    report.counterexample_value = evaluate_term(eq, *a, alg);
    report.counterexample = std::move(a);
  }
  return report;
}

/// True iff every equation holds identically.
inline bool satisfies_all(const StructureAlgebra& alg, const std::vector<MagmaPolynomial>& eqs) {
  for (const auto& eq : eqs)
    if (!check_identity(alg, eq).holds()) return false;
  return true;
}

}  // namespace beck

#endif  // BECK_IDENTITY_HPP
