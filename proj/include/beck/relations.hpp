#ifndef BECK_RELATIONS_HPP
#define BECK_RELATIONS_HPP

// Generators of the ideal I in the free algebra on l_1, r_1, ..., l_n, r_n
// whose quotient is the enveloping algebra of a structure algebra in a
// variety. Each derivative d(omega)/dx is evaluated at a generic point and
// every coefficient of the parameter expansion becomes one relation.

#include <algorithm>
#include <cstddef>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "beck/algebra.hpp"
#include "beck/derive.hpp"
#include "beck/free_algebra.hpp"
#include "beck/generic.hpp"
#include "beck/magma.hpp"

namespace beck {

struct Provenance {
  std::size_t equation = 0;  // index into the variety's equation list
  std::string equation_text;
  Variable variable;
  std::string parameter;  // parameter monomial whose coefficient this is
};

struct Relation {
  FreePolynomial poly;
  Provenance origin;
};

struct RelationSet {
  FieldSpec field = FieldSpec::rationals();
  std::size_t rank = 0;  // the algebra rank n; 2n letters
  std::vector<Relation> relations;
  /// Set when the characteristic is below the degree of some variable in
  /// some equation: extracted coefficients may then generate a larger ideal
  /// than pointwise evaluation.
  std::optional<std::string> extraction_warning;

  std::vector<FreePolynomial> polynomials() const {
    std::vector<FreePolynomial> out;
    for (const auto& r : relations) out.push_back(r.poly);
    return out;
  }

  std::size_t max_weight() const {
    std::size_t w = 0;
    for (const auto& r : relations) w = std::max(w, r.poly.weight());
    return w;
  }

  bool is_homogeneous() const {
    for (const auto& r : relations)
      if (!r.poly.is_homogeneous()) return false;
    return true;
  }

  /// Relation count per leading-monomial weight.
  std::map<std::size_t, std::size_t> count_by_weight() const {
    std::map<std::size_t, std::size_t> out;
    for (const auto& r : relations) ++out[r.poly.weight()];
    return out;
  }
};

namespace detail {

using ParamFree = std::map<ParamMonomial, FreePolynomial>;

inline void accumulate(ParamFree& acc, const ParamMonomial& m, const FreePolynomial& p) {
  if (p.is_zero()) return;
  auto [it, inserted] = acc.try_emplace(m, p);
  if (!inserted) {
    it->second += p;
    if (it->second.is_zero()) acc.erase(it);
  }
}

}  // namespace detail

inline RelationSet generate_relations(const std::vector<MagmaPolynomial>& variety,
                                      const StructureAlgebra& alg) {
  RelationSet out;
  out.field = alg.field();
  out.rank = alg.rank();
  const FieldSpec& f = alg.field();

  for (std::size_t e = 0; e < variety.size(); ++e) {
    const MagmaPolynomial& omega = variety[e];
    if (!(omega.field() == f)) throw FieldMismatch(f.to_string(), omega.field().to_string());
    const auto var_set = omega.variables();
    const std::vector<Variable> vars(var_set.begin(), var_set.end());
    GenericEvaluator ev(alg, vars);

    if (!f.is_rationals() && f.characteristic() < omega.max_variable_degree())
      out.extraction_warning = "characteristic " + std::to_string(f.characteristic()) +
                               " is below the degree " +
                               std::to_string(omega.max_variable_degree()) + " of a variable in " +
                               omega.to_string();

    for (const auto& x : vars) {
      const MultPolynomial d = partial(omega, x);
      // Linear forms of generic subscript values, per (side, subscript).
      std::map<std::pair<Side, MagmaTerm>, detail::ParamFree> forms;
      auto form_of = [&](const MultSymbol& sym) -> const detail::ParamFree& {
        const auto key = std::make_pair(sym.side, sym.subscript);
        if (auto it = forms.find(key); it != forms.end()) return it->second;
        detail::ParamFree pf;
        for (const auto& [m, v] : ev.evaluate(sym.subscript).terms())
          detail::accumulate(pf, m, linear_form(sym.side, v));
        return forms.emplace(key, std::move(pf)).first->second;
      };

      detail::ParamFree total;
      for (const auto& [word, c] : d.words()) {
        detail::ParamFree acc;
        acc.emplace(ParamMonomial{}, FreePolynomial::constant(c));
        for (const auto& sym : word) {
          const auto& form = form_of(sym);
          detail::ParamFree next;
          for (const auto& [m1, p1] : acc)
            for (const auto& [m2, p2] : form) detail::accumulate(next, param_product(m1, m2), p1 * p2);
          acc = std::move(next);
          if (acc.empty()) break;
        }
        for (const auto& [m, p] : acc) detail::accumulate(total, m, p);
      }
      for (const auto& [m, p] : total)
        out.relations.push_back(Relation{
            p.monic(),
            Provenance{e, omega.to_string(), x, param_monomial_to_string(m, vars, alg.basis_names())}});
    }
  }
  return out;
}

/// Row reduction: afterwards leading words are distinct, every leading word
/// occurs in no other element, and every element is monic. The span is
/// unchanged. Output is sorted by ascending leading word.
inline std::vector<std::size_t> row_reduce(std::vector<FreePolynomial>& rows) {
  std::vector<FreePolynomial> pivots;
  std::vector<std::size_t> source;  // index of the input row each pivot came from
  std::unordered_map<FreeWord, std::size_t, WordHash> pivot_of;
  for (std::size_t r = 0; r < rows.size(); ++r) {
    FreePolynomial p = std::move(rows[r]);
    // Pivot rows contain no other pivot words, so one pass clears them all.
    std::vector<std::pair<std::size_t, Scalar>> hits;
    for (const auto& t : p.terms())
      if (auto it = pivot_of.find(t.word); it != pivot_of.end()) hits.emplace_back(it->second, t.coeff);
    for (const auto& [k, c] : hits) p.add_scaled(-c, pivots[k]);
    if (p.is_zero()) continue;
    p = p.monic();
    const FreeWord lead = p.leading_word();
    for (auto& q : pivots) {
      const Scalar c = q.coefficient(lead);
      if (!c.is_zero()) q.add_scaled(-c, p);
    }
    pivot_of.emplace(lead, pivots.size());
    pivots.push_back(std::move(p));
    source.push_back(r);
  }
  std::vector<std::size_t> order(pivots.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return WordGreater{}(pivots[b].leading_word(), pivots[a].leading_word());
  });
  rows.clear();
  std::vector<std::size_t> out_source;
  for (std::size_t i : order) {
    rows.push_back(std::move(pivots[i]));
    out_source.push_back(source[i]);
  }
  return out_source;
}

/// Span-preserving linear interreduction of a relation set.
inline RelationSet interreduce_linear(const RelationSet& rs) {
  std::vector<FreePolynomial> rows = rs.polynomials();
  const auto source = row_reduce(rows);
  RelationSet out;
  out.field = rs.field;
  out.rank = rs.rank;
  out.extraction_warning = rs.extraction_warning;
  for (std::size_t i = 0; i < rows.size(); ++i)
    out.relations.push_back(Relation{std::move(rows[i]), rs.relations[source[i]].origin});
  return out;
}

/// One monic polynomial per line, grouped by weight, provenance as trailing
/// comments.
inline std::string export_relations(const RelationSet& rs, bool q_form = false) {
  std::ostringstream os;
  if (rs.extraction_warning) os << "# warning: " << *rs.extraction_warning << "\n";
  std::size_t current = static_cast<std::size_t>(-1);
  for (const auto& r : rs.relations) {
    if (r.poly.weight() != current) {
      current = r.poly.weight();
      os << "# weight " << current << "\n";
    }
    const FreePolynomial shown = q_form ? to_q_basis(r.poly) : r.poly;
    os << shown.to_string(q_form) << "  # eq " << r.origin.equation + 1 << " d/d"
       << r.origin.variable << " [" << r.origin.parameter << "]\n";
  }
  return os.str();
}

/// Reads polynomials one per line; '#' starts a comment.
inline std::vector<FreePolynomial> import_polynomials(const std::string& text,
                                                      const FieldSpec& field) {
  std::vector<FreePolynomial> out;
  std::istringstream is(text);
  std::string line;
  while (std::getline(is, line)) {
    if (auto h = line.find('#'); h != std::string::npos) line.erase(h);
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    out.push_back(parse_free_polynomial(line, field));
  }
  return out;
}

}  // namespace beck

#endif  // BECK_RELATIONS_HPP
