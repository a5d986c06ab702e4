#ifndef BECK_SESSION_HPP
#define BECK_SESSION_HPP

// One configured computation: field, variety, algebra, cap and thread
// count, plus the text and JSON reports the command line tool prints.

#include <cstddef>
#include <cstdint>
#include <fstream>
#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "beck/errors.hpp"
#include "beck/extension.hpp"
#include "beck/groebner.hpp"
#include "beck/identity.hpp"
#include "beck/registry.hpp"
#include "beck/relations.hpp"
#include "beck/varieties.hpp"

namespace beck {

using Json = nlohmann::ordered_json;

struct SessionConfig {
  FieldSpec field = FieldSpec::rationals();
  std::string variety = "alt";
  std::optional<std::string> equation_file;
  std::string algebra = "abelian:2";
  std::optional<std::string> algebra_file;
  std::optional<std::size_t> max_weight;
  unsigned threads = 1;
  bool json = false;
  std::uint64_t seed = 20240601;
  bool q_form = false;
};

struct Variety {
  std::string label;
  std::vector<MagmaPolynomial> equations;
};

inline std::string read_text_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw BadStructureFile("cannot open " + path);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

inline Variety resolve_variety(const SessionConfig& cfg) {
  if (cfg.equation_file)
    return Variety{"file:" + *cfg.equation_file, parse_equation_list(read_text_file(*cfg.equation_file), cfg.field)};
  return Variety{cfg.variety, builtin_variety(cfg.variety, cfg.field)};
}

inline StructureAlgebra resolve_algebra(const SessionConfig& cfg) {
  if (cfg.algebra_file) return load_structure_file(*cfg.algebra_file, cfg.field);
  return builtin_algebra(cfg.algebra, cfg.field);
}

inline std::size_t effective_max_weight(const SessionConfig& cfg, std::size_t rank) {
  const std::size_t w = cfg.max_weight.value_or(2 * rank + 2);
  if (w < 2) throw CapTooSmall(static_cast<int>(w), 2);
  return w;
}

struct Computation {
  Variety variety;
  StructureAlgebra algebra;
  RelationSet relations;  // interreduced
  std::optional<GroebnerState> state;
};

inline Computation prepare(const SessionConfig& cfg) {
  Variety v = resolve_variety(cfg);
  StructureAlgebra alg = resolve_algebra(cfg);
  RelationSet rs = interreduce_linear(generate_relations(v.equations, alg));
  return Computation{std::move(v), std::move(alg), std::move(rs), std::nullopt};
}

inline Computation run_groebner(const SessionConfig& cfg) {
  Computation c = prepare(cfg);
  c.state = complete(c.relations, MonomialOrder::standard(c.algebra.rank()),
                     effective_max_weight(cfg, c.algebra.rank()), cfg.threads);
  return c;
}

namespace detail {

inline Json header_json(const SessionConfig& cfg, const Computation& c) {
  Json j;
  j["field"] = cfg.field.to_string();
  j["variety"] = c.variety.label;
  j["algebra"] = c.algebra.name();
  j["rank"] = c.algebra.rank();
  return j;
}

inline Json poly_json(const FreePolynomial& p, bool q_form) {
  return q_form ? to_q_basis(p).to_string(true) : p.to_string();
}

}  // namespace detail

inline Json relations_json(const SessionConfig& cfg, const Computation& c) {
  Json j = detail::header_json(cfg, c);
  if (c.relations.extraction_warning) j["warning"] = *c.relations.extraction_warning;
  Json list = Json::array();
  for (const auto& r : c.relations.relations) {
    Json e;
    e["weight"] = r.poly.weight();
    e["polynomial"] = detail::poly_json(r.poly, cfg.q_form);
    e["equation"] = r.origin.equation_text;
    e["variable"] = r.origin.variable;
    e["parameter"] = r.origin.parameter;
    list.push_back(std::move(e));
  }
  j["relations"] = std::move(list);
  return j;
}

inline std::string relations_text(const SessionConfig& cfg, const Computation& c) {
  std::ostringstream os;
  os << "# " << c.relations.relations.size() << " relations, variety " << c.variety.label << ", algebra "
     << c.algebra.name() << ", field " << cfg.field.to_string() << "\n";
  os << export_relations(c.relations, cfg.q_form);
  return os.str();
}

inline Json poincare_json(const PoincareSeries& ps) {
  Json j;
  Json counts = Json::array();
  for (const auto& x : ps.counts) counts.push_back(x.get_str());
  j["counts"] = std::move(counts);
  j["total"] = ps.total().get_str();
  j["polynomial"] = ps.polynomial_string();
  if (ps.finite_certificate)
    j["finite_from_weight"] = *ps.finite_certificate;
  else
    j["finite_from_weight"] = nullptr;
  j["certificate"] = ps.certificate_string();
  return j;
}

inline Json certificate_json(const GroebnerState& st) {
  Json j;
  j["max_weight"] = st.truncation_weight().value_or(0);
  j["complete"] = st.is_complete();
  j["complete_below"] = st.complete_below();
  j["homogeneous"] = st.is_homogeneous();
  j["discarded_overlaps"] = st.discarded();
  return j;
}

inline std::string poincare_text(const PoincareSeries& ps) {
  return ps.polynomial_string() + "\ntotal " + ps.total().get_str() + "\n" + ps.certificate_string() + "\n";
}

inline Json groebner_json(const SessionConfig& cfg, const Computation& c) {
  const GroebnerState& st = *c.state;
  Json j = detail::header_json(cfg, c);
  j["certificate"] = certificate_json(st);
  Json basis = Json::array();
  for (const auto& p : st.basis()) basis.push_back(detail::poly_json(p, cfg.q_form));
  j["basis"] = std::move(basis);
  j["poincare"] = poincare_json(poincare(st));
  return j;
}

inline std::string groebner_text(const SessionConfig& cfg, const Computation& c) {
  const GroebnerState& st = *c.state;
  std::ostringstream os;
  os << "# basis of " << st.size() << " elements, variety " << c.variety.label << ", algebra " << c.algebra.name()
     << ", field " << cfg.field.to_string() << "\n";
  std::size_t current = static_cast<std::size_t>(-1);
  for (const auto& p : st.basis()) {
    if (p.weight() != current) {
      current = p.weight();
      os << "# weight " << current << "\n";
    }
    os << (cfg.q_form ? to_q_basis(p).to_string(true) : p.to_string()) << "\n";
  }
  os << poincare_text(poincare(st));
  return os.str();
}

/// Normal words of one weight, or of every weight up to the finite level or
/// the certified limit.
inline std::vector<std::pair<std::size_t, std::vector<FreeWord>>> normal_listing(const GroebnerState& st,
                                                                                 std::optional<std::size_t> weight) {
  std::vector<std::pair<std::size_t, std::vector<FreeWord>>> out;
  if (weight) {
    out.emplace_back(*weight, normal_monomials(st, *weight));
    return out;
  }
  const PoincareSeries ps = poincare(st);
  for (std::size_t w = 0; w < ps.counts.size(); ++w) out.emplace_back(w, normal_monomials(st, w));
  return out;
}

inline Json normal_json(const SessionConfig& cfg, const Computation& c, std::optional<std::size_t> weight) {
  Json j = detail::header_json(cfg, c);
  Json levels = Json::array();
  for (const auto& [w, words] : normal_listing(*c.state, weight)) {
    Json level;
    level["weight"] = w;
    Json list = Json::array();
    for (const auto& word : words) list.push_back(word.to_string());
    level["words"] = std::move(list);
    levels.push_back(std::move(level));
  }
  j["normal_words"] = std::move(levels);
  return j;
}

inline std::string normal_text(const Computation& c, std::optional<std::size_t> weight) {
  std::ostringstream os;
  for (const auto& [w, words] : normal_listing(*c.state, weight)) {
    os << "# weight " << w << ": " << words.size() << "\n";
    for (const auto& word : words) os << word.to_string() << "\n";
  }
  return os.str();
}

struct CheckOutcome {
  std::string equation;
  SatisfactionReport report;
};

inline std::vector<CheckOutcome> run_check(const Variety& v, const StructureAlgebra& alg) {
  std::vector<CheckOutcome> out;
  for (const auto& eq : v.equations) out.push_back(CheckOutcome{eq.to_string(), check_identity(alg, eq)});
  return out;
}

inline std::string assignment_to_string(const Assignment& a, const StructureAlgebra& alg) {
  std::string out;
  for (const auto& [var, value] : a) {
    if (!out.empty()) out += ", ";
    out += var + " = " + alg.element_to_string(value);
  }
  return out;
}

inline Json check_json(const SessionConfig& cfg, const Variety& v, const StructureAlgebra& alg,
                       const std::vector<CheckOutcome>& outcomes) {
  Json j;
  j["field"] = cfg.field.to_string();
  j["variety"] = v.label;
  j["algebra"] = alg.name();
  Json list = Json::array();
  bool all = true;
  for (const auto& o : outcomes) {
    Json e;
    e["equation"] = o.equation;
    e["holds"] = o.report.holds();
    all = all && o.report.holds();
    if (o.report.witness) e["generic_witness"] = o.report.witness->description;
    if (o.report.counterexample) {
      e["counterexample"] = assignment_to_string(*o.report.counterexample, alg);
      e["value"] = alg.element_to_string(o.report.counterexample_value);
    }
    list.push_back(std::move(e));
  }
  j["equations"] = std::move(list);
  j["satisfied"] = all;
  return j;
}

inline std::string check_text(const Variety& v, const StructureAlgebra& alg, const std::vector<CheckOutcome>& outcomes) {
  std::ostringstream os;
  bool all = true;
  for (const auto& o : outcomes) {
    all = all && o.report.holds();
    os << (o.report.holds() ? "PASS  " : "FAIL  ") << o.equation << "\n";
    if (o.report.witness) os << "      generic: " << o.report.witness->description << "\n";
    if (o.report.counterexample)
      os << "      witness: " << assignment_to_string(*o.report.counterexample, alg) << " gives "
         << alg.element_to_string(o.report.counterexample_value) << "\n";
  }
  os << (all ? "PASS" : "FAIL") << " " << alg.name() << " in " << v.label << "\n";
  return os.str();
}

/// Alternative enveloping algebra of abelian K^n, wrapped for the extension.
inline std::shared_ptr<const ExtensionContext> dorofeev_context(std::size_t n, const FieldSpec& field,
                                                               unsigned threads = 1) {
  StructureAlgebra alg = StructureAlgebra::abelian(field, n);
  RelationSet rs = interreduce_linear(generate_relations(builtin_variety("alt", field), alg));
  GroebnerState st = complete(rs, MonomialOrder::standard(n), 2 * n + 2, threads);
  return ExtensionContext::create(std::move(alg), std::move(st));
}

/// The reproduction table: one line per computed quantity, stable text.
inline std::vector<std::string> repro_lines(unsigned threads = 1) {
  std::vector<std::string> out;
  auto series = [&](const std::string& variety, const std::string& algebra, const FieldSpec& f) {
    SessionConfig cfg;
    cfg.field = f;
    cfg.variety = variety;
    cfg.algebra = algebra;
    cfg.threads = threads;
    const Computation c = run_groebner(cfg);
    const PoincareSeries ps = poincare(*c.state);
    out.push_back(variety + " " + algebra + " " + f.to_string() + ": " + ps.polynomial_string() + " | total " +
                  ps.total().get_str() + " | " + ps.certificate_string());
  };
  const std::vector<FieldSpec> fields = {FieldSpec::rationals(), FieldSpec::prime(2), FieldSpec::prime(3)};
  for (const auto& f : fields)
    for (int n = 1; n <= 5; ++n) series("alt", "abelian:" + std::to_string(n), f);
  series("alt", "complex", FieldSpec::rationals());
  series("alt", "complex", FieldSpec::prime(3));
  series("alt", "quaternion", FieldSpec::rationals());
  series("alt", "octonion", FieldSpec::rationals());
  series("alt", "octonion", FieldSpec::prime(3));
  series("alt", "octonion", FieldSpec::prime(2));
  series("triv", "abelian:3", FieldSpec::rationals());
  series("ass", "abelian:2", FieldSpec::rationals());
  series("ass", "quaternion", FieldSpec::rationals());

  auto verdict = [&](const std::string& variety, const std::string& algebra) {
    const FieldSpec q = FieldSpec::rationals();
    const StructureAlgebra alg = builtin_algebra(algebra, q);
    const Variety v{variety, builtin_variety(variety, q)};
    std::string line = "check " + variety + " " + algebra + ":";
    for (const auto& o : run_check(v, alg)) {
      line += o.report.holds() ? " PASS" : " FAIL";
      if (o.report.counterexample) line += " [" + assignment_to_string(*o.report.counterexample, alg) + "]";
    }
    out.push_back(line);
  };
  verdict("leftalt", "magma3");
  verdict("alt", "octonion");
  verdict("ass", "octonion");
  verdict("ass", "quaternion");

  for (std::size_t n = 2; n <= 6; ++n)
    out.push_back("dorofeev " + std::to_string(n) + ": " +
                  dorofeev_witness(n, *dorofeev_context(n, FieldSpec::rationals(), threads)).to_string());
  return out;
}

}  // namespace beck

#endif  // BECK_SESSION_HPP
