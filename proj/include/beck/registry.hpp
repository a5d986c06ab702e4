#ifndef BECK_REGISTRY_HPP
#define BECK_REGISTRY_HPP

// Built-in algebras and the two JSON file formats:
//
//   structure constants: { "field": "Q" | "Fp:<p>", "basis": ["e1", ...],
//                          "table": [[[c, ...], ...], ...] }
//     table[i][j] lists the coordinates of e_i * e_j; entries are integers or
//     strings such as "-3/2".
//
//   magma table:         { "elements": ["a", ...], "table": [[k, ...], ...] }
//     table[i][j] is the index of the product of elements i and j.

#include <array>
#include <cstddef>
#include <fstream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "beck/algebra.hpp"
#include "beck/errors.hpp"
#include "beck/scalar.hpp"

namespace beck {

/// A finite set with a total binary operation, by element index.
struct MagmaTable {
  std::vector<std::string> elements;
  std::vector<std::vector<std::size_t>> table;
};

/// Linear extension of a magma table: e_s * e_t = e_{s t}.
inline StructureAlgebra ks_linearize(const MagmaTable& m, const FieldSpec& field,
                                     std::string name = "magma") {
  const std::size_t n = m.elements.size();
  if (m.table.size() != n) throw BadStructureFile("magma table has wrong number of rows");
  std::vector<std::vector<AlgebraElement>> table(n);
  for (std::size_t i = 0; i < n; ++i) {
    if (m.table[i].size() != n) throw BadStructureFile("magma table row has wrong length");
    for (std::size_t j = 0; j < n; ++j) {
      const std::size_t k = m.table[i][j];
      if (k >= n) throw BadStructureFile("magma table entry out of range");
      table[i].push_back(AlgebraElement::unit_vector(field, n, k));
    }
  }
  return StructureAlgebra(field, m.elements, table, std::move(name));
}

/// The commutative three-element magma on {a, b, c} whose linearization is
/// not alternative.
inline MagmaTable three_element_magma() {
  return MagmaTable{{"a", "b", "c"}, {{0, 0, 2}, {0, 1, 1}, {2, 1, 2}}};
}

namespace detail {

inline std::vector<std::vector<AlgebraElement>> empty_table(const FieldSpec& f, std::size_t n) {
  return std::vector<std::vector<AlgebraElement>>(n,
                                                  std::vector<AlgebraElement>(n, AlgebraElement(f, n)));
}

// Unital algebra with basis 1, u_1, ..., u_m where u_a u_b is given by
// `imag(a, b)` as (sign, index) with index 0 meaning the unit.
template <class F>
StructureAlgebra unital_from_rule(const FieldSpec& f, std::vector<std::string> names,
                                  std::string label, F imag) {
  const std::size_t n = names.size();
  auto table = empty_table(f, n);
  for (std::size_t i = 0; i < n; ++i) {
    table[0][i] = AlgebraElement::unit_vector(f, n, i);
    table[i][0] = AlgebraElement::unit_vector(f, n, i);
  }
  for (std::size_t a = 1; a < n; ++a)
    for (std::size_t b = 1; b < n; ++b) {
      const auto [sign, k] = imag(a, b);
      table[a][b] = AlgebraElement::unit_vector(f, n, k);
      if (sign < 0) table[a][b] *= Scalar::from_int(f, -1);
    }
  return StructureAlgebra(f, std::move(names), table, std::move(label));
}

}  // namespace detail

/// K[i]/(i^2 + 1) with basis 1, i.
inline StructureAlgebra complex_algebra(const FieldSpec& f) {
  return detail::unital_from_rule(f, {"1", "i"}, "complex", [](std::size_t, std::size_t) {
    return std::pair<int, std::size_t>{-1, 0};
  });
}

/// Basis 1, i, j, k with i^2 = j^2 = -1, ij = -ji = k.
inline StructureAlgebra quaternion_algebra(const FieldSpec& f) {
  // Row a, column b: (sign, index) of u_a u_b for u = (i, j, k).
  static constexpr std::array<std::array<std::pair<int, std::size_t>, 3>, 3> rule = {{
      {{{-1, 0}, {1, 3}, {-1, 2}}},
      {{{-1, 3}, {-1, 0}, {1, 1}}},
      {{{1, 2}, {-1, 1}, {-1, 0}}},
  }};
  return detail::unital_from_rule(f, {"1", "i", "j", "k"}, "quaternion",
                                  [](std::size_t a, std::size_t b) { return rule[a - 1][b - 1]; });
}

/// The octonion triples e_a e_b = e_c (indices 1..7); each triple is read
/// cyclically, and reversing the order of a product flips the sign.
inline const std::array<std::array<std::size_t, 3>, 7>& octonion_triples() {
  static constexpr std::array<std::array<std::size_t, 3>, 7> triples = {{
      {1, 2, 3}, {1, 4, 5}, {1, 7, 6}, {2, 4, 6}, {2, 5, 7}, {3, 4, 7}, {3, 6, 5},
  }};
  return triples;
}

/// Basis 1, e1, ..., e7 with e_a^2 = -1 and the products from
/// octonion_triples().
inline StructureAlgebra octonion_algebra(const FieldSpec& f) {
  std::array<std::array<std::pair<int, std::size_t>, 8>, 8> rule{};
  for (std::size_t a = 1; a < 8; ++a) rule[a][a] = {-1, 0};
  for (const auto& t : octonion_triples())
    for (int rot = 0; rot < 3; ++rot) {
      const std::size_t a = t[rot], b = t[(rot + 1) % 3], c = t[(rot + 2) % 3];
      rule[a][b] = {1, c};
      rule[b][a] = {-1, c};
    }
  return detail::unital_from_rule(f, {"1", "e1", "e2", "e3", "e4", "e5", "e6", "e7"}, "octonion",
                                  [rule](std::size_t a, std::size_t b) { return rule[a][b]; });
}

namespace detail {

inline nlohmann::json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw BadStructureFile("cannot open " + path);
  try {
    return nlohmann::json::parse(in);
  } catch (const nlohmann::json::exception& e) {
    throw BadStructureFile(path + ": " + e.what());
  }
}

inline Scalar json_scalar(const nlohmann::json& v, const FieldSpec& f) {
  if (v.is_number_integer()) return Scalar::from_int(f, v.get<long long>());
  if (v.is_string()) {
    const std::string s = v.get<std::string>();
    try {
      const auto slash = s.find('/');
      if (slash == std::string::npos) return Scalar::from_mpz(f, mpz_class(s));
      return Scalar::from_rational(f, mpz_class(s.substr(0, slash)), mpz_class(s.substr(slash + 1)));
    } catch (const std::invalid_argument&) {
      throw BadStructureFile("bad coefficient \"" + s + "\"");
    } catch (const DivisionByZero&) {
      throw BadStructureFile("bad coefficient \"" + s + "\"");
    }
  }
  throw BadStructureFile("coefficient must be an integer or a string");
}

}  // namespace detail

/// Parses a structure-constants document. If `session` is given, the file's
/// field must agree with it.
inline StructureAlgebra structure_from_json(const nlohmann::json& doc,
                                            std::optional<FieldSpec> session = std::nullopt,
                                            std::string label = "file") {
  if (!doc.is_object()) throw BadStructureFile("top level must be an object");
  FieldSpec field = session.value_or(FieldSpec::rationals());
  if (doc.contains("field")) {
    if (!doc["field"].is_string()) throw BadStructureFile("\"field\" must be a string");
    try {
      field = FieldSpec::parse(doc["field"].get<std::string>());
    } catch (const BadFieldSpec& e) {
      throw BadStructureFile(e.what());
    }
    if (session && !(*session == field))
      throw FieldMismatch(session->to_string(), field.to_string());
  }
  if (!doc.contains("basis") || !doc["basis"].is_array())
    throw BadStructureFile("missing \"basis\" array");
  std::vector<std::string> basis;
  for (const auto& b : doc["basis"]) {
    if (!b.is_string()) throw BadStructureFile("basis names must be strings");
    basis.push_back(b.get<std::string>());
  }
  const std::size_t n = basis.size();
  if (!doc.contains("table") || !doc["table"].is_array() || doc["table"].size() != n)
    throw BadStructureFile("\"table\" must have one row per basis element");
  std::vector<std::vector<AlgebraElement>> table(n);
  for (std::size_t i = 0; i < n; ++i) {
    const auto& row = doc["table"][i];
    if (!row.is_array() || row.size() != n) throw BadStructureFile("table row has wrong length");
    for (std::size_t j = 0; j < n; ++j) {
      const auto& entry = row[j];
      if (!entry.is_array() || entry.size() != n)
        throw BadStructureFile("table entry must list " + std::to_string(n) + " coordinates");
      std::vector<Scalar> coords;
      for (const auto& c : entry) coords.push_back(detail::json_scalar(c, field));
      table[i].emplace_back(field, std::move(coords));
    }
  }
  return StructureAlgebra(field, std::move(basis), table, std::move(label));
}

inline nlohmann::json structure_to_json(const StructureAlgebra& alg) {
  nlohmann::json doc;
  doc["field"] = alg.field().to_string();
  doc["basis"] = alg.basis_names();
  nlohmann::json table = nlohmann::json::array();
  for (std::size_t i = 0; i < alg.rank(); ++i) {
    nlohmann::json row = nlohmann::json::array();
    for (std::size_t j = 0; j < alg.rank(); ++j) {
      nlohmann::json entry = nlohmann::json::array();
      for (const auto& c : alg.basis_product(i, j).coords()) entry.push_back(c.to_string());
      row.push_back(entry);
    }
    table.push_back(row);
  }
  doc["table"] = table;
  return doc;
}

inline MagmaTable magma_table_from_json(const nlohmann::json& doc) {
  if (!doc.is_object() || !doc.contains("elements") || !doc["elements"].is_array())
    throw BadStructureFile("missing \"elements\" array");
  MagmaTable m;
  for (const auto& e : doc["elements"]) {
    if (!e.is_string()) throw BadStructureFile("element names must be strings");
    m.elements.push_back(e.get<std::string>());
  }
  const std::size_t n = m.elements.size();
  if (!doc.contains("table") || !doc["table"].is_array() || doc["table"].size() != n)
    throw BadStructureFile("\"table\" must have one row per element");
  for (const auto& row : doc["table"]) {
    if (!row.is_array() || row.size() != n) throw BadStructureFile("table row has wrong length");
    std::vector<std::size_t> r;
    for (const auto& k : row) {
      if (!k.is_number_unsigned() || k.get<std::size_t>() >= n)
        throw BadStructureFile("table entries must be element indices");
      r.push_back(k.get<std::size_t>());
    }
    m.table.push_back(std::move(r));
  }
  return m;
}

inline StructureAlgebra load_structure_file(const std::string& path,
                                            std::optional<FieldSpec> session = std::nullopt) {
  return structure_from_json(detail::read_json_file(path), session, "file:" + path);
}

inline StructureAlgebra load_magma_file(const std::string& path, const FieldSpec& field) {
  return ks_linearize(magma_table_from_json(detail::read_json_file(path)), field, "magma:" + path);
}

/// Resolves "abelian:<n>", "complex", "quaternion", "octonion", "magma3",
/// "file:<path>" and "magma:<path>".
inline StructureAlgebra builtin_algebra(const std::string& name, const FieldSpec& field) {
  if (name.rfind("abelian:", 0) == 0) {
    const std::string digits = name.substr(8);
    if (digits.empty() || digits.size() > 4 ||
        digits.find_first_not_of("0123456789") != std::string::npos)
      throw UnknownAlgebra(name);
    return StructureAlgebra::abelian(field, std::stoul(digits));
  }
  if (name == "complex") return complex_algebra(field);
  if (name == "quaternion") return quaternion_algebra(field);
  if (name == "octonion") return octonion_algebra(field);
  if (name == "magma3") return ks_linearize(three_element_magma(), field, "magma3");
  if (name.rfind("file:", 0) == 0) return load_structure_file(name.substr(5), field);
  if (name.rfind("magma:", 0) == 0) return load_magma_file(name.substr(6), field);
  throw UnknownAlgebra(name);
}

}  // namespace beck

#endif  // BECK_REGISTRY_HPP
