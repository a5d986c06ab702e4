#ifndef BECK_ALGEBRA_HPP
#define BECK_ALGEBRA_HPP

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "beck/errors.hpp"
#include "beck/scalar.hpp"

namespace beck {

/// Coordinate vector with respect to the basis of a StructureAlgebra.
class AlgebraElement {
 public:
  AlgebraElement(const FieldSpec& field, std::size_t rank)
      : coords_(rank, Scalar::zero(field)), field_(field) {}
  AlgebraElement(const FieldSpec& field, std::vector<Scalar> coords)
      : coords_(std::move(coords)), field_(field) {
    for (const auto& c : coords_)
      if (!(c.field() == field_)) throw FieldMismatch(field_.to_string(), c.field().to_string());
  }

  static AlgebraElement unit_vector(const FieldSpec& field, std::size_t rank, std::size_t i) {
    AlgebraElement e(field, rank);
    e.coords_.at(i) = Scalar::one(field);
    return e;
  }

  std::size_t rank() const noexcept { return coords_.size(); }
  const FieldSpec& field() const noexcept { return field_; }
  const Scalar& operator[](std::size_t i) const { return coords_[i]; }
  Scalar& operator[](std::size_t i) { return coords_[i]; }
  const std::vector<Scalar>& coords() const noexcept { return coords_; }

  bool is_zero() const {
    for (const auto& c : coords_)
      if (!c.is_zero()) return false;
    return true;
  }

  AlgebraElement& operator+=(const AlgebraElement& o) {
    check(o);
    for (std::size_t i = 0; i < coords_.size(); ++i) coords_[i] += o.coords_[i];
    return *this;
  }
  AlgebraElement& operator-=(const AlgebraElement& o) {
    check(o);
    for (std::size_t i = 0; i < coords_.size(); ++i) coords_[i] -= o.coords_[i];
    return *this;
  }
  AlgebraElement& operator*=(const Scalar& c) {
    for (auto& x : coords_) x *= c;
    return *this;
  }
  /// this += c * o
  void add_scaled(const Scalar& c, const AlgebraElement& o) {
    check(o);
    for (std::size_t i = 0; i < coords_.size(); ++i)
      if (!o.coords_[i].is_zero()) coords_[i] += c * o.coords_[i];
  }

  friend AlgebraElement operator+(AlgebraElement a, const AlgebraElement& b) { return a += b; }
  friend AlgebraElement operator-(AlgebraElement a, const AlgebraElement& b) { return a -= b; }
  friend AlgebraElement operator*(const Scalar& c, AlgebraElement a) { return a *= c; }

  friend bool operator==(const AlgebraElement& a, const AlgebraElement& b) {
    if (a.rank() != b.rank()) return false;
    for (std::size_t i = 0; i < a.rank(); ++i)
      if (!(a.coords_[i] == b.coords_[i])) return false;
    return true;
  }

  /// "e2 + 3*e5" given basis names; "0" for the zero vector.
  std::string to_string(const std::vector<std::string>& names) const {
    std::string out;
    for (std::size_t i = 0; i < coords_.size(); ++i) {
      const Scalar& c = coords_[i];
      if (c.is_zero()) continue;
      const bool neg = c.is_negative();
      const Scalar mag = neg ? -c : c;
      if (out.empty())
        out += neg ? "-" : "";
      else
        out += neg ? " - " : " + ";
      if (!mag.is_one()) out += mag.to_string() + "*";
      out += i < names.size() ? names[i] : "e" + std::to_string(i + 1);
    }
    return out.empty() ? "0" : out;
  }

 private:
  void check(const AlgebraElement& o) const {
    if (o.rank() != rank()) throw RankMismatch(rank(), o.rank());
  }

  std::vector<Scalar> coords_;
  FieldSpec field_;
};

/// Finite-rank magmatic algebra: e_i * e_j = sum_k c_ijk e_k.
class StructureAlgebra {
 public:
  /// table[i][j] holds the coordinates of e_i * e_j.
  StructureAlgebra(FieldSpec field, std::vector<std::string> basis,
                   const std::vector<std::vector<AlgebraElement>>& table, std::string name = {})
      : field_(field), basis_(std::move(basis)), name_(std::move(name)) {
    const std::size_t n = basis_.size();
    if (table.size() != n) throw BadStructureFile("table has wrong number of rows");
    sparse_.resize(n * n);
    dense_.reserve(n * n);
    for (std::size_t i = 0; i < n; ++i) {
      if (table[i].size() != n) throw BadStructureFile("table row has wrong length");
      for (std::size_t j = 0; j < n; ++j) {
        const AlgebraElement& v = table[i][j];
        if (v.rank() != n) throw BadStructureFile("table entry has wrong length");
        if (!(v.field() == field_)) throw FieldMismatch(field_.to_string(), v.field().to_string());
        dense_.push_back(v);
        for (std::size_t k = 0; k < n; ++k)
          if (!v[k].is_zero()) sparse_[i * n + j].emplace_back(k, v[k]);
      }
    }
  }

  /// Rank-n algebra with all products zero.
  static StructureAlgebra abelian(const FieldSpec& field, std::size_t n) {
    std::vector<std::string> names;
    for (std::size_t i = 0; i < n; ++i) names.push_back("e" + std::to_string(i + 1));
    std::vector<std::vector<AlgebraElement>> table(
        n, std::vector<AlgebraElement>(n, AlgebraElement(field, n)));
    return StructureAlgebra(field, std::move(names), table, "abelian:" + std::to_string(n));
  }

  std::size_t rank() const noexcept { return basis_.size(); }
  const FieldSpec& field() const noexcept { return field_; }
  const std::vector<std::string>& basis_names() const noexcept { return basis_; }
  const std::string& name() const noexcept { return name_; }

  const AlgebraElement& basis_product(std::size_t i, std::size_t j) const {
    return dense_[i * rank() + j];
  }

  AlgebraElement zero() const { return AlgebraElement(field_, rank()); }
  AlgebraElement basis_element(std::size_t i) const {
    return AlgebraElement::unit_vector(field_, rank(), i);
  }

  bool is_trivial_product() const {
    for (const auto& s : sparse_)
      if (!s.empty()) return false;
    return true;
  }

  AlgebraElement multiply(const AlgebraElement& a, const AlgebraElement& b) const {
    if (a.rank() != rank()) throw RankMismatch(rank(), a.rank());
    if (b.rank() != rank()) throw RankMismatch(rank(), b.rank());
    AlgebraElement out = zero();
    const std::size_t n = rank();
    for (std::size_t i = 0; i < n; ++i) {
      if (a[i].is_zero()) continue;
      for (std::size_t j = 0; j < n; ++j) {
        if (b[j].is_zero()) continue;
        const auto& entries = sparse_[i * n + j];
        if (entries.empty()) continue;
        const Scalar ab = a[i] * b[j];
        for (const auto& [k, c] : entries) out[k] += ab * c;
      }
    }
    return out;
  }

  /// Nonzero structure constants of e_i * e_j as (k, c_ijk).
  const std::vector<std::pair<std::size_t, Scalar>>& product_terms(std::size_t i,
                                                                    std::size_t j) const {
    return sparse_[i * rank() + j];
  }

  std::string element_to_string(const AlgebraElement& a) const { return a.to_string(basis_); }

 private:
  FieldSpec field_;
  std::vector<std::string> basis_;
  std::string name_;
  std::vector<AlgebraElement> dense_;
  std::vector<std::vector<std::pair<std::size_t, Scalar>>> sparse_;
};

}  // namespace beck

#endif  // BECK_ALGEBRA_HPP
