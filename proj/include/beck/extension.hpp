#ifndef BECK_EXTENSION_HPP
#define BECK_EXTENSION_HPP

// The split extension E = A + M where M is U(A) as a free right module of
// rank one: (a, x)(b, y) = (ab, x r_b + y l_a), with module parts kept in
// normal form.

#include <array>
#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <random>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "beck/algebra.hpp"
#include "beck/derive.hpp"
#include "beck/errors.hpp"
#include "beck/free_algebra.hpp"
#include "beck/groebner.hpp"

namespace beck {

class ExtensionContext;

struct ExtensionElement {
  AlgebraElement base;
  FreePolynomial module;
  std::shared_ptr<const ExtensionContext> context;

  std::string to_string() const;
  bool is_zero() const { return base.is_zero() && module.is_zero(); }

  friend bool operator==(const ExtensionElement& a, const ExtensionElement& b) {
    return a.context == b.context && a.base == b.base && a.module == b.module;
  }
};

class ExtensionContext : public std::enable_shared_from_this<ExtensionContext> {
 public:
  static std::shared_ptr<const ExtensionContext> create(StructureAlgebra alg, GroebnerState st) {
    if (alg.rank() != st.rank()) throw RankMismatch(alg.rank(), st.rank());
    if (!(alg.field() == st.field())) throw FieldMismatch(alg.field().to_string(), st.field().to_string());
    return std::shared_ptr<const ExtensionContext>(new ExtensionContext(std::move(alg), std::move(st)));
  }

  const StructureAlgebra& algebra() const noexcept { return alg_; }
  const GroebnerState& state() const noexcept { return st_; }
  const FieldSpec& field() const noexcept { return alg_.field(); }

  /// Largest weight at which normal forms are trustworthy.
  std::optional<std::size_t> certified_through() const {
    if (st_.is_complete()) return std::nullopt;
    if (st_.complete_below() == 0) return std::size_t{0};
    return st_.complete_below() - 1;
  }

  void require_certified(std::size_t weight) const {
    if (!st_.certified(weight))
      throw NotCertified("module weight " + std::to_string(weight) + " exceeds the certified range");
  }

  ExtensionElement make(AlgebraElement base, const FreePolynomial& module) const {
    if (base.rank() != alg_.rank()) throw RankMismatch(alg_.rank(), base.rank());
    if (!module.is_zero()) require_certified(module.weight());
    return ExtensionElement{std::move(base), st_.reduce(module), shared_from_this()};
  }
  ExtensionElement base_element(std::size_t i) const {
    return make(alg_.basis_element(i), FreePolynomial(field()));
  }
  ExtensionElement module_element(const FreePolynomial& m) const { return make(alg_.zero(), m); }
  ExtensionElement zero() const { return make(alg_.zero(), FreePolynomial(field())); }

  /// Every normal word of U, weight by weight; requires a finite quotient.
  std::vector<FreeWord> module_basis() const {
    const PoincareSeries ps = poincare(st_);
    if (!ps.finite_certificate) throw NotCertified("the enveloping algebra is not known to be finite-dimensional");
    std::vector<FreeWord> out;
    for (std::size_t w = 0; w < *ps.finite_certificate; ++w)
      for (auto& word : normal_monomials(st_, w)) out.push_back(std::move(word));
    return out;
  }

 private:
  ExtensionContext(StructureAlgebra alg, GroebnerState st) : alg_(std::move(alg)), st_(std::move(st)) {}

  StructureAlgebra alg_;
  GroebnerState st_;
};

inline std::string ExtensionElement::to_string() const {
  const std::string b = context ? context->algebra().element_to_string(base) : base.to_string({});
  return "(" + b + ", " + module.to_string() + ")";
}

inline ExtensionElement operator+(const ExtensionElement& u, const ExtensionElement& v) {
  if (u.context != v.context) throw StateMismatch();
  AlgebraElement b = u.base;
  b += v.base;
  return ExtensionElement{std::move(b), u.module + v.module, u.context};
}

inline ExtensionElement operator*(const Scalar& c, const ExtensionElement& u) {
  AlgebraElement b = u.base;
  b *= c;
  return ExtensionElement{std::move(b), c * u.module, u.context};
}

inline ExtensionElement ext_multiply(const ExtensionElement& u, const ExtensionElement& v) {
  if (!u.context || u.context != v.context) throw StateMismatch();
  const ExtensionContext& ctx = *u.context;
  FreePolynomial m = u.module * linear_form(Side::Right, v.base);
  m += v.module * linear_form(Side::Left, u.base);
  return ctx.make(ctx.algebra().multiply(u.base, v.base), m);
}

inline ExtensionElement operator*(const ExtensionElement& u, const ExtensionElement& v) { return ext_multiply(u, v); }

/// ((x_1 x_2) x_3 ... ) x_n with x_1 = (0, r_1) and x_i = (e_i, 0).
inline ExtensionElement dorofeev_witness(std::size_t n, const ExtensionContext& ctx) {
  if (n < 2) throw std::invalid_argument("the witness needs n >= 2");
  if (ctx.algebra().rank() < n) throw RankMismatch(n, ctx.algebra().rank());
  ctx.require_certified(n);
  ExtensionElement acc = ctx.module_element(
      FreePolynomial::monomial(FreeWord::letter(Side::Right, 0), Scalar::one(ctx.field())));
  std::string expected(1, FreeWord::code(Side::Right, 0));
  for (std::size_t i = 1; i < n; ++i) {
    acc = ext_multiply(acc, ctx.base_element(i));
    expected.push_back(FreeWord::code(Side::Right, i));
  }
  const FreePolynomial want = FreePolynomial::monomial(FreeWord(expected), Scalar::one(ctx.field()));
  if (!acc.base.is_zero() || !(acc.module == want))
    throw std::logic_error("witness is " + acc.to_string() + ", expected (0, " + want.to_string() + ")");
  return acc;
}

struct SolvabilityReport {
  std::size_t trials = 0;
  std::size_t failures = 0;
  std::optional<std::array<ExtensionElement, 4>> first_failure;
  bool passed() const noexcept { return failures == 0; }
};

/// Random element with small coordinates over the base basis and the given
/// normal words.
template <class Rng>
ExtensionElement random_extension_element(const ExtensionContext& ctx, const std::vector<FreeWord>& words, Rng& rng) {
  const FieldSpec& f = ctx.field();
  std::vector<Scalar> coords;
  for (std::size_t i = 0; i < ctx.algebra().rank(); ++i) coords.push_back(Scalar::random(f, rng, 3));
  std::vector<FreePolynomial::Term> terms;
  for (const auto& w : words) terms.push_back({w, Scalar::random(f, rng, 3)});
  return ctx.make(AlgebraElement(f, std::move(coords)), FreePolynomial::from_terms(f, std::move(terms)));
}

/// Checks (uv)(xy) = 0 on random quadruples.
inline SolvabilityReport solvability_check(const ExtensionContext& ctx, std::size_t trials,
                                           std::uint64_t seed = 20240601) {
  const std::vector<FreeWord> words = ctx.module_basis();
  std::mt19937_64 rng(seed);
  SolvabilityReport rep;
  for (std::size_t t = 0; t < trials; ++t) {
    std::array<ExtensionElement, 4> q{random_extension_element(ctx, words, rng), random_extension_element(ctx, words, rng),
                                      random_extension_element(ctx, words, rng), random_extension_element(ctx, words, rng)};
    const ExtensionElement p = ext_multiply(ext_multiply(q[0], q[1]), ext_multiply(q[2], q[3]));
    ++rep.trials;
    if (!p.is_zero()) {
      if (!rep.first_failure) rep.first_failure = q;
      ++rep.failures;
    }
  }
  return rep;
}

/// E as a structure algebra: base basis followed by the normal words of U.
inline StructureAlgebra extension_algebra(const ExtensionContext& ctx) {
  const std::vector<FreeWord> words = ctx.module_basis();
  const FieldSpec& f = ctx.field();
  const std::size_t n = ctx.algebra().rank();
  const std::size_t dim = n + words.size();
  std::vector<ExtensionElement> basis;
  std::vector<std::string> names = ctx.algebra().basis_names();
  for (std::size_t i = 0; i < n; ++i) basis.push_back(ctx.base_element(i));
  for (const auto& w : words) {
    basis.push_back(ctx.module_element(FreePolynomial::monomial(w, Scalar::one(f))));
    names.push_back("[" + w.to_string() + "]");
  }
  std::unordered_map<FreeWord, std::size_t, WordHash> slot;
  for (std::size_t k = 0; k < words.size(); ++k) slot.emplace(words[k], n + k);

  std::vector<std::vector<AlgebraElement>> table(dim);
  for (std::size_t i = 0; i < dim; ++i)
    for (std::size_t j = 0; j < dim; ++j) {
      const ExtensionElement p = ext_multiply(basis[i], basis[j]);
      std::vector<Scalar> coords(p.base.coords().begin(), p.base.coords().end());
      coords.resize(dim, Scalar::zero(f));
      for (const auto& t : p.module.terms()) coords[slot.at(t.word)] = t.coeff;
      table[i].emplace_back(f, std::move(coords));
    }
  return StructureAlgebra(f, std::move(names), table, "extension:" + ctx.algebra().name());
}

}  // namespace beck

#endif  // BECK_EXTENSION_HPP
