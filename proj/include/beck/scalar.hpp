#ifndef BECK_SCALAR_HPP
#define BECK_SCALAR_HPP

// Exact coefficients: arbitrary-precision rationals or residues mod a prime.
// The field is chosen once per computation; mixing elements of different
// fields raises FieldMismatch.

#include <cstdint>
#include <random>
#include <string>
#include <variant>

#include <gmpxx.h>

#include "beck/errors.hpp"

namespace beck {

class FieldSpec {
 public:
  enum class Kind : std::uint8_t { Rationals, PrimeField };

  static FieldSpec rationals() { return FieldSpec(Kind::Rationals, 0); }

  static FieldSpec prime(std::uint32_t p) {
    if (!is_prime(p)) throw BadFieldSpec(std::to_string(p) + " is not prime");
    if (p >= (1u << 31)) throw BadFieldSpec("characteristic too large");
    return FieldSpec(Kind::PrimeField, p);
  }

  /// Accepts "Q" or "Fp:<prime>".
  static FieldSpec parse(const std::string& text) {
    if (text == "Q") return rationals();
    const std::string prefix = "Fp:";
    if (text.rfind(prefix, 0) == 0 && text.size() > prefix.size()) {
      const std::string digits = text.substr(prefix.size());
      for (char c : digits)
        if (c < '0' || c > '9') throw BadFieldSpec(text);
      if (digits.size() > 10) throw BadFieldSpec(text);
      const unsigned long long p = std::stoull(digits);
      if (p > 0xffffffffull) throw BadFieldSpec(text);
      return prime(static_cast<std::uint32_t>(p));
    }
    throw BadFieldSpec(text);
  }

  Kind kind() const noexcept { return kind_; }
  std::uint32_t characteristic() const noexcept { return characteristic_; }
  bool is_rationals() const noexcept { return kind_ == Kind::Rationals; }

  std::string to_string() const {
    return is_rationals() ? std::string("Q") : "Fp:" + std::to_string(characteristic_);
  }

  friend bool operator==(const FieldSpec&, const FieldSpec&) = default;

  static bool is_prime(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t d = 2; d * d <= n; ++d)
      if (n % d == 0) return false;
    return true;
  }

 private:
  friend class Scalar;
  FieldSpec(Kind k, std::uint32_t c) : kind_(k), characteristic_(c) {}
  Kind kind_;
  std::uint32_t characteristic_;
};

/// An element of a FieldSpec. Rationals are kept in lowest terms with a
/// positive denominator; residues lie in [0, p).
class Scalar {
 public:
  static Scalar zero(const FieldSpec& f) { return from_int(f, 0); }
  static Scalar one(const FieldSpec& f) { return from_int(f, 1); }

  static Scalar from_int(const FieldSpec& f, long long v) {
    if (f.is_rationals()) return Scalar(mpq_class(static_cast<long>(v)));
    const long long p = f.characteristic();
    long long r = v % p;
    if (r < 0) r += p;
    return Scalar(Residue{static_cast<std::uint32_t>(r), f.characteristic()});
  }

  static Scalar from_rational(const FieldSpec& f, const mpz_class& num, const mpz_class& den) {
    if (den == 0) throw DivisionByZero();
    if (f.is_rationals()) {
      mpq_class q(num, den);
      q.canonicalize();
      return Scalar(std::move(q));
    }
    return from_mpz(f, num) / from_mpz(f, den);
  }

  static Scalar from_mpz(const FieldSpec& f, const mpz_class& v) {
    if (f.is_rationals()) return Scalar(mpq_class(v));
    mpz_class r = v % f.characteristic();
    if (r < 0) r += f.characteristic();
    return Scalar(Residue{static_cast<std::uint32_t>(r.get_ui()), f.characteristic()});
  }

  /// Uniform in [-range, range] over Q, uniform residue over Fp.
  template <class Rng>
  static Scalar random(const FieldSpec& f, Rng& rng, long long range = 5) {
    if (f.is_rationals()) {
      std::uniform_int_distribution<long long> d(-range, range);
      return from_int(f, d(rng));
    }
    std::uniform_int_distribution<long long> d(0, f.characteristic() - 1);
    return from_int(f, d(rng));
  }

  FieldSpec field() const {
    if (const auto* r = std::get_if<Residue>(&v_))
      return FieldSpec(FieldSpec::Kind::PrimeField, r->modulus);
    return FieldSpec::rationals();
  }

  bool is_zero() const {
    if (const auto* r = std::get_if<Residue>(&v_)) return r->value == 0;
    return sgn(std::get<mpq_class>(v_)) == 0;
  }

  bool is_one() const {
    if (const auto* r = std::get_if<Residue>(&v_)) return r->value == 1;
    return std::get<mpq_class>(v_) == 1;
  }

  /// Only rationals carry a sign; residues are never negative.
  bool is_negative() const {
    if (const auto* q = std::get_if<mpq_class>(&v_)) return sgn(*q) < 0;
    return false;
  }

  const mpq_class* rational() const { return std::get_if<mpq_class>(&v_); }
  std::uint32_t residue() const { return std::get<Residue>(v_).value; }

  Scalar operator-() const {
    if (const auto* r = std::get_if<Residue>(&v_))
      return Scalar(Residue{r->value == 0 ? 0 : r->modulus - r->value, r->modulus});
    return Scalar(mpq_class(-std::get<mpq_class>(v_)));
  }

  Scalar& operator+=(const Scalar& o) {
    if (auto* r = std::get_if<Residue>(&v_)) {
      const auto& s = check(o);
      std::uint64_t v = std::uint64_t(r->value) + s.value;
      if (v >= r->modulus) v -= r->modulus;
      r->value = static_cast<std::uint32_t>(v);
    } else {
      std::get<mpq_class>(v_) += check_q(o);
    }
    return *this;
  }

  Scalar& operator-=(const Scalar& o) {
    if (auto* r = std::get_if<Residue>(&v_)) {
      const auto& s = check(o);
      r->value = r->value >= s.value ? r->value - s.value : r->value + r->modulus - s.value;
    } else {
      std::get<mpq_class>(v_) -= check_q(o);
    }
    return *this;
  }

  Scalar& operator*=(const Scalar& o) {
    if (auto* r = std::get_if<Residue>(&v_)) {
      const auto& s = check(o);
      r->value = static_cast<std::uint32_t>(std::uint64_t(r->value) * s.value % r->modulus);
    } else {
      std::get<mpq_class>(v_) *= check_q(o);
    }
    return *this;
  }

  Scalar& operator/=(const Scalar& o) {
    if (std::holds_alternative<Residue>(v_)) return *this *= o.inv();
    const mpq_class& d = check_q(o);
    if (sgn(d) == 0) throw DivisionByZero();
    std::get<mpq_class>(v_) /= d;
    return *this;
  }

  friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
  friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
  friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
  friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }

  Scalar inv() const {
    if (is_zero()) throw DivisionByZero();
    if (const auto* r = std::get_if<Residue>(&v_)) {
      // Fermat: a^(p-2)
      std::uint64_t base = r->value, result = 1, e = r->modulus - 2;
      while (e) {
        if (e & 1) result = result * base % r->modulus;
        base = base * base % r->modulus;
        e >>= 1;
      }
      return Scalar(Residue{static_cast<std::uint32_t>(result), r->modulus});
    }
    return Scalar(mpq_class(1 / std::get<mpq_class>(v_)));
  }

  friend bool operator==(const Scalar& a, const Scalar& b) {
    if (const auto* r = std::get_if<Residue>(&a.v_)) return r->value == a.check(b).value;
    return std::get<mpq_class>(a.v_) == a.check_q(b);
  }

  std::string to_string() const {
    if (const auto* r = std::get_if<Residue>(&v_)) return std::to_string(r->value);
    return std::get<mpq_class>(v_).get_str();
  }

 private:
  struct Residue {
    std::uint32_t value;
    std::uint32_t modulus;
  };

  explicit Scalar(mpq_class q) : v_(std::move(q)) {}
  explicit Scalar(Residue r) : v_(r) {}

  const Residue& check(const Scalar& o) const {
    const auto* s = std::get_if<Residue>(&o.v_);
    if (!s || s->modulus != std::get<Residue>(v_).modulus)
      throw FieldMismatch(field().to_string(), o.field().to_string());
    return *s;
  }

  const mpq_class& check_q(const Scalar& o) const {
    const auto* q = std::get_if<mpq_class>(&o.v_);
    if (!q) throw FieldMismatch(field().to_string(), o.field().to_string());
    return *q;
  }

  std::variant<mpq_class, Residue> v_;
};

}  // namespace beck

#endif  // BECK_SCALAR_HPP
