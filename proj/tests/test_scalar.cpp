#include <gtest/gtest.h>

#include <random>

#include "beck/scalar.hpp"

using beck::FieldSpec;
using beck::Scalar;

TEST(Scalar, RationalSum) {
  const auto q = FieldSpec::rationals();
  const Scalar a = Scalar::from_rational(q, 1, 2), b = Scalar::from_rational(q, 1, 3);
  EXPECT_EQ(a + b, Scalar::from_rational(q, 5, 6));
  EXPECT_EQ((a + b).to_string(), "5/6");
}

TEST(Scalar, LowestTerms) {
  const auto q = FieldSpec::rationals();
  const Scalar a = Scalar::from_rational(q, 4, -6);
  EXPECT_EQ(a.to_string(), "-2/3");
  EXPECT_TRUE(a.is_negative());
}

TEST(Scalar, InverseMod7) {
  const auto f = FieldSpec::prime(7);
  EXPECT_EQ(Scalar::from_int(f, 3).inv(), Scalar::from_int(f, 5));
}

TEST(Scalar, CharacteristicTwo) {
  const auto f = FieldSpec::prime(2);
  EXPECT_TRUE((Scalar::one(f) + Scalar::one(f)).is_zero());
}

TEST(Scalar, NegativeResidues) {
  const auto f = FieldSpec::prime(5);
  EXPECT_EQ(Scalar::from_int(f, -1).to_string(), "4");
  EXPECT_EQ(Scalar::from_int(f, -13), Scalar::from_int(f, 2));
}

TEST(Scalar, DivisionByZero) {
  EXPECT_THROW(Scalar::zero(FieldSpec::rationals()).inv(), beck::DivisionByZero);
  EXPECT_THROW(Scalar::one(FieldSpec::prime(3)) / Scalar::zero(FieldSpec::prime(3)), beck::DivisionByZero);
}

TEST(Scalar, MixedFieldsRejected) {
  const Scalar a = Scalar::one(FieldSpec::rationals());
  const Scalar b = Scalar::one(FieldSpec::prime(3));
  EXPECT_THROW(a + b, beck::FieldMismatch);
  EXPECT_THROW((void)(a == b), beck::FieldMismatch);
  EXPECT_THROW(Scalar::one(FieldSpec::prime(5)) * b, beck::FieldMismatch);
}

TEST(Scalar, ExhaustiveInverses) {
  for (std::uint32_t p : {2u, 3u, 5u, 7u, 11u, 13u}) {
    const auto f = FieldSpec::prime(p);
    for (std::uint32_t a = 1; a < p; ++a) {
      const Scalar x = Scalar::from_int(f, a);
      EXPECT_TRUE((x.inv() * x).is_one()) << a << " mod " << p;
    }
  }
}

TEST(Scalar, FieldAxiomsRandom) {
  std::mt19937_64 rng(5);
  for (const auto& f : {FieldSpec::rationals(), FieldSpec::prime(2), FieldSpec::prime(101)}) {
    for (int i = 0; i < 300; ++i) {
      const Scalar a = Scalar::random(f, rng, 50), b = Scalar::random(f, rng, 50), c = Scalar::random(f, rng, 50);
      EXPECT_EQ((a + b) + c, a + (b + c));
      EXPECT_EQ((a * b) * c, a * (b * c));
      EXPECT_EQ(a + b, b + a);
      EXPECT_EQ(a * b, b * a);
      EXPECT_EQ(a * (b + c), a * b + a * c);
      EXPECT_TRUE((a - a).is_zero());
      if (!b.is_zero()) EXPECT_EQ(a / b * b, a);
    }
  }
}

TEST(FieldSpec, Parse) {
  EXPECT_TRUE(FieldSpec::parse("Q").is_rationals());
  EXPECT_EQ(FieldSpec::parse("Fp:2").characteristic(), 2u);
  EXPECT_EQ(FieldSpec::parse("Fp:65537").to_string(), "Fp:65537");
  for (const char* bad : {"", "q", "Fp:", "Fp:1", "Fp:9", "Fp:-3", "Fp:2x", "F2", "Fp:99999999999"})
    EXPECT_THROW(FieldSpec::parse(bad), beck::BadFieldSpec) << bad;
}

TEST(Scalar, LargeRationalsStayExact) {
  const auto q = FieldSpec::rationals();
  Scalar x = Scalar::one(q);
  const Scalar three = Scalar::from_int(q, 3);
  for (int i = 0; i < 100; ++i) x *= three;
  for (int i = 0; i < 100; ++i) x /= three;
  EXPECT_TRUE(x.is_one());
}
