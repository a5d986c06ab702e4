#include <gtest/gtest.h>

#include <cstdio>
#include <fstream>
#include <random>

#include "beck/identity.hpp"
#include "beck/registry.hpp"
#include "beck/varieties.hpp"
#include "oracles.hpp"

using namespace beck;

namespace {

const FieldSpec Q = FieldSpec::rationals();

AlgebraElement signed_unit(const StructureAlgebra& A, int sign, std::size_t i) {
  AlgebraElement e = A.basis_element(i);
  e *= Scalar::from_int(A.field(), sign);
  return e;
}

std::string write_temp(const std::string& name, const std::string& body) {
  const std::string path = ::testing::TempDir() + name;
  std::ofstream(path) << body;
  return path;
}

// Random-point evaluation, independent of the generic expansion.
bool holds_at_random_points(const StructureAlgebra& A, const MagmaPolynomial& eq, int points) {
  std::mt19937_64 rng(11);
  for (int p = 0; p < points; ++p) {
    Assignment a;
    for (const auto& v : eq.variables()) a.emplace(v, oracle::random_element(A, rng));
    if (!evaluate_term(eq, a, A).is_zero()) return false;
  }
  return true;
}

}  // namespace

TEST(Element, Printing) {
  const StructureAlgebra A = StructureAlgebra::abelian(Q, 5);
  AlgebraElement x = A.basis_element(1);
  x.add_scaled(Scalar::from_int(Q, 3), A.basis_element(4));
  EXPECT_EQ(A.element_to_string(x), "e2 + 3*e5");
  EXPECT_EQ(A.element_to_string(A.zero()), "0");
}

TEST(Element, RankMismatch) {
  const StructureAlgebra A = StructureAlgebra::abelian(Q, 2);
  EXPECT_THROW(A.multiply(A.basis_element(0), AlgebraElement(Q, 3)), RankMismatch);
}

TEST(Registry, QuaternionTable) {
  const StructureAlgebra H = quaternion_algebra(Q);
  EXPECT_EQ(H.basis_product(1, 2), H.basis_element(3));   // ij = k
  EXPECT_EQ(H.basis_product(2, 1), signed_unit(H, -1, 3));  // ji = -k
  EXPECT_EQ(H.basis_product(2, 3), H.basis_element(1));   // jk = i
  EXPECT_EQ(H.basis_product(3, 1), H.basis_element(2));   // ki = j
  for (std::size_t a = 1; a < 4; ++a) EXPECT_EQ(H.basis_product(a, a), signed_unit(H, -1, 0));
}

TEST(Registry, OctonionTable) {
  const StructureAlgebra O = octonion_algebra(Q);
  for (const auto& t : octonion_triples())
    for (int r = 0; r < 3; ++r) {
      const std::size_t a = t[r], b = t[(r + 1) % 3], c = t[(r + 2) % 3];
      EXPECT_EQ(O.basis_product(a, b), O.basis_element(c));
      EXPECT_EQ(O.basis_product(b, a), signed_unit(O, -1, c));
    }
  // Every pair of distinct imaginary units appears in exactly one triple.
  for (std::size_t a = 1; a < 8; ++a)
    for (std::size_t b = 1; b < 8; ++b) {
      const AlgebraElement& p = O.basis_product(a, b);
      std::size_t nonzero = 0;
      for (const auto& c : p.coords()) nonzero += !c.is_zero();
      EXPECT_EQ(nonzero, 1u);
    }
}

TEST(Registry, ComplexIsCommutativeAssociative) {
  const StructureAlgebra C = complex_algebra(Q);
  EXPECT_TRUE(satisfies_all(C, builtin_variety("comass", Q)));
}

TEST(Registry, AbelianName) {
  EXPECT_EQ(builtin_algebra("abelian:3", Q).rank(), 3u);
  EXPECT_TRUE(builtin_algebra("abelian:3", Q).is_trivial_product());
  for (const char* bad : {"abelian:", "abelian:x", "abelian:-1", "sedenion", "file"})
    EXPECT_THROW(builtin_algebra(bad, Q), Error) << bad;
}

TEST(Json, RoundTrip) {
  const StructureAlgebra O = octonion_algebra(FieldSpec::prime(3));
  const StructureAlgebra back = structure_from_json(structure_to_json(O), FieldSpec::prime(3));
  ASSERT_EQ(back.rank(), 8u);
  for (std::size_t i = 0; i < 8; ++i)
    for (std::size_t j = 0; j < 8; ++j) EXPECT_EQ(back.basis_product(i, j), O.basis_product(i, j));
}

TEST(Json, FractionsAndFieldCheck) {
  const std::string body = R"({"field": "Q", "basis": ["u"], "table": [[["-3/2"]]]})";
  const std::string path = write_temp("frac.json", body);
  const StructureAlgebra A = load_structure_file(path, Q);
  EXPECT_EQ(A.basis_product(0, 0)[0], Scalar::from_rational(Q, -3, 2));
  EXPECT_THROW(load_structure_file(path, FieldSpec::prime(5)), FieldMismatch);
}

TEST(Json, Malformed) {
  for (const char* body : {"[1]", R"({"basis": ["u"]})", R"({"basis": ["u"], "table": [[[1, 2]]]})",
                           R"({"basis": ["u"], "table": [[["x/y"]]]})", R"({"basis": ["u"], "table": [[[1.5]]]})",
                           "{not json"}) {
    const std::string path = write_temp("bad.json", body);
    EXPECT_THROW(load_structure_file(path, Q), BadStructureFile) << body;
  }
  EXPECT_THROW(load_structure_file("/nonexistent/file.json", Q), BadStructureFile);
}

TEST(Json, MagmaFile) {
  const std::string path = write_temp("m.json", R"({"elements": ["a","b","c"], "table": [[0,0,2],[0,1,1],[2,1,2]]})");
  const StructureAlgebra M = builtin_algebra("magma:" + path, Q);
  const StructureAlgebra ref = ks_linearize(three_element_magma(), Q);
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j) EXPECT_EQ(M.basis_product(i, j), ref.basis_product(i, j));
  const std::string bad = write_temp("m2.json", R"({"elements": ["a"], "table": [[3]]})");
  EXPECT_THROW(load_magma_file(bad, Q), BadStructureFile);
}

TEST(Identity, MagmaFailsLeftAlternative) {
  const StructureAlgebra M = ks_linearize(three_element_magma(), Q);
  const auto rep = check_identity(M, builtin_variety("leftalt", Q)[0]);
  ASSERT_FALSE(rep.holds());
  ASSERT_TRUE(rep.witness.has_value());
  ASSERT_TRUE(rep.counterexample.has_value());
  EXPECT_EQ(M.element_to_string(rep.counterexample->at("x")), "a + b");
  EXPECT_EQ(M.element_to_string(rep.counterexample->at("y")), "c");
  EXPECT_FALSE(rep.counterexample_value.is_zero());
  // The magma is commutative, so the failure is not a commutativity artefact.
  EXPECT_TRUE(check_identity(M, builtin_variety("com", Q)[0]).holds());
}

TEST(Identity, AgreesWithRandomEvaluation) {
  struct Case {
    StructureAlgebra A;
    std::string variety;
  };
  const std::vector<Case> cases = {{octonion_algebra(Q), "alt"},  {octonion_algebra(Q), "ass"},
                                   {quaternion_algebra(Q), "ass"}, {quaternion_algebra(Q), "com"},
                                   {complex_algebra(Q), "comass"}, {ks_linearize(three_element_magma(), Q), "alt"},
                                   {octonion_algebra(FieldSpec::prime(2)), "com"}};
  for (const auto& c : cases)
    for (const auto& eq : builtin_variety(c.variety, c.A.field()))
      EXPECT_EQ(check_identity(c.A, eq).holds(), holds_at_random_points(c.A, eq, 40))
          << c.A.name() << " " << eq.to_string();
}

TEST(Identity, OctonionVerdicts) {
  const StructureAlgebra O = octonion_algebra(Q);
  EXPECT_TRUE(satisfies_all(O, builtin_variety("alt", Q)));
  EXPECT_FALSE(satisfies_all(O, builtin_variety("ass", Q)));
  EXPECT_TRUE(satisfies_all(quaternion_algebra(Q), builtin_variety("ass", Q)));
  EXPECT_FALSE(satisfies_all(quaternion_algebra(Q), builtin_variety("com", Q)));
}

TEST(Identity, OctonionsInCharacteristicTwoAreCommutative) {
  const FieldSpec f2 = FieldSpec::prime(2);
  EXPECT_TRUE(satisfies_all(octonion_algebra(f2), builtin_variety("com", f2)));
}
