#include <gtest/gtest.h>

#include "beck/magma.hpp"
#include "beck/registry.hpp"
#include "beck/varieties.hpp"

using namespace beck;

namespace {
const FieldSpec Q = FieldSpec::rationals();
MagmaPolynomial P(const std::string& s) { return parse_equation(s, Q).polynomial; }
}  // namespace

TEST(Parse, LeftAlternative) {
  const ParsedEquation e = parse_equation("(x*x)*y - x*(x*y)", Q);
  EXPECT_EQ(e.variables, (std::vector<Variable>{"x", "y"}));
  EXPECT_EQ(e.polynomial.terms().size(), 2u);
  EXPECT_EQ(e.polynomial.max_weight(), 3u);
  EXPECT_EQ(e.polynomial.max_variable_degree(), 2u);
}

TEST(Parse, Commutativity) {
  const ParsedEquation e = parse_equation("x*y - y*x", Q);
  EXPECT_EQ(e.variables, (std::vector<Variable>{"x", "y"}));
  EXPECT_EQ(e.polynomial, P("-(y*x) + x*y"));
}

TEST(Parse, SelfCancellingIsEmpty) {
  EXPECT_THROW(parse_equation("((x*y)*z) - ((x*y)*z)", Q), EmptyEquation);
  EXPECT_THROW(parse_equation("   ", Q), EmptyEquation);
}

TEST(Parse, Coefficients) {
  EXPECT_EQ(P("2*x*y + 1/2*x*y"), Scalar::from_rational(Q, 5, 2) * P("x*y"));
  EXPECT_THROW(parse_equation("3*x*x", FieldSpec::prime(3)), EmptyEquation);
}

TEST(Parse, SyntaxErrorsCarryPosition) {
  try {
    parse_equation("x*y*z", Q);
    FAIL();
  } catch (const SyntaxError& e) {
    EXPECT_EQ(e.position(), 3u);
  }
  EXPECT_THROW(parse_equation("(x*y", Q), SyntaxError);
  EXPECT_THROW(parse_equation("x + ", Q), SyntaxError);
  EXPECT_THROW(parse_equation("x $ y", Q), SyntaxError);
  EXPECT_THROW(parse_equation("1/0*x", Q), SyntaxError);
}

TEST(Parse, EquationList) {
  const auto eqs = parse_equation_list("# alternative\n(x*x)*y - x*(x*y)\n\n(x*y)*y - x*(y*y)  # right\n", Q);
  ASSERT_EQ(eqs.size(), 2u);
  EXPECT_EQ(eqs[1], builtin_variety("alt", Q)[1]);
}

TEST(Term, Weight) {
  EXPECT_EQ(weight(MagmaTerm::leaf("x")), 1u);
  EXPECT_EQ(P("(x*y)*z").terms().begin()->first.weight(), 3u);
  EXPECT_EQ(MagmaTerm::left_power("x", 5).weight(), 5u);
  EXPECT_EQ(MagmaTerm::right_power("x", 5).to_string(), "x*(x*(x*(x*x)))");
  EXPECT_EQ(MagmaTerm::left_power("x", 3).to_string(), "(x*x)*x");
}

TEST(Reverse, Examples) {
  EXPECT_EQ(reverse(P("(x*y)*z")), P("z*(y*x)"));
  EXPECT_EQ(reverse(P("(x*x)*y - x*(x*y)")), P("y*(x*x) - (y*x)*x"));
  EXPECT_EQ(reverse(P("x*y - y*x")), Scalar::from_int(Q, -1) * P("x*y - y*x"));
}

TEST(Reverse, Involution) {
  for (const auto& [name, eqs] : builtin_variety_table())
    for (const auto& e : builtin_variety(name, Q)) EXPECT_EQ(reverse(reverse(e)), e) << name;
}

TEST(Evaluate, AbelianCommutator) {
  const StructureAlgebra A = StructureAlgebra::abelian(Q, 2);
  const Assignment a{{"x", A.basis_element(0)}, {"y", A.basis_element(1)}};
  EXPECT_TRUE(evaluate_term(P("x*y - y*x"), a, A).is_zero());
}

TEST(Evaluate, MagmaCounterexample) {
  const StructureAlgebra M = ks_linearize(three_element_magma(), Q);
  const Assignment a{{"x", M.basis_element(0) + M.basis_element(1)}, {"y", M.basis_element(2)}};
  EXPECT_FALSE(evaluate_term(P("(x*x)*y - x*(x*y)"), a, M).is_zero());
}

TEST(Evaluate, Quaternions) {
  const StructureAlgebra H = quaternion_algebra(Q);
  const Assignment a{{"x", H.basis_element(1)}, {"y", H.basis_element(1)}, {"z", H.basis_element(2)}};
  AlgebraElement minus_j = H.basis_element(2);
  minus_j *= Scalar::from_int(Q, -1);
  EXPECT_EQ(evaluate_term(P("x*(y*z)"), a, H), minus_j);
}

TEST(Evaluate, Unbound) {
  const StructureAlgebra A = StructureAlgebra::abelian(Q, 1);
  EXPECT_THROW(evaluate_term(P("x*y"), Assignment{{"x", A.basis_element(0)}}, A), UnboundVariable);
}

TEST(Print, ScaledProductsKeepParens) {
  EXPECT_EQ(P("2*(x*y) - y*x").to_string().find("2*(x*y)") != std::string::npos, true);
}

TEST(Varieties, Unknown) { EXPECT_THROW(builtin_variety("jordan", Q), UnknownVariety); }
