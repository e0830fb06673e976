#include <gtest/gtest.h>

#include "support.hpp"

namespace qp {
namespace {

using testing::poly;

TEST(LaurentPoly, HalfPowersMultiply) {
  EXPECT_EQ(A(HalfExp{1}) * A(HalfExp{1}), A());
}

TEST(LaurentPoly, AddZero) {
  const LaurentPoly p = poly("3*X^2*A^(3/2) - Y^-1 + 7");
  EXPECT_EQ(p + LaurentPoly(), p);
  EXPECT_EQ(p - p, LaurentPoly());
}

TEST(LaurentPoly, Square) {
  EXPECT_EQ((Y() + 1) * (Y() + 1), poly("1 + 2*Y + Y^2"));
  EXPECT_EQ((Y() + 1).pow(2), poly("Y^2 + 2*Y + 1"));
  EXPECT_EQ((Y() + 1).pow(0), LaurentPoly(1));
}

TEST(LaurentPoly, Coefficient) {
  const LaurentPoly p = poly("5*X*B^(1/2) + 2");
  EXPECT_EQ(p.coefficient({HalfExp::whole(1), {}, {}, HalfExp{1}, {}}), 5);
  EXPECT_EQ(p.coefficient({}), 2);
  EXPECT_EQ(p.coefficient({HalfExp::whole(2), {}, {}, {}, {}}), 0);
}

TEST(Substitute, MonomialBindings) {
  Bindings b;
  b[static_cast<int>(Var::A)] = Y() * Z(HalfExp::whole(2));
  b[static_cast<int>(Var::B)] = Y(HalfExp::whole(-1));
  EXPECT_EQ(substitute(poly("A^(1/2) + B^(1/2)"), b), poly("Y^(1/2)*Z + Y^(-1/2)"));
}

TEST(Substitute, ShiftsAVariable) {
  Bindings b;
  b[static_cast<int>(Var::X)] = X() - 1;
  EXPECT_EQ(substitute(X() + 1, b), X());
}

TEST(Substitute, NonMonomialIntoHalfExponentFails) {
  Bindings b;
  b[static_cast<int>(Var::A)] = Y() + 1;
  EXPECT_THROW(substitute(A(HalfExp{1}), b), SubstitutionError);
  EXPECT_THROW(substitute(A(HalfExp::whole(-1)), b), SubstitutionError);
}

TEST(Substitute, OffGridFails) {
  Bindings b;
  b[static_cast<int>(Var::A)] = Y(HalfExp{1});
  EXPECT_THROW(substitute(A(HalfExp{1}), b), SubstitutionError);
}

TEST(Substitute, UnboundVariablesPassThrough) {
  Bindings b;
  b[static_cast<int>(Var::Z)] = X();
  EXPECT_EQ(substitute(poly("Y*A^(1/2)*Z^2"), b), poly("X^2*Y*A^(1/2)"));
}

TEST(CanonicalText, Examples) {
  EXPECT_EQ(to_string(A(HalfExp{1}) + B(HalfExp{1})), "A^(1/2) + B^(1/2)");
  EXPECT_EQ(to_string(LaurentPoly(1)), "1");
  EXPECT_EQ(to_string(A() + 2 + B()), "A + B + 2");
  EXPECT_EQ(to_string(LaurentPoly()), "0");
  EXPECT_EQ(to_string(3 * X(HalfExp::whole(2)) * A(HalfExp{3})), "3*X^2*A^(3/2)");
  EXPECT_EQ(to_string(Y(HalfExp::whole(-1))), "Y^-1");
  EXPECT_EQ(to_string(X() - 1), "X - 1");
  EXPECT_EQ(to_string(-Y(HalfExp{-3})), "-Y^(-3/2)");
}

TEST(CanonicalText, ParseErrors) {
  EXPECT_THROW(parse_poly("X^"), PolyParseError);
  EXPECT_THROW(parse_poly("Q + 1"), PolyParseError);
  EXPECT_THROW(parse_poly("X^(1/3)"), PolyParseError);
}

}  // namespace
}  // namespace qp
