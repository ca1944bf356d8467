#include "ctkit/exactalg.hpp"

#include <gtest/gtest.h>

#include <algorithm>
#include <random>
#include <vector>

using namespace ctkit;

namespace {

IntPoly P(const char* s) { return IntPoly::parse(s); }

}  // namespace

TEST(IntPoly, RenderAndParse) {
  EXPECT_EQ(IntPoly().str(), "0");
  EXPECT_EQ(P("1 - q - q^2 + q^3").str(), "1 - q - q^2 + q^3");
  EXPECT_EQ(P("3*q^2").str(), "3*q^2");
  EXPECT_EQ(P("-1*q^-2 + 5").str(), "-q^-2 + 5");
  EXPECT_EQ(P("3*q^0"), IntPoly(3));
  EXPECT_THROW(IntPoly::parse("1 + + q"), std::invalid_argument);
  EXPECT_THROW(IntPoly::parse("x"), std::invalid_argument);
}

TEST(IntPoly, NoZeroCoefficients) {
  IntPoly p = P("1 + q");
  p -= P("q");
  EXPECT_EQ(p.size(), 1U);
  p -= IntPoly(1);
  EXPECT_TRUE(p.is_zero());
  EXPECT_TRUE(p.terms().empty());
}

TEST(Qpoch, Examples) {
  EXPECT_EQ(qpoch(1, 0), IntPoly(1));
  EXPECT_EQ(qpoch(1, 2), P("1 - q - q^2 + q^3"));
  EXPECT_EQ(qpoch(0, 1), IntPoly());
  EXPECT_EQ(qpoch(-1, 1), P("1 - q^-1"));
}

TEST(Qbinom, Examples) {
  EXPECT_EQ(qbinom(2, 1), P("1 + q"));
  for (int n = 0; n < 6; ++n) EXPECT_EQ(qbinom(n, 0), IntPoly(1));
  EXPECT_EQ(qbinom(1, 2), IntPoly());
  EXPECT_EQ(qbinom(3, -1), IntPoly());
  EXPECT_EQ(qbinom(-1, 0), IntPoly());
}

TEST(Qbinom, SymmetryPositivityPascal) {
  for (int n = 0; n <= 12; ++n)
    for (int m = 0; m <= n; ++m) {
      const IntPoly b = qbinom(n, m);
      EXPECT_TRUE(b.has_nonnegative_coeffs());
      EXPECT_EQ(b, qbinom(n, n - m));
      if (m >= 1) EXPECT_EQ(b, qbinom(n - 1, m - 1) + qbinom(n - 1, m).shifted(m));
    }
}

TEST(Qmultinom, Examples) {
  std::vector<int> one{4};
  EXPECT_EQ(qmultinom(one), IntPoly(1));
  std::vector<int> a11{1, 1};
  EXPECT_EQ(qmultinom(a11), P("1 + q"));
  std::vector<int> a111{1, 1, 1};
  EXPECT_EQ(qmultinom(a111), P("1 + q") * P("1 + q + q^2"));
}

TEST(Qmultinom, PermutationInvariant) {
  for (std::vector<int> a : {std::vector<int>{3, 1, 2}, {2, 2, 0, 1}, {1, 1, 1, 1, 2}, {4, 0, 3}}) {
    std::sort(a.begin(), a.end());
    const IntPoly ref = qmultinom(a);
    do {
      EXPECT_EQ(qmultinom(a), ref);
    } while (std::next_permutation(a.begin(), a.end()));
  }
}

TEST(QRat, Examples) {
  const QRat r = QRat(qpoch(1, 2).shifted(0)) / QRat(P("1 - q"));
  ASSERT_TRUE(qrat_is_poly(QRat(P("1 - q^2"), P("1 - q"))));
  EXPECT_EQ(*qrat_is_poly(QRat(P("1 - q^2"), P("1 - q"))), P("1 + q"));
  EXPECT_TRUE((r + (-r)).is_zero());
  const QRat x(P("1 - q"), P("1 - q^3"));
  const QRat y(P("1 - q^3"), P("1 - q"));
  EXPECT_EQ(x * y, QRat(1));
  EXPECT_THROW(x / QRat(0), std::domain_error);
  EXPECT_THROW(QRat(IntPoly(1), IntPoly()), std::domain_error);
  EXPECT_FALSE(qrat_is_poly(x));
}

TEST(QRat, CanonicalForm) {
  const QRat r(P("-2 + 2*q^2"), P("-4*q^3 + 4*q^4"));
  // (q^2 - 1)*2 / (4 q^3 (q - 1)) = (1 + q) / (2 q^3)
  EXPECT_EQ(r.den(), IntPoly(2));
  EXPECT_EQ(r.num(), P("q^-3 + q^-2"));
  const QRat s(P("1 - q"), P("q - 1"));
  EXPECT_EQ(s, QRat(-1));
  EXPECT_EQ(s.den(), IntPoly(1));
}

TEST(QRat, NormalizationIdempotent) {
  std::mt19937 rng(7);
  std::uniform_int_distribution<int> coeff(-3, 3), len(1, 4), shift(-2, 2);
  auto rand_poly = [&] {
    IntPoly p;
    const int l = len(rng);
    for (int i = 0; i < l; ++i) p.add_term(i, coeff(rng));
    return p.shifted(shift(rng));
  };
  for (int it = 0; it < 200; ++it) {
    IntPoly d = rand_poly();
    if (d.is_zero()) continue;
    const IntPoly common = rand_poly();
    if (common.is_zero()) continue;
    const QRat once = QRat::normalized(rand_poly() * common, d * common);
    EXPECT_EQ(QRat::normalized(once.num(), once.den()), once);
    EXPECT_EQ(once.den().low_degree(), 0);
    EXPECT_GT(once.den().leading_coeff(), 0);
  }
}

TEST(QRat, FieldAxioms) {
  const QRat a(P("1 + 2*q"), P("1 - q^2"));
  const QRat b(P("q - 3"), P("1 + q"));
  const QRat c(P("q^-1"), P("2 + q^3"));
  EXPECT_EQ((a + b) + c, a + (b + c));
  EXPECT_EQ(a * (b + c), a * b + a * c);
  EXPECT_EQ((a / b) * b, a);
  EXPECT_EQ(a - a, QRat());
}

TEST(GcdAndDivision, Basics) {
  EXPECT_EQ(poly_gcd(P("1 - q^2"), P("1 - q^3")), P("-1 + q"));
  EXPECT_EQ(*divide_exact(P("1 - q^4"), P("1 + q")), P("1 - q + q^2 - q^3"));
  EXPECT_FALSE(divide_exact(P("1 + q^2"), P("1 + q")));
  EXPECT_THROW(divide_or_throw(P("2"), P("3"), "test"), InexactDivision);
  EXPECT_EQ(*divide_exact(P("2*q^-1 + 2"), P("2")), P("q^-1 + 1"));
}
