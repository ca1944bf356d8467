#include "ctkit/identities.hpp"
#include "ctkit/interp.hpp"

#include <gtest/gtest.h>

#include <map>
#include <random>

using namespace ctkit;

namespace {

Grid default_grid(const std::vector<int>& d) {
  Grid g;
  for (int di : d) {
    std::vector<int> b;
    for (int e = 0; e <= di; ++e) b.push_back(e);
    g.B.push_back(b);
  }
  return g;
}

}  // namespace

TEST(GenericCoeff, Examples) {
  const TablePtr t = make_table({.x = 2});
  const MPoly x1 = MPoly::variable(t, t->x(1)), x2 = MPoly::variable(t, t->x(2));
  EXPECT_EQ(generic_coeff((x1 + x2) * (x1 + x2), {1, 1}, default_grid({1, 1})), QRat(2));
  EXPECT_EQ(generic_coeff(x1 * x1 * x2, {2, 1}, default_grid({2, 1})), QRat(1));
  EXPECT_THROW(generic_coeff(x1 * x1 * x1, {1, 1}, default_grid({1, 1})), std::invalid_argument);
  EXPECT_THROW(generic_coeff(x1, {1, 1}, default_grid({1, 2})), std::invalid_argument);
}

TEST(GenericCoeff, RandomAgainstCoeffX) {
  std::mt19937 rng(20240611);
  for (int round = 0; round < 200; ++round) {
    const int n = 1 + static_cast<int>(rng() % 3);
    const TablePtr t = make_table({.x = n});
    std::vector<int> d(static_cast<std::size_t>(n));
    int budget = 0;
    for (auto& di : d) budget += di = static_cast<int>(rng() % 4);
    std::vector<Term> terms;
    const int nterms = 1 + static_cast<int>(rng() % 6);
    for (int k = 0; k < nterms; ++k) {
      Monomial m(t->size());
      int left = static_cast<int>(rng() % (budget + 1));
      for (int i = 1; i <= n && left > 0; ++i) {
        const int e = i == n ? left : static_cast<int>(rng() % (left + 1));
        m.set(t->x(i), e);
        left -= e;
      }
      m.set(0, static_cast<int>(rng() % 5) - 2);
      terms.push_back({m, mpz_class(static_cast<long>(rng() % 7) - 3)});
    }
    // Always include the target monomial.
    Monomial target(t->size());
    for (int i = 1; i <= n; ++i) target.set(t->x(i), d[static_cast<std::size_t>(i - 1)]);
    terms.push_back({target, mpz_class(static_cast<long>(rng() % 5) + 1)});
    const MPoly f = MPoly::from_terms(t, terms);
    Grid g;
    for (int di : d) {
      std::vector<int> pool;
      for (int e = 0; e <= 8; ++e) pool.push_back(e);
      std::shuffle(pool.begin(), pool.end(), rng);
      pool.resize(static_cast<std::size_t>(di + 1));
      g.B.push_back(pool);
    }
    EXPECT_EQ(generic_coeff(f, d, g), QRat(coeff_x(f, d).to_intpoly())) << f.str();
  }
}

TEST(DysonGrid, TwoVariablesEmptySet) {
  const DysonVerdict v = dyson_verdict({1, 1}, {});
  ASSERT_TRUE(v.grid.pi.has_value());
  EXPECT_EQ(*v.grid.pi, Permutation::identity(2));
  ASSERT_TRUE(v.point.has_value());
  EXPECT_EQ(*v.point, (std::vector<int>{0, 1}));
}

TEST(DysonGrid, ThreeVariablesExhaustive) {
  for (const auto& a : compositions_in_box(3, 1, 2)) {
    const MPoly ct = lhs_poincare_qdyson(a);
    for (unsigned long mask = 0; mask < 8; ++mask) {
      const PairSet s = pairset_from_mask(3, mask);
      const DysonVerdict v = dyson_verdict(a, s);
      EXPECT_EQ(v.value, t_coefficient(ct, s)) << composition_str(a) << ' ' << pairset_str(s);
      EXPECT_EQ(v.value.is_zero(), ell_stats(s, 3).K < 3);
      const QRat generic = generic_coeff(dyson_F(a, s).expand(), v.grid.d, v.grid.grid);
      EXPECT_EQ(generic, QRat(v.value));
      EXPECT_EQ(dyson_verdict(a, s, FillMode::random, mask + 17).value, v.value);
    }
  }
  const auto v = dyson_verdict({2, 1, 1}, recording_set(Permutation({3, 1, 2})));
  EXPECT_EQ(v.value, c_w({2, 1, 1}, Permutation({3, 1, 2})));
}

TEST(DysonGrid, FourVariablesSampled) {
  std::mt19937 rng(7);
  std::map<Composition, MPoly> cache;
  for (int k = 0; k < 30; ++k) {
    Composition a(4);
    for (auto& ai : a) ai = 1 + static_cast<int>(rng() % 2);
    const PairSet s = pairset_from_mask(4, rng() % 64);
    if (!cache.count(a)) cache.emplace(a, lhs_poincare_qdyson(a));
    const DysonVerdict v = dyson_verdict(a, s);
    EXPECT_EQ(v.value, t_coefficient(cache.at(a), s)) << composition_str(a) << ' ' << pairset_str(s);
    EXPECT_EQ(v.value.is_zero(), ell_stats(s, 4).K < 4);
  }
}

TEST(ClosedEval, SmallExample) {
  const ClosedEval c = closed_eval({1, 1}, Permutation({2, 1}));
  EXPECT_EQ(c.value, IntPoly(1));
}

TEST(ClosedEval, FullGridN3) {
  for (const auto& w : all_permutations(3))
    for (const auto& a : compositions_in_box(3, 1, 3)) {
      const ClosedEval c = closed_eval(a, w);
      EXPECT_EQ(c.sign_exponent, c.sum_s);
      EXPECT_EQ(c.t_split, c.sum_t);
      EXPECT_EQ(c.value, c_w(a, w));
    }
}

TEST(Sills, TwoVariables) {
  const auto pts = nonvanishing_points(sills_F({1, 1}), sills_grid({1, 1}, 2));
  ASSERT_EQ(pts.size(), 1U);
  EXPECT_EQ(pts[0], (std::vector<int>{0, 1}));
  EXPECT_EQ(sills_interpolate({1, 1}, 2), rhs_sills({1, 1}, 2, 1));
}

TEST(Sills, AgainstClosedForm) {
  for (int n = 2; n <= 3; ++n)
    for (int r = 2; r <= n; ++r)
      for (const auto& a : compositions_in_box(n, 0, 3)) {
        bool ok = true;
        for (int i = 1; i <= n; ++i) ok = ok && (i == r || a[static_cast<std::size_t>(i - 1)] >= 1);
        if (!ok) continue;
        EXPECT_EQ(sills_interpolate(a, r), rhs_sills(a, r, 1)) << composition_str(a) << " r=" << r;
        EXPECT_EQ(sills_interpolate(a, r), lhs_sills(a, r, 1));
      }
}

TEST(Sills, ExclusionIsNeeded) {
  const Composition a{1, 1, 1};
  const auto pts = nonvanishing_points(sills_F(a), sills_grid(a, 3, false));
  ASSERT_EQ(pts.size(), 2U);
  // pi = (2, 3, 1): alpha_2 = 0, alpha_3 = a_2 (the excluded value), alpha_1 = a_2 + a_3 + 1.
  EXPECT_EQ(pts[0], (std::vector<int>{0, 1, 2}));
  EXPECT_EQ(pts[1], (std::vector<int>{3, 0, 1}));
}
