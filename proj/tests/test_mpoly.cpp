#include "ctkit/mpoly.hpp"

#include <gtest/gtest.h>

#include <random>

using namespace ctkit;

namespace {

TablePtr xs(int n) { return make_table({.x = n}); }

MPoly X(const TablePtr& t, int i, int e = 1) { return MPoly::variable(t, t->x(i), e); }
MPoly Q(const TablePtr& t, int e = 1) { return MPoly::variable(t, 0, e); }
MPoly C(const TablePtr& t, long c) { return MPoly::constant(t, c); }

MPoly random_laurent(const TablePtr& t, std::mt19937& rng, int terms, int lo, int hi) {
  std::uniform_int_distribution<int> ex(lo, hi), co(-4, 4);
  std::vector<Term> ts;
  for (int k = 0; k < terms; ++k) {
    Monomial m(t->size());
    for (int v = 0; v < t->size(); ++v) m.set(v, ex(rng));
    ts.push_back({m, co(rng)});
  }
  return MPoly::from_terms(t, ts);
}

std::vector<std::vector<int>> compositions(int n, int max) {
  std::vector<std::vector<int>> out;
  std::vector<int> a(static_cast<std::size_t>(n), 0);
  while (true) {
    out.push_back(a);
    int k = n - 1;
    while (k >= 0 && a[static_cast<std::size_t>(k)] == max) a[static_cast<std::size_t>(k--)] = 0;
    if (k < 0) break;
    ++a[static_cast<std::size_t>(k)];
  }
  return out;
}

}  // namespace

TEST(VarTable, OrderAndNames) {
  auto t = make_table({.x = 2, .t = 3, .s_rows = 1, .s_cols = 2, .u = 1});
  std::vector<std::string> names;
  for (int k = 0; k < t->size(); ++k) names.push_back(t->name(k));
  EXPECT_EQ(names, (std::vector<std::string>{"q", "x1", "x2", "t[1,2]", "t[1,3]", "t[2,3]", "s[1,1]", "s[1,2]", "u[1]"}));
  EXPECT_EQ(t->t(2, 3), 5);
  EXPECT_THROW(t->t(2, 2), std::out_of_range);
  EXPECT_FALSE(t->find({Family::u, 2}));
}

TEST(MPoly, RingBasics) {
  auto t = xs(2);
  const MPoly p = X(t, 1) * Q(t, 2) - C(t, 3) * X(t, 2, -1);
  EXPECT_EQ(p * C(t, 1), p);
  EXPECT_EQ((X(t, 1) - X(t, 2)) * (X(t, 1) + X(t, 2)), X(t, 1, 2) - X(t, 2, 2));
  EXPECT_EQ(((X(t, 1) - X(t, 2)) * (X(t, 1) + X(t, 2))).str(), "-x2^2 + x1^2");
  EXPECT_EQ(MPoly(t).str(), "0");
  EXPECT_THROW(X(t, 1) + X(xs(3), 1), std::invalid_argument);
}

TEST(MPoly, RingAxiomsRandom) {
  std::mt19937 rng(11);
  auto t = make_table({.x = 2, .t = 2});
  for (int it = 0; it < 30; ++it) {
    const MPoly a = random_laurent(t, rng, 5, -2, 2);
    const MPoly b = random_laurent(t, rng, 4, -2, 2);
    const MPoly c = random_laurent(t, rng, 3, -2, 2);
    EXPECT_EQ(a * b, b * a);
    EXPECT_EQ((a * b) * c, a * (b * c));
    EXPECT_EQ(a * (b + c), a * b + a * c);
    EXPECT_EQ(a - a, MPoly(t));
    EXPECT_EQ(pow(a, 3), a * a * a);
    std::vector<MPoly> fs{a, b, c};
    EXPECT_EQ(product(fs), a * b * c);
  }
}

TEST(MPoly, JsonRoundTrip) {
  std::mt19937 rng(3);
  auto t = make_table({.x = 2, .t = 2, .s_rows = 1, .s_cols = 1, .u = 2});
  const MPoly a = random_laurent(t, rng, 6, -3, 3);
  EXPECT_EQ(mpoly_from_json(to_json(a)), a);
  EXPECT_EQ(to_json(a)["vars"][3], "t[1,2]");
}

TEST(Extraction, CtAndCoeff) {
  auto t = xs(2);
  EXPECT_TRUE(ct_x(X(t, 1) * X(t, 2, -1)).is_zero());
  EXPECT_EQ(ct_x(C(t, 3) + Q(t) * X(t, 1) * X(t, 2, -1)), C(t, 3));
  std::vector<int> a{1, 1};
  EXPECT_EQ(ct_x(dyson_kernel(a)).to_intpoly(), IntPoly::parse("1 + q"));
  std::vector<int> v{2, -1};
  EXPECT_EQ(coeff_x(X(t, 1, 2) * X(t, 2, -1), v), C(t, 1));
}

TEST(Extraction, CoeffIsShiftedCt) {
  std::mt19937 rng(5);
  auto t = xs(3);
  for (int it = 0; it < 50; ++it) {
    const MPoly p = random_laurent(t, rng, 8, -2, 2);
    std::vector<int> v{(int)(rng() % 5) - 2, (int)(rng() % 5) - 2, (int)(rng() % 5) - 2};
    MPoly shift = C(t, 1);
    for (int i = 1; i <= 3; ++i) shift = shift * X(t, i, -v[static_cast<std::size_t>(i - 1)]);
    EXPECT_EQ(coeff_x(p, v), ct_x(p * shift));
    const MPoly f = Q(t, 2) - C(t, 7);
    EXPECT_EQ(ct_x(p * f), ct_x(p) * f);
  }
}

TEST(Extraction, MeetInTheMiddleMatchesFullProduct) {
  for (const auto& a : compositions(3, 2)) {
    auto t = xs(3);
    const auto fs = dyson_factors(t, a);
    const MPoly full = product(fs);
    for (std::vector<int> v : {std::vector<int>{0, 0, 0}, {1, -1, 0}, {-2, 1, 1}, {3, 0, -3}}) {
      EXPECT_EQ(coeff_x_of_product(fs, v), coeff_x(full, v));
    }
  }
  std::vector<int> a{1, 2, 1};
  const auto fs = tkernel_factors(make_table({.x = 3, .t = 3}), a);
  std::vector<int> zero{0, 0, 0};
  EXPECT_EQ(coeff_x_of_product(fs, zero), ct_x(product(fs)));
}

TEST(Extraction, CoeffAux) {
  auto t = make_table({.x = 2, .s_rows = 1, .s_cols = 1});
  const MPoly s11 = MPoly::variable(t, t->s(1, 1));
  const MPoly p = C(t, 1) - s11 * X(t, 2) * X(t, 1, -1);
  const MPoly got = coeff_aux(p, Family::s, {{1}});
  auto target = make_table({.x = 2});
  EXPECT_EQ(got, -(X(target, 2) * X(target, 1, -1)));
  EXPECT_EQ(coeff_aux(p, Family::s, {{0}}), C(target, 1));
  EXPECT_THROW(coeff_aux(p, Family::s, {{0, 0}}), std::invalid_argument);
}

TEST(Substitution, QPower) {
  auto t = xs(2);
  std::vector<int> al{2, 1};
  EXPECT_EQ(subst_x_qpower(X(t, 1) * X(t, 2, -1), al).to_intpoly(), IntPoly::q_power(1));
  std::vector<int> z{0, 0};
  EXPECT_TRUE(subst_x_qpower(X(t, 2) - X(t, 1), z).is_zero());
}

TEST(Substitution, TkernelSpecialisesToDyson) {
  for (int n = 1; n <= 3; ++n)
    for (auto a : compositions(n, 2)) {
      for (int& ai : a) ++ai;  // entries 1..3 -> restrict below
      bool small = true;
      for (int ai : a) small = small && ai <= 2;
      if (!small) continue;
      const MPoly tk = tkernel(a);
      const MPoly spec = subst_family_qpower(tk, Family::t, [&](const VarDesc& d) {
        return std::optional<int>(a[static_cast<std::size_t>(d.j - 1)]);
      });
      EXPECT_EQ(spec, dyson_kernel(a));
    }
}

TEST(Substitution, TauKernelFactorisation) {
  std::vector<int> a{1, 1};
  const int n = 2, m = 2;
  const MPoly lhs = tau_kernel(a, m);
  const TablePtr t = lhs.table();
  auto y = [&](int j) { return n + j; };
  MPoly rhs = remap(tkernel(a), t);
  const MPoly one = C(t, 1);
  for (int i = 1; i <= m; ++i)
    for (int j = i + 1; j <= m; ++j) rhs = rhs * (one - X(t, y(i)) * X(t, y(j), -1));
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= m; ++j) {
      rhs = rhs * (one - MPoly::variable(t, t->s(i, j)) * X(t, y(j)) * X(t, i, -1));
      rhs = rhs * poch_factor(t, i, y(j), 0, a[static_cast<std::size_t>(i - 1)]);
    }
  EXPECT_EQ(lhs, rhs);
}

TEST(Substitution, GammaShift) {
  std::mt19937 rng(9);
  auto t = xs(3);
  for (int it = 0; it < 30; ++it) {
    const MPoly p = random_laurent(t, rng, 6, -2, 2);
    EXPECT_EQ(ct_x(gamma_shift(p)), ct_x(p));
    EXPECT_EQ(gamma_shift_inverse(gamma_shift(p)), p);
  }
  for (int n = 2; n <= 4; ++n)
    for (const auto& a : compositions(n, 2)) {
      if (n == 4 && a[0] + a[1] + a[2] + a[3] > 5) continue;
      std::vector<int> ga(a.begin() + 1, a.end());
      ga.push_back(a[0]);
      const MPoly k = dyson_kernel(a);
      EXPECT_EQ(gamma_shift_inverse(k), dyson_kernel(ga));
      MPoly g = k;
      for (int i = 0; i < n; ++i) g = gamma_shift(g);
      EXPECT_EQ(g, k);
    }
}

TEST(Kernels, Examples) {
  std::vector<int> a{1, 1};
  EXPECT_EQ(dyson_kernel(a).str(), "1 - x1*x2^-1 - q*x1^-1*x2 + q");
  EXPECT_EQ(ct_x(tkernel(a)).str(), "1 + t[1,2]");
  std::vector<int> bad{0, 1};
  EXPECT_THROW(tkernel(bad), std::invalid_argument);
  EXPECT_THROW(bg_alternating_kernel(bad), std::invalid_argument);
  std::vector<int> empty;
  EXPECT_EQ(dyson_kernel(empty).str(), "1");
}
