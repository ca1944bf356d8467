#include "ctkit/identities.hpp"
#include "ctkit/symfun.hpp"

#include <gtest/gtest.h>

using namespace ctkit;

namespace {

IntPoly P(const char* s) { return IntPoly::parse(s); }

std::vector<Composition> box(int n, int lo, int hi) { return compositions_in_box(n, lo, hi); }

}  // namespace

TEST(QDyson, SmallValues) {
  EXPECT_EQ(rhs_qdyson({1, 1}), P("1 + q"));
  EXPECT_EQ(rhs_qdyson({0, 0, 0}), P("1"));
  EXPECT_EQ(lhs_qdyson({2, 1}), rhs_qdyson({2, 1}));
  EXPECT_EQ(rhs_qdyson({2, 1}), P("1 + q + q^2"));
}

TEST(QDyson, BruteForceSmallGrid) {
  for (int n = 1; n <= 3; ++n)
    for (const auto& a : box(n, 0, 2)) EXPECT_EQ(lhs_qdyson(a), rhs_qdyson(a)) << composition_str(a);
}

TEST(CW, Examples) {
  EXPECT_EQ(c_w({1, 1}, Permutation({2, 1})), P("1"));
  EXPECT_EQ(c_w({1, 1}, Permutation({1, 2})), P("1"));
  for (const auto& a : box(3, 1, 3)) {
    IntPoly expect(1);
    const auto sigma = partial_sums(a);
    for (std::size_t i = 0; i < a.size(); ++i) expect *= qbinom(sigma[i] - 1, a[i] - 1);
    EXPECT_EQ(c_w(a, Permutation::identity(3)), expect);
  }
}

TEST(CW, SumAtQaIsQMultinomial) {
  for (int n = 1; n <= 3; ++n)
    for (const auto& a : box(n, 1, 3)) {
      IntPoly s;
      for (const auto& w : all_permutations(n)) s += c_w(a, w).shifted([&] {
        int e = 0;
        for (auto [i, j] : recording_set(w)) e += a[static_cast<std::size_t>(j - 1)];
        return e;
      }());
      EXPECT_EQ(s, qmultinom(a));
    }
}

TEST(Poincare, TwoVariables) {
  EXPECT_EQ(lhs_poincare_qdyson({1, 1}).str(), "1 + t[1,2]");
  EXPECT_EQ(rhs_poincare_qdyson({1, 1}).str(), "1 + t[1,2]");
}

TEST(Poincare, FullExpansionN3) {
  for (const auto& a : box(3, 1, 2)) EXPECT_EQ(lhs_poincare_qdyson(a), rhs_poincare_qdyson(a)) << composition_str(a);
}

TEST(Poincare, SupportIsRecordingSets) {
  const Composition a{2, 1, 2};
  const MPoly lhs = lhs_poincare_qdyson(a);
  const TablePtr table = lhs.table();
  for (unsigned long mask = 0; mask < 8; ++mask) {
    const PairSet s = pairset_from_mask(3, mask);
    const IntPoly c = coeff_aux(lhs, Family::t, [&] {
                        std::vector<std::vector<int>> e(3, std::vector<int>(3, 0));
                        for (auto [i, j] : s) e[static_cast<std::size_t>(i - 1)][static_cast<std::size_t>(j - 1)] = 1;
                        return e;
                      }())
                          .to_intpoly();
    EXPECT_EQ(c.is_zero(), ell_stats(s, 3).K < 3) << pairset_str(s);
  }
}

TEST(Poincare, Specialisations) {
  for (const auto& a : box(3, 1, 2)) {
    const MPoly rhs = rhs_poincare_qdyson(a);
    EXPECT_EQ(specialise_t(rhs, a, TMode::qa).to_intpoly(), qmultinom(a));
    EXPECT_EQ(specialise_t(rhs, a, TMode::zero).to_intpoly(), c_w(a, Permutation::identity(3)));
  }
}

TEST(Poincare, EqualParameters) {
  for (int k = 1; k <= 2; ++k) EXPECT_EQ(lhs_poincare_qdyson({k, k, k}), rhs_equal_params(3, k));
}

TEST(Poincare, WValues) {
  EXPECT_EQ(poincare_W(1).str(), "1");
  EXPECT_EQ(poincare_W(2).str(), "1 + t[1,2]");
  EXPECT_EQ(poincare_single(3), P("1 + 2*q + 2*q^2 + q^3"));
  for (int n = 1; n <= 4; ++n) {
    const MPoly w = poincare_W(n);
    const MPoly single = subst_family_qpower(w, Family::t, [](const VarDesc&) -> std::optional<int> { return 1; });
    EXPECT_EQ(single.to_intpoly(), poincare_single(n));
  }
}

TEST(BG, General) {
  for (const auto& a : box(3, 1, 2))
    for (unsigned mask = 0; mask < 8; ++mask) {
      std::vector<int> in{static_cast<int>(mask & 1), static_cast<int>(mask >> 1 & 1), static_cast<int>(mask >> 2 & 1)};
      EXPECT_EQ(lhs_bg_general(a, in), rhs_bg_general(a, in));
    }
  EXPECT_EQ(rhs_bg_general({2, 1}, {0, 0}), qmultinom(std::vector<int>{2, 1}));
  EXPECT_EQ(rhs_bg_general({2, 1, 3}, {1, 1, 1}), c_w({2, 1, 3}, Permutation::identity(3)));
}

TEST(BG, Alternating) {
  EXPECT_EQ(rhs_bg_alternating({2, 1}), P("-q"));
  EXPECT_TRUE(rhs_bg_alternating({1, 1}).is_zero());
  EXPECT_TRUE(lhs_bg_alternating({1, 1}).is_zero());
  for (const auto& a : box(3, 1, 2)) EXPECT_EQ(lhs_bg_alternating(a), rhs_bg_alternating(a)) << composition_str(a);
}

TEST(Tournaments, AllOnThreeVertices) {
  int nontransitive = 0;
  for (const auto& t : Tournament::all(3)) {
    if (!t.is_transitive()) ++nontransitive;
    for (const auto& a : box(3, 1, 2)) EXPECT_EQ(lhs_tournament(t, a), rhs_tournament(t, a));
  }
  EXPECT_EQ(nontransitive, 2);
  EXPECT_EQ(rhs_tournament(Tournament(3), {2, 1, 2}), c_w({2, 1, 2}, Permutation::identity(3)));
}

TEST(DVLambda, Basics) {
  EXPECT_TRUE(D_vlambda({1, 0}, {2}, {1, 1}, TMode::qa).is_zero());
  EXPECT_TRUE(D_vlambda({0, 2}, {2}, {1, 0}, TMode::qa).is_zero());
  for (int a = 0; a <= 3; ++a)
    for (int m = 0; m <= 3; ++m)
      EXPECT_EQ(D_vlambda({m}, {m}, {a}, TMode::qa).to_intpoly(), hook_content({m}, a)) << a << ' ' << m;
}

TEST(DVLambda, ModesAgree) {
  const Composition a{1, 2};
  for (const auto& v : compositions_of(2, 2)) {
    const MPoly sym = D_vlambda(v, {2}, a, TMode::symbolic);
    EXPECT_EQ(specialise_t(sym, a, TMode::qa), D_vlambda(v, {2}, a, TMode::qa));
    EXPECT_EQ(specialise_t(sym, a, TMode::zero), D_vlambda(v, {2}, a, TMode::zero));
  }
}

TEST(Kadell, SmallGrid) {
  for (int n = 1; n <= 3; ++n)
    for (const auto& a : box(n, 0, 2))
      for (int m = 1; m <= (n == 3 ? 2 : 3); ++m)
        for (const auto& v : compositions_of(n, m))
          EXPECT_EQ(D_vlambda(v, {m}, a, TMode::qa).to_intpoly(), rhs_kadell(v, a))
              << composition_str(a) << " v=" << composition_str(v);
}

TEST(Kadell, Examples) {
  for (int a = 1; a <= 3; ++a)
    for (int m = 1; m <= 3; ++m) EXPECT_EQ(rhs_kadell({m}, {a}), qbinom(a + m - 1, m));
  EXPECT_TRUE(rhs_kadell({1, 1, 0}, {1, 2, 1}).is_zero());
  EXPECT_TRUE(rhs_kadell({0, 2}, {1, 0}).is_zero());
  EXPECT_THROW(rhs_kadell({0, 0}, {1, 1}), std::invalid_argument);
}

TEST(Kadell, ReductionDropsZeroEntries) {
  for (const auto& a : box(3, 0, 2)) {
    std::vector<int> keep;
    for (int i = 0; i < 3; ++i)
      if (a[static_cast<std::size_t>(i)] != 0) keep.push_back(i);
    if (keep.size() != 2) continue;
    for (int m = 1; m <= 2; ++m)
      for (const auto& v : compositions_of(3, m)) {
        const IntPoly full = D_vlambda(v, {m}, a, TMode::qa).to_intpoly();
        bool zero_on_i = true;
        Composition vi, ai;
        for (int i = 0; i < 3; ++i) {
          if (a[static_cast<std::size_t>(i)] == 0) {
            zero_on_i = zero_on_i && v[static_cast<std::size_t>(i)] == 0;
          } else {
            vi.push_back(v[static_cast<std::size_t>(i)]);
            ai.push_back(a[static_cast<std::size_t>(i)]);
          }
        }
        const IntPoly reduced = zero_on_i ? D_vlambda(vi, {m}, ai, TMode::qa).to_intpoly() : IntPoly();
        EXPECT_EQ(full, reduced);
      }
  }
}

TEST(Kadell, SymbolicT) {
  for (int n = 2; n <= 3; ++n)
    for (const auto& a : box(n, 1, n == 2 ? 2 : 1))
      for (int m = 1; m <= 2; ++m)
        for (int k = 1; k <= n; ++k) {
          Composition v(static_cast<std::size_t>(n), 0);
          v[static_cast<std::size_t>(k - 1)] = m;
          const MPoly rhs = rhs_kadell_t(v, a);
          EXPECT_EQ(D_vlambda(v, {m}, a, TMode::symbolic), rhs) << composition_str(a) << " k=" << k;
          EXPECT_EQ(specialise_t(rhs, a, TMode::qa).to_intpoly(), rhs_kadell(v, a));
        }
  EXPECT_EQ(rhs_kadell_t({0, 1}, {1, 1}).size(), 1U);
  EXPECT_THROW(rhs_kadell_t({0, 0}, {1, 1}), std::invalid_argument);
}

namespace {

/// t_ij for i > j means 1/t_ji; the image is returned as a Laurent monomial.
Monomial t_entry(const TablePtr& table, int i, int j) {
  Monomial m(table->size());
  if (i < j)
    m.set(table->t(i, j), 1);
  else
    m.set(table->t(j, i), -1);
  return m;
}

}  // namespace

TEST(Kadell, CovarianceUnderPermutations) {
  // D_v(a; t) = t_{R(w)} D_{w(v)}(w(a); w(t)) with w(t)_ij = t_{w(i) w(j)}.
  for (int n = 2; n <= 3; ++n)
    for (const auto& a : box(n, 1, 2))
      for (const auto& v : compositions_of(n, 1))
        for (const auto& w : all_permutations(n)) {
          const TablePtr table = t_table(n);
          const MPoly lhs = D_vlambda(v, {1}, a, TMode::symbolic);
          const MPoly moved = D_vlambda(act(w, v), {1}, act(w, a), TMode::symbolic);
          std::vector<std::optional<Monomial>> images(static_cast<std::size_t>(table->size()));
          images[0] = Monomial(table->size());
          images[0]->set(0, 1);
          for (int i = 1; i <= n; ++i)
            for (int j = i + 1; j <= n; ++j) images[static_cast<std::size_t>(table->t(i, j))] = t_entry(table, w(i), w(j));
          const MPoly rhs = t_monomial(table, recording_set(w)) * substitute(moved, table, images);
          EXPECT_EQ(lhs, rhs) << composition_str(a) << " w=" << w.str();
        }
}

TEST(Strict, AgainstBruteForce) {
  for (int n = 2; n <= 3; ++n)
    for (const auto& a : box(n, 1, 2))
      for (const auto& lambda : std::vector<Composition>(n == 2 ? std::vector<Composition>{{1, 0}, {2, 0}, {2, 1}, {3, 1}}
                                                                 : std::vector<Composition>{{2, 1, 0}, {3, 1, 0}}))
        for (const auto& w : all_permutations(n)) {
          const Composition v = strict_position(lambda, w);
          EXPECT_EQ(D_vlambda(v, lambda, a, TMode::qa).to_intpoly(), rhs_strict(lambda, a, w))
              << composition_str(a) << " l=" << composition_str(lambda) << " w=" << w.str();
          EXPECT_EQ(D_vlambda(v, lambda, a, TMode::symbolic), rhs_strict_t(lambda, a, w));
        }
}

TEST(Strict, LongestElement) {
  const Composition lambda{2, 0}, a{2, 1};
  // q^{a_2} qbinom(2 + 2 + 1 - 1, 1) qbinom(0 + 1 - 1, 0)
  EXPECT_EQ(rhs_strict(lambda, a, Permutation::longest(2)), qbinom(4, 1).shifted(1));
  EXPECT_EQ(rhs_strict({0}, {3}, Permutation::identity(1)), P("1"));
  EXPECT_THROW(rhs_strict({1, 1}, {1, 1}, Permutation::identity(2)), std::invalid_argument);
}

TEST(Props, LawSolutions) {
  const ZeroOneMatrix k({{1, 1}, {0, 0}});
  const auto sols = solve_law(k, 2);
  ASSERT_EQ(sols.size(), 1U);
  EXPECT_EQ(sols[0].lambda, (Composition{2, 0}));
  EXPECT_EQ(sols[0].w, Permutation::identity(2));
  // c + delta = (1, 1): no solution.
  EXPECT_TRUE(solve_law(ZeroOneMatrix({{0, 1}, {0, 0}}), 2).empty());
}

TEST(Props, KappaZeroAndVnu) {
  const Composition a{1, 1};
  const MPoly d0 = D0_tau(a, 2);
  for (const auto& kappa : ZeroOneMatrix::all(2, 2)) {
    const auto sols = solve_law(kappa, 2);
    EXPECT_LE(sols.size(), 1U);
    for (const auto& s : sols) {
      EXPECT_EQ(D_vlambda(kappa.row_sums(), s.lambda, a, TMode::symbolic), prop_kappa_rhs(d0, kappa, s.w))
          << kappa.str();
      if (!kappa.is_left_justified()) EXPECT_TRUE(prop_ct_zero_verify(kappa, s.lambda, a));
    }
  }
  for (int v1 = 0; v1 <= 2; ++v1)
    for (int v2 = 0; v2 <= 2; ++v2) EXPECT_TRUE(prop_ct_vnu_verify({v1, v2}, a, 2));
  EXPECT_TRUE(D_vlambda({1, 1}, {2}, a, TMode::symbolic).is_zero());
}

TEST(Props, BeyondKadellContributors) {
  const auto ws = beyond_kadell_contributors({0, 1, 3, 3}, 3);
  ASSERT_EQ(ws.size(), 2U);
  EXPECT_EQ(ws[0].str(), "1,5,2,6,7,3,4");
  EXPECT_EQ(ws[1].str(), "1,5,2,6,7,4,3");
}

TEST(Sills, HandValues) {
  EXPECT_EQ(rhs_sills({1, 1}, 2, 1), P("-1"));
  EXPECT_EQ(rhs_sills({1, 1}, 1, 2), P("-q"));
  EXPECT_EQ(lhs_sills({1, 1}, 2, 1), P("-1"));
  EXPECT_EQ(lhs_sills({1, 1}, 1, 2), P("-q"));
}

TEST(Sills, BruteForce) {
  for (int n = 2; n <= 3; ++n)
    for (const auto& a : box(n, 0, 2))
      for (int r = 1; r <= n; ++r)
        for (int s = 1; s <= n; ++s)
          if (r != s) EXPECT_EQ(lhs_sills(a, r, s), rhs_sills(a, r, s)) << composition_str(a) << ' ' << r << s;
}

TEST(LXZ, BruteForceAndSillsAgreement) {
  EXPECT_EQ(lxz_vectors(2), (std::vector<Composition>{{1, -1}}));
  EXPECT_EQ(lxz_vectors(3), (std::vector<Composition>{{1, -2, 1}, {1, -1, 0}, {1, 0, -1}, {1, 1, -2}}));
  for (int n = 2; n <= 3; ++n)
    for (const auto& a : box(n, 0, 2)) {
      for (const auto& v : lxz_vectors(n)) EXPECT_EQ(dyson_coefficient(a, v), rhs_lxz(v, a)) << composition_str(v);
      for (int r = 2; r <= n; ++r) {
        Composition v(static_cast<std::size_t>(n), 0);
        v[0] = 1;
        v[static_cast<std::size_t>(r - 1)] = -1;
        EXPECT_EQ(rhs_lxz(v, a), rhs_sills(a, r, 1));
      }
    }
}

TEST(USum, SmallCases) {
  for (int n = 1; n <= 4; ++n) {
    EXPECT_TRUE(usum_verify(n)) << n;
    for (int k = 1; k <= n; ++k) EXPECT_TRUE(usum_k_verify(n, k)) << n << ' ' << k;
    const auto alt = usum_alternating_cleared(n);
    EXPECT_EQ(alt.lhs, alt.rhs) << n;
  }
}

TEST(Reports, Json) {
  auto r = make_report("q-dyson", {{"a", {1, 1}}}, "1 + q", "1 + q");
  EXPECT_TRUE(r.equal);
  EXPECT_EQ(report_json(r, false).dump(),
            R"({"identity":"q-dyson","params":{"a":[1,1]},"lhs":"1 + q","rhs":"1 + q","equal":true,"status":"ok"})");
  EXPECT_TRUE(report_json(r, true).contains("millis"));
  EXPECT_EQ(make_report("x", {}, "1", "2").status, "mismatch");
}
