#include "ctkit/interp.hpp"

#include "ctkit/identities.hpp"

#include <algorithm>
#include <random>
#include <set>
#include <sstream>

namespace ctkit {

namespace {

std::size_t idx(int i) { return static_cast<std::size_t>(i); }

int choose2(int m) { return m * (m - 1) / 2; }

std::string vec_str(const std::vector<int>& v) { return composition_str(v); }

}  // namespace

std::size_t Grid::points() const {
  std::size_t p = 1;
  for (const auto& b : B) p *= b.size();
  return p;
}

void Grid::check(const std::vector<int>& d) const {
  if (d.size() != B.size()) throw std::invalid_argument("grid: dimension differs from the degree profile");
  for (std::size_t i = 0; i < B.size(); ++i) {
    if (d[i] < 0 || B[i].size() != idx(d[i] + 1))
      throw std::invalid_argument("grid: |B_" + std::to_string(i + 1) + "| != d_" + std::to_string(i + 1) + " + 1");
    if (std::set<int>(B[i].begin(), B[i].end()).size() != B[i].size())
      throw std::invalid_argument("grid: repeated exponent in B_" + std::to_string(i + 1));
  }
}

void for_each_point(const Grid& g, const std::function<void(const std::vector<int>&)>& f) {
  const int n = g.n();
  for (const auto& b : g.B)
    if (b.empty()) return;
  std::vector<std::size_t> pos(idx(n), 0);
  std::vector<int> alpha(idx(n));
  while (true) {
    for (int i = 0; i < n; ++i) alpha[idx(i)] = g.B[idx(i)][pos[idx(i)]];
    f(alpha);
    int i = n - 1;
    while (i >= 0 && ++pos[idx(i)] == g.B[idx(i)].size()) pos[idx(i--)] = 0;
    if (i < 0) return;
  }
}

IntPoly phi_prime(const std::vector<int>& b, int alpha) {
  IntPoly r(1);
  for (int e : b)
    if (e != alpha) r *= IntPoly::q_power(alpha) - IntPoly::q_power(e);
  return r;
}

QRat generic_coeff(const MPoly& f, const std::vector<int>& d, const Grid& g) {
  const VarTable& t = *f.table();
  const int n = t.n_x();
  if (g.n() != n) throw std::invalid_argument("generic_coeff: grid dimension differs from the x-group");
  g.check(d);
  int budget = 0;
  for (int di : d) budget += di;
  struct Flat {
    int qe;
    std::vector<int> xe;
    mpz_class c;
  };
  std::vector<Flat> terms;
  for (const auto& term : f.terms()) {
    Flat fl{term.mono[VarTable::q()], std::vector<int>(idx(n)), term.coeff};
    int deg = 0;
    for (int k = 1; k < t.size(); ++k) {
      const int e = term.mono[k];
      if (e == 0) continue;
      if (t.desc(k).family != Family::x) throw std::invalid_argument("generic_coeff: F involves a variable other than q and x");
      if (e < 0) throw std::invalid_argument("generic_coeff: F has a negative x-exponent");
      fl.xe[idx(t.desc(k).i - 1)] = e;
      deg += e;
    }
    if (deg > budget) throw std::invalid_argument("generic_coeff: deg F exceeds the sum of the target degrees");
    terms.push_back(std::move(fl));
  }
  QRat sum;
  for_each_point(g, [&](const std::vector<int>& alpha) {
    IntPoly value;
    for (const auto& fl : terms) {
      int e = fl.qe;
      for (int i = 0; i < n; ++i) e += fl.xe[idx(i)] * alpha[idx(i)];
      value.add_term(e, fl.c);
    }
    if (value.is_zero()) return;
    IntPoly den(1);
    for (int i = 0; i < n; ++i) den *= phi_prime(g.B[idx(i)], alpha[idx(i)]);
    sum += QRat(value, den);
  });
  return sum;
}

MPoly FactoredPoly::expand() const {
  TablePtr table = make_table({.x = n});
  std::vector<MPoly> fs{MPoly::constant(table, sign)};
  for (const auto& lf : factors) {
    Monomial m(table->size());
    m.set(VarTable::q(), lf.k);
    m.set(table->x(lf.j), 1);
    fs.push_back(MPoly::variable(table, table->x(lf.i)) - MPoly::monomial(table, m));
  }
  return product(fs);
}

std::optional<IntPoly> FactoredPoly::evaluate(const std::vector<int>& alpha) const {
  for (const auto& lf : factors)
    if (alpha[idx(lf.i - 1)] == lf.k + alpha[idx(lf.j - 1)]) return std::nullopt;
  IntPoly r(sign);
  for (const auto& lf : factors) r *= IntPoly::q_power(alpha[idx(lf.i - 1)]) - IntPoly::q_power(lf.k + alpha[idx(lf.j - 1)]);
  return r;
}

InterpResult interpolate(const FactoredPoly& f, const std::vector<int>& d, const Grid& g) {
  if (g.n() != f.n) throw std::invalid_argument("interpolate: grid dimension differs from F");
  g.check(d);
  int budget = 0;
  for (int di : d) budget += di;
  if (static_cast<int>(f.factors.size()) > budget) throw std::invalid_argument("interpolate: deg F exceeds the sum of the target degrees");
  InterpResult r;
  for_each_point(g, [&](const std::vector<int>& alpha) {
    auto v = f.evaluate(alpha);
    if (!v) return;
    IntPoly den(1);
    for (int i = 0; i < f.n; ++i) den *= phi_prime(g.B[idx(i)], alpha[idx(i)]);
    r.value += QRat(*v, den);
    r.nonzero_points.push_back(alpha);
  });
  return r;
}

std::vector<std::vector<int>> nonvanishing_points(const FactoredPoly& f, const Grid& g) {
  std::vector<std::vector<int>> out;
  for_each_point(g, [&](const std::vector<int>& alpha) {
    bool zero = false;
    for (const auto& lf : f.factors)
      if (alpha[idx(lf.i - 1)] == lf.k + alpha[idx(lf.j - 1)]) {
        zero = true;
        break;
      }
    if (!zero) out.push_back(alpha);
  });
  return out;
}

// ---------------------------------------------------------------------------

FactoredPoly dyson_F(const Composition& a, const PairSet& s) {
  for (int ai : a)
    if (ai < 1) throw std::invalid_argument("dyson_F: entries of a must be positive");
  FactoredPoly f;
  f.n = static_cast<int>(a.size());
  f.sign = s.size() % 2 ? -1 : 1;
  for (int i = 1; i <= f.n; ++i)
    for (int j = i + 1; j <= f.n; ++j) {
      for (int k = 0; k < a[idx(i - 1)]; ++k) f.factors.push_back({j, i, k});
      for (int k = 1; k < a[idx(j - 1)]; ++k) f.factors.push_back({i, j, k});
    }
  return f;
}

std::vector<int> dyson_target(const Composition& a, const PairSet& s) {
  const int n = static_cast<int>(a.size());
  const EllStats st = ell_stats(s, n);
  const int total_a = total(a);
  std::vector<int> d(idx(n));
  for (int i = 0; i < n; ++i) d[idx(i)] = total_a - a[idx(i)] - st.ell[idx(i)];
  return d;
}

DysonGrid dyson_grid(const Composition& a, const PairSet& s, FillMode mode, std::uint64_t seed) {
  const int n = static_cast<int>(a.size());
  const int total_a = total(a);
  DysonGrid r;
  r.stats = ell_stats(s, n);
  r.d = dyson_target(a, s);
  const int K = r.stats.K;
  r.tau.assign(idx(K), 0);
  for (int i = 1; i <= n; ++i) {
    const int l = r.stats.ell[idx(i - 1)];
    if (l < K) r.tau[idx(l)] = i;
  }
  // prefix[k] = a_{tau(1)} + ... + a_{tau(k)}
  std::vector<int> prefix(idx(K) + 1, 0);
  for (int k = 1; k <= K; ++k) prefix[idx(k)] = prefix[idx(k - 1)] + a[idx(r.tau[idx(k - 1)] - 1)];

  std::mt19937_64 rng(seed);
  r.grid.B.assign(idx(n), {});
  std::vector<char> in_chain(idx(n) + 1, 0);
  for (int k = 1; k <= K; ++k) {
    const int i = r.tau[idx(k - 1)];
    in_chain[idx(i)] = 1;
    const int top = total_a - a[idx(i - 1)];
    std::set<int> skip;
    for (int kk = 0; kk <= k - 2; ++kk) skip.insert(top - prefix[idx(kk)]);
    for (int e = 0; e <= top; ++e)
      if (!skip.count(e)) r.grid.B[idx(i - 1)].push_back(e);
  }
  for (int i = 1; i <= n; ++i) {
    if (in_chain[idx(i)]) continue;
    const int top = total_a - a[idx(i - 1)];
    std::set<int> skip;
    for (int kk = 0; kk <= K; ++kk) skip.insert(top - prefix[idx(kk)]);
    std::vector<int> pool;
    for (int e = 0; e <= top; ++e)
      if (!skip.count(e)) pool.push_back(e);
    const int need = r.d[idx(i - 1)] + 1;
    if (need < 0 || need > static_cast<int>(pool.size()))
      throw std::logic_error("dyson_grid: not enough admissible exponents for B_" + std::to_string(i));
    if (mode == FillMode::random) {
      std::shuffle(pool.begin(), pool.end(), rng);
      pool.resize(idx(need));
      std::sort(pool.begin(), pool.end());
    } else {
      pool.resize(idx(need));
    }
    r.grid.B[idx(i - 1)] = std::move(pool);
  }
  if (K == n) {
    std::vector<int> p(idx(n));
    for (int i = 1; i <= n; ++i) p[idx(i - 1)] = r.tau[idx(n - i)];
    r.pi = Permutation(p);
  }
  r.grid.check(r.d);
  return r;
}

namespace {

/// alpha_{pi(i)} = a_{pi(1)} + ... + a_{pi(i-1)}.
std::vector<int> surviving_point(const Composition& a, const Permutation& pi) {
  std::vector<int> alpha(a.size());
  int acc = 0;
  for (int i = 1; i <= pi.n(); ++i) {
    alpha[idx(pi(i) - 1)] = acc;
    acc += a[idx(pi(i) - 1)];
  }
  return alpha;
}

}  // namespace

DysonVerdict dyson_verdict(const Composition& a, const PairSet& s, FillMode mode, std::uint64_t seed) {
  DysonVerdict v{IntPoly(), dyson_grid(a, s, mode, seed), std::nullopt};
  const InterpResult res = interpolate(dyson_F(a, s), v.grid.d, v.grid.grid);
  const int n = static_cast<int>(a.size());
  const std::string where = " (a=" + composition_str(a) + ", S=" + pairset_str(s) + ")";
  if (res.nonzero_points.size() > 1) throw std::logic_error("dyson_verdict: more than one nonvanishing grid point" + where);
  if ((res.nonzero_points.size() == 1) != (v.grid.stats.K == n))
    throw std::logic_error("dyson_verdict: surviving points disagree with K(S)" + where);
  if (!res.nonzero_points.empty()) {
    const auto expect = surviving_point(a, *v.grid.pi);
    if (res.nonzero_points.front() != expect)
      throw std::logic_error("dyson_verdict: surviving point " + vec_str(res.nonzero_points.front()) + " != " +
                             vec_str(expect) + where);
    v.point = expect;
  }
  v.value = res.value.to_poly("dyson_verdict");
  return v;
}

IntPoly t_coefficient(const MPoly& p, const PairSet& s) {
  const int n = p.table()->spec().t;
  std::vector<std::vector<int>> e(idx(n), std::vector<int>(idx(n), 0));
  for (auto [i, j] : s) e[idx(i - 1)][idx(j - 1)] = 1;
  return coeff_aux(p, Family::t, e).to_intpoly();
}

// ---------------------------------------------------------------------------

ClosedEval closed_eval(const Composition& a, const Permutation& w) {
  const int n = static_cast<int>(a.size());
  if (w.n() != n) throw std::invalid_argument("closed_eval: size mismatch");
  for (int ai : a)
    if (ai < 1) throw std::invalid_argument("closed_eval: entries of a must be positive");
  auto ap = [&](int i) { return a[idx(w(i) - 1)]; };  // a_{pi(i)}
  // s[1..n+1], 1-based.
  std::vector<int> s(idx(n) + 2, 0);
  for (int i = 1; i <= n; ++i) s[idx(i + 1)] = s[idx(i)] + ap(i);
  const int S = s[idx(n + 1)];

  ClosedEval r;
  QRat phi(1);
  for (int i = 1; i <= n; ++i) {
    const int si = s[idx(i)];
    const int ti = choose2(si) + si * (S - s[idx(i + 1)]) - (n - i) * si;
    r.sum_t += ti;
    r.sum_s += si;
    QRat f(IntPoly::monomial(si % 2 ? -1 : 1, ti) * qfactorial(si) * qfactorial(S - s[idx(i + 1)]));
    IntPoly den(1);
    for (int j = i + 1; j <= n; ++j) den *= IntPoly::one_minus_q_power(s[idx(j + 1)] - s[idx(i + 1)]);
    phi *= f / QRat(den);
  }

  int s_lt = 0, s_gt = 0;
  QRat pairs(1);
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j) {
      if (w(i) < w(j))
        s_lt += ap(i);
      else
        s_gt += ap(i) - 1;
      r.t_split += choose2(ap(i)) + (ap(i) + ap(j) - 1) * s[idx(i)];
      pairs *= QRat(qfactorial(s[idx(j + 1)] - s[idx(i)]),
                    IntPoly::one_minus_q_power(s[idx(j + 1)] - s[idx(i)]) * qfactorial(s[idx(j)] - s[idx(i + 1)]));
    }
  const int len = static_cast<int>(recording_set(w).size());
  r.sign_exponent = len + s_lt + s_gt;
  r.f_value = QRat(IntPoly::monomial(r.sign_exponent % 2 ? -1 : 1, r.t_split)) * pairs;
  r.phi_product = phi;

  const std::string where = " (a=" + composition_str(a) + ", w=" + w.str() + ")";
  if (r.sign_exponent != r.sum_s)
    throw ClosedEvalError("closed_eval: sign identity |R|+s_<+s_> = " + std::to_string(r.sign_exponent) +
                          " but sum s_j = " + std::to_string(r.sum_s) + where);
  if (r.t_split != r.sum_t)
    throw ClosedEvalError("closed_eval: q-power identity t_<+t_> = " + std::to_string(r.t_split) +
                          " but sum t_i = " + std::to_string(r.sum_t) + where);

  const PairSet rs = recording_set(w);
  const DysonGrid g = dyson_grid(a, rs);
  if (!g.pi || *g.pi != w) throw ClosedEvalError("closed_eval: grid permutation differs from w" + where);
  const auto alpha = surviving_point(a, w);
  const auto direct = dyson_F(a, rs).evaluate(alpha);
  if (!direct || QRat(*direct) != r.f_value) throw ClosedEvalError("closed_eval: F at the surviving point differs from the product formula" + where);
  IntPoly direct_phi(1);
  for (int i = 0; i < n; ++i) direct_phi *= phi_prime(g.grid.B[idx(i)], alpha[idx(i)]);
  if (QRat(direct_phi) != r.phi_product) throw ClosedEvalError("closed_eval: phi' product differs from its closed form" + where);

  r.value = (r.f_value / r.phi_product).to_poly("closed_eval");
  if (r.value != c_w(a, w)) throw ClosedEvalError("closed_eval: result differs from c_w" + where);
  return r;
}

// ---------------------------------------------------------------------------

FactoredPoly sills_F(const Composition& a) {
  FactoredPoly f;
  f.n = static_cast<int>(a.size());
  for (int i = 1; i <= f.n; ++i)
    for (int j = i + 1; j <= f.n; ++j) {
      for (int k = 0; k < a[idx(i - 1)]; ++k) f.factors.push_back({j, i, k});
      for (int k = 1; k <= a[idx(j - 1)]; ++k) f.factors.push_back({i, j, k});
    }
  return f;
}

std::vector<int> sills_target(const Composition& a, int r) {
  const int n = static_cast<int>(a.size());
  if (r < 2 || r > n) throw std::invalid_argument("sills_target: 2 <= r <= n");
  const int total_a = total(a);
  std::vector<int> d(idx(n));
  for (int i = 0; i < n; ++i) d[idx(i)] = total_a - a[idx(i)];
  d[0] += 1;
  d[idx(r - 1)] -= 1;
  return d;
}

Grid sills_grid(const Composition& a, int r, bool exclude) {
  const int n = static_cast<int>(a.size());
  if (r < 2 || r > n) throw std::invalid_argument("sills_grid: 2 <= r <= n");
  for (int i = 1; i <= n; ++i)
    if (i != r && a[idx(i - 1)] < 1) throw std::invalid_argument("sills_grid: a_i must be positive for i != r");
  const int total_a = total(a);
  int skip = 0;
  for (int i = 2; i <= r - 1; ++i) skip += a[idx(i - 1)];
  Grid g;
  for (int i = 1; i <= n; ++i) {
    std::vector<int> b;
    const int top = total_a - a[idx(i - 1)] + (i == 1 ? 1 : 0);
    for (int e = 0; e <= top; ++e)
      if (!(exclude && i == r && e == skip)) b.push_back(e);
    g.B.push_back(std::move(b));
  }
  return g;
}

IntPoly sills_interpolate(const Composition& a, int r) {
  const Grid g = sills_grid(a, r);
  const InterpResult res = interpolate(sills_F(a), sills_target(a, r), g);
  std::vector<int> expect(a.size(), 0);
  for (std::size_t i = 1; i < a.size(); ++i) expect[i] = expect[i - 1] + a[i - 1];
  const std::string where = " (a=" + composition_str(a) + ", r=" + std::to_string(r) + ")";
  if (res.nonzero_points.size() != 1)
    throw std::logic_error("sills_interpolate: " + std::to_string(res.nonzero_points.size()) + " nonvanishing points" + where);
  if (res.nonzero_points.front() != expect)
    throw std::logic_error("sills_interpolate: surviving point " + vec_str(res.nonzero_points.front()) + where);
  return res.value.to_poly("sills_interpolate");
}

}  // namespace ctkit
