#include "ctkit/identities.hpp"

#include "ctkit/symfun.hpp"

#include <algorithm>
#include <bit>
#include <functional>
#include <sstream>
#include <stdexcept>

namespace ctkit {

namespace {

std::size_t idx(int i) { return static_cast<std::size_t>(i); }

void require_positive(const Composition& a, const char* what) {
  for (int ai : a)
    if (ai < 1) throw std::invalid_argument(std::string(what) + ": entries of a must be positive");
}

void require_nonnegative(const Composition& a, const char* what) {
  for (int ai : a)
    if (ai < 0) throw std::invalid_argument(std::string(what) + ": entries must be nonnegative");
}

std::vector<int> zeros(int n) { return std::vector<int>(idx(n), 0); }

QRat ratio(int num_exp, int den_exp) {
  return QRat(IntPoly::one_minus_q_power(num_exp), IntPoly::one_minus_q_power(den_exp));
}

/// a_{w(1)} + ... + a_{w(i)} for i = 1..n.
std::vector<int> permuted_sums(const Composition& a, const Permutation& w) { return partial_sums(act(w, a)); }

IntPoly ct_of(const std::vector<MPoly>& factors, int n) {
  if (factors.empty()) return IntPoly(1);
  return coeff_x_of_product(factors, zeros(n)).to_intpoly();
}

int sum_over_recording(const Composition& a, const Permutation& w) {
  int e = 0;
  for (auto [i, j] : recording_set(w)) e += a[idx(j - 1)];
  return e;
}

}  // namespace

TMode parse_tmode(std::string_view s) {
  if (s == "symbolic") return TMode::symbolic;
  if (s == "qa") return TMode::qa;
  if (s == "zero") return TMode::zero;
  throw std::invalid_argument("unknown t-mode: " + std::string(s));
}

std::string tmode_name(TMode m) {
  switch (m) {
    case TMode::symbolic: return "symbolic";
    case TMode::qa: return "qa";
    case TMode::zero: return "zero";
  }
  return "?";
}

TablePtr t_table(int n) { return make_table({.t = n}); }

MPoly t_monomial(const TablePtr& table, const PairSet& s) {
  Monomial m(table->size());
  for (auto [i, j] : s) m.add(table->t(i, j), 1);
  return MPoly::monomial(table, m);
}

MPoly specialise_t(const MPoly& p, const Composition& a, TMode mode) {
  switch (mode) {
    case TMode::symbolic: return p;
    case TMode::qa:
      return subst_family_qpower(p, Family::t, [&](const VarDesc& d) -> std::optional<int> { return a.at(idx(d.j - 1)); });
    case TMode::zero:
      return subst_family_qpower(p, Family::t, [](const VarDesc&) -> std::optional<int> { return std::nullopt; });
  }
  return p;
}

// ---------------------------------------------------------------------------

IntPoly rhs_qdyson(const Composition& a) {
  require_nonnegative(a, "rhs_qdyson");
  return qmultinom(a);
}

IntPoly lhs_qdyson(const Composition& a) {
  require_nonnegative(a, "lhs_qdyson");
  const int n = static_cast<int>(a.size());
  return ct_of(dyson_factors(make_table({.x = n}), a), n);
}

IntPoly c_w(const Composition& a, const Permutation& w) {
  require_positive(a, "c_w");
  if (w.n() != static_cast<int>(a.size())) throw std::invalid_argument("c_w: size mismatch");
  const auto ws = permuted_sums(a, w);
  QRat r(qmultinom(a));
  for (std::size_t i = 0; i < a.size(); ++i) r *= ratio(a[i], ws[i]);
  return r.to_poly("c_w");
}

MPoly rhs_poincare_qdyson(const Composition& a) {
  const int n = static_cast<int>(a.size());
  TablePtr table = t_table(n);
  MPoly r(table);
  for (const auto& w : all_permutations(n)) r += scale_by_intpoly(t_monomial(table, recording_set(w)), c_w(a, w));
  return r;
}

MPoly lhs_poincare_qdyson(const Composition& a) {
  require_positive(a, "lhs_poincare_qdyson");
  const int n = static_cast<int>(a.size());
  TablePtr table = make_table({.x = n, .t = n});
  const auto fs = tkernel_factors(table, a);
  if (fs.empty()) return MPoly::constant(t_table(n), 1);
  return remap(coeff_x_of_product(fs, zeros(n)), t_table(n));
}

MPoly poincare_W(int n) {
  if (n < 1) throw std::invalid_argument("poincare_W: n >= 1");
  TablePtr table = t_table(n);
  MPoly r(table);
  for (const auto& w : all_permutations(n)) r += t_monomial(table, recording_set(w));
  return r;
}

IntPoly poincare_single(int n) {
  QRat r(1);
  for (int i = 2; i <= n; ++i) r *= ratio(i, 1);
  return r.to_poly("poincare_single");
}

MPoly rhs_equal_params(int n, int k) {
  if (k < 1) throw std::invalid_argument("rhs_equal_params: k >= 1");
  IntPoly c(1);
  for (int i = 1; i <= n - 1; ++i) c *= qbinom((i + 1) * k - 1, k - 1);
  return scale_by_intpoly(poincare_W(n), c);
}

IntPoly rhs_bg_general(const Composition& a, const std::vector<int>& in_i) {
  require_positive(a, "rhs_bg_general");
  if (in_i.size() != a.size()) throw std::invalid_argument("rhs_bg_general: mask size");
  const auto sigma = partial_sums(a);
  QRat r(qmultinom(a));
  for (std::size_t i = 0; i < a.size(); ++i)
    if (in_i[i]) r *= ratio(a[i], sigma[i]);
  return r.to_poly("rhs_bg_general");
}

IntPoly lhs_bg_general(const Composition& a, const std::vector<int>& in_i) {
  const int n = static_cast<int>(a.size());
  return ct_of(bg_general_factors(make_table({.x = n}), a, in_i), n);
}

IntPoly rhs_bg_alternating(const Composition& a) {
  require_positive(a, "rhs_bg_alternating");
  QRat r(qmultinom(a));
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = i + 1; j < a.size(); ++j)
      r *= QRat(IntPoly::q_power(a[i]) - IntPoly::q_power(a[j]), IntPoly::one_minus_q_power(a[i] + a[j]));
  return r.to_poly("rhs_bg_alternating");
}

IntPoly lhs_bg_alternating(const Composition& a) {
  const int n = static_cast<int>(a.size());
  return ct_of(bg_alternating_factors(make_table({.x = n}), a), n);
}

IntPoly rhs_tournament(const Tournament& t, const Composition& a) {
  require_positive(a, "rhs_tournament");
  if (t.n() != static_cast<int>(a.size())) throw std::invalid_argument("rhs_tournament: size mismatch");
  const auto w = t.winner();
  return w ? c_w(a, *w) : IntPoly();
}

IntPoly lhs_tournament(const Tournament& t, const Composition& a) {
  const int n = static_cast<int>(a.size());
  const auto edges = t.edges();
  return ct_of(tournament_factors(make_table({.x = n}), edges, a), n);
}

// ---------------------------------------------------------------------------

MPoly D_vlambda(const Composition& v, const Composition& lambda, const Composition& a, TMode mode) {
  const int n = static_cast<int>(a.size());
  if (static_cast<int>(v.size()) != n) throw std::invalid_argument("D_vlambda: v and a differ in length");
  if (!is_partition(lambda)) throw std::invalid_argument("D_vlambda: lambda is not a partition");
  require_nonnegative(v, "D_vlambda");
  const bool symbolic = mode == TMode::symbolic;
  TablePtr work = make_table({.x = n, .t = symbolic ? n : 0});
  TablePtr target = t_table(symbolic ? n : 0);
  std::vector<MPoly> fs;
  if (mode == TMode::qa) {
    require_nonnegative(a, "D_vlambda");
    fs = dyson_factors(work, a);
  } else if (symbolic) {
    fs = tkernel_factors(work, a);
  } else {
    TablePtr with_t = make_table({.x = n, .t = n});
    for (const auto& f : tkernel_factors(with_t, a)) fs.push_back(remap(specialise_t(f, a, TMode::zero), work));
  }
  fs.push_back(schur_principal(lambda, work, a));
  MPoly r = remap(coeff_x_of_product(fs, v), target);
  if (total(v) != total(lambda) && !r.is_zero())
    throw std::logic_error("D_vlambda: nonzero coefficient off the homogeneous degree");
  return r;
}

namespace {

/// Position (1-based) of the single nonzero entry of v, or 0.
int single_support(const Composition& v) {
  int k = 0;
  for (std::size_t i = 0; i < v.size(); ++i)
    if (v[i] != 0) {
      if (k) return 0;
      k = static_cast<int>(i) + 1;
    }
  return k;
}

QRat kadell_m_factor(const Composition& a, int k, int m) {
  const int s = total(a);
  return QRat(qpoch(s, m), qpoch(s - a[idx(k - 1)] + 1, m));
}

}  // namespace

IntPoly rhs_kadell(const Composition& v, const Composition& a) {
  require_nonnegative(v, "rhs_kadell");
  require_nonnegative(a, "rhs_kadell");
  if (v.size() != a.size()) throw std::invalid_argument("rhs_kadell: size mismatch");
  const int m = total(v);
  if (m < 1) throw std::invalid_argument("rhs_kadell: |v| >= 1 required");
  const int k = single_support(v);
  if (k == 0 || a[idx(k - 1)] == 0) return IntPoly();
  const auto sigma = partial_sums(a);
  const int s = sigma.back();
  QRat r(IntPoly::q_power(s - sigma[idx(k - 1)]));
  r *= QRat(IntPoly::one_minus_q_power(a[idx(k - 1)]), IntPoly::one_minus_q_power(s));
  r *= kadell_m_factor(a, k, m);
  r *= QRat(qmultinom(a));
  return r.to_poly("rhs_kadell");
}

MPoly rhs_kadell_t(const Composition& v, const Composition& a) {
  require_positive(a, "rhs_kadell_t");
  if (v.size() != a.size()) throw std::invalid_argument("rhs_kadell_t: size mismatch");
  const int m = total(v);
  const int k = single_support(v);
  if (m < 1 || k == 0) throw std::invalid_argument("rhs_kadell_t: v must be m e_k with m >= 1");
  const int n = static_cast<int>(a.size());
  const auto sigma = partial_sums(a);
  QRat common = kadell_m_factor(a, k, m);
  for (int i = 0; i < n; ++i) common *= QRat(qbinom(sigma[idx(i)] - 1, a[idx(i)] - 1));
  TablePtr table = t_table(n);
  MPoly r(table);
  for (const auto& w : all_permutations(n)) {
    if (w(n) != k) continue;
    const auto ws = permuted_sums(a, w);
    QRat c = common;
    for (int i = 0; i < n; ++i) c *= ratio(sigma[idx(i)], ws[idx(i)]);
    r += scale_by_intpoly(t_monomial(table, recording_set(w)), c.to_poly("rhs_kadell_t"));
  }
  return r;
}

namespace {

IntPoly strict_product(const Composition& lambda, const Composition& a, const Permutation& w) {
  require_positive(a, "rhs_strict");
  if (!is_strict(lambda)) throw std::invalid_argument("rhs_strict: lambda is not strict");
  if (lambda.size() != a.size() || w.n() != static_cast<int>(a.size()))
    throw std::invalid_argument("rhs_strict: size mismatch");
  const Composition lbar = reversed(lambda);
  const Composition wa = act(w, a);
  const auto ws = partial_sums(wa);
  IntPoly r(1);
  for (std::size_t i = 0; i < a.size(); ++i) r *= qbinom(lbar[i] + ws[i] - 1, wa[i] - 1);
  return r;
}

}  // namespace

IntPoly rhs_strict(const Composition& lambda, const Composition& a, const Permutation& w) {
  return strict_product(lambda, a, w).shifted(sum_over_recording(a, w));
}

MPoly rhs_strict_t(const Composition& lambda, const Composition& a, const Permutation& w) {
  TablePtr table = t_table(static_cast<int>(a.size()));
  return scale_by_intpoly(t_monomial(table, recording_set(w)), strict_product(lambda, a, w));
}

Composition strict_position(const Composition& lambda, const Permutation& w) {
  return act(w.inverse(), reversed(lambda));
}

// ---------------------------------------------------------------------------

MPoly D0_tau(const Composition& a, int m) {
  const int n = static_cast<int>(a.size());
  const auto fs = tau_kernel_factors(a, m);
  TablePtr target = make_table({.t = n, .s_rows = n, .s_cols = m});
  if (fs.empty()) return MPoly::constant(target, 1);
  return remap(coeff_x_of_product(fs, zeros(n + m)), target);
}

std::vector<LawSolution> solve_law(const ZeroOneMatrix& kappa, int a_total) {
  const int m = kappa.cols();
  const Composition c = kappa.col_sums();
  const Composition delta = staircase(m);
  Composition cd(idx(m));
  for (int j = 0; j < m; ++j) cd[idx(j)] = c[idx(j)] + delta[idx(j)];
  std::vector<LawSolution> out;
  for (const auto& w : all_permutations(m)) {
    const Composition wc = act(w, cd);
    Composition mu(idx(m));
    for (int j = 0; j < m; ++j) mu[idx(j)] = wc[idx(j)] - delta[idx(j)];
    if (!is_partition(mu) || (m > 0 && mu.back() < 0)) continue;
    if (m > 0 && mu.front() > a_total) continue;
    out.push_back({conjugate(mu, a_total), w});
  }
  return out;
}

MPoly prop_kappa_rhs(const MPoly& d0_tau, const ZeroOneMatrix& kappa, const Permutation& w) {
  MPoly r = coeff_aux(d0_tau, Family::s, kappa.to_rows());
  return length(w) % 2 ? -r : r;
}

MPoly prop_vnu_rhs(const MPoly& d0_tau, const Composition& v, int m) {
  return coeff_aux(d0_tau, Family::s, left_justified_from_rows(v, m).to_rows());
}

bool prop_ct_kappa_verify(const ZeroOneMatrix& kappa, const Composition& lambda, const Permutation& w,
                          const Composition& a) {
  bool solves = false;
  for (const auto& sol : solve_law(kappa, total(a))) solves = solves || (sol.lambda == lambda && sol.w == w);
  if (!solves) throw std::invalid_argument("prop_ct_kappa_verify: (lambda, w) does not solve the column law");
  const MPoly lhs = D_vlambda(kappa.row_sums(), lambda, a, TMode::symbolic);
  return lhs == prop_kappa_rhs(D0_tau(a, kappa.cols()), kappa, w);
}

bool prop_ct_zero_verify(const ZeroOneMatrix& kappa, const Composition& lambda, const Composition& a) {
  bool solves = false;
  for (const auto& sol : solve_law(kappa, total(a))) solves = solves || sol.lambda == lambda;
  if (!solves) throw std::invalid_argument("prop_ct_zero_verify: lambda does not solve the column law");
  if (kappa.is_left_justified()) throw std::invalid_argument("prop_ct_zero_verify: kappa is left-justified");
  return D_vlambda(kappa.row_sums(), lambda, a, TMode::symbolic).is_zero() &&
         coeff_aux(D0_tau(a, kappa.cols()), Family::s, kappa.to_rows()).is_zero();
}

bool prop_ct_vnu_verify(const Composition& v, const Composition& a, int m) {
  for (int vi : v)
    if (vi < 0 || vi > m) throw std::invalid_argument("prop_ct_vnu_verify: entries of v must lie in [0, m]");
  return D_vlambda(v, sorted_desc(v), a, TMode::symbolic) == prop_vnu_rhs(D0_tau(a, m), v, m);
}

std::vector<Permutation> beyond_kadell_contributors(const Composition& lambda_bar, int m) {
  const int n = static_cast<int>(lambda_bar.size());
  PairSet want;
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= lambda_bar[idx(i - 1)]; ++j) want.emplace_back(i, n + j);
  std::sort(want.begin(), want.end());
  std::vector<Permutation> out;
  for (const auto& w : all_permutations(n + m)) {
    PairSet spart;
    bool ok = true;
    for (auto [i, j] : recording_set(w)) {
      if (i > n) {
        ok = false;
        break;
      }
      if (j > n) spart.emplace_back(i, j);
    }
    if (ok && spart == want) out.push_back(w);
  }
  return out;
}

// ---------------------------------------------------------------------------

IntPoly dyson_coefficient(const Composition& a, const Composition& v) {
  require_nonnegative(a, "dyson_coefficient");
  const int n = static_cast<int>(a.size());
  if (static_cast<int>(v.size()) != n) throw std::invalid_argument("dyson_coefficient: size mismatch");
  auto fs = dyson_factors(make_table({.x = n}), a);
  if (fs.empty()) fs.push_back(MPoly::constant(make_table({.x = n}), 1));
  return coeff_x_of_product(fs, v).to_intpoly();
}

IntPoly rhs_sills(const Composition& a, int r, int s) {
  require_nonnegative(a, "rhs_sills");
  const int n = static_cast<int>(a.size());
  if (r < 1 || s < 1 || r > n || s > n || r == s) throw std::invalid_argument("rhs_sills: need distinct r, s in [1, n]");
  int e = r < s ? 1 : 0;
  // a_{s+1} + ... + a_{r-1}, read cyclically.
  for (int i = s % n + 1; i != r; i = i % n + 1) e += a[idx(i - 1)];
  const int total_a = total(a);
  QRat v(IntPoly::monomial(-1, e));
  v *= ratio(a[idx(s - 1)], 1 + total_a - a[idx(s - 1)]);
  v *= QRat(qmultinom(a));
  return v.to_poly("rhs_sills");
}

IntPoly lhs_sills(const Composition& a, int r, int s) {
  Composition v(a.size(), 0);
  v.at(idx(s - 1)) += 1;
  v.at(idx(r - 1)) -= 1;
  return dyson_coefficient(a, v);
}

bool lxz_valid(const Composition& v) {
  if (v.empty() || v.front() != 1 || total(v) != 0) return false;
  for (int vi : v)
    if (vi > 1) return false;
  return true;
}

std::vector<Composition> lxz_vectors(int n) {
  std::vector<Composition> out;
  for (auto& v : compositions_in_box(n, -(n - 1), 1))
    if (lxz_valid(v)) out.push_back(std::move(v));
  return out;
}

IntPoly rhs_lxz(const Composition& v, const Composition& a) {
  require_nonnegative(a, "rhs_lxz");
  if (!lxz_valid(v) || v.size() != a.size()) throw std::invalid_argument("rhs_lxz: invalid v");
  const int n = static_cast<int>(a.size());
  const int total_a = total(a);
  const auto vs = partial_sums(v);
  std::vector<int> ones;
  for (int i = 0; i < n; ++i)
    if (v[idx(i)] == 1) ones.push_back(i);
  QRat sum;
  for (unsigned long mask = 0; mask < (1UL << ones.size()); ++mask) {
    std::vector<char> in_j(idx(n), 0);
    int aj = 0, size = 0;
    for (std::size_t b = 0; b < ones.size(); ++b)
      if (mask >> b & 1) {
        in_j[idx(ones[b])] = 1;
        aj += a[idx(ones[b])];
        ++size;
      }
    // E(J) = sum_{i <= j, j not in J} v_i a_j.
    int e = 0;
    for (int j = 0; j < n; ++j)
      if (!in_j[idx(j)]) e += vs[idx(j)] * a[idx(j)];
    sum += QRat(IntPoly::monomial(size % 2 ? -1 : 1, e)) * ratio(aj, 1 + total_a - aj);
  }
  return (sum * QRat(qmultinom(a))).to_poly("rhs_lxz");
}

// ---------------------------------------------------------------------------

namespace {

MPoly product_or_one(const TablePtr& table, const std::vector<MPoly>& fs) {
  return fs.empty() ? MPoly::constant(table, 1) : product(fs);
}

struct USetup {
  TablePtr table;
  int n;
  std::vector<MPoly> one_minus;  ///< indexed by subset mask
  MPoly u_of(unsigned mask) const {
    Monomial m(table->size());
    for (int i = 1; i <= n; ++i)
      if (mask >> (i - 1) & 1) m.set(table->u(i), 1);
    return MPoly::monomial(table, m);
  }
};

USetup u_setup(int n) {
  if (n < 1 || n > 5) throw std::invalid_argument("usum: 1 <= n <= 5");
  USetup s{make_table({.u = n}), n, {}};
  const MPoly one = MPoly::constant(s.table, 1);
  for (unsigned mask = 0; mask < (1U << n); ++mask) s.one_minus.push_back(one - s.u_of(mask));
  return s;
}

/// prod_i (1 - u_{w(i)}) times prod over nonempty A that are not prefix sets of w.
MPoly cleared_term(const USetup& s, const Permutation& w) {
  std::vector<char> prefix(s.one_minus.size(), 0);
  unsigned acc = 0;
  std::vector<MPoly> fs;
  for (int i = 1; i <= s.n; ++i) {
    acc |= 1U << (w(i) - 1);
    prefix[acc] = 1;
    fs.push_back(s.one_minus[1U << (w(i) - 1)]);
  }
  for (unsigned mask = 1; mask < s.one_minus.size(); ++mask)
    if (!prefix[mask]) fs.push_back(s.one_minus[mask]);
  return product_or_one(s.table, fs);
}

MPoly u_recording(const USetup& s, const Permutation& w) {
  Monomial m(s.table->size());
  for (auto [i, j] : recording_set(w)) m.add(s.table->u(j), 1);
  return MPoly::monomial(s.table, m);
}

MPoly all_but(const USetup& s, const std::function<bool(unsigned)>& skip) {
  std::vector<MPoly> fs;
  for (unsigned mask = 1; mask < s.one_minus.size(); ++mask)
    if (!skip(mask)) fs.push_back(s.one_minus[mask]);
  return product_or_one(s.table, fs);
}

}  // namespace

ClearedIdentity usum_cleared(int n) {
  const USetup s = u_setup(n);
  ClearedIdentity r{MPoly(s.table), all_but(s, [](unsigned) { return false; })};
  for (const auto& w : all_permutations(n)) r.lhs += cleared_term(s, w) * u_recording(s, w);
  return r;
}

ClearedIdentity usum_k_cleared(int n, int k) {
  const USetup s = u_setup(n);
  if (k < 1 || k > n) throw std::invalid_argument("usum_k: 1 <= k <= n");
  const unsigned full = (1U << n) - 1;
  ClearedIdentity r{MPoly(s.table), MPoly(s.table)};
  unsigned tail = 0;
  for (int i = k + 1; i <= n; ++i) tail |= 1U << (i - 1);
  r.rhs = s.u_of(tail) * s.one_minus[1U << (k - 1)] * all_but(s, [&](unsigned mask) { return mask == full; });
  for (const auto& w : all_permutations(n))
    if (w(n) == k) r.lhs += cleared_term(s, w) * u_recording(s, w);
  return r;
}

ClearedIdentity usum_alternating_cleared(int n) {
  const USetup s = u_setup(n);
  ClearedIdentity r{MPoly(s.table), MPoly(s.table)};
  for (const auto& w : all_permutations(n)) {
    const MPoly t = cleared_term(s, w);
    r.lhs += length(w) % 2 ? -t : t;
  }
  std::vector<MPoly> fs;
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j) fs.push_back(s.u_of(1U << (i - 1)) - s.u_of(1U << (j - 1)));
  fs.push_back(all_but(s, [](unsigned mask) { return std::popcount(mask) == 2; }));
  r.rhs = product(fs);
  return r;
}

bool usum_verify(int n) {
  const auto c = usum_cleared(n);
  return c.lhs == c.rhs;
}

bool usum_k_verify(int n, int k) {
  const auto c = usum_k_cleared(n, k);
  return c.lhs == c.rhs;
}

// ---------------------------------------------------------------------------

VerifyReport make_report(std::string identity, nlohmann::ordered_json params, std::string lhs, std::string rhs) {
  VerifyReport r;
  r.identity = std::move(identity);
  r.params = std::move(params);
  r.lhs = std::move(lhs);
  r.rhs = std::move(rhs);
  r.equal = r.lhs == r.rhs;
  r.status = r.equal ? "ok" : "mismatch";
  return r;
}

nlohmann::ordered_json report_json(const VerifyReport& r, bool timing) {
  nlohmann::ordered_json j;
  j["identity"] = r.identity;
  j["params"] = r.params;
  j["lhs"] = r.lhs;
  j["rhs"] = r.rhs;
  j["equal"] = r.equal;
  j["status"] = r.status;
  if (!r.detail.empty()) j["detail"] = r.detail;
  if (timing) j["millis"] = r.millis;
  return j;
}

std::string report_text(const VerifyReport& r, bool timing) {
  std::ostringstream os;
  os << r.status << ' ' << r.identity << ' ' << r.params.dump();
  if (timing) os << " (" << r.millis << " ms)";
  os << "\n  lhs: " << r.lhs << "\n  rhs: " << r.rhs;
  if (!r.detail.empty()) os << "\n  detail: " << r.detail;
  return os.str();
}

}  // namespace ctkit
