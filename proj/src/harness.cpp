#include "ctkit/harness.hpp"

#include "ctkit/budget.hpp"
#include "ctkit/interp.hpp"
#include "ctkit/symfun.hpp"

#include <atomic>
#include <condition_variable>
#include <mutex>
#include <thread>

namespace ctkit {

namespace {

using Json = nlohmann::ordered_json;
using Sides = std::pair<std::string, std::string>;

std::size_t idx(int i) { return static_cast<std::size_t>(i); }

std::vector<Composition> a_grid(const RunConfig& c, int n, int lo) {
  std::vector<Composition> out;
  for (auto& a : compositions_in_box(n, lo, c.a_max))
    if (!c.sum_max || total(a) <= *c.sum_max) out.push_back(std::move(a));
  return out;
}

Json jv(const Composition& v) { return Json(v); }

Json base(int n, const Composition& a) {
  Json j;
  j["n"] = n;
  j["a"] = jv(a);
  return j;
}

/// For non-symbolic modes both sides are q-polynomials and are rendered as such.
std::string render_mode(const MPoly& p, TMode mode) {
  return mode == TMode::symbolic ? p.str() : p.to_intpoly().str();
}

std::vector<Composition> strict_partitions(int n, int top) {
  std::vector<Composition> out;
  for (auto& l : compositions_in_box(n, 0, top))
    if (is_strict(l)) out.push_back(std::move(l));
  std::sort(out.begin(), out.end());
  return out;
}

// ---------------------------------------------------------------------------
// Grids

std::vector<Case> qdyson_cases(const RunConfig& c) {
  std::vector<Case> out;
  for (int n = c.n_lo; n <= c.n_hi; ++n)
    for (const auto& a : a_grid(c, n, 0))
      out.push_back({base(n, a), [a] { return Sides(lhs_qdyson(a).str(), rhs_qdyson(a).str()); }});
  return out;
}

std::vector<Case> poincare_cases(const RunConfig& c) {
  std::vector<Case> out;
  const TMode mode = c.t_mode;
  for (int n = c.n_lo; n <= c.n_hi; ++n)
    for (const auto& a : a_grid(c, n, 1)) {
      Json p = base(n, a);
      p["t"] = tmode_name(mode);
      out.push_back({p, [a, mode] {
                       const Composition zero(a.size(), 0);
                       return Sides(render_mode(D_vlambda(zero, {}, a, mode), mode),
                                    render_mode(specialise_t(rhs_poincare_qdyson(a), a, mode), mode));
                     }});
    }
  return out;
}

std::vector<Case> equal_params_cases(const RunConfig& c) {
  std::vector<Case> out;
  for (int n = c.n_lo; n <= c.n_hi; ++n)
    for (int k = 1; k <= c.a_max; ++k) {
      Json p;
      p["n"] = n;
      p["k"] = k;
      out.push_back({p, [n, k] {
                       return Sides(lhs_poincare_qdyson(Composition(idx(n), k)).str(), rhs_equal_params(n, k).str());
                     }});
    }
  return out;
}

std::vector<Case> wtd_cases(const RunConfig& c) {
  std::vector<Case> out;
  for (int n = c.n_lo; n <= c.n_hi; ++n) {
    Json p;
    p["n"] = n;
    out.push_back({p, [n] {
                     // With a = (1, ..., 1) the kernel is free of q, so q may stand for the single t.
                     const MPoly ct = lhs_poincare_qdyson(Composition(idx(n), 1));
                     const MPoly single = subst_family_qpower(ct, Family::t, [](const VarDesc&) -> std::optional<int> { return 1; });
                     return Sides(single.to_intpoly().str(), poincare_single(n).str());
                   }});
  }
  return out;
}

std::vector<Case> bg_general_cases(const RunConfig& c) {
  std::vector<Case> out;
  for (int n = c.n_lo; n <= c.n_hi; ++n)
    for (const auto& a : a_grid(c, n, 1))
      for (unsigned mask = 0; mask < (1U << n); ++mask) {
        std::vector<int> in(idx(n)), members;
        for (int i = 0; i < n; ++i)
          if (mask >> i & 1) {
            in[idx(i)] = 1;
            members.push_back(i + 1);
          }
        Json p = base(n, a);
        p["I"] = members;
        out.push_back({p, [a, in] { return Sides(lhs_bg_general(a, in).str(), rhs_bg_general(a, in).str()); }});
      }
  return out;
}

std::vector<Case> bg_alternating_cases(const RunConfig& c) {
  std::vector<Case> out;
  for (int n = c.n_lo; n <= c.n_hi; ++n)
    for (const auto& a : a_grid(c, n, 1))
      out.push_back({base(n, a), [a] { return Sides(lhs_bg_alternating(a).str(), rhs_bg_alternating(a).str()); }});
  return out;
}

std::vector<Case> tournament_cases(const RunConfig& c) {
  std::vector<Case> out;
  for (int n = c.n_lo; n <= c.n_hi; ++n)
    for (const auto& t : Tournament::all(n))
      for (const auto& a : a_grid(c, n, 1)) {
        Json p = base(n, a);
        p["reversed"] = pairset_str(t.reversed_pairs());
        p["transitive"] = t.is_transitive();
        out.push_back({p, [t, a] { return Sides(lhs_tournament(t, a).str(), rhs_tournament(t, a).str()); }});
      }
  return out;
}

std::vector<Case> kadell_cases(const RunConfig& c) {
  std::vector<Case> out;
  for (int n = c.n_lo; n <= c.n_hi; ++n)
    for (const auto& a : a_grid(c, n, 0))
      for (int m = 1; m <= c.m_max; ++m)
        for (const auto& v : compositions_of(n, m)) {
          Json p = base(n, a);
          p["m"] = m;
          p["v"] = jv(v);
          out.push_back({p, [a, v, m] {
                           return Sides(D_vlambda(v, {m}, a, TMode::qa).to_intpoly().str(), rhs_kadell(v, a).str());
                         }});
        }
  return out;
}

std::vector<Case> kadell_t_cases(const RunConfig& c) {
  std::vector<Case> out;
  const TMode mode = c.t_mode;
  for (int n = c.n_lo; n <= c.n_hi; ++n)
    for (const auto& a : a_grid(c, n, 1))
      for (int m = 1; m <= c.m_max; ++m)
        for (int k = 1; k <= n; ++k) {
          Composition v(idx(n), 0);
          v[idx(k - 1)] = m;
          Json p = base(n, a);
          p["m"] = m;
          p["k"] = k;
          p["t"] = tmode_name(mode);
          out.push_back({p, [a, v, m, mode] {
                           return Sides(render_mode(D_vlambda(v, {m}, a, mode), mode),
                                        render_mode(specialise_t(rhs_kadell_t(v, a), a, mode), mode));
                         }});
        }
  return out;
}

std::vector<Case> strict_cases(const RunConfig& c) {
  std::vector<Case> out;
  const TMode mode = c.t_mode;
  for (int n = c.n_lo; n <= c.n_hi; ++n)
    for (const auto& a : a_grid(c, n, 1))
      for (const auto& lambda : strict_partitions(n, c.m_max))
        for (const auto& w : all_permutations(n)) {
          Json p = base(n, a);
          p["lambda"] = jv(lambda);
          p["w"] = w.str();
          p["t"] = tmode_name(mode);
          out.push_back({p, [a, lambda, w, mode] {
                           const MPoly lhs = D_vlambda(strict_position(lambda, w), lambda, a, mode);
                           if (mode == TMode::qa) return Sides(lhs.to_intpoly().str(), rhs_strict(lambda, a, w).str());
                           return Sides(render_mode(lhs, mode),
                                        render_mode(specialise_t(rhs_strict_t(lambda, a, w), a, mode), mode));
                         }});
        }
  return out;
}

struct KappaCase {
  ZeroOneMatrix kappa;
  int m;
};

std::vector<KappaCase> kappas(int n, int m_max) {
  std::vector<KappaCase> out;
  for (int m = 1; m <= m_max; ++m)
    for (auto& k : ZeroOneMatrix::all(n, m)) out.push_back({std::move(k), m});
  return out;
}

std::vector<Case> prop_kappa_cases(const RunConfig& c) {
  std::vector<Case> out;
  for (int n = c.n_lo; n <= c.n_hi; ++n)
    for (const auto& a : a_grid(c, n, 1))
      for (const auto& [kappa, m] : kappas(n, c.m_max)) {
        const auto sols = solve_law(kappa, total(a));
        if (sols.empty()) continue;
        Json p = base(n, a);
        p["m"] = m;
        p["kappa"] = kappa.str();
        p["lambda"] = jv(sols.front().lambda);
        p["w"] = sols.front().w.str();
        const std::size_t count = sols.size();
        out.push_back({p, [a, kappa = kappa, m = m, sol = sols.front(), count] {
                         if (count != 1) throw std::logic_error("several permutations solve the column law");
                         return Sides(D_vlambda(kappa.row_sums(), sol.lambda, a, TMode::symbolic).str(),
                                      prop_kappa_rhs(D0_tau(a, m), kappa, sol.w).str());
                       }});
      }
  return out;
}

std::vector<Case> prop_zero_cases(const RunConfig& c) {
  std::vector<Case> out;
  for (int n = c.n_lo; n <= c.n_hi; ++n)
    for (const auto& a : a_grid(c, n, 1))
      for (const auto& [kappa, m] : kappas(n, c.m_max)) {
        if (kappa.is_left_justified()) continue;
        const auto sols = solve_law(kappa, total(a));
        if (sols.empty()) continue;
        Json p = base(n, a);
        p["m"] = m;
        p["kappa"] = kappa.str();
        p["lambda"] = jv(sols.front().lambda);
        out.push_back({p, [a, kappa = kappa, lambda = sols.front().lambda] {
                         return Sides(D_vlambda(kappa.row_sums(), lambda, a, TMode::symbolic).str(), "0");
                       }});
      }
  return out;
}

std::vector<Case> prop_vnu_cases(const RunConfig& c) {
  std::vector<Case> out;
  for (int n = c.n_lo; n <= c.n_hi; ++n)
    for (const auto& a : a_grid(c, n, 1))
      for (int m = 1; m <= c.m_max; ++m)
        for (const auto& v : compositions_in_box(n, 0, m)) {
          Json p = base(n, a);
          p["m"] = m;
          p["v"] = jv(v);
          out.push_back({p, [a, v, m] {
                           return Sides(D_vlambda(v, sorted_desc(v), a, TMode::symbolic).str(),
                                        prop_vnu_rhs(D0_tau(a, m), v, m).str());
                         }});
        }
  return out;
}

std::vector<Case> sills_cases(const RunConfig& c) {
  std::vector<Case> out;
  for (int n = std::max(c.n_lo, 2); n <= c.n_hi; ++n)
    for (const auto& a : a_grid(c, n, 0))
      for (int r = 1; r <= n; ++r)
        for (int s = 1; s <= n; ++s) {
          if (r == s) continue;
          Json p = base(n, a);
          p["r"] = r;
          p["s"] = s;
          out.push_back({p, [a, r, s] { return Sides(lhs_sills(a, r, s).str(), rhs_sills(a, r, s).str()); }});
        }
  return out;
}

std::vector<Case> lxz_cases(const RunConfig& c) {
  std::vector<Case> out;
  for (int n = std::max(c.n_lo, 2); n <= c.n_hi; ++n)
    for (const auto& a : a_grid(c, n, 0))
      for (const auto& v : lxz_vectors(n)) {
        Json p = base(n, a);
        p["v"] = jv(v);
        out.push_back({p, [a, v] { return Sides(dyson_coefficient(a, v).str(), rhs_lxz(v, a).str()); }});
      }
  return out;
}

std::vector<Case> usum_cases(const RunConfig& c) {
  std::vector<Case> out;
  for (int n = c.n_lo; n <= c.n_hi; ++n) {
    Json p;
    p["n"] = n;
    out.push_back({p, [n] {
                     const auto r = usum_cleared(n);
                     return Sides(r.lhs.str(), r.rhs.str());
                   }});
  }
  return out;
}

std::vector<Case> usum_k_cases(const RunConfig& c) {
  std::vector<Case> out;
  for (int n = c.n_lo; n <= c.n_hi; ++n)
    for (int k = 1; k <= n; ++k) {
      Json p;
      p["n"] = n;
      p["k"] = k;
      out.push_back({p, [n, k] {
                       const auto r = usum_k_cleared(n, k);
                       return Sides(r.lhs.str(), r.rhs.str());
                     }});
    }
  return out;
}

std::vector<Case> usum_alt_cases(const RunConfig& c) {
  std::vector<Case> out;
  for (int n = c.n_lo; n <= c.n_hi; ++n) {
    Json p;
    p["n"] = n;
    out.push_back({p, [n] {
                     const auto r = usum_alternating_cleared(n);
                     return Sides(r.lhs.str(), r.rhs.str());
                   }});
  }
  return out;
}

std::vector<Case> interp_dyson_cases(const RunConfig& c) {
  std::vector<Case> out;
  const FillMode mode = c.seed ? FillMode::random : FillMode::greedy;
  const std::uint64_t seed = c.seed.value_or(0);
  for (int n = c.n_lo; n <= c.n_hi; ++n) {
    const unsigned long subsets = 1UL << (n * (n - 1) / 2);
    for (const auto& a : a_grid(c, n, 1))
      for (unsigned long mask = 0; mask < subsets; ++mask) {
        const PairSet s = pairset_from_mask(n, mask);
        Json p = base(n, a);
        p["S"] = pairset_str(s);
        p["K"] = ell_stats(s, n).K;
        const std::uint64_t case_seed = seed + out.size();
        out.push_back({p, [a, s, mode, case_seed] {
                         return Sides(dyson_verdict(a, s, mode, case_seed).value.str(), t_coefficient(lhs_poincare_qdyson(a), s).str());
                       }});
      }
  }
  return out;
}

std::vector<Case> interp_sills_cases(const RunConfig& c) {
  std::vector<Case> out;
  for (int n = std::max(c.n_lo, 2); n <= c.n_hi; ++n)
    for (int r = 2; r <= n; ++r)
      for (const auto& a : a_grid(c, n, 0)) {
        bool ok = true;
        for (int i = 1; i <= n; ++i) ok = ok && (i == r || a[idx(i - 1)] >= 1);
        if (!ok) continue;
        Json p = base(n, a);
        p["r"] = r;
        out.push_back({p, [a, r] { return Sides(sills_interpolate(a, r).str(), rhs_sills(a, r, 1).str()); }});
      }
  return out;
}

std::vector<Case> closed_eval_cases(const RunConfig& c) {
  std::vector<Case> out;
  for (int n = c.n_lo; n <= c.n_hi; ++n)
    for (const auto& w : all_permutations(n))
      for (const auto& a : a_grid(c, n, 1)) {
        Json p = base(n, a);
        p["w"] = w.str();
        out.push_back({p, [a, w] { return Sides(closed_eval(a, w).value.str(), c_w(a, w).str()); }});
      }
  return out;
}

std::vector<Case> scalar_key_cases(const RunConfig& c) {
  std::vector<Case> out;
  for (int n = c.n_lo; n <= c.n_hi; ++n)
    for (const auto& v : compositions_in_box(n, 0, c.a_max))
      for (const auto& w : compositions_in_box(n, 0, c.a_max)) {
        Json p;
        p["n"] = n;
        p["v"] = jv(v);
        p["w"] = jv(w);
        out.push_back({p, [n, v, w] {
                         const TablePtr t = make_table({.x = n});
                         return Sides(scalar_product(key_poly(v, t), keyhat_poly(w, t)).str(),
                                      IntPoly(v == reversed(w) ? 1 : 0).str());
                       }});
      }
  return out;
}

std::vector<Case> scalar_schur_cases(const RunConfig& c) {
  std::vector<Case> out;
  for (int n = c.n_lo; n <= c.n_hi; ++n)
    for (int size = 0; size <= c.m_max; ++size)
      for (const auto& lambda : partitions_of(n, size))
        for (const auto& v : compositions_of(n, size)) {
          Json p;
          p["n"] = n;
          p["lambda"] = jv(lambda);
          p["v"] = jv(v);
          out.push_back({p, [n, lambda, v] {
                           const TablePtr t = make_table({.x = n});
                           const Composition delta = staircase(n);
                           Composition ld(idx(n)), vd(idx(n));
                           for (int i = 0; i < n; ++i) {
                             ld[idx(i)] = lambda[idx(i)] + delta[idx(i)];
                             vd[idx(i)] = v[idx(i)] + delta[idx(i)];
                           }
                           int expected = 0;
                           for (const auto& w : all_permutations(n))
                             if (act(w, ld) == vd) expected = length(w) % 2 ? -1 : 1;
                           const MPoly s = schur_principal(lambda, t, std::vector<int>(idx(n), 1));
                           return Sides(scalar_product(s, x_monomial(t, v)).str(), IntPoly(expected).str());
                         }});
        }
  return out;
}

std::vector<Case> hook_content_cases(const RunConfig& c) {
  std::vector<Case> out;
  for (int size = 0; size <= c.m_max; ++size)
    for (const auto& lambda : partitions_of(size, size))
      for (int a = 0; a <= c.a_max; ++a) {
        Composition l = lambda;
        while (!l.empty() && l.back() == 0) l.pop_back();
        Json p;
        p["lambda"] = jv(l);
        p["a"] = a;
        out.push_back({p, [l, a] {
                         const TablePtr t = make_table({.x = 1});
                         const std::vector<int> av{a};
                         const MPoly s = schur_principal(l, t, av);
                         return Sides(coeff_x(s, std::vector<int>{total(l)}).to_intpoly().str(), hook_content(l, a).str());
                       }});
      }
  return out;
}

}  // namespace

void validate(const RunConfig& c) {
  if (c.n_lo < 1 || c.n_hi < c.n_lo) throw UsageError("--n must be a positive value or range lo-hi with lo <= hi");
  if (c.n_hi > 8) throw UsageError("--n above 8 is out of scope");
  if (c.a_max < 0 || c.m_max < 0) throw UsageError("bounds must be nonnegative");
  if (c.sum_max && *c.sum_max < 0) throw UsageError("--sum-max must be nonnegative");
  if (c.jobs < 1) throw UsageError("--jobs must be at least 1");
  if (c.format != "text" && c.format != "json") throw UsageError("--format must be text or json");
  if (c.budget && c.budget->count() <= 0) throw UsageError("--budget-ms must be positive");
}

const std::vector<IdentityInfo>& identity_registry() {
  static const std::vector<IdentityInfo> reg = {
      {"q-dyson", "CT of the q-Dyson product is the q-multinomial (a_i in 0..a-max)", qdyson_cases},
      {"poincare", "CT of the t-kernel is sum_w c_w(a) t_R(w), in the chosen t-mode", poincare_cases},
      {"equal-params", "t-kernel CT at a = (k^n) is W(t) times a product of q-binomials", equal_params_cases},
      {"wtd", "W(t) at a single t is prod (1 - t^i)/(1 - t)", wtd_cases},
      {"bg-general", "shortened q-Dyson kernel over every index set I", bg_general_cases},
      {"bg-alternating", "alternating q-Dyson kernel", bg_alternating_cases},
      {"tournament", "tournament kernels: zero iff nontransitive", tournament_cases},
      {"kadell", "D_{v,(m)}(a) for all v with |v| = m (a_i in 0..a-max)", kadell_cases},
      {"kadell-t", "D_{m e_k,(m)}(a; t) against W_a^(k)(t)", kadell_t_cases},
      {"strict", "D at w^{-1}(reversed lambda) for strict lambda", strict_cases},
      {"prop-kappa", "D_{r(kappa),lambda}(a; t) against the s^kappa coefficient of the extended kernel", prop_kappa_cases},
      {"prop-zero", "D_{r(kappa),lambda}(a; t) vanishes for non-left-justified kappa", prop_zero_cases},
      {"prop-vnu", "D_v(a; t) as an s-coefficient of the extended kernel", prop_vnu_cases},
      {"sills", "CT[(x_r/x_s) D(a; x)]", sills_cases},
      {"lxz", "CT[x^{-v} D(a; x)] for v_1 = 1, max v <= 1, |v| = 0", lxz_cases},
      {"usum", "sum over S_n of w(prod (1-u_i)/(1-u_1...u_i)) u_R(w) = 1", usum_cases},
      {"usum-k", "the same restricted to w(n) = k", usum_k_cases},
      {"usum-alt", "signed version with prod (u_i - u_j)/(1 - u_i u_j)", usum_alt_cases},
      {"interp-dyson", "interpolation over the t-kernel grid against the brute-force t_S coefficient", interp_dyson_cases},
      {"interp-sills", "interpolation over the Sills grid against the closed form", interp_sills_cases},
      {"closed-eval", "factorised evaluation of the surviving point against c_w", closed_eval_cases},
      {"scalar-key", "<K_v, Khat_w> = [v = reversed w]", scalar_key_cases},
      {"scalar-schur", "<s_lambda, x^v> by the signed straightening rule", scalar_schur_cases},
      {"hook-content", "one-variable s_lambda(x^(a)) against the hook-content formula", hook_content_cases},
  };
  return reg;
}

const IdentityInfo* find_identity(std::string_view name) {
  for (const auto& info : identity_registry())
    if (info.name == name) return &info;
  return nullptr;
}

VerifyReport run_case(const std::string& identity, const Case& c, std::optional<std::chrono::milliseconds> budget) {
  const auto start = std::chrono::steady_clock::now();
  VerifyReport r;
  try {
    BudgetScope scope(budget);
    auto [lhs, rhs] = c.run();
    r = make_report(identity, c.params, std::move(lhs), std::move(rhs));
  } catch (const BudgetExceeded&) {
    r = make_report(identity, c.params, "", "");
    r.equal = false;
    r.status = "timeout";
  } catch (const std::exception& e) {
    r = make_report(identity, c.params, "", "");
    r.equal = false;
    r.status = "error";
    r.detail = e.what();
  }
  r.millis = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  return r;
}

void run_cases(const std::string& identity, const std::vector<Case>& cases, int jobs,
               std::optional<std::chrono::milliseconds> budget, const std::function<void(const VerifyReport&)>& sink) {
  std::vector<std::optional<VerifyReport>> done(cases.size());
  std::mutex mu;
  std::condition_variable cv;
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i; (i = next.fetch_add(1)) < cases.size();) {
      VerifyReport r = run_case(identity, cases[i], budget);
      {
        std::lock_guard<std::mutex> lock(mu);
        done[i] = std::move(r);
      }
      cv.notify_all();
    }
  };
  const int threads = std::max(1, std::min<int>(jobs, static_cast<int>(cases.size())));
  std::vector<std::thread> pool;
  if (threads > 1)
    for (int t = 0; t < threads; ++t) pool.emplace_back(worker);
  else
    worker();
  for (std::size_t i = 0; i < cases.size(); ++i) {
    std::unique_lock<std::mutex> lock(mu);
    cv.wait(lock, [&] { return done[i].has_value(); });
    VerifyReport r = std::move(*done[i]);
    lock.unlock();
    if (sink) sink(r);
  }
  for (auto& t : pool) t.join();
}

int exit_status(const std::vector<VerifyReport>& reports) {
  bool timeout = false;
  for (const auto& r : reports) {
    if (r.status == "timeout")
      timeout = true;
    else if (!r.equal)
      return 1;
  }
  return timeout ? 3 : 0;
}

std::vector<VerifyReport> run(const RunConfig& config, const std::function<void(const VerifyReport&)>& sink) {
  validate(config);
  const IdentityInfo* info = find_identity(config.identity);
  if (!info) throw UsageError("unknown identity: " + config.identity);
  const auto cases = info->enumerate(config);
  std::vector<VerifyReport> out;
  out.reserve(cases.size());
  run_cases(info->name, cases, config.jobs, config.budget, [&](const VerifyReport& r) {
    if (sink) sink(r);
    out.push_back(r);
  });
  return out;
}

std::string format_report(const VerifyReport& r, const RunConfig& config) {
  return config.format == "json" ? report_json(r, config.timing).dump() : report_text(r, config.timing);
}

std::pair<int, int> parse_range(std::string_view text) {
  auto parse_int = [&](std::string_view s) {
    if (s.empty() || s.size() > 3) throw UsageError("bad range: " + std::string(text));
    int v = 0;
    for (char ch : s) {
      if (ch < '0' || ch > '9') throw UsageError("bad range: " + std::string(text));
      v = v * 10 + (ch - '0');
    }
    return v;
  };
  const auto dash = text.find('-');
  if (dash == std::string_view::npos) {
    const int v = parse_int(text);
    return {v, v};
  }
  return {parse_int(text.substr(0, dash)), parse_int(text.substr(dash + 1))};
}

}  // namespace ctkit
