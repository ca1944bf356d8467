#pragma once

// Closed-form right-hand sides of the constant-term identities and their
// brute-force left-hand sides.
//
// Conventions: a polynomial "in t" lives over make_table({.t = n}); a plain
// q-polynomial is returned as IntPoly. LHS routines never use a closed form
// and RHS routines never expand a kernel.

#include "ctkit/combi.hpp"
#include "ctkit/mpoly.hpp"

#include <json.hpp>

#include <string>
#include <string_view>

namespace ctkit {

enum class TMode { symbolic, qa, zero };
TMode parse_tmode(std::string_view s);
std::string tmode_name(TMode m);

/// Table holding only q and t[i,j], 1 <= i < j <= n.
TablePtr t_table(int n);
/// t_S = prod_{(i,j) in S} t_ij.
MPoly t_monomial(const TablePtr& table, const PairSet& s);
/// t_ij -> q^{a_j} (qa) or 0 (zero); symbolic returns p unchanged.
MPoly specialise_t(const MPoly& p, const Composition& a, TMode mode);

// ---------------------------------------------------------------------------
// q-Dyson and its t-deformation

IntPoly rhs_qdyson(const Composition& a);
IntPoly lhs_qdyson(const Composition& a);

/// c_w(a) = qmultinom(a) prod_i (1 - q^{a_i}) / (1 - q^{a_{w(1)} + ... + a_{w(i)}}).
IntPoly c_w(const Composition& a, const Permutation& w);
/// sum_w c_w(a) t_{R(w)}.
MPoly rhs_poincare_qdyson(const Composition& a);
/// CT of the t-kernel, over t_table(n).
MPoly lhs_poincare_qdyson(const Composition& a);
/// W(t) = sum_w t_{R(w)}.
MPoly poincare_W(int n);
/// prod_{i=2}^{n} (1 - t^i) / (1 - t), with t written as q.
IntPoly poincare_single(int n);
/// W(t) prod_{i=1}^{n-1} qbinom((i+1)k - 1, k - 1).
MPoly rhs_equal_params(int n, int k);

/// in_i is a 0/1 mask of I.
IntPoly rhs_bg_general(const Composition& a, const std::vector<int>& in_i);
IntPoly lhs_bg_general(const Composition& a, const std::vector<int>& in_i);
IntPoly rhs_bg_alternating(const Composition& a);
IntPoly lhs_bg_alternating(const Composition& a);

IntPoly rhs_tournament(const Tournament& t, const Composition& a);
IntPoly lhs_tournament(const Tournament& t, const Composition& a);

// ---------------------------------------------------------------------------
// Kadell-type coefficients

/// CT[x^{-v} s_lambda(x^(a)) kernel]. symbolic: the t-kernel, result over
/// t_table(n); qa: the q-Dyson kernel (zeros in a allowed); zero: the
/// t-kernel at t = 0. The last two return a polynomial over t_table(0).
MPoly D_vlambda(const Composition& v, const Composition& lambda, const Composition& a, TMode mode);
IntPoly rhs_kadell(const Composition& v, const Composition& a);
/// v = (0^{k-1}, m, 0^{n-k}), m >= 1, all a_i >= 1.
MPoly rhs_kadell_t(const Composition& v, const Composition& a);
/// w(prod_i qbinom(lbar_i + sigma_i - 1, a_i - 1)) q^{sum_{(i,j) in R(w)} a_j}.
IntPoly rhs_strict(const Composition& lambda, const Composition& a, const Permutation& w);
/// The same before t_ij -> q^{a_j}: w(prod ...) t_{R(w)}.
MPoly rhs_strict_t(const Composition& lambda, const Composition& a, const Permutation& w);
/// The composition w^{-1}(lambda-bar) at which rhs_strict is attained.
Composition strict_position(const Composition& lambda, const Permutation& w);

// ---------------------------------------------------------------------------
// Extraction from the y-extended kernel

/// CT over x and y of the tau kernel, over make_table({.t = n, .s = n x m}).
MPoly D0_tau(const Composition& a, int m);
struct LawSolution {
  Composition lambda;  ///< padded with zeros to |a| entries
  Permutation w;
};
/// All (lambda, w) with lambda' = w(c(kappa) + delta_m) - delta_m and
/// lambda having at most |a| parts.
std::vector<LawSolution> solve_law(const ZeroOneMatrix& kappa, int a_total);
/// (-1)^{l(w)} [s^kappa] D0, over t_table(n).
MPoly prop_kappa_rhs(const MPoly& d0_tau, const ZeroOneMatrix& kappa, const Permutation& w);
/// [prod_i prod_{j <= v_i} s_ij] D0.
MPoly prop_vnu_rhs(const MPoly& d0_tau, const Composition& v, int m);
bool prop_ct_kappa_verify(const ZeroOneMatrix& kappa, const Composition& lambda, const Permutation& w,
                          const Composition& a);
bool prop_ct_zero_verify(const ZeroOneMatrix& kappa, const Composition& lambda, const Composition& a);
bool prop_ct_vnu_verify(const Composition& v, const Composition& a, int m);

/// Permutations of S_{n+m} keeping n+1..n+m in natural order whose
/// recording set meets the s-block exactly in {(i, n+j) : j <= lbar_i}.
std::vector<Permutation> beyond_kadell_contributors(const Composition& lambda_bar, int m);

// ---------------------------------------------------------------------------
// Non-constant coefficients of the q-Dyson product

/// coeff of x^v in the q-Dyson kernel, i.e. CT[x^{-v} D(a; x)].
IntPoly dyson_coefficient(const Composition& a, const Composition& v);
IntPoly rhs_sills(const Composition& a, int r, int s);
IntPoly lhs_sills(const Composition& a, int r, int s);
bool lxz_valid(const Composition& v);
/// All valid v of length n, lexicographic.
std::vector<Composition> lxz_vectors(int n);
IntPoly rhs_lxz(const Composition& v, const Composition& a);

// ---------------------------------------------------------------------------
// Rational identities in u, compared after clearing the common denominator
// prod_{nonempty A} (1 - u_A).

struct ClearedIdentity {
  MPoly lhs, rhs;
};
ClearedIdentity usum_cleared(int n);
ClearedIdentity usum_k_cleared(int n, int k);
ClearedIdentity usum_alternating_cleared(int n);
bool usum_verify(int n);
bool usum_k_verify(int n, int k);

// ---------------------------------------------------------------------------
// Reports

struct VerifyReport {
  std::string identity;
  nlohmann::ordered_json params = nlohmann::ordered_json::object();
  std::string lhs, rhs;
  bool equal = false;
  std::string status = "ok";  ///< ok, mismatch, timeout, error
  std::string detail;
  double millis = 0;
};

/// Sets equal and status from the two rendered sides.
VerifyReport make_report(std::string identity, nlohmann::ordered_json params, std::string lhs, std::string rhs);
nlohmann::ordered_json report_json(const VerifyReport& r, bool timing);
std::string report_text(const VerifyReport& r, bool timing);

}  // namespace ctkit
