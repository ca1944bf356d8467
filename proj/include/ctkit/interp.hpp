#pragma once

// Coefficient extraction by multivariate Lagrange interpolation over grids
// of q-powers, the two bespoke grids for the q-Dyson t-kernel and the
// Sills coefficient, and the factorised evaluation of the surviving term.

#include "ctkit/combi.hpp"
#include "ctkit/mpoly.hpp"

#include <cstdint>
#include <functional>
#include <optional>
#include <stdexcept>
#include <vector>

namespace ctkit {

/// Per-variable exponent sets B_i; the grid points are x_i = q^{alpha_i},
/// alpha_i in B_i.
struct Grid {
  std::vector<std::vector<int>> B;
  int n() const { return static_cast<int>(B.size()); }
  std::size_t points() const;
  /// Throws std::invalid_argument unless |B_i| = d_i + 1 with distinct entries.
  void check(const std::vector<int>& d) const;
};

/// Calls f on every point of the grid, in odometer order (last index fastest).
void for_each_point(const Grid& g, const std::function<void(const std::vector<int>&)>& f);

/// phi_i'(q^alpha) = prod_{b in B, b != alpha} (q^alpha - q^b).
IntPoly phi_prime(const std::vector<int>& b, int alpha);

/// sum over the whole grid of F(q^alpha) / prod_i phi_i'(q^{alpha_i}). F must
/// be a polynomial in q and x only, with total x-degree at most sum d.
QRat generic_coeff(const MPoly& f, const std::vector<int>& d, const Grid& g);

/// x_i - q^k x_j (1-based indices).
struct LinearFactor {
  int i, j, k;
};

/// sign * prod of linear factors in x_1..x_n.
struct FactoredPoly {
  int n = 0;
  int sign = 1;
  std::vector<LinearFactor> factors;

  MPoly expand() const;
  /// F(q^alpha), or nullopt when some factor vanishes.
  std::optional<IntPoly> evaluate(const std::vector<int>& alpha) const;
};

struct InterpResult {
  QRat value;
  std::vector<std::vector<int>> nonzero_points;
};

/// Lagrange interpolation of a factored F; points where a factor vanishes
/// contribute nothing and are skipped without expanding F.
InterpResult interpolate(const FactoredPoly& f, const std::vector<int>& d, const Grid& g);
/// Points of g with F != 0, without any cardinality requirement on g.
std::vector<std::vector<int>> nonvanishing_points(const FactoredPoly& f, const Grid& g);

// ---------------------------------------------------------------------------
// The q-Dyson t-kernel grid

/// F_S = (-1)^{|S|} prod_{i<j} prod_{k<a_i} (x_j - q^k x_i) prod_{1<=k<a_j} (x_i - q^k x_j).
FactoredPoly dyson_F(const Composition& a, const PairSet& s);
/// Exponent vector of the monomial whose coefficient in F_S is the
/// t_S-coefficient of the t-kernel's constant term: d_i = |a| - a_i - ell_i.
std::vector<int> dyson_target(const Composition& a, const PairSet& s);

enum class FillMode { greedy, random };

struct DysonGrid {
  Grid grid;
  std::vector<int> d;
  EllStats stats;
  std::vector<int> tau;            ///< tau(1..K), the index with ell = k - 1
  std::optional<Permutation> pi;   ///< pi(i) = tau(n - i + 1) when K = n
};

/// The grid of the construction. Free choices outside the tau-chain are the
/// smallest admissible exponents (greedy) or a seeded random subset.
DysonGrid dyson_grid(const Composition& a, const PairSet& s, FillMode mode = FillMode::greedy,
                     std::uint64_t seed = 0);

struct DysonVerdict {
  IntPoly value;
  DysonGrid grid;
  std::optional<std::vector<int>> point;  ///< the surviving grid point
};

/// Interpolates over dyson_grid and asserts the uniqueness statements: at
/// most one nonvanishing point, one exactly when K = n, located at
/// alpha_{pi(i)} = a_{pi(1)} + ... + a_{pi(i-1)}. Throws std::logic_error.
DysonVerdict dyson_verdict(const Composition& a, const PairSet& s, FillMode mode = FillMode::greedy,
                           std::uint64_t seed = 0);

/// Coefficient of t_S in a polynomial over make_table({.t = n}).
IntPoly t_coefficient(const MPoly& p, const PairSet& s);

// ---------------------------------------------------------------------------
// Factorised evaluation of the surviving point

class ClosedEvalError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

struct ClosedEval {
  IntPoly value;
  int sign_exponent = 0;  ///< |R(pi)| + s_< + s_>
  int sum_s = 0;          ///< sum_j s_j
  int t_split = 0;        ///< t_< + t_>
  int sum_t = 0;          ///< sum_i t_i
  QRat f_value;           ///< F_{R(pi)} at the surviving point
  QRat phi_product;       ///< prod_i phi_i' at the surviving point
};

/// c(a; R(w)) through the product formulas for phi' and for F split into
/// Pi_< and Pi_>. Throws ClosedEvalError if the sign identity, the q-power
/// identity, the direct substitution or the comparison with c_w fails.
ClosedEval closed_eval(const Composition& a, const Permutation& w);

// ---------------------------------------------------------------------------
// The Sills grid (s = 1)

/// prod_{i<j} prod_{k<a_i} (x_j - q^k x_i) prod_{1<=k<=a_j} (x_i - q^k x_j).
FactoredPoly sills_F(const Composition& a);
/// (x_1/x_r) prod_i x_i^{|a| - a_i}.
std::vector<int> sills_target(const Composition& a, int r);
/// With exclude = false the point sum_{i=2}^{r-1} a_i stays in B_r (and the
/// grid is one point too large for interpolation).
Grid sills_grid(const Composition& a, int r, bool exclude = true);
/// CT[(x_r/x_1) D(a; x)] by interpolation; asserts the single surviving
/// point alpha_i = a_1 + ... + a_{i-1}. Throws std::logic_error.
IntPoly sills_interpolate(const Composition& a, int r);

}  // namespace ctkit
