#pragma once

// Sparse multivariate Laurent polynomials over Z in a declared variable
// table, constant-term extraction, and builders for the q-Dyson family of
// kernels.
//
// A variable table always starts with q, followed by the x-group and the
// optional auxiliary families t[i,j] (1 <= i < j <= T), s[i,j]
// (1 <= i <= rows, 1 <= j <= cols) and u[i]. q lives in the same flat
// exponent vector as every other variable, which keeps substitutions such as
// x_i -> q^alpha a pure exponent rewrite.

#include "ctkit/exactalg.hpp"

#include <json.hpp>

#include <gmpxx.h>

#include <array>
#include <compare>
#include <cstdint>
#include <functional>
#include <iosfwd>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace ctkit {

enum class Family : std::uint8_t { q, x, t, s, u };

struct TableSpec {
  int x = 0;       ///< x1..x{x}
  int t = 0;       ///< t[i,j] for 1 <= i < j <= t
  int s_rows = 0;  ///< s[i,j] for 1 <= i <= s_rows, 1 <= j <= s_cols
  int s_cols = 0;
  int u = 0;  ///< u[1]..u[u]
  friend bool operator==(const TableSpec&, const TableSpec&) = default;
};

struct VarDesc {
  Family family;
  int i = 0;
  int j = 0;
  friend bool operator==(const VarDesc&, const VarDesc&) = default;
};

class VarTable {
 public:
  explicit VarTable(TableSpec spec);

  const TableSpec& spec() const { return spec_; }
  int size() const { return static_cast<int>(vars_.size()); }
  int n_x() const { return spec_.x; }

  static constexpr int q() { return 0; }
  int x(int i) const;
  int t(int i, int j) const;
  int s(int i, int j) const;
  int u(int i) const;
  /// Index of a variable by descriptor, or nullopt if the table lacks it.
  std::optional<int> find(const VarDesc& d) const;

  const VarDesc& desc(int k) const { return vars_.at(static_cast<std::size_t>(k)); }
  std::string name(int k) const;
  /// Half-open index range of a family.
  std::pair<int, int> range(Family f) const;

  friend bool operator==(const VarTable& a, const VarTable& b) { return a.spec_ == b.spec_; }

 private:
  TableSpec spec_;
  std::vector<VarDesc> vars_;
  int x0_ = 1, t0_ = 0, s0_ = 0, u0_ = 0;
};

using TablePtr = std::shared_ptr<const VarTable>;
TablePtr make_table(TableSpec spec);
/// The same table without the given family.
TablePtr without_family(const VarTable& table, Family f);

inline constexpr int kMaxVars = 32;

/// Exponent vector of fixed capacity; entries beyond size() are zero.
class Monomial {
 public:
  Monomial() = default;
  explicit Monomial(int size);

  int size() const { return size_; }
  int operator[](int k) const { return exps_[static_cast<std::size_t>(k)]; }
  void set(int k, int e);
  void add(int k, int e) { set(k, exps_[static_cast<std::size_t>(k)] + e); }
  int total_degree() const;
  bool is_one() const;

  Monomial& operator*=(const Monomial& o);
  friend Monomial operator*(Monomial a, const Monomial& b) { return a *= b; }
  friend bool operator==(const Monomial& a, const Monomial& b) {
    return a.size_ == b.size_ && a.exps_ == b.exps_;
  }
  /// Graded order: total degree first, then lexicographic in table order.
  friend std::strong_ordering operator<=>(const Monomial& a, const Monomial& b);

  std::size_t hash() const;

 private:
  std::array<std::int16_t, kMaxVars> exps_{};
  std::uint8_t size_ = 0;
};

struct MonomialHash {
  std::size_t operator()(const Monomial& m) const { return m.hash(); }
};

struct Term {
  Monomial mono;
  mpz_class coeff;
  friend bool operator==(const Term&, const Term&) = default;
};

class MPoly {
 public:
  MPoly() = default;
  explicit MPoly(TablePtr table) : table_(std::move(table)) {}

  static MPoly constant(TablePtr table, const mpz_class& c);
  static MPoly variable(TablePtr table, int k, int exponent = 1);
  static MPoly monomial(TablePtr table, const Monomial& m, const mpz_class& c = 1);
  static MPoly from_intpoly(TablePtr table, const IntPoly& p);
  /// Combines like terms, drops zeros and sorts.
  static MPoly from_terms(TablePtr table, std::vector<Term> terms);

  const TablePtr& table() const { return table_; }
  const std::vector<Term>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  Monomial one() const { return Monomial(table_->size()); }

  /// Coefficient of an exact monomial.
  mpz_class coeff(const Monomial& m) const;
  /// The q-polynomial carried by a polynomial whose only variable is q.
  /// Throws std::domain_error if any other variable occurs.
  IntPoly to_intpoly() const;
  bool is_x_free() const;

  MPoly operator-() const;
  friend MPoly operator+(const MPoly& a, const MPoly& b);
  friend MPoly operator-(const MPoly& a, const MPoly& b);
  friend MPoly operator*(const MPoly& a, const MPoly& b);
  MPoly& operator+=(const MPoly& o) { return *this = *this + o; }
  MPoly& operator*=(const MPoly& o) { return *this = *this * o; }
  MPoly scaled(const mpz_class& c) const;
  friend bool operator==(const MPoly& a, const MPoly& b);

  /// Canonical text: terms in graded order joined by " + " / " - ", each a
  /// coefficient (omitted when +-1) and `*`-joined powers such as
  /// `q^2*x1^-1*t[1,2]`.
  std::string str() const;

 private:
  TablePtr table_;
  std::vector<Term> terms_;
};

void require_same_table(const MPoly& a, const MPoly& b);
std::ostream& operator<<(std::ostream& os, const MPoly& p);

// Serialisation for golden files: {"table": {...}, "vars": [...],
// "terms": [[[e0, e1, ...], "coeff"], ...]}.
nlohmann::json to_json(const MPoly& p);
MPoly mpoly_from_json(const nlohmann::json& j);

// ---------------------------------------------------------------------------
// Arithmetic

MPoly scale_by_intpoly(const MPoly& p, const IntPoly& c);
MPoly pow(const MPoly& p, unsigned k);
/// Product of all factors, multiplying the two smallest operands first.
MPoly product(std::span<const MPoly> factors);
/// Product keeping only terms whose x-exponent lies in [lo, hi] per x
/// variable (bounds indexed 0..n-1).
MPoly mul_x_window(const MPoly& a, const MPoly& b, std::span<const int> lo, std::span<const int> hi);

// ---------------------------------------------------------------------------
// Extraction

/// Terms with every x-exponent zero (the x-group stays in the table).
MPoly ct_x(const MPoly& p);
/// Coefficient of x^v as a polynomial in q and auxiliaries (x-exponents 0).
MPoly coeff_x(const MPoly& p, std::span<const int> v);
/// coeff_x of the product of factors without expanding the full product:
/// the factors are split in two halves whose partial products are matched
/// on their x-exponents.
MPoly coeff_x_of_product(std::span<const MPoly> factors, std::span<const int> v);
/// Coefficient of the monomial given by `exponents` in an auxiliary family;
/// the family is removed from the result's table. Shapes: t -> T x T matrix
/// using only entries (i<j); s -> rows x cols; u -> 1 x size.
MPoly coeff_aux(const MPoly& p, Family family, const std::vector<std::vector<int>>& exponents);

/// Per x-variable minimum and maximum exponent over all terms.
struct XBox {
  std::vector<int> lo, hi;
};
XBox x_box(const MPoly& p);

// ---------------------------------------------------------------------------
// Substitution

/// Replaces each variable k of p's table by the monomial images[k] of the
/// target table, or by 0 when images[k] is empty (which requires nonnegative
/// exponents of that variable).
MPoly substitute(const MPoly& p, TablePtr target, std::span<const std::optional<Monomial>> images);
/// Re-expresses p over another table by variable name.
MPoly remap(const MPoly& p, TablePtr target);
/// x_i -> q^{alpha_i}; the result's table has no x-group.
MPoly subst_x_qpower(const MPoly& p, std::span<const int> alpha);
/// Substitutes each variable of an auxiliary family by q^{f(desc)} or by 0
/// when f returns nullopt. The family is removed from the table.
MPoly subst_family_qpower(const MPoly& p, Family family,
                          const std::function<std::optional<int>(const VarDesc&)>& f);
/// gamma(L)(x1, ..., xn) = L(x2, ..., xn, x1/q).
MPoly gamma_shift(const MPoly& p);
/// Inverse of gamma_shift: L(q*xn, x1, ..., x_{n-1}).
MPoly gamma_shift_inverse(const MPoly& p);

// ---------------------------------------------------------------------------
// Kernels. Each builder has a variant taking an explicit table (which must
// contain the needed variables) and one building the minimal table.

/// (q^shift x_i/x_j)_count.
MPoly poch_factor(const TablePtr& table, int i, int j, int shift, int count);

/// One factor per pair i<j: (x_i/x_j)_{a_i} (q x_j/x_i)_{a_j}.
std::vector<MPoly> dyson_factors(const TablePtr& table, std::span<const int> a);
MPoly dyson_kernel(const TablePtr& table, std::span<const int> a);
MPoly dyson_kernel(std::span<const int> a);

/// D(a; x; t): (x_i/x_j)_{a_i} (q x_j/x_i)_{a_j-1} (1 - t_ij x_j/x_i). All
/// a_i >= 1.
std::vector<MPoly> tkernel_factors(const TablePtr& table, std::span<const int> a);
MPoly tkernel(std::span<const int> a);

/// D(a1^m; x, y; tau) with y_j = x_{n+j}; tau_ij = t_ij for j <= n,
/// s[i, j-n] for i <= n < j, 0 for i > n. Table: x = n+m, t = n, s = n x m.
std::vector<MPoly> tau_kernel_factors(std::span<const int> a, int m);
MPoly tau_kernel(std::span<const int> a, int m);
TablePtr tau_table(int n, int m);

/// prod over directed edges (i -> j) of (x_i/x_j)_{a_i} (q x_j/x_i)_{a_j-1}.
std::vector<MPoly> tournament_factors(const TablePtr& table, std::span<const std::pair<int, int>> edges,
                                      std::span<const int> a);
MPoly tournament_kernel(std::span<const std::pair<int, int>> edges, std::span<const int> a);

/// prod_{i<j}(x_j/x_i - x_i/x_j) prod_{i != j}(q x_i/x_j)_{a_i-1}.
std::vector<MPoly> bg_alternating_factors(const TablePtr& table, std::span<const int> a);
MPoly bg_alternating_kernel(std::span<const int> a);

/// prod_{i<j}(x_i/x_j)_{a_i}(q x_j/x_i)_{a_j - [j in I]} with I given as a
/// 0/1 mask indexed 0..n-1.
std::vector<MPoly> bg_general_factors(const TablePtr& table, std::span<const int> a, std::span<const int> in_i);

}  // namespace ctkit
