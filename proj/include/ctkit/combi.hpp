#pragma once

// Permutations, compositions and partitions, pair sets with their K(S)
// statistic, tournaments and (0,1)-matrices.

#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace ctkit {

using Composition = std::vector<int>;
using Pair = std::pair<int, int>;
/// Sorted list of pairs (i, j), 1 <= i < j <= n.
using PairSet = std::vector<Pair>;

/// Permutation of {1..n} in one-line notation.
class Permutation {
 public:
  Permutation() = default;
  /// Throws std::invalid_argument unless w is a permutation of 1..n.
  explicit Permutation(std::vector<int> w);
  static Permutation identity(int n);
  static Permutation longest(int n);

  int n() const { return static_cast<int>(w_.size()); }
  /// w(i), 1-based.
  int operator()(int i) const { return w_.at(static_cast<std::size_t>(i - 1)); }
  const std::vector<int>& one_line() const { return w_; }

  Permutation inverse() const;
  /// Applies v first: (w * v)(i) = w(v(i)).
  friend Permutation operator*(const Permutation& w, const Permutation& v);
  friend bool operator==(const Permutation&, const Permutation&) = default;
  friend auto operator<=>(const Permutation&, const Permutation&) = default;

  /// "3,4,6,1,5,7,2"
  std::string str() const;
  static Permutation parse(std::string_view text);

 private:
  std::vector<int> w_;
};

/// All permutations of {1..n} in lexicographic order.
std::vector<Permutation> all_permutations(int n);

/// I(w) = {(i, j) : i < j, w(i) > w(j)}.
PairSet inversions(const Permutation& w);
/// R(w) = I(w^{-1}).
PairSet recording_set(const Permutation& w);
int length(const Permutation& w);
/// (w(b_1), ..., w(b_n)) := (b_{w(1)}, ..., b_{w(n)}), i.e. entries permuted
/// by position.
Composition act(const Permutation& w, const Composition& b);

std::string pairset_str(const PairSet& s);
/// All pairs (i, j) with 1 <= i < j <= n in lexicographic order.
PairSet all_pairs(int n);
/// Subset of all_pairs(n) selected by the bits of mask.
PairSet pairset_from_mask(int n, unsigned long mask);
bool contains(const PairSet& s, Pair p);

// ---------------------------------------------------------------------------
// Compositions and partitions

int total(const Composition& v);
/// Weakly decreasing rearrangement v+.
Composition sorted_desc(const Composition& v);
/// Reversal.
Composition reversed(const Composition& v);
/// sigma_i = v_1 + ... + v_i.
std::vector<int> partial_sums(const Composition& v);
bool is_partition(const Composition& v);
/// Strictly decreasing over all entries.
bool is_strict(const Composition& lambda);
/// Conjugate partition with `len` entries (default lambda_1).
Composition conjugate(const Composition& lambda, std::optional<int> len = std::nullopt);
/// mu <= nu in dominance order (equal totals required).
bool dominance_leq(const Composition& mu, const Composition& nu);
/// delta_m = (m-1, ..., 1, 0).
Composition staircase(int m);
std::string composition_str(const Composition& v);
/// Parses "1,0,2"; throws std::invalid_argument.
Composition parse_composition(std::string_view text);

/// All length-n compositions with entries in [lo, hi], lexicographic.
std::vector<Composition> compositions_in_box(int n, int lo, int hi);
/// All length-n compositions of m with nonnegative entries, lexicographic.
std::vector<Composition> compositions_of(int n, int m);
/// Partitions with at most n parts (padded to n) of size m, in decreasing
/// lexicographic order.
std::vector<Composition> partitions_of(int n, int m);

// ---------------------------------------------------------------------------
// Pair-set statistics

struct EllStats {
  std::vector<int> d;    ///< d_j = #{i : (i, j) in S}
  std::vector<int> e;    ///< e_i = #{j : (i, j) in S}
  std::vector<int> ell;  ///< ell_i = (n - i) + d_i - e_i
  int K = 0;             ///< largest k with 0..k-1 each occurring exactly once in ell
};
EllStats ell_stats(const PairSet& s, int n);

/// The w with R(w) = S, built inductively from the index with ell = 0; empty
/// when K(S) < n.
std::optional<Permutation> pairset_to_perm(const PairSet& s, int n);
/// Exhaustive search oracle for pairset_to_perm.
std::optional<Permutation> pairset_to_perm_bruteforce(const PairSet& s, int n);

// ---------------------------------------------------------------------------
// Tournaments

class Tournament {
 public:
  /// The natural order 1 -> 2 -> ... -> n (i beats j for i < j).
  explicit Tournament(int n);
  /// Natural order with the pairs of S reversed.
  static Tournament from_pairset(const PairSet& s, int n);
  /// All 2^{n(n-1)/2} tournaments, indexed by the set of reversed pairs.
  static std::vector<Tournament> all(int n);

  int n() const { return n_; }
  bool beats(int i, int j) const;
  void orient(int winner, int loser);
  /// Directed edges (winner, loser) in lexicographic order of the pair.
  std::vector<Pair> edges() const;
  std::vector<int> scores() const;
  /// Acyclic, equivalently all scores distinct.
  bool is_transitive() const;
  /// Vertices ranked by decreasing score, when transitive.
  std::optional<Permutation> winner() const;
  /// Pairs i < j with j -> i.
  PairSet reversed_pairs() const;

 private:
  int n_;
  std::vector<std::vector<char>> beats_;
};

// ---------------------------------------------------------------------------
// (0,1)-matrices

class ZeroOneMatrix {
 public:
  ZeroOneMatrix(int rows, int cols);
  /// Rows given as 0/1 vectors; throws std::invalid_argument.
  explicit ZeroOneMatrix(const std::vector<std::vector<int>>& rows);
  /// Entries from the bits of mask, row-major, bit 0 = (1,1).
  static ZeroOneMatrix from_mask(int rows, int cols, unsigned long mask);
  static std::vector<ZeroOneMatrix> all(int rows, int cols);

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  int operator()(int i, int j) const;
  void set(int i, int j, int v);

  Composition row_sums() const;
  Composition col_sums() const;
  int total() const;
  bool is_left_justified() const;
  std::vector<std::vector<int>> to_rows() const;
  friend bool operator==(const ZeroOneMatrix&, const ZeroOneMatrix&) = default;

  /// Rows as 0/1 strings joined by '/', e.g. "01001/11000".
  std::string str() const;

 private:
  int rows_, cols_;
  std::vector<int> a_;
};

/// The left-justified matrix with row sums r (0 <= r_i <= m).
ZeroOneMatrix left_justified_from_rows(const Composition& r, int m);
/// Whether a (0,1)-matrix with row sums mu and column sums nu exists.
bool gale_ryser_feasible(const Composition& mu, const Composition& nu);

}  // namespace ctkit
