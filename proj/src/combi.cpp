#include "ctkit/combi.hpp"

#include <algorithm>
#include <charconv>
#include <functional>
#include <numeric>
#include <stdexcept>

namespace ctkit {

// ---------------------------------------------------------------------------
// Permutation

Permutation::Permutation(std::vector<int> w) : w_(std::move(w)) {
  std::vector<char> seen(w_.size() + 1, 0);
  for (int x : w_) {
    if (x < 1 || x > static_cast<int>(w_.size()) || seen[static_cast<std::size_t>(x)])
      throw std::invalid_argument("Permutation: not a permutation of 1..n");
    seen[static_cast<std::size_t>(x)] = 1;
  }
}

Permutation Permutation::identity(int n) {
  std::vector<int> w(static_cast<std::size_t>(n));
  std::iota(w.begin(), w.end(), 1);
  return Permutation(std::move(w));
}

Permutation Permutation::longest(int n) {
  std::vector<int> w(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) w[static_cast<std::size_t>(i)] = n - i;
  return Permutation(std::move(w));
}

Permutation Permutation::inverse() const {
  std::vector<int> inv(w_.size());
  for (std::size_t i = 0; i < w_.size(); ++i) inv[static_cast<std::size_t>(w_[i] - 1)] = static_cast<int>(i) + 1;
  return Permutation(std::move(inv));
}

Permutation operator*(const Permutation& w, const Permutation& v) {
  if (w.n() != v.n()) throw std::invalid_argument("Permutation: size mismatch");
  std::vector<int> r(static_cast<std::size_t>(w.n()));
  for (int i = 1; i <= w.n(); ++i) r[static_cast<std::size_t>(i - 1)] = w(v(i));
  return Permutation(std::move(r));
}

std::string Permutation::str() const { return composition_str(w_); }

Permutation Permutation::parse(std::string_view text) { return Permutation(parse_composition(text)); }

std::vector<Permutation> all_permutations(int n) {
  std::vector<Permutation> out;
  std::vector<int> w = Permutation::identity(n).one_line();
  do {
    out.emplace_back(w);
  } while (std::next_permutation(w.begin(), w.end()));
  return out;
}

PairSet inversions(const Permutation& w) {
  PairSet s;
  for (int i = 1; i <= w.n(); ++i)
    for (int j = i + 1; j <= w.n(); ++j)
      if (w(i) > w(j)) s.emplace_back(i, j);
  return s;
}

PairSet recording_set(const Permutation& w) { return inversions(w.inverse()); }

int length(const Permutation& w) { return static_cast<int>(inversions(w).size()); }

Composition act(const Permutation& w, const Composition& b) {
  if (static_cast<int>(b.size()) != w.n()) throw std::invalid_argument("act: length mismatch");
  Composition r(b.size());
  for (int i = 1; i <= w.n(); ++i) r[static_cast<std::size_t>(i - 1)] = b[static_cast<std::size_t>(w(i) - 1)];
  return r;
}

std::string pairset_str(const PairSet& s) {
  std::string out;
  for (const auto& [i, j] : s) {
    if (!out.empty()) out += ",";
    out += "(" + std::to_string(i) + "," + std::to_string(j) + ")";
  }
  return out;
}

PairSet all_pairs(int n) {
  PairSet s;
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j) s.emplace_back(i, j);
  return s;
}

PairSet pairset_from_mask(int n, unsigned long mask) {
  PairSet all = all_pairs(n), s;
  for (std::size_t k = 0; k < all.size(); ++k)
    if (mask >> k & 1UL) s.push_back(all[k]);
  return s;
}

bool contains(const PairSet& s, Pair p) { return std::binary_search(s.begin(), s.end(), p); }

// ---------------------------------------------------------------------------
// Compositions

int total(const Composition& v) { return std::accumulate(v.begin(), v.end(), 0); }

Composition sorted_desc(const Composition& v) {
  Composition r = v;
  std::sort(r.begin(), r.end(), std::greater<>());
  return r;
}

Composition reversed(const Composition& v) { return {v.rbegin(), v.rend()}; }

std::vector<int> partial_sums(const Composition& v) {
  std::vector<int> s(v.size());
  std::partial_sum(v.begin(), v.end(), s.begin());
  return s;
}

bool is_partition(const Composition& v) {
  for (std::size_t i = 0; i < v.size(); ++i)
    if (v[i] < 0 || (i > 0 && v[i] > v[i - 1])) return false;
  return true;
}

bool is_strict(const Composition& lambda) {
  for (std::size_t i = 0; i < lambda.size(); ++i)
    if (lambda[i] < 0 || (i > 0 && lambda[i] >= lambda[i - 1])) return false;
  return true;
}

Composition conjugate(const Composition& lambda, std::optional<int> len) {
  if (!is_partition(lambda)) throw std::invalid_argument("conjugate: not a partition");
  const int width = len ? *len : (lambda.empty() ? 0 : lambda.front());
  if (!lambda.empty() && lambda.front() > width) throw std::invalid_argument("conjugate: length too small");
  Composition c(static_cast<std::size_t>(width), 0);
  for (int part : lambda)
    for (int j = 0; j < part; ++j) ++c[static_cast<std::size_t>(j)];
  return c;
}

bool dominance_leq(const Composition& mu, const Composition& nu) {
  if (total(mu) != total(nu)) return false;
  const std::size_t len = std::max(mu.size(), nu.size());
  int sm = 0, sn = 0;
  for (std::size_t i = 0; i < len; ++i) {
    sm += i < mu.size() ? mu[i] : 0;
    sn += i < nu.size() ? nu[i] : 0;
    if (sm > sn) return false;
  }
  return true;
}

Composition staircase(int m) {
  Composition d(static_cast<std::size_t>(m));
  for (int i = 0; i < m; ++i) d[static_cast<std::size_t>(i)] = m - 1 - i;
  return d;
}

std::string composition_str(const Composition& v) {
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(v[i]);
  }
  return out;
}

Composition parse_composition(std::string_view text) {
  Composition v;
  if (text.empty()) return v;
  std::size_t pos = 0;
  while (true) {
    const std::size_t comma = text.find(',', pos);
    const std::string_view part = text.substr(pos, comma == std::string_view::npos ? std::string_view::npos : comma - pos);
    int x = 0;
    auto [ptr, ec] = std::from_chars(part.data(), part.data() + part.size(), x);
    if (ec != std::errc() || ptr != part.data() + part.size() || part.empty())
      throw std::invalid_argument("malformed integer list: " + std::string(text));
    v.push_back(x);
    if (comma == std::string_view::npos) break;
    pos = comma + 1;
  }
  return v;
}

std::vector<Composition> compositions_in_box(int n, int lo, int hi) {
  std::vector<Composition> out;
  if (n < 0 || lo > hi) return out;
  Composition a(static_cast<std::size_t>(n), lo);
  while (true) {
    out.push_back(a);
    int k = n - 1;
    while (k >= 0 && a[static_cast<std::size_t>(k)] == hi) a[static_cast<std::size_t>(k--)] = lo;
    if (k < 0) break;
    ++a[static_cast<std::size_t>(k)];
  }
  return out;
}

std::vector<Composition> compositions_of(int n, int m) {
  std::vector<Composition> out;
  if (n == 0) {
    if (m == 0) out.emplace_back();
    return out;
  }
  for (const auto& c : compositions_in_box(n, 0, m))
    if (total(c) == m) out.push_back(c);
  return out;
}

std::vector<Composition> partitions_of(int n, int m) {
  std::vector<Composition> out;
  Composition cur;
  std::function<void(int, int)> rec = [&](int left, int maxpart) {
    if (static_cast<int>(cur.size()) == n) {
      if (left == 0) out.push_back(cur);
      return;
    }
    for (int p = std::min(left, maxpart); p >= 0; --p) {
      cur.push_back(p);
      rec(left - p, p);
      cur.pop_back();
    }
  };
  rec(m, m);
  return out;
}

// ---------------------------------------------------------------------------
// Pair-set statistics

EllStats ell_stats(const PairSet& s, int n) {
  EllStats st;
  st.d.assign(static_cast<std::size_t>(n), 0);
  st.e.assign(static_cast<std::size_t>(n), 0);
  for (auto [i, j] : s) {
    if (i < 1 || i >= j || j > n) throw std::invalid_argument("ell_stats: pair out of range");
    ++st.d[static_cast<std::size_t>(j - 1)];
    ++st.e[static_cast<std::size_t>(i - 1)];
  }
  st.ell.resize(static_cast<std::size_t>(n));
  std::vector<int> mult(static_cast<std::size_t>(n) + 1, 0);
  for (int i = 1; i <= n; ++i) {
    const int l = (n - i) + st.d[static_cast<std::size_t>(i - 1)] - st.e[static_cast<std::size_t>(i - 1)];
    st.ell[static_cast<std::size_t>(i - 1)] = l;
    if (l >= 0 && l <= n) ++mult[static_cast<std::size_t>(l)];
  }
  st.K = 0;
  while (st.K <= n && mult[static_cast<std::size_t>(st.K)] == 1) ++st.K;
  return st;
}

std::optional<Permutation> pairset_to_perm(const PairSet& s, int n) {
  if (n == 0) return Permutation();
  const EllStats st = ell_stats(s, n);
  if (st.K < n) return std::nullopt;
  const int alpha = static_cast<int>(std::find(st.ell.begin(), st.ell.end(), 0) - st.ell.begin()) + 1;
  PairSet sub;
  for (auto [i, j] : s) {
    if (i == alpha || j == alpha) continue;
    sub.emplace_back(i - (i > alpha ? 1 : 0), j - (j > alpha ? 1 : 0));
  }
  std::sort(sub.begin(), sub.end());
  auto rest = pairset_to_perm(sub, n - 1);
  if (!rest) throw std::logic_error("pairset_to_perm: reduced set lost K = n");
  std::vector<int> w(static_cast<std::size_t>(n));
  for (int i = 1; i < n; ++i) {
    const int x = (*rest)(i);
    w[static_cast<std::size_t>(i - 1)] = x + (x >= alpha ? 1 : 0);
  }
  w[static_cast<std::size_t>(n - 1)] = alpha;
  Permutation p(std::move(w));
  if (recording_set(p) != s) throw std::logic_error("pairset_to_perm: R(w) differs from S");
  return p;
}

std::optional<Permutation> pairset_to_perm_bruteforce(const PairSet& s, int n) {
  for (const auto& w : all_permutations(n))
    if (recording_set(w) == s) return w;
  return std::nullopt;
}

// ---------------------------------------------------------------------------
// Tournaments

Tournament::Tournament(int n) : n_(n), beats_(static_cast<std::size_t>(n + 1), std::vector<char>(static_cast<std::size_t>(n + 1), 0)) {
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j) beats_[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = 1;
}

Tournament Tournament::from_pairset(const PairSet& s, int n) {
  Tournament t(n);
  for (auto [i, j] : s) {
    if (i < 1 || i >= j || j > n) throw std::invalid_argument("Tournament: pair out of range");
    t.orient(j, i);
  }
  return t;
}

std::vector<Tournament> Tournament::all(int n) {
  std::vector<Tournament> out;
  const auto pairs = all_pairs(n).size();
  for (unsigned long mask = 0; mask < (1UL << pairs); ++mask) out.push_back(from_pairset(pairset_from_mask(n, mask), n));
  return out;
}

bool Tournament::beats(int i, int j) const { return beats_.at(static_cast<std::size_t>(i)).at(static_cast<std::size_t>(j)) != 0; }

void Tournament::orient(int winner, int loser) {
  if (winner == loser) throw std::invalid_argument("Tournament: self loop");
  beats_.at(static_cast<std::size_t>(winner)).at(static_cast<std::size_t>(loser)) = 1;
  beats_.at(static_cast<std::size_t>(loser)).at(static_cast<std::size_t>(winner)) = 0;
}

std::vector<Pair> Tournament::edges() const {
  std::vector<Pair> out;
  for (int i = 1; i <= n_; ++i)
    for (int j = i + 1; j <= n_; ++j) out.push_back(beats(i, j) ? Pair{i, j} : Pair{j, i});
  return out;
}

std::vector<int> Tournament::scores() const {
  std::vector<int> sc(static_cast<std::size_t>(n_), 0);
  for (int i = 1; i <= n_; ++i)
    for (int j = 1; j <= n_; ++j)
      if (i != j && beats(i, j)) ++sc[static_cast<std::size_t>(i - 1)];
  return sc;
}

bool Tournament::is_transitive() const {
  std::vector<int> sc = scores();
  std::sort(sc.begin(), sc.end());
  return std::adjacent_find(sc.begin(), sc.end()) == sc.end();
}

std::optional<Permutation> Tournament::winner() const {
  if (!is_transitive()) return std::nullopt;
  const std::vector<int> sc = scores();
  std::vector<int> w(static_cast<std::size_t>(n_));
  for (int i = 1; i <= n_; ++i) w[static_cast<std::size_t>(n_ - 1 - sc[static_cast<std::size_t>(i - 1)])] = i;
  return Permutation(std::move(w));
}

PairSet Tournament::reversed_pairs() const {
  PairSet s;
  for (int i = 1; i <= n_; ++i)
    for (int j = i + 1; j <= n_; ++j)
      if (beats(j, i)) s.emplace_back(i, j);
  return s;
}

// ---------------------------------------------------------------------------
// (0,1)-matrices

ZeroOneMatrix::ZeroOneMatrix(int rows, int cols) : rows_(rows), cols_(cols), a_(static_cast<std::size_t>(rows * cols), 0) {
  if (rows < 0 || cols < 0) throw std::invalid_argument("ZeroOneMatrix: negative shape");
}

ZeroOneMatrix::ZeroOneMatrix(const std::vector<std::vector<int>>& rows)
    : ZeroOneMatrix(static_cast<int>(rows.size()), rows.empty() ? 0 : static_cast<int>(rows.front().size())) {
  for (int i = 0; i < rows_; ++i) {
    if (static_cast<int>(rows[static_cast<std::size_t>(i)].size()) != cols_) throw std::invalid_argument("ZeroOneMatrix: ragged rows");
    for (int j = 0; j < cols_; ++j) set(i + 1, j + 1, rows[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)]);
  }
}

ZeroOneMatrix ZeroOneMatrix::from_mask(int rows, int cols, unsigned long mask) {
  ZeroOneMatrix m(rows, cols);
  for (int k = 0; k < rows * cols; ++k) m.a_[static_cast<std::size_t>(k)] = static_cast<int>(mask >> k & 1UL);
  return m;
}

std::vector<ZeroOneMatrix> ZeroOneMatrix::all(int rows, int cols) {
  std::vector<ZeroOneMatrix> out;
  for (unsigned long mask = 0; mask < (1UL << (rows * cols)); ++mask) out.push_back(from_mask(rows, cols, mask));
  return out;
}

int ZeroOneMatrix::operator()(int i, int j) const {
  if (i < 1 || i > rows_ || j < 1 || j > cols_) throw std::out_of_range("ZeroOneMatrix index");
  return a_[static_cast<std::size_t>((i - 1) * cols_ + (j - 1))];
}

void ZeroOneMatrix::set(int i, int j, int v) {
  if (i < 1 || i > rows_ || j < 1 || j > cols_) throw std::out_of_range("ZeroOneMatrix index");
  if (v != 0 && v != 1) throw std::invalid_argument("ZeroOneMatrix: entries must be 0 or 1");
  a_[static_cast<std::size_t>((i - 1) * cols_ + (j - 1))] = v;
}

Composition ZeroOneMatrix::row_sums() const {
  Composition r(static_cast<std::size_t>(rows_), 0);
  for (int i = 1; i <= rows_; ++i)
    for (int j = 1; j <= cols_; ++j) r[static_cast<std::size_t>(i - 1)] += (*this)(i, j);
  return r;
}

Composition ZeroOneMatrix::col_sums() const {
  Composition c(static_cast<std::size_t>(cols_), 0);
  for (int i = 1; i <= rows_; ++i)
    for (int j = 1; j <= cols_; ++j) c[static_cast<std::size_t>(j - 1)] += (*this)(i, j);
  return c;
}

int ZeroOneMatrix::total() const { return std::accumulate(a_.begin(), a_.end(), 0); }

bool ZeroOneMatrix::is_left_justified() const {
  for (int i = 1; i <= rows_; ++i)
    for (int j = 2; j <= cols_; ++j)
      if ((*this)(i, j) > (*this)(i, j - 1)) return false;
  return true;
}

std::vector<std::vector<int>> ZeroOneMatrix::to_rows() const {
  std::vector<std::vector<int>> r(static_cast<std::size_t>(rows_));
  for (int i = 1; i <= rows_; ++i)
    for (int j = 1; j <= cols_; ++j) r[static_cast<std::size_t>(i - 1)].push_back((*this)(i, j));
  return r;
}

std::string ZeroOneMatrix::str() const {
  std::string out;
  for (int i = 1; i <= rows_; ++i) {
    if (i > 1) out += "/";
    for (int j = 1; j <= cols_; ++j) out += (*this)(i, j) ? '1' : '0';
  }
  return out;
}

ZeroOneMatrix left_justified_from_rows(const Composition& r, int m) {
  ZeroOneMatrix k(static_cast<int>(r.size()), m);
  for (int i = 1; i <= static_cast<int>(r.size()); ++i) {
    const int ri = r[static_cast<std::size_t>(i - 1)];
    if (ri < 0 || ri > m) throw std::invalid_argument("left_justified_from_rows: row sum out of range");
    for (int j = 1; j <= ri; ++j) k.set(i, j, 1);
  }
  return k;
}

bool gale_ryser_feasible(const Composition& mu, const Composition& nu) {
  for (int x : mu)
    if (x < 0 || x > static_cast<int>(nu.size())) return false;
  for (int x : nu)
    if (x < 0) return false;
  if (total(mu) != total(nu)) return false;
  const Composition c = sorted_desc(nu);
  const Composition rc = conjugate(sorted_desc(mu), static_cast<int>(nu.size()));
  return dominance_leq(c, rc);
}

}  // namespace ctkit
