#include "ctkit/mpoly.hpp"

#include "ctkit/budget.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <queue>
#include <stdexcept>
#include <unordered_map>
#include <unordered_set>
#include <ostream>

namespace ctkit {

// ---------------------------------------------------------------------------
// VarTable

VarTable::VarTable(TableSpec spec) : spec_(spec) {
  if (spec.x < 0 || spec.t < 0 || spec.s_rows < 0 || spec.s_cols < 0 || spec.u < 0)
    throw std::invalid_argument("VarTable: negative family size");
  vars_.push_back({Family::q});
  x0_ = static_cast<int>(vars_.size());
  for (int i = 1; i <= spec.x; ++i) vars_.push_back({Family::x, i});
  t0_ = static_cast<int>(vars_.size());
  for (int i = 1; i <= spec.t; ++i)
    for (int j = i + 1; j <= spec.t; ++j) vars_.push_back({Family::t, i, j});
  s0_ = static_cast<int>(vars_.size());
  for (int i = 1; i <= spec.s_rows; ++i)
    for (int j = 1; j <= spec.s_cols; ++j) vars_.push_back({Family::s, i, j});
  u0_ = static_cast<int>(vars_.size());
  for (int i = 1; i <= spec.u; ++i) vars_.push_back({Family::u, i});
  if (vars_.size() > static_cast<std::size_t>(kMaxVars))
    throw std::invalid_argument("VarTable: more than " + std::to_string(kMaxVars) + " variables");
}

int VarTable::x(int i) const {
  if (i < 1 || i > spec_.x) throw std::out_of_range("VarTable::x index");
  return x0_ + i - 1;
}

int VarTable::t(int i, int j) const {
  if (i < 1 || i >= j || j > spec_.t) throw std::out_of_range("VarTable::t index");
  // Pairs (i', j') with i' < i precede (i, j).
  int before = 0;
  for (int r = 1; r < i; ++r) before += spec_.t - r;
  return t0_ + before + (j - i - 1);
}

int VarTable::s(int i, int j) const {
  if (i < 1 || i > spec_.s_rows || j < 1 || j > spec_.s_cols) throw std::out_of_range("VarTable::s index");
  return s0_ + (i - 1) * spec_.s_cols + (j - 1);
}

int VarTable::u(int i) const {
  if (i < 1 || i > spec_.u) throw std::out_of_range("VarTable::u index");
  return u0_ + i - 1;
}

std::optional<int> VarTable::find(const VarDesc& d) const {
  switch (d.family) {
    case Family::q:
      return 0;
    case Family::x:
      if (d.i >= 1 && d.i <= spec_.x) return x(d.i);
      break;
    case Family::t:
      if (d.i >= 1 && d.i < d.j && d.j <= spec_.t) return t(d.i, d.j);
      break;
    case Family::s:
      if (d.i >= 1 && d.i <= spec_.s_rows && d.j >= 1 && d.j <= spec_.s_cols) return s(d.i, d.j);
      break;
    case Family::u:
      if (d.i >= 1 && d.i <= spec_.u) return u(d.i);
      break;
  }
  return std::nullopt;
}

std::string VarTable::name(int k) const {
  const VarDesc& d = desc(k);
  switch (d.family) {
    case Family::q:
      return "q";
    case Family::x:
      return "x" + std::to_string(d.i);
    case Family::t:
      return "t[" + std::to_string(d.i) + "," + std::to_string(d.j) + "]";
    case Family::s:
      return "s[" + std::to_string(d.i) + "," + std::to_string(d.j) + "]";
    case Family::u:
      return "u[" + std::to_string(d.i) + "]";
  }
  return "?";
}

std::pair<int, int> VarTable::range(Family f) const {
  switch (f) {
    case Family::q:
      return {0, 1};
    case Family::x:
      return {x0_, t0_};
    case Family::t:
      return {t0_, s0_};
    case Family::s:
      return {s0_, u0_};
    case Family::u:
      return {u0_, size()};
  }
  return {0, 0};
}

TablePtr make_table(TableSpec spec) { return std::make_shared<const VarTable>(spec); }

TablePtr without_family(const VarTable& table, Family f) {
  TableSpec s = table.spec();
  switch (f) {
    case Family::q:
      throw std::invalid_argument("without_family: q cannot be removed");
    case Family::x:
      s.x = 0;
      break;
    case Family::t:
      s.t = 0;
      break;
    case Family::s:
      s.s_rows = s.s_cols = 0;
      break;
    case Family::u:
      s.u = 0;
      break;
  }
  return make_table(s);
}

// ---------------------------------------------------------------------------
// Monomial

Monomial::Monomial(int size) : size_(static_cast<std::uint8_t>(size)) {
  if (size < 0 || size > kMaxVars) throw std::invalid_argument("Monomial: bad size");
}

void Monomial::set(int k, int e) {
  if (k < 0 || k >= size_) throw std::out_of_range("Monomial::set index");
  if (e < std::numeric_limits<std::int16_t>::min() || e > std::numeric_limits<std::int16_t>::max())
    throw std::overflow_error("Monomial: exponent out of range");
  exps_[static_cast<std::size_t>(k)] = static_cast<std::int16_t>(e);
}

int Monomial::total_degree() const {
  int d = 0;
  for (int k = 0; k < size_; ++k) d += exps_[static_cast<std::size_t>(k)];
  return d;
}

bool Monomial::is_one() const {
  for (int k = 0; k < size_; ++k)
    if (exps_[static_cast<std::size_t>(k)] != 0) return false;
  return true;
}

Monomial& Monomial::operator*=(const Monomial& o) {
  for (int k = 0; k < size_; ++k) {
    const int e = exps_[static_cast<std::size_t>(k)] + o.exps_[static_cast<std::size_t>(k)];
    if (e < std::numeric_limits<std::int16_t>::min() || e > std::numeric_limits<std::int16_t>::max())
      throw std::overflow_error("Monomial: exponent out of range");
    exps_[static_cast<std::size_t>(k)] = static_cast<std::int16_t>(e);
  }
  return *this;
}

std::strong_ordering operator<=>(const Monomial& a, const Monomial& b) {
  if (auto c = a.total_degree() <=> b.total_degree(); c != 0) return c;
  for (std::size_t k = 0; k < kMaxVars; ++k)
    if (a.exps_[k] != b.exps_[k]) return a.exps_[k] <=> b.exps_[k];
  return a.size_ <=> b.size_;
}

std::size_t Monomial::hash() const {
  std::uint64_t h = 0x9E3779B97F4A7C15ULL ^ size_;
  for (int k = 0; k < size_; ++k) {
    h ^= static_cast<std::uint16_t>(exps_[static_cast<std::size_t>(k)]) + 0x9E3779B97F4A7C15ULL + (h << 6) + (h >> 2);
  }
  h ^= h >> 33;
  h *= 0xff51afd7ed558ccdULL;
  h ^= h >> 33;
  return static_cast<std::size_t>(h);
}

// ---------------------------------------------------------------------------
// MPoly

namespace {

using Accum = std::unordered_map<Monomial, mpz_class, MonomialHash>;

std::vector<Term> drain(Accum& acc) {
  std::vector<Term> out;
  out.reserve(acc.size());
  for (auto& [m, c] : acc)
    if (c != 0) out.push_back({m, std::move(c)});
  std::sort(out.begin(), out.end(), [](const Term& a, const Term& b) { return a.mono < b.mono; });
  return out;
}

MPoly make_sorted(TablePtr table, std::vector<Term> sorted_terms) {
  return MPoly::from_terms(std::move(table), std::move(sorted_terms));
}

struct XRange {
  int begin, end;
};

XRange x_range(const VarTable& t) {
  auto [b, e] = t.range(Family::x);
  return {b, e};
}

}  // namespace

void require_same_table(const MPoly& a, const MPoly& b) {
  if (!a.table() || !b.table() || !(*a.table() == *b.table()))
    throw std::invalid_argument("MPoly: variable table mismatch");
}

MPoly MPoly::constant(TablePtr table, const mpz_class& c) {
  MPoly p(std::move(table));
  if (c != 0) p.terms_.push_back({p.one(), c});
  return p;
}

MPoly MPoly::variable(TablePtr table, int k, int exponent) {
  Monomial m(table->size());
  m.set(k, exponent);
  return monomial(std::move(table), m);
}

MPoly MPoly::monomial(TablePtr table, const Monomial& m, const mpz_class& c) {
  if (m.size() != table->size()) throw std::invalid_argument("MPoly::monomial: size mismatch");
  MPoly p(std::move(table));
  if (c != 0) p.terms_.push_back({m, c});
  return p;
}

MPoly MPoly::from_intpoly(TablePtr table, const IntPoly& ip) {
  std::vector<Term> ts;
  for (const auto& [e, c] : ip.terms()) {
    Monomial m(table->size());
    m.set(0, e);
    ts.push_back({m, c});
  }
  return from_terms(std::move(table), std::move(ts));
}

MPoly MPoly::from_terms(TablePtr table, std::vector<Term> terms) {
  MPoly p(std::move(table));
  std::sort(terms.begin(), terms.end(), [](const Term& a, const Term& b) { return a.mono < b.mono; });
  for (auto& t : terms) {
    if (t.mono.size() != p.table_->size()) throw std::invalid_argument("MPoly: monomial size mismatch");
    if (!p.terms_.empty() && p.terms_.back().mono == t.mono) {
      p.terms_.back().coeff += t.coeff;
      if (p.terms_.back().coeff == 0) p.terms_.pop_back();
    } else if (t.coeff != 0) {
      p.terms_.push_back(std::move(t));
    }
  }
  return p;
}

mpz_class MPoly::coeff(const Monomial& m) const {
  auto it = std::lower_bound(terms_.begin(), terms_.end(), m, [](const Term& t, const Monomial& k) { return t.mono < k; });
  if (it != terms_.end() && it->mono == m) return it->coeff;
  return 0;
}

IntPoly MPoly::to_intpoly() const {
  IntPoly r;
  for (const auto& t : terms_) {
    for (int k = 1; k < t.mono.size(); ++k)
      if (t.mono[k] != 0) throw std::domain_error("MPoly::to_intpoly: variable " + table_->name(k) + " present");
    r.add_term(t.mono[0], t.coeff);
  }
  return r;
}

bool MPoly::is_x_free() const {
  auto [b, e] = table_->range(Family::x);
  for (const auto& t : terms_)
    for (int k = b; k < e; ++k)
      if (t.mono[k] != 0) return false;
  return true;
}

MPoly MPoly::operator-() const {
  MPoly r = *this;
  for (auto& t : r.terms_) t.coeff = -t.coeff;
  return r;
}

MPoly operator+(const MPoly& a, const MPoly& b) {
  require_same_table(a, b);
  MPoly r(a.table_);
  r.terms_.reserve(a.terms_.size() + b.terms_.size());
  auto ia = a.terms_.begin();
  auto ib = b.terms_.begin();
  while (ia != a.terms_.end() || ib != b.terms_.end()) {
    if (ib == b.terms_.end() || (ia != a.terms_.end() && ia->mono < ib->mono)) {
      r.terms_.push_back(*ia++);
    } else if (ia == a.terms_.end() || ib->mono < ia->mono) {
      r.terms_.push_back(*ib++);
    } else {
      mpz_class c = ia->coeff + ib->coeff;
      if (c != 0) r.terms_.push_back({ia->mono, std::move(c)});
      ++ia;
      ++ib;
    }
  }
  return r;
}

MPoly operator-(const MPoly& a, const MPoly& b) { return a + (-b); }

MPoly operator*(const MPoly& a, const MPoly& b) {
  require_same_table(a, b);
  if (a.is_zero() || b.is_zero()) return MPoly(a.table_);
  Accum acc;
  acc.reserve(std::min<std::size_t>(a.size() * b.size(), 1U << 22));
  std::size_t ops = 0;
  for (const auto& ta : a.terms_) {
    for (const auto& tb : b.terms_) {
      mpz_class& slot = acc[ta.mono * tb.mono];
      mpz_addmul(slot.get_mpz_t(), ta.coeff.get_mpz_t(), tb.coeff.get_mpz_t());
    }
    ops += b.size();
    if (ops > (1U << 14)) {
      ops = 0;
      check_budget();
    }
  }
  MPoly r(a.table_);
  r.terms_ = drain(acc);
  return r;
}

MPoly MPoly::scaled(const mpz_class& c) const {
  if (c == 0) return MPoly(table_);
  MPoly r = *this;
  for (auto& t : r.terms_) t.coeff *= c;
  return r;
}

bool operator==(const MPoly& a, const MPoly& b) {
  if (!a.table_ || !b.table_) return a.table_ == b.table_ && a.terms_ == b.terms_;
  return *a.table_ == *b.table_ && a.terms_ == b.terms_;
}

std::string MPoly::str() const {
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& t : terms_) {
    const bool neg = t.coeff < 0;
    mpz_class mag = abs(t.coeff);
    if (first)
      out += neg ? "-" : "";
    else
      out += neg ? " - " : " + ";
    first = false;
    std::string powers;
    for (int k = 0; k < t.mono.size(); ++k) {
      const int e = t.mono[k];
      if (e == 0) continue;
      if (!powers.empty()) powers += "*";
      powers += table_->name(k);
      if (e != 1) powers += "^" + std::to_string(e);
    }
    if (powers.empty()) {
      out += mag.get_str();
    } else {
      if (mag != 1) out += mag.get_str() + "*";
      out += powers;
    }
  }
  return out;
}

nlohmann::json to_json(const MPoly& p) {
  const TableSpec& s = p.table()->spec();
  nlohmann::json j;
  j["table"] = {{"x", s.x}, {"t", s.t}, {"s", {s.s_rows, s.s_cols}}, {"u", s.u}};
  nlohmann::json vars = nlohmann::json::array();
  for (int k = 0; k < p.table()->size(); ++k) vars.push_back(p.table()->name(k));
  j["vars"] = vars;
  nlohmann::json terms = nlohmann::json::array();
  for (const auto& t : p.terms()) {
    nlohmann::json e = nlohmann::json::array();
    for (int k = 0; k < t.mono.size(); ++k) e.push_back(t.mono[k]);
    terms.push_back({e, t.coeff.get_str()});
  }
  j["terms"] = terms;
  return j;
}

MPoly mpoly_from_json(const nlohmann::json& j) {
  TableSpec s;
  const auto& jt = j.at("table");
  s.x = jt.at("x").get<int>();
  s.t = jt.at("t").get<int>();
  s.s_rows = jt.at("s").at(0).get<int>();
  s.s_cols = jt.at("s").at(1).get<int>();
  s.u = jt.at("u").get<int>();
  TablePtr table = make_table(s);
  std::vector<Term> terms;
  for (const auto& jt2 : j.at("terms")) {
    const auto& e = jt2.at(0);
    if (static_cast<int>(e.size()) != table->size()) throw std::invalid_argument("mpoly_from_json: exponent length");
    Monomial m(table->size());
    for (int k = 0; k < table->size(); ++k) m.set(k, e.at(static_cast<std::size_t>(k)).get<int>());
    terms.push_back({m, mpz_class(jt2.at(1).get<std::string>())});
  }
  return MPoly::from_terms(table, std::move(terms));
}

// ---------------------------------------------------------------------------
// Arithmetic

MPoly scale_by_intpoly(const MPoly& p, const IntPoly& c) { return p * MPoly::from_intpoly(p.table(), c); }

MPoly pow(const MPoly& p, unsigned k) {
  MPoly r = MPoly::constant(p.table(), 1);
  MPoly base = p;
  while (k) {
    if (k & 1U) r = r * base;
    k >>= 1U;
    if (k) base = base * base;
  }
  return r;
}

MPoly product(std::span<const MPoly> factors) {
  if (factors.empty()) throw std::invalid_argument("product: no factors");
  std::vector<MPoly> pool(factors.begin(), factors.end());
  using Entry = std::tuple<std::size_t, std::size_t, std::size_t>;  // size, seq, pool index
  std::priority_queue<Entry, std::vector<Entry>, std::greater<>> heap;
  std::size_t seq = 0;
  for (std::size_t i = 0; i < pool.size(); ++i) heap.emplace(pool[i].size(), seq++, i);
  while (heap.size() > 1) {
    auto [s1, q1, i1] = heap.top();
    heap.pop();
    auto [s2, q2, i2] = heap.top();
    heap.pop();
    pool.push_back(pool[i1] * pool[i2]);
    pool[i1] = MPoly();
    pool[i2] = MPoly();
    heap.emplace(pool.back().size(), seq++, pool.size() - 1);
  }
  return pool[std::get<2>(heap.top())];
}

MPoly mul_x_window(const MPoly& a, const MPoly& b, std::span<const int> lo, std::span<const int> hi) {
  require_same_table(a, b);
  const auto [xb, xe] = x_range(*a.table());
  const int n = xe - xb;
  if (static_cast<int>(lo.size()) != n || static_cast<int>(hi.size()) != n)
    throw std::invalid_argument("mul_x_window: bound length");
  Accum acc;
  std::size_t ops = 0;
  for (const auto& ta : a.terms()) {
    for (const auto& tb : b.terms()) {
      bool inside = true;
      for (int k = 0; k < n; ++k) {
        const int e = ta.mono[xb + k] + tb.mono[xb + k];
        if (e < lo[static_cast<std::size_t>(k)] || e > hi[static_cast<std::size_t>(k)]) {
          inside = false;
          break;
        }
      }
      if (!inside) continue;
      mpz_class& slot = acc[ta.mono * tb.mono];
      mpz_addmul(slot.get_mpz_t(), ta.coeff.get_mpz_t(), tb.coeff.get_mpz_t());
    }
    ops += b.size();
    if (ops > (1U << 14)) {
      ops = 0;
      check_budget();
    }
  }
  return make_sorted(a.table(), drain(acc));
}

// ---------------------------------------------------------------------------
// Extraction

MPoly coeff_x(const MPoly& p, std::span<const int> v) {
  const auto [xb, xe] = x_range(*p.table());
  if (static_cast<int>(v.size()) != xe - xb) throw std::invalid_argument("coeff_x: vector length differs from x-group");
  std::vector<Term> out;
  for (const auto& t : p.terms()) {
    bool match = true;
    for (int k = xb; k < xe; ++k)
      if (t.mono[k] != v[static_cast<std::size_t>(k - xb)]) {
        match = false;
        break;
      }
    if (!match) continue;
    Monomial m = t.mono;
    for (int k = xb; k < xe; ++k) m.set(k, 0);
    out.push_back({m, t.coeff});
  }
  return MPoly::from_terms(p.table(), std::move(out));
}

MPoly ct_x(const MPoly& p) {
  std::vector<int> zero(static_cast<std::size_t>(p.table()->n_x()), 0);
  return coeff_x(p, zero);
}

XBox x_box(const MPoly& p) {
  const auto [xb, xe] = x_range(*p.table());
  const auto n = static_cast<std::size_t>(xe - xb);
  XBox box{std::vector<int>(n, 0), std::vector<int>(n, 0)};
  bool first = true;
  for (const auto& t : p.terms()) {
    for (std::size_t k = 0; k < n; ++k) {
      const int e = t.mono[xb + static_cast<int>(k)];
      if (first || e < box.lo[k]) box.lo[k] = e;
      if (first || e > box.hi[k]) box.hi[k] = e;
    }
    first = false;
  }
  return box;
}

namespace {

Monomial x_part(const Monomial& m, int xb, int xe) {
  Monomial r(m.size());
  for (int k = xb; k < xe; ++k) r.set(k, m[k]);
  return r;
}

// Expands the factors of one half, keeping only terms whose x-exponent can
// still be completed to the target by the remaining factors of this half
// plus anything in `other` (a box of reachable x-exponents).
MPoly expand_half(std::span<const MPoly> all, const std::vector<std::size_t>& idx, const std::vector<XBox>& boxes,
                  const XBox& other, std::span<const int> v) {
  const auto n = v.size();
  std::vector<int> rest_lo = other.lo, rest_hi = other.hi;
  for (std::size_t f : idx)
    for (std::size_t k = 0; k < n; ++k) {
      rest_lo[k] += boxes[f].lo[k];
      rest_hi[k] += boxes[f].hi[k];
    }
  MPoly acc = MPoly::constant(all[idx.front()].table(), 1);
  for (std::size_t f : idx) {
    std::vector<int> lo(n), hi(n);
    for (std::size_t k = 0; k < n; ++k) {
      rest_lo[k] -= boxes[f].lo[k];
      rest_hi[k] -= boxes[f].hi[k];
      lo[k] = v[k] - rest_hi[k];
      hi[k] = v[k] - rest_lo[k];
    }
    acc = mul_x_window(acc, all[f], lo, hi);
    if (acc.is_zero()) break;
  }
  return acc;
}

}  // namespace

MPoly coeff_x_of_product(std::span<const MPoly> factors, std::span<const int> v) {
  if (factors.empty()) throw std::invalid_argument("coeff_x_of_product: no factors");
  const TablePtr& table = factors.front().table();
  for (const auto& f : factors) require_same_table(factors.front(), f);
  const auto [xb, xe] = x_range(*table);
  if (static_cast<int>(v.size()) != xe - xb) throw std::invalid_argument("coeff_x_of_product: vector length");
  if (factors.size() == 1) return coeff_x(factors.front(), v);

  std::vector<XBox> boxes;
  boxes.reserve(factors.size());
  for (const auto& f : factors) {
    if (f.is_zero()) return MPoly(table);
    boxes.push_back(x_box(f));
  }

  // Balance the halves by the logarithm of their term counts.
  std::vector<std::size_t> order(factors.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t a, std::size_t b) { return factors[a].size() > factors[b].size(); });
  std::vector<std::size_t> half_a, half_b;
  double wa = 0, wb = 0;
  for (std::size_t f : order) {
    const double w = std::log2(static_cast<double>(factors[f].size()) + 1.0);
    if (wa <= wb) {
      half_a.push_back(f);
      wa += w;
    } else {
      half_b.push_back(f);
      wb += w;
    }
  }
  auto box_of = [&](const std::vector<std::size_t>& idx) {
    XBox b{std::vector<int>(v.size(), 0), std::vector<int>(v.size(), 0)};
    for (std::size_t f : idx)
      for (std::size_t k = 0; k < v.size(); ++k) {
        b.lo[k] += boxes[f].lo[k];
        b.hi[k] += boxes[f].hi[k];
      }
    return b;
  };
  // Smallest factors first within each half.
  auto ascending = [&](std::vector<std::size_t>& idx) {
    std::stable_sort(idx.begin(), idx.end(), [&](std::size_t a, std::size_t b) { return factors[a].size() < factors[b].size(); });
  };
  ascending(half_a);
  ascending(half_b);
  const MPoly pa = expand_half(factors, half_a, boxes, box_of(half_b), v);
  const MPoly pb = expand_half(factors, half_b, boxes, x_box(pa), v);

  std::unordered_map<Monomial, std::vector<const Term*>, MonomialHash> by_x;
  for (const auto& t : pa.terms()) by_x[x_part(t.mono, xb, xe)].push_back(&t);

  Accum acc;
  std::size_t ops = 0;
  for (const auto& tb : pb.terms()) {
    Monomial want(table->size());
    for (int k = xb; k < xe; ++k) want.set(k, v[static_cast<std::size_t>(k - xb)] - tb.mono[k]);
    auto it = by_x.find(want);
    if (it == by_x.end()) continue;
    for (const Term* ta : it->second) {
      Monomial m = ta->mono * tb.mono;
      for (int k = xb; k < xe; ++k) m.set(k, 0);
      mpz_class& slot = acc[m];
      mpz_addmul(slot.get_mpz_t(), ta->coeff.get_mpz_t(), tb.coeff.get_mpz_t());
    }
    ops += it->second.size();
    if (ops > (1U << 14)) {
      ops = 0;
      check_budget();
    }
  }
  return make_sorted(table, drain(acc));
}

MPoly coeff_aux(const MPoly& p, Family family, const std::vector<std::vector<int>>& exponents) {
  const VarTable& table = *p.table();
  const TableSpec& spec = table.spec();
  std::vector<std::pair<int, int>> want;  // (variable index, exponent)
  auto check_shape = [&](std::size_t rows, std::size_t cols) {
    if (exponents.size() != rows) throw std::invalid_argument("coeff_aux: row count mismatch");
    for (const auto& r : exponents)
      if (r.size() != cols) throw std::invalid_argument("coeff_aux: column count mismatch");
  };
  switch (family) {
    case Family::t:
      check_shape(static_cast<std::size_t>(spec.t), static_cast<std::size_t>(spec.t));
      for (int i = 1; i <= spec.t; ++i)
        for (int j = 1; j <= spec.t; ++j) {
          const int e = exponents[static_cast<std::size_t>(i - 1)][static_cast<std::size_t>(j - 1)];
          if (i < j)
            want.emplace_back(table.t(i, j), e);
          else if (e != 0)
            throw std::invalid_argument("coeff_aux: t exponents must be strictly upper triangular");
        }
      break;
    case Family::s:
      check_shape(static_cast<std::size_t>(spec.s_rows), static_cast<std::size_t>(spec.s_cols));
      for (int i = 1; i <= spec.s_rows; ++i)
        for (int j = 1; j <= spec.s_cols; ++j)
          want.emplace_back(table.s(i, j), exponents[static_cast<std::size_t>(i - 1)][static_cast<std::size_t>(j - 1)]);
      break;
    case Family::u:
      check_shape(1, static_cast<std::size_t>(spec.u));
      for (int i = 1; i <= spec.u; ++i) want.emplace_back(table.u(i), exponents[0][static_cast<std::size_t>(i - 1)]);
      break;
    default:
      throw std::invalid_argument("coeff_aux: not an auxiliary family");
  }
  TablePtr target = without_family(table, family);
  std::vector<int> dest(static_cast<std::size_t>(table.size()), -1);
  for (int k = 0; k < table.size(); ++k)
    if (auto d = target->find(table.desc(k))) dest[static_cast<std::size_t>(k)] = *d;
  std::vector<Term> out;
  for (const auto& t : p.terms()) {
    bool match = true;
    for (auto [k, e] : want)
      if (t.mono[k] != e) {
        match = false;
        break;
      }
    if (!match) continue;
    Monomial m(target->size());
    for (int k = 0; k < table.size(); ++k)
      if (dest[static_cast<std::size_t>(k)] >= 0) m.set(dest[static_cast<std::size_t>(k)], t.mono[k]);
    out.push_back({m, t.coeff});
  }
  return MPoly::from_terms(target, std::move(out));
}

// ---------------------------------------------------------------------------
// Substitution

MPoly substitute(const MPoly& p, TablePtr target, std::span<const std::optional<Monomial>> images) {
  const int size = p.table()->size();
  if (static_cast<int>(images.size()) != size) throw std::invalid_argument("substitute: image count");
  for (const auto& img : images)
    if (img && img->size() != target->size()) throw std::invalid_argument("substitute: image size");
  std::vector<Term> out;
  out.reserve(p.size());
  for (const auto& t : p.terms()) {
    Monomial m(target->size());
    bool vanished = false;
    for (int k = 0; k < size && !vanished; ++k) {
      const int e = t.mono[k];
      if (e == 0) continue;
      const auto& img = images[static_cast<std::size_t>(k)];
      if (!img) {
        if (e < 0) throw std::domain_error("substitute: zero substituted into negative power of " + p.table()->name(k));
        vanished = true;
        break;
      }
      for (int j = 0; j < target->size(); ++j)
        if ((*img)[j] != 0) m.add(j, (*img)[j] * e);
    }
    if (!vanished) out.push_back({m, t.coeff});
  }
  return MPoly::from_terms(std::move(target), std::move(out));
}

namespace {

Monomial unit(const VarTable& table, int k, int e = 1) {
  Monomial m(table.size());
  m.set(k, e);
  return m;
}

// Images mapping each variable to its namesake in `target` (nullopt if absent).
std::vector<std::optional<Monomial>> identity_images(const VarTable& source, const VarTable& target) {
  std::vector<std::optional<Monomial>> images(static_cast<std::size_t>(source.size()));
  for (int k = 0; k < source.size(); ++k)
    if (auto d = target.find(source.desc(k))) images[static_cast<std::size_t>(k)] = unit(target, *d);
  return images;
}

}  // namespace

MPoly remap(const MPoly& p, TablePtr target) {
  auto images = identity_images(*p.table(), *target);
  for (const auto& t : p.terms())
    for (int k = 0; k < t.mono.size(); ++k)
      if (t.mono[k] != 0 && !images[static_cast<std::size_t>(k)])
        throw std::domain_error("remap: target table lacks " + p.table()->name(k));
  return substitute(p, std::move(target), images);
}

MPoly subst_x_qpower(const MPoly& p, std::span<const int> alpha) {
  const VarTable& src = *p.table();
  if (static_cast<int>(alpha.size()) != src.n_x()) throw std::invalid_argument("subst_x_qpower: length mismatch");
  TablePtr target = without_family(src, Family::x);
  auto images = identity_images(src, *target);
  for (int i = 1; i <= src.n_x(); ++i)
    images[static_cast<std::size_t>(src.x(i))] = unit(*target, 0, alpha[static_cast<std::size_t>(i - 1)]);
  return substitute(p, target, images);
}

MPoly subst_family_qpower(const MPoly& p, Family family, const std::function<std::optional<int>(const VarDesc&)>& f) {
  const VarTable& src = *p.table();
  TablePtr target = without_family(src, family);
  auto images = identity_images(src, *target);
  auto [b, e] = src.range(family);
  for (int k = b; k < e; ++k) {
    auto ex = f(src.desc(k));
    images[static_cast<std::size_t>(k)] = ex ? std::optional<Monomial>(unit(*target, 0, *ex)) : std::nullopt;
  }
  return substitute(p, target, images);
}

MPoly gamma_shift(const MPoly& p) {
  const VarTable& t = *p.table();
  const int n = t.n_x();
  if (n == 0) return p;
  auto images = identity_images(t, t);
  for (int i = 1; i < n; ++i) images[static_cast<std::size_t>(t.x(i))] = unit(t, t.x(i + 1));
  Monomial last = unit(t, t.x(1));
  last.add(0, -1);
  images[static_cast<std::size_t>(t.x(n))] = last;
  return substitute(p, p.table(), images);
}

MPoly gamma_shift_inverse(const MPoly& p) {
  const VarTable& t = *p.table();
  const int n = t.n_x();
  if (n == 0) return p;
  auto images = identity_images(t, t);
  for (int i = 2; i <= n; ++i) images[static_cast<std::size_t>(t.x(i))] = unit(t, t.x(i - 1));
  Monomial first = unit(t, t.x(n));
  first.add(0, 1);
  images[static_cast<std::size_t>(t.x(1))] = first;
  return substitute(p, p.table(), images);
}

// ---------------------------------------------------------------------------
// Kernels

namespace {

// c * q^qe * x_i / x_j as a single-term polynomial.
MPoly ratio_term(const TablePtr& table, int i, int j, int qe, const mpz_class& c, int aux = -1) {
  Monomial m(table->size());
  m.set(0, qe);
  m.add(table->x(i), 1);
  m.add(table->x(j), -1);
  if (aux >= 0) m.add(aux, 1);
  return MPoly::monomial(table, m, c);
}

void require_positive(std::span<const int> a, const char* who) {
  for (int ai : a)
    if (ai < 1) throw std::invalid_argument(std::string(who) + ": all parts must be positive");
}

void require_nonnegative(std::span<const int> a, const char* who) {
  for (int ai : a)
    if (ai < 0) throw std::invalid_argument(std::string(who) + ": negative part");
}

void require_x(const TablePtr& table, std::size_t n, const char* who) {
  if (table->n_x() < static_cast<int>(n)) throw std::invalid_argument(std::string(who) + ": table x-group too small");
}

}  // namespace

MPoly poch_factor(const TablePtr& table, int i, int j, int shift, int count) {
  if (count < 0) throw std::invalid_argument("poch_factor: negative count");
  MPoly r = MPoly::constant(table, 1);
  const MPoly one = MPoly::constant(table, 1);
  for (int k = 0; k < count; ++k) r = r * (one - ratio_term(table, i, j, shift + k, 1));
  return r;
}

std::vector<MPoly> dyson_factors(const TablePtr& table, std::span<const int> a) {
  require_nonnegative(a, "dyson_kernel");
  require_x(table, a.size(), "dyson_kernel");
  const int n = static_cast<int>(a.size());
  std::vector<MPoly> fs;
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j)
      fs.push_back(poch_factor(table, i, j, 0, a[static_cast<std::size_t>(i - 1)]) *
                   poch_factor(table, j, i, 1, a[static_cast<std::size_t>(j - 1)]));
  if (fs.empty()) fs.push_back(MPoly::constant(table, 1));
  return fs;
}

MPoly dyson_kernel(const TablePtr& table, std::span<const int> a) {
  MPoly k = product(dyson_factors(table, a));
  const auto [xb, xe] = table->range(Family::x);
  for (const auto& t : k.terms()) {
    int d = 0;
    for (int v = xb; v < xe; ++v) d += t.mono[v];
    if (d != 0) throw std::logic_error("dyson_kernel: not homogeneous of degree 0");
  }
  return k;
}

MPoly dyson_kernel(std::span<const int> a) {
  return dyson_kernel(make_table({.x = static_cast<int>(a.size())}), a);
}

std::vector<MPoly> tkernel_factors(const TablePtr& table, std::span<const int> a) {
  require_positive(a, "tkernel");
  require_x(table, a.size(), "tkernel");
  const int n = static_cast<int>(a.size());
  if (table->spec().t < n) throw std::invalid_argument("tkernel: table lacks t variables");
  const MPoly one = MPoly::constant(table, 1);
  std::vector<MPoly> fs;
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j)
      fs.push_back(poch_factor(table, i, j, 0, a[static_cast<std::size_t>(i - 1)]) *
                   poch_factor(table, j, i, 1, a[static_cast<std::size_t>(j - 1)] - 1) *
                   (one - ratio_term(table, j, i, 0, 1, table->t(i, j))));
  if (fs.empty()) fs.push_back(one);
  return fs;
}

MPoly tkernel(std::span<const int> a) {
  const int n = static_cast<int>(a.size());
  return product(tkernel_factors(make_table({.x = n, .t = n}), a));
}

TablePtr tau_table(int n, int m) { return make_table({.x = n + m, .t = n, .s_rows = n, .s_cols = m}); }

std::vector<MPoly> tau_kernel_factors(std::span<const int> a, int m) {
  require_positive(a, "tau_kernel");
  if (m < 0) throw std::invalid_argument("tau_kernel: negative m");
  const int n = static_cast<int>(a.size());
  TablePtr table = tau_table(n, m);
  std::vector<int> b(a.begin(), a.end());
  b.insert(b.end(), static_cast<std::size_t>(m), 1);
  const MPoly one = MPoly::constant(table, 1);
  std::vector<MPoly> fs;
  for (int i = 1; i <= n + m; ++i)
    for (int j = i + 1; j <= n + m; ++j) {
      MPoly f = poch_factor(table, i, j, 0, b[static_cast<std::size_t>(i - 1)]) *
                poch_factor(table, j, i, 1, b[static_cast<std::size_t>(j - 1)] - 1);
      if (i <= n) {
        const int aux = j <= n ? table->t(i, j) : table->s(i, j - n);
        f = f * (one - ratio_term(table, j, i, 0, 1, aux));
      }
      fs.push_back(std::move(f));
    }
  if (fs.empty()) fs.push_back(one);
  return fs;
}

MPoly tau_kernel(std::span<const int> a, int m) { return product(tau_kernel_factors(a, m)); }

std::vector<MPoly> tournament_factors(const TablePtr& table, std::span<const std::pair<int, int>> edges,
                                      std::span<const int> a) {
  require_positive(a, "tournament_kernel");
  require_x(table, a.size(), "tournament_kernel");
  std::vector<MPoly> fs;
  for (auto [i, j] : edges)
    fs.push_back(poch_factor(table, i, j, 0, a[static_cast<std::size_t>(i - 1)]) *
                 poch_factor(table, j, i, 1, a[static_cast<std::size_t>(j - 1)] - 1));
  if (fs.empty()) fs.push_back(MPoly::constant(table, 1));
  return fs;
}

MPoly tournament_kernel(std::span<const std::pair<int, int>> edges, std::span<const int> a) {
  return product(tournament_factors(make_table({.x = static_cast<int>(a.size())}), edges, a));
}

std::vector<MPoly> bg_alternating_factors(const TablePtr& table, std::span<const int> a) {
  require_positive(a, "bg_alternating_kernel");
  require_x(table, a.size(), "bg_alternating_kernel");
  const int n = static_cast<int>(a.size());
  std::vector<MPoly> fs;
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j)
      fs.push_back((ratio_term(table, j, i, 0, 1) - ratio_term(table, i, j, 0, 1)) *
                   poch_factor(table, i, j, 1, a[static_cast<std::size_t>(i - 1)] - 1) *
                   poch_factor(table, j, i, 1, a[static_cast<std::size_t>(j - 1)] - 1));
  if (fs.empty()) fs.push_back(MPoly::constant(table, 1));
  return fs;
}

MPoly bg_alternating_kernel(std::span<const int> a) {
  return product(bg_alternating_factors(make_table({.x = static_cast<int>(a.size())}), a));
}

std::vector<MPoly> bg_general_factors(const TablePtr& table, std::span<const int> a, std::span<const int> in_i) {
  require_positive(a, "bg_general_kernel");
  require_x(table, a.size(), "bg_general_kernel");
  if (in_i.size() != a.size()) throw std::invalid_argument("bg_general_kernel: mask length");
  const int n = static_cast<int>(a.size());
  std::vector<MPoly> fs;
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j)
      fs.push_back(poch_factor(table, i, j, 0, a[static_cast<std::size_t>(i - 1)]) *
                   poch_factor(table, j, i, 1,
                               a[static_cast<std::size_t>(j - 1)] - (in_i[static_cast<std::size_t>(j - 1)] ? 1 : 0)));
  if (fs.empty()) fs.push_back(MPoly::constant(table, 1));
  return fs;
}

}  // namespace ctkit

namespace ctkit {
std::ostream& operator<<(std::ostream& os, const MPoly& p) { return os << p.str(); }
}  // namespace ctkit
