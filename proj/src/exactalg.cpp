#include "ctkit/exactalg.hpp"

#include <algorithm>
#include <cctype>
#include <ostream>
#include <numeric>
#include <utility>

namespace ctkit {

namespace {

using Dense = std::vector<mpz_class>;

// Dense coefficient vector of an ordinary polynomial (low degree >= 0).
Dense to_dense(const IntPoly& p) {
  Dense d(static_cast<std::size_t>(p.degree()) + 1);
  for (const auto& [e, c] : p.terms()) d[static_cast<std::size_t>(e)] = c;
  return d;
}

IntPoly from_dense(const Dense& d) {
  IntPoly p;
  for (std::size_t i = 0; i < d.size(); ++i) p.add_term(static_cast<int>(i), d[i]);
  return p;
}

void trim(Dense& d) {
  while (!d.empty() && d.back() == 0) d.pop_back();
}

// Pseudo-remainder of a by b (both nonzero dense, deg a >= deg b).
Dense pseudo_rem(Dense a, const Dense& b) {
  const std::size_t db = b.size() - 1;
  const mpz_class& lb = b.back();
  while (!a.empty() && a.size() - 1 >= db) {
    const std::size_t shift = a.size() - 1 - db;
    mpz_class la = a.back();
    for (auto& c : a) c *= lb;
    for (std::size_t i = 0; i <= db; ++i) a[i + shift] -= la * b[i];
    trim(a);
  }
  return a;
}

Dense dense_primitive(Dense d) {
  mpz_class g = 0;
  for (const auto& c : d) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
  if (g == 0) return d;
  if (d.back() < 0) g = -g;
  for (auto& c : d) mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), g.get_mpz_t());
  return d;
}

// Exact division of ordinary polynomials a / b over Z with b(0) != 0.
std::optional<Dense> dense_divide(Dense a, const Dense& b) {
  trim(a);
  if (a.empty()) return Dense{};
  if (a.size() < b.size()) return std::nullopt;
  const std::size_t db = b.size() - 1;
  Dense quot(a.size() - db);
  const mpz_class& lb = b.back();
  for (std::size_t k = quot.size(); k-- > 0;) {
    const mpz_class& top = a[k + db];
    if (top == 0) continue;
    if (!mpz_divisible_p(top.get_mpz_t(), lb.get_mpz_t())) return std::nullopt;
    mpz_class qk;
    mpz_divexact(qk.get_mpz_t(), top.get_mpz_t(), lb.get_mpz_t());
    for (std::size_t i = 0; i <= db; ++i) a[k + i] -= qk * b[i];
    quot[k] = std::move(qk);
  }
  for (const auto& c : a)
    if (c != 0) return std::nullopt;
  return quot;
}

}  // namespace

// ---------------------------------------------------------------------------
// IntPoly

IntPoly::IntPoly(long c) {
  if (c != 0) terms_.emplace(0, mpz_class(c));
}

IntPoly::IntPoly(const mpz_class& c) {
  if (c != 0) terms_.emplace(0, c);
}

IntPoly IntPoly::monomial(const mpz_class& c, int e) {
  IntPoly p;
  p.add_term(e, c);
  return p;
}

IntPoly IntPoly::one_minus_q_power(int e) {
  IntPoly p(1);
  p.add_term(e, -1);
  return p;
}

bool IntPoly::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first == 0);
}

int IntPoly::low_degree() const {
  if (terms_.empty()) throw std::logic_error("low_degree of zero polynomial");
  return terms_.begin()->first;
}

int IntPoly::degree() const {
  if (terms_.empty()) throw std::logic_error("degree of zero polynomial");
  return terms_.rbegin()->first;
}

mpz_class IntPoly::coeff(int e) const {
  auto it = terms_.find(e);
  return it == terms_.end() ? mpz_class(0) : it->second;
}

const mpz_class& IntPoly::leading_coeff() const {
  if (terms_.empty()) throw std::logic_error("leading_coeff of zero polynomial");
  return terms_.rbegin()->second;
}

void IntPoly::add_term(int e, const mpz_class& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

IntPoly IntPoly::shifted(int e) const {
  IntPoly r;
  for (const auto& [k, c] : terms_) r.terms_.emplace_hint(r.terms_.end(), k + e, c);
  return r;
}

IntPoly IntPoly::dilated(int k) const {
  IntPoly r;
  for (const auto& [e, c] : terms_) r.add_term(e * k, c);
  return r;
}

bool IntPoly::has_nonnegative_coeffs() const {
  return std::all_of(terms_.begin(), terms_.end(), [](const auto& t) { return t.second > 0; });
}

IntPoly IntPoly::operator-() const {
  IntPoly r = *this;
  for (auto& [e, c] : r.terms_) c = -c;
  return r;
}

IntPoly& IntPoly::operator+=(const IntPoly& o) {
  for (const auto& [e, c] : o.terms_) add_term(e, c);
  return *this;
}

IntPoly& IntPoly::operator-=(const IntPoly& o) {
  for (const auto& [e, c] : o.terms_) add_term(e, -c);
  return *this;
}

IntPoly& IntPoly::operator*=(const IntPoly& o) { return *this = *this * o; }

IntPoly& IntPoly::operator*=(const mpz_class& c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [e, v] : terms_) v *= c;
  return *this;
}

IntPoly operator*(const IntPoly& a, const IntPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  const int lo = a.low_degree() + b.low_degree();
  const int hi = a.degree() + b.degree();
  std::vector<mpz_class> acc(static_cast<std::size_t>(hi - lo) + 1);
  for (const auto& [ea, ca] : a.terms_)
    for (const auto& [eb, cb] : b.terms_) {
      auto& slot = acc[static_cast<std::size_t>(ea + eb - lo)];
      mpz_addmul(slot.get_mpz_t(), ca.get_mpz_t(), cb.get_mpz_t());
    }
  IntPoly r;
  for (std::size_t i = 0; i < acc.size(); ++i)
    if (acc[i] != 0) r.terms_.emplace_hint(r.terms_.end(), lo + static_cast<int>(i), std::move(acc[i]));
  return r;
}

std::string IntPoly::str() const {
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [e, c] : terms_) {
    mpz_class mag = abs(c);
    if (first) {
      if (c < 0) out += "-";
    } else {
      out += c < 0 ? " - " : " + ";
    }
    first = false;
    if (e == 0) {
      out += mag.get_str();
      continue;
    }
    if (mag != 1) out += mag.get_str() + "*";
    out += "q";
    if (e != 1) out += "^" + std::to_string(e);
  }
  return out;
}

IntPoly IntPoly::parse(std::string_view text) {
  std::string s;
  for (char ch : text)
    if (!std::isspace(static_cast<unsigned char>(ch))) s += ch;
  if (s.empty()) throw std::invalid_argument("IntPoly::parse: empty input");
  IntPoly p;
  std::size_t i = 0;
  auto fail = [&](const char* why) {
    throw std::invalid_argument(std::string("IntPoly::parse: ") + why + " in '" + std::string(text) + "'");
  };
  auto read_int = [&](std::string& digits) {
    std::size_t start = i;
    while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
    digits = s.substr(start, i - start);
    return i > start;
  };
  bool first = true;
  while (i < s.size()) {
    int sign = 1;
    if (s[i] == '+' || s[i] == '-') {
      sign = s[i] == '-' ? -1 : 1;
      ++i;
    } else if (!first) {
      fail("expected '+' or '-'");
    }
    first = false;
    mpz_class c = 1;
    std::string digits;
    bool have_coeff = read_int(digits);
    if (have_coeff) c = mpz_class(digits);
    int e = 0;
    bool have_q = false;
    if (i < s.size() && s[i] == '*') {
      if (!have_coeff) fail("dangling '*'");
      ++i;
      if (i >= s.size() || s[i] != 'q') fail("expected 'q' after '*'");
    }
    if (i < s.size() && s[i] == 'q') {
      have_q = true;
      ++i;
      e = 1;
      if (i < s.size() && s[i] == '^') {
        ++i;
        int esign = 1;
        if (i < s.size() && s[i] == '-') {
          esign = -1;
          ++i;
        }
        if (!read_int(digits)) fail("expected exponent");
        e = esign * std::stoi(digits);
      }
    }
    if (!have_coeff && !have_q) fail("expected a term");
    p.add_term(e, sign * c);
  }
  return p;
}

IntPoly pow(IntPoly base, unsigned k) {
  IntPoly r(1);
  while (k) {
    if (k & 1U) r *= base;
    k >>= 1U;
    if (k) base = base * base;
  }
  return r;
}

mpz_class content(const IntPoly& p) {
  mpz_class g = 0;
  for (const auto& [e, c] : p.terms()) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
  return g;
}

IntPoly primitive_part(const IntPoly& p) {
  if (p.is_zero()) return p;
  mpz_class g = content(p);
  if (p.leading_coeff() < 0) g = -g;
  IntPoly r;
  for (const auto& [e, c] : p.terms()) {
    mpz_class v;
    mpz_divexact(v.get_mpz_t(), c.get_mpz_t(), g.get_mpz_t());
    r.add_term(e, v);
  }
  return r;
}

IntPoly poly_gcd(const IntPoly& a, const IntPoly& b) {
  if (a.is_zero() || b.is_zero()) throw std::invalid_argument("poly_gcd: zero argument");
  if (a.low_degree() < 0 || b.low_degree() < 0) throw std::invalid_argument("poly_gcd: Laurent argument");
  Dense x = dense_primitive(to_dense(a));
  Dense y = dense_primitive(to_dense(b));
  if (x.size() < y.size()) std::swap(x, y);
  while (!y.empty()) {
    if (y.size() == 1) return IntPoly(1);
    Dense r = pseudo_rem(x, y);
    x = std::move(y);
    y = r.empty() ? Dense{} : dense_primitive(std::move(r));
  }
  return from_dense(dense_primitive(std::move(x)));
}

std::optional<IntPoly> divide_exact(const IntPoly& a, const IntPoly& b) {
  if (b.is_zero()) throw std::domain_error("divide_exact: division by zero");
  if (a.is_zero()) return IntPoly{};
  const int la = a.low_degree();
  const int lb = b.low_degree();
  auto quot = dense_divide(to_dense(a.shifted(-la)), to_dense(b.shifted(-lb)));
  if (!quot) return std::nullopt;
  return from_dense(*quot).shifted(la - lb);
}

IntPoly divide_or_throw(const IntPoly& a, const IntPoly& b, std::string_view what) {
  auto r = divide_exact(a, b);
  if (!r) throw InexactDivision(std::string(what) + ": (" + a.str() + ") / (" + b.str() + ") is not a polynomial");
  return *r;
}

// ---------------------------------------------------------------------------
// QRat

QRat::QRat(IntPoly num) : num_(std::move(num)), den_(1) {}

QRat::QRat(IntPoly num, IntPoly den) {
  *this = normalized(std::move(num), std::move(den));
}

QRat QRat::normalized(IntPoly num, IntPoly den) {
  if (den.is_zero()) throw std::domain_error("QRat: zero denominator");
  if (num.is_zero()) return QRat(Raw{}, IntPoly{}, IntPoly(1));
  const int ln = num.low_degree();
  const int ld = den.low_degree();
  IntPoly n0 = num.shifted(-ln);
  IntPoly d0 = den.shifted(-ld);
  if (!d0.is_constant()) {
    IntPoly g = poly_gcd(n0, d0);
    if (!g.is_constant()) {
      n0 = divide_or_throw(n0, g, "QRat::normalized");
      d0 = divide_or_throw(d0, g, "QRat::normalized");
    }
  }
  mpz_class cn = content(n0);
  mpz_class cd = content(d0);
  mpz_class g;
  mpz_gcd(g.get_mpz_t(), cn.get_mpz_t(), cd.get_mpz_t());
  if (d0.leading_coeff() < 0) g = -g;
  if (g != 1) {
    IntPoly nn, dd;
    for (const auto& [e, c] : n0.terms()) {
      mpz_class v;
      mpz_divexact(v.get_mpz_t(), c.get_mpz_t(), g.get_mpz_t());
      nn.add_term(e, v);
    }
    for (const auto& [e, c] : d0.terms()) {
      mpz_class v;
      mpz_divexact(v.get_mpz_t(), c.get_mpz_t(), g.get_mpz_t());
      dd.add_term(e, v);
    }
    n0 = std::move(nn);
    d0 = std::move(dd);
  }
  return QRat(Raw{}, n0.shifted(ln - ld), std::move(d0));
}

std::optional<IntPoly> QRat::as_poly() const {
  if (den_ == IntPoly(1)) return num_;
  return std::nullopt;
}

IntPoly QRat::to_poly(std::string_view what) const {
  if (auto p = as_poly()) return *p;
  throw InexactDivision(std::string(what) + ": " + str() + " is not a polynomial");
}

QRat QRat::operator-() const { return QRat(Raw{}, -num_, den_); }

QRat operator+(const QRat& a, const QRat& b) {
  if (a.den_ == b.den_) return QRat(a.num_ + b.num_, a.den_);
  return QRat(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}

QRat operator-(const QRat& a, const QRat& b) { return a + (-b); }

QRat operator*(const QRat& a, const QRat& b) {
  return QRat(a.num_ * b.num_, a.den_ * b.den_);
}

QRat operator/(const QRat& a, const QRat& b) {
  if (b.is_zero()) throw std::domain_error("QRat: division by zero");
  return QRat(a.num_ * b.den_, a.den_ * b.num_);
}

std::string QRat::str() const {
  if (den_ == IntPoly(1)) return num_.str();
  return "(" + num_.str() + ")/(" + den_.str() + ")";
}

std::optional<IntPoly> qrat_is_poly(const QRat& r) { return r.as_poly(); }

// ---------------------------------------------------------------------------
// q-factorials

IntPoly qpoch(int m, int k) {
  if (k < 0) throw std::invalid_argument("qpoch: negative length");
  IntPoly r(1);
  for (int i = 0; i < k; ++i) r *= IntPoly::one_minus_q_power(m + i);
  return r;
}

IntPoly qbinom(int n, int m) {
  if (m < 0 || m > n) return {};
  return divide_or_throw(qfactorial(n), qfactorial(m) * qfactorial(n - m), "qbinom");
}

IntPoly qmultinom(std::span<const int> a) {
  int total = 0;
  IntPoly denom(1);
  IntPoly chained(1);
  for (int ai : a) {
    if (ai < 0) throw std::invalid_argument("qmultinom: negative part");
    total += ai;
    denom *= qfactorial(ai);
    chained *= qbinom(total, ai);
  }
  IntPoly quotient = divide_or_throw(qfactorial(total), denom, "qmultinom");
  if (quotient != chained) throw std::logic_error("qmultinom: factorial and q-binomial forms disagree");
  return quotient;
}

}  // namespace ctkit

namespace ctkit {
std::ostream& operator<<(std::ostream& os, const IntPoly& p) { return os << p.str(); }
std::ostream& operator<<(std::ostream& os, const QRat& r) { return os << r.str(); }
}  // namespace ctkit
