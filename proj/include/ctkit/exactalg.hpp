#pragma once

// Exact univariate arithmetic in q: Laurent polynomials over Z and the
// field of rational functions Q(q), plus q-shifted factorials.

#include <gmpxx.h>

#include <iosfwd>
#include <map>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace ctkit {

/// Raised when an exact division that must succeed leaves a remainder.
/// Always indicates an arithmetic bug or a violated identity.
class InexactDivision : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// Laurent polynomial in q with arbitrary-precision integer coefficients.
/// Stored sparsely; zero coefficients are never kept.
class IntPoly {
 public:
  using TermMap = std::map<int, mpz_class>;

  IntPoly() = default;
  IntPoly(long c);  // NOLINT(google-explicit-constructor)
  IntPoly(const mpz_class& c);  // NOLINT(google-explicit-constructor)

  static IntPoly monomial(const mpz_class& c, int e);
  static IntPoly q_power(int e) { return monomial(1, e); }
  /// 1 - q^e
  static IntPoly one_minus_q_power(int e);

  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  /// Lowest / highest exponent. Undefined for zero.
  int low_degree() const;
  int degree() const;
  mpz_class coeff(int e) const;
  const mpz_class& leading_coeff() const;
  const TermMap& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }

  /// Multiply by q^e.
  IntPoly shifted(int e) const;
  /// Substitute q -> q^k (k may be negative).
  IntPoly dilated(int k) const;
  bool has_nonnegative_coeffs() const;

  IntPoly operator-() const;
  IntPoly& operator+=(const IntPoly& o);
  IntPoly& operator-=(const IntPoly& o);
  IntPoly& operator*=(const IntPoly& o);
  IntPoly& operator*=(const mpz_class& c);
  friend IntPoly operator+(IntPoly a, const IntPoly& b) { return a += b; }
  friend IntPoly operator-(IntPoly a, const IntPoly& b) { return a -= b; }
  friend IntPoly operator*(const IntPoly& a, const IntPoly& b);
  friend bool operator==(const IntPoly& a, const IntPoly& b) = default;

  /// Sum of signed terms `c*q^e` in ascending exponent order, e.g.
  /// "1 - q - q^2 + q^3". The zero polynomial renders as "0".
  std::string str() const;
  /// Inverse of str(); also accepts explicit forms such as "3*q^0" or
  /// "-1*q^-2". Throws std::invalid_argument on malformed input.
  static IntPoly parse(std::string_view text);

  void add_term(int e, const mpz_class& c);

 private:
  TermMap terms_;
};

IntPoly pow(IntPoly base, unsigned k);
mpz_class content(const IntPoly& p);
/// Divides out the integer content and makes the leading coefficient
/// positive.
IntPoly primitive_part(const IntPoly& p);
/// Greatest common divisor in Z[q] of two ordinary polynomials (no negative
/// exponents, both nonzero), returned primitive with positive leading
/// coefficient. q-power factors are ignored: the inputs are expected to have
/// a nonzero constant term.
IntPoly poly_gcd(const IntPoly& a, const IntPoly& b);
/// a / b in Z[q, 1/q] if it exists there.
std::optional<IntPoly> divide_exact(const IntPoly& a, const IntPoly& b);
/// a / b, throwing InexactDivision if the quotient is not a Laurent
/// polynomial over Z.
IntPoly divide_or_throw(const IntPoly& a, const IntPoly& b, std::string_view what);

/// Element of Q(q), kept in canonical lowest terms:
///  - numerator and denominator have no common factor in Q[q, 1/q];
///  - the denominator has lowest exponent 0 and positive leading coefficient;
///  - the integer contents of numerator and denominator are coprime.
/// Canonical form makes equality a structural comparison.
class QRat {
 public:
  QRat() : den_(1) {}
  QRat(IntPoly num);  // NOLINT(google-explicit-constructor)
  QRat(long c) : QRat(IntPoly(c)) {}  // NOLINT(google-explicit-constructor)
  /// Throws std::domain_error if den is zero.
  QRat(IntPoly num, IntPoly den);

  const IntPoly& num() const { return num_; }
  const IntPoly& den() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }

  /// The polynomial value if the denominator reduces to 1.
  std::optional<IntPoly> as_poly() const;
  /// Like as_poly() but throws InexactDivision naming `what`.
  IntPoly to_poly(std::string_view what) const;

  QRat operator-() const;
  friend QRat operator+(const QRat& a, const QRat& b);
  friend QRat operator-(const QRat& a, const QRat& b);
  friend QRat operator*(const QRat& a, const QRat& b);
  /// Throws std::domain_error on division by zero.
  friend QRat operator/(const QRat& a, const QRat& b);
  QRat& operator+=(const QRat& o) { return *this = *this + o; }
  QRat& operator*=(const QRat& o) { return *this = *this * o; }
  QRat& operator/=(const QRat& o) { return *this = *this / o; }
  friend bool operator==(const QRat& a, const QRat& b) = default;

  std::string str() const;

  /// Re-runs canonicalisation; exposed so idempotence can be tested.
  static QRat normalized(IntPoly num, IntPoly den);

 private:
  struct Raw {};
  QRat(Raw, IntPoly num, IntPoly den) : num_(std::move(num)), den_(std::move(den)) {}
  IntPoly num_;
  IntPoly den_;
};

std::optional<IntPoly> qrat_is_poly(const QRat& r);

std::ostream& operator<<(std::ostream& os, const IntPoly& p);
std::ostream& operator<<(std::ostream& os, const QRat& r);

/// (q^m; q)_k = prod_{i=0}^{k-1} (1 - q^{m+i}).
IntPoly qpoch(int m, int k);
/// (q)_k = qpoch(1, k).
inline IntPoly qfactorial(int k) { return qpoch(1, k); }
/// Gaussian binomial; zero outside 0 <= m <= n.
IntPoly qbinom(int n, int m);
/// q-multinomial [|a|; a]. Computed both as a factorial quotient and as a
/// product of q-binomials; throws std::logic_error if they disagree.
IntPoly qmultinom(std::span<const int> a);

}  // namespace ctkit
