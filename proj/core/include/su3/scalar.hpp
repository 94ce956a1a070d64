#pragma once

// Scalar arithmetic: exact rationals, the multiquadratic surd field
// Q(sqrt 2, sqrt 3, sqrt 5, ...) and MPFR-backed high-precision floats.

#include <gmpxx.h>
#include <mpfr.h>

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <variant>

#include "su3/errors.hpp"

namespace su3 {

using Integer = mpz_class;
using Rational = mpq_class;

inline bool is_zero(const Rational& q) { return sgn(q) == 0; }
Rational make_rational(long num, long den = 1);
/// "p/q" or "p"; never a decimal.
std::string to_string(const Rational& q);

constexpr int kDefaultDigits = 64;
constexpr int kMinDigits = 32;

/// Working precision (decimal digits) for new floats on this thread.
int default_digits();
void set_default_digits(int digits);

/// RAII guard that swaps the thread's working precision.
class DigitsScope {
 public:
  explicit DigitsScope(int digits) : saved_(default_digits()) {
    set_default_digits(digits);
  }
  ~DigitsScope() { set_default_digits(saved_); }
  DigitsScope(const DigitsScope&) = delete;
  DigitsScope& operator=(const DigitsScope&) = delete;

 private:
  int saved_;
};

class BigFloat {
 public:
  BigFloat();
  explicit BigFloat(int digits);
  BigFloat(const Rational& q, int digits);
  BigFloat(long v, int digits);
  static BigFloat parse(std::string_view text, int digits);
  static BigFloat pow10(long exponent, int digits);

  BigFloat(const BigFloat& o);
  BigFloat(BigFloat&& o) noexcept;
  BigFloat& operator=(const BigFloat& o);
  BigFloat& operator=(BigFloat&& o) noexcept;
  ~BigFloat();

  int digits() const { return digits_; }
  int sign() const;
  bool is_exact_zero() const;
  double to_double() const;
  /// Scientific notation with `significant` digits.
  std::string to_string(int significant) const;
  std::string to_string() const;

  BigFloat abs() const;
  BigFloat sqrt() const;
  /// Real k-th root; negative input only for odd k.
  BigFloat root(unsigned long k) const;

  friend BigFloat operator+(const BigFloat& a, const BigFloat& b);
  friend BigFloat operator-(const BigFloat& a, const BigFloat& b);
  friend BigFloat operator*(const BigFloat& a, const BigFloat& b);
  friend BigFloat operator/(const BigFloat& a, const BigFloat& b);
  BigFloat operator-() const;
  friend int compare(const BigFloat& a, const BigFloat& b);
  friend bool operator<(const BigFloat& a, const BigFloat& b) { return compare(a, b) < 0; }
  friend bool operator>(const BigFloat& a, const BigFloat& b) { return compare(a, b) > 0; }
  friend bool operator<=(const BigFloat& a, const BigFloat& b) { return compare(a, b) <= 0; }

  mpfr_srcptr raw() const { return value_; }
  mpfr_ptr raw() { return value_; }

 private:
  mpfr_t value_;
  int digits_;
};

/// Absolute tolerance used to call a float "zero" at a given precision
/// (1e-40 at the default 64 digits).
BigFloat zero_tolerance(int digits);

/// Finite sum of q_d * sqrt(d) over square-free d (d = 1 is the rational part).
class Surd {
 public:
  using Terms = std::map<std::uint64_t, Rational>;

  Surd() = default;
  Surd(long v);  // NOLINT: implicit integer embedding is intended
  Surd(const Rational& q);  // NOLINT
  /// q * sqrt(radicand) for any positive radicand; canonicalized.
  static Surd term(const Rational& q, const Integer& radicand);
  /// Exact square root of a non-negative rational.
  static Surd sqrt_of(const Rational& q);

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_rational() const;
  Rational rational_part() const;
  std::size_t size() const { return terms_.size(); }

  friend Surd operator+(const Surd& a, const Surd& b);
  friend Surd operator-(const Surd& a, const Surd& b);
  friend Surd operator*(const Surd& a, const Surd& b);
  Surd operator-() const;
  friend bool operator==(const Surd& a, const Surd& b) { return a.terms_ == b.terms_; }

  /// Field inverse by iterated prime conjugation; absent when the
  /// intermediate products exceed `term_cap` terms.
  std::optional<Surd> inverse(std::size_t term_cap = 256) const;
  /// Exact square root when this is a non-negative rational.
  std::optional<Surd> sqrt() const;
  int sign() const;
  BigFloat to_float(int digits) const;
  std::string to_string() const;

 private:
  void add_term(std::uint64_t radicand, const Rational& q);
  Terms terms_;
};

/// Returns (outside, inside) with n = outside^2 * inside and inside square-free.
std::pair<Integer, std::uint64_t> square_free_split(const Integer& n);
std::uint64_t largest_prime_factor(std::uint64_t n);

/// Canonical float embedding of an exact surd, |error| <= 10^(1-digits)*max(1,|a|).
BigFloat surd_to_float(const Surd& a, int digits);

/// Exact (Surd) or inexact (BigFloat) scalar; arithmetic promotes to float
/// as soon as one operand is inexact.
class Scalar {
 public:
  Scalar() = default;
  Scalar(long v) : value_(Surd(v)) {}  // NOLINT
  Scalar(int v) : value_(Surd(static_cast<long>(v))) {}  // NOLINT
  Scalar(const Rational& q) : value_(Surd(q)) {}  // NOLINT
  Scalar(Surd s) : value_(std::move(s)) {}  // NOLINT
  Scalar(BigFloat f) : value_(std::move(f)) {}  // NOLINT

  bool inexact() const { return std::holds_alternative<BigFloat>(value_); }
  const Surd* surd() const { return std::get_if<Surd>(&value_); }
  const BigFloat* big_float() const { return std::get_if<BigFloat>(&value_); }
  bool is_rational() const;
  /// Throws InexactScalars when not rational.
  Rational rational() const;
  BigFloat to_float(int digits = default_digits()) const;
  int digits() const;  // float precision, or default for exact values

  friend Scalar operator+(const Scalar& a, const Scalar& b);
  friend Scalar operator-(const Scalar& a, const Scalar& b);
  friend Scalar operator*(const Scalar& a, const Scalar& b);
  friend Scalar operator/(const Scalar& a, const Scalar& b);
  Scalar operator-() const;
  Scalar& operator+=(const Scalar& o) { return *this = *this + o; }
  Scalar& operator-=(const Scalar& o) { return *this = *this - o; }
  Scalar& operator*=(const Scalar& o) { return *this = *this * o; }
  /// Exact equality for exact operands, tolerance equality otherwise.
  friend bool operator==(const Scalar& a, const Scalar& b);

  std::string to_string() const;

 private:
  std::variant<Surd, BigFloat> value_;
};

struct DivResult {
  Scalar value;
  bool inexact_fallback = false;
};

/// a / b; throws DivisionByZero. Surd quotients are exact unless the
/// conjugate expansion blows past the term cap, in which case the result is
/// a float and `inexact_fallback` is set.
DivResult scalar_div(const Scalar& a, const Scalar& b);

bool is_zero(const Scalar& s);
bool is_zero(const Scalar& s, const BigFloat& tolerance);
int sign(const Scalar& s);
Scalar abs(const Scalar& s);
/// Exact when the radicand is a non-negative rational, float otherwise.
Scalar sqrt(const Scalar& s);
bool approx_equal(const Scalar& a, const Scalar& b, const BigFloat& tolerance);

/// rational := ['+'|'-'] digits ['/' digits]
/// surdterm := rational ['*sqrt(' digits ')'] | 'sqrt(' digits ')'
/// scalar   := surdterm { ('+'|'-') surdterm }
/// A decimal literal (containing '.' or an exponent) parses as a float.
Scalar parse_scalar(std::string_view text);
std::string to_string(const Scalar& s);

}  // namespace su3
