#include "su3/scalar.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <sstream>
#include <vector>

#include "parse_util.hpp"

namespace su3 {

namespace {

thread_local int g_digits = kDefaultDigits;

mpfr_prec_t bits_for(int digits) {
  return static_cast<mpfr_prec_t>(std::ceil(digits * 3.3219280948873623)) + 16;
}

}  // namespace

Rational make_rational(long num, long den) {
  if (den == 0) throw DivisionByZero("zero denominator");
  Rational q(num, den);
  q.canonicalize();
  return q;
}

std::string to_string(const Rational& q) { return q.get_str(); }

int default_digits() { return g_digits; }

void set_default_digits(int digits) {
  if (digits < kMinDigits) {
    throw ParamOutOfRange("precision must be at least " + std::to_string(kMinDigits) +
                          " digits");
  }
  g_digits = digits;
}

// ---------------------------------------------------------------- BigFloat

BigFloat::BigFloat() : BigFloat(default_digits()) {}

BigFloat::BigFloat(int digits) : digits_(digits) {
  mpfr_init2(value_, bits_for(digits));
  mpfr_set_zero(value_, 1);
}

BigFloat::BigFloat(const Rational& q, int digits) : BigFloat(digits) {
  mpfr_set_q(value_, q.get_mpq_t(), MPFR_RNDN);
}

BigFloat::BigFloat(long v, int digits) : BigFloat(digits) {
  mpfr_set_si(value_, v, MPFR_RNDN);
}

BigFloat BigFloat::parse(std::string_view text, int digits) {
  BigFloat r(digits);
  std::string s(text);
  if (mpfr_set_str(r.value_, s.c_str(), 10, MPFR_RNDN) != 0) {
    throw ParseError("bad decimal literal '" + s + "'");
  }
  return r;
}

BigFloat BigFloat::pow10(long exponent, int digits) {
  BigFloat r(digits);
  BigFloat ten(10L, digits);
  mpfr_pow_si(r.value_, ten.value_, exponent, MPFR_RNDN);
  return r;
}

BigFloat::BigFloat(const BigFloat& o) : digits_(o.digits_) {
  mpfr_init2(value_, mpfr_get_prec(o.value_));
  mpfr_set(value_, o.value_, MPFR_RNDN);
}

BigFloat::BigFloat(BigFloat&& o) noexcept : digits_(o.digits_) {
  mpfr_init2(value_, mpfr_get_prec(o.value_));
  mpfr_swap(value_, o.value_);
}

BigFloat& BigFloat::operator=(const BigFloat& o) {
  if (this != &o) {
    mpfr_set_prec(value_, mpfr_get_prec(o.value_));
    mpfr_set(value_, o.value_, MPFR_RNDN);
    digits_ = o.digits_;
  }
  return *this;
}

BigFloat& BigFloat::operator=(BigFloat&& o) noexcept {
  if (this != &o) {
    mpfr_swap(value_, o.value_);
    std::swap(digits_, o.digits_);
  }
  return *this;
}

BigFloat::~BigFloat() { mpfr_clear(value_); }

int BigFloat::sign() const { return mpfr_sgn(value_); }
bool BigFloat::is_exact_zero() const { return mpfr_zero_p(value_) != 0; }
double BigFloat::to_double() const { return mpfr_get_d(value_, MPFR_RNDN); }

std::string BigFloat::to_string(int significant) const {
  char* buf = nullptr;
  mpfr_asprintf(&buf, "%.*Re", std::max(significant - 1, 0), value_);
  std::string out(buf);
  mpfr_free_str(buf);
  return out;
}

std::string BigFloat::to_string() const { return to_string(digits_); }

BigFloat BigFloat::abs() const {
  BigFloat r(digits_);
  mpfr_abs(r.value_, value_, MPFR_RNDN);
  return r;
}

BigFloat BigFloat::sqrt() const {
  if (sign() < 0) throw ParamOutOfRange("sqrt of a negative float");
  BigFloat r(digits_);
  mpfr_sqrt(r.value_, value_, MPFR_RNDN);
  return r;
}

BigFloat BigFloat::root(unsigned long k) const {
  if (sign() < 0 && k % 2 == 0) throw ParamOutOfRange("even root of a negative float");
  BigFloat r(digits_);
  mpfr_rootn_ui(r.value_, value_, k, MPFR_RNDN);
  return r;
}

BigFloat operator+(const BigFloat& a, const BigFloat& b) {
  BigFloat r(std::max(a.digits_, b.digits_));
  mpfr_add(r.value_, a.value_, b.value_, MPFR_RNDN);
  return r;
}

BigFloat operator-(const BigFloat& a, const BigFloat& b) {
  BigFloat r(std::max(a.digits_, b.digits_));
  mpfr_sub(r.value_, a.value_, b.value_, MPFR_RNDN);
  return r;
}

BigFloat operator*(const BigFloat& a, const BigFloat& b) {
  BigFloat r(std::max(a.digits_, b.digits_));
  mpfr_mul(r.value_, a.value_, b.value_, MPFR_RNDN);
  return r;
}

BigFloat operator/(const BigFloat& a, const BigFloat& b) {
  if (b.is_exact_zero()) throw DivisionByZero("float division by zero");
  BigFloat r(std::max(a.digits_, b.digits_));
  mpfr_div(r.value_, a.value_, b.value_, MPFR_RNDN);
  return r;
}

BigFloat BigFloat::operator-() const {
  BigFloat r(digits_);
  mpfr_neg(r.value_, value_, MPFR_RNDN);
  return r;
}

int compare(const BigFloat& a, const BigFloat& b) { return mpfr_cmp(a.value_, b.value_); }

BigFloat zero_tolerance(int digits) { return BigFloat::pow10(-(digits * 5) / 8, digits); }

// ------------------------------------------------------------ factoring

namespace {

constexpr std::uint64_t kTrialLimit = 1000000;
constexpr std::uint64_t kPrimeAssumeLimit = kTrialLimit * kTrialLimit;

// Prime factorization of a machine-word integer by trial division. A cofactor
// left after dividing out everything below 10^6 is prime when below 10^12.
std::vector<std::pair<std::uint64_t, int>> factor_u64(std::uint64_t n) {
  std::vector<std::pair<std::uint64_t, int>> out;
  auto strip = [&](std::uint64_t p) {
    int e = 0;
    while (n % p == 0) {
      n /= p;
      ++e;
    }
    if (e) out.emplace_back(p, e);
  };
  strip(2);
  for (std::uint64_t p = 3; p <= kTrialLimit && p * p <= n; p += 2) strip(p);
  if (n > 1) {
    if (n >= kPrimeAssumeLimit && static_cast<std::uint64_t>(std::sqrt(double(n))) > kTrialLimit) {
      throw ParamOutOfRange("radicand too large to factor: " + std::to_string(n));
    }
    out.emplace_back(n, 1);
  }
  return out;
}

}  // namespace

std::pair<Integer, std::uint64_t> square_free_split(const Integer& n) {
  if (sgn(n) <= 0) throw ParamOutOfRange("square_free_split needs a positive integer");
  Integer rest = n;
  Integer outside = 1;
  Integer inside = 1;
  auto strip = [&](unsigned long p) {
    int e = 0;
    while (mpz_divisible_ui_p(rest.get_mpz_t(), p)) {
      mpz_divexact_ui(rest.get_mpz_t(), rest.get_mpz_t(), p);
      ++e;
    }
    for (int i = 0; i < e / 2; ++i) outside *= p;
    if (e % 2) inside *= p;
  };
  strip(2);
  for (unsigned long p = 3; p <= kTrialLimit && Integer(p) * p <= rest; p += 2) strip(p);
  if (rest > 1) {
    if (mpz_perfect_square_p(rest.get_mpz_t())) {
      Integer r;
      mpz_sqrt(r.get_mpz_t(), rest.get_mpz_t());
      outside *= r;
    } else if (rest < Integer(static_cast<unsigned long>(kPrimeAssumeLimit))) {
      inside *= rest;
    } else {
      throw ParamOutOfRange("radicand too large to factor: " + rest.get_str());
    }
  }
  if (!inside.fits_ulong_p()) throw ParamOutOfRange("square-free radicand overflows 64 bits");
  return {outside, inside.get_ui()};
}

std::uint64_t largest_prime_factor(std::uint64_t n) {
  auto f = factor_u64(n);
  return f.empty() ? 1 : f.back().first;
}

// ---------------------------------------------------------------- Surd

Surd::Surd(long v) {
  if (v != 0) terms_.emplace(1, Rational(v));
}

Surd::Surd(const Rational& q) {
  if (!su3::is_zero(q)) terms_.emplace(1, q);
}

Surd Surd::term(const Rational& q, const Integer& radicand) {
  Surd s;
  if (su3::is_zero(q)) return s;
  auto [outside, inside] = square_free_split(radicand);
  s.add_term(inside, q * Rational(outside));
  return s;
}

Surd Surd::sqrt_of(const Rational& q) {
  if (sgn(q) < 0) throw ParamOutOfRange("sqrt of a negative rational");
  if (sgn(q) == 0) return Surd();
  // sqrt(n/d) = sqrt(n*d) / d
  Integer nd = q.get_num() * q.get_den();
  return term(Rational(1) / Rational(q.get_den()), nd);
}

bool Surd::is_rational() const {
  return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first == 1);
}

Rational Surd::rational_part() const {
  auto it = terms_.find(1);
  return it == terms_.end() ? Rational(0) : it->second;
}

void Surd::add_term(std::uint64_t radicand, const Rational& q) {
  if (su3::is_zero(q)) return;
  auto [it, inserted] = terms_.emplace(radicand, q);
  if (!inserted) {
    it->second += q;
    if (su3::is_zero(it->second)) terms_.erase(it);
  }
}

Surd operator+(const Surd& a, const Surd& b) {
  Surd r = a;
  for (const auto& [d, q] : b.terms_) r.add_term(d, q);
  return r;
}

Surd operator-(const Surd& a, const Surd& b) {
  Surd r = a;
  for (const auto& [d, q] : b.terms_) r.add_term(d, -q);
  return r;
}

Surd Surd::operator-() const {
  Surd r = *this;
  for (auto& [d, q] : r.terms_) q = -q;
  return r;
}

Surd operator*(const Surd& a, const Surd& b) {
  Surd r;
  for (const auto& [da, qa] : a.terms_) {
    for (const auto& [db, qb] : b.terms_) {
      // sqrt(da)*sqrt(db) = g*sqrt((da/g)*(db/g)) for square-free da, db
      std::uint64_t g = std::gcd(da, db);
      unsigned __int128 rad = static_cast<unsigned __int128>(da / g) * (db / g);
      if (rad > UINT64_MAX) throw ParamOutOfRange("surd radicand overflows 64 bits");
      r.add_term(static_cast<std::uint64_t>(rad), qa * qb * Rational(static_cast<unsigned long>(g)));
    }
  }
  return r;
}

std::optional<Surd> Surd::inverse(std::size_t term_cap) const {
  if (is_zero()) throw DivisionByZero("surd division by zero");
  Surd num(1L);
  Surd den = *this;
  while (!den.is_rational()) {
    std::uint64_t p = 1;
    for (const auto& [d, q] : den.terms_) {
      if (d > 1) p = std::max(p, largest_prime_factor(d));
    }
    Surd conj = den;
    for (auto& [d, q] : conj.terms_) {
      if (d % p == 0) q = -q;
    }
    num = num * conj;
    den = den * conj;
    if (num.size() > term_cap || den.size() > term_cap) return std::nullopt;
  }
  Rational inv = Rational(1) / den.rational_part();
  return num * Surd(inv);
}

std::optional<Surd> Surd::sqrt() const {
  if (!is_rational()) return std::nullopt;
  Rational q = rational_part();
  if (sgn(q) < 0) return std::nullopt;
  return sqrt_of(q);
}

BigFloat Surd::to_float(int digits) const { return surd_to_float(*this, digits); }

int Surd::sign() const {
  if (is_zero()) return 0;
  if (is_rational()) return sgn(rational_part());
  // A nonzero algebraic number: refine until the value clears the error bound.
  for (int digits = 64; digits <= 4096; digits *= 2) {
    BigFloat v = surd_to_float(*this, digits);
    BigFloat scale(0L, digits);
    for (const auto& [d, q] : terms_) {
      scale = scale + surd_to_float(Surd::term(abs(q), Integer(static_cast<unsigned long>(d))), digits);
    }
    BigFloat bound = scale * BigFloat::pow10(-(digits - 8), digits);
    if (v.abs() > bound) return v.sign();
  }
  throw Error("surd sign undecidable at 4096 digits");
}

std::string Surd::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [d, q] : terms_) {
    Rational mag = abs(q);
    bool neg = sgn(q) < 0;
    if (first) {
      if (neg) os << '-';
    } else {
      os << (neg ? '-' : '+');
    }
    first = false;
    if (d == 1) {
      os << mag.get_str();
    } else if (mag == 1) {
      os << "sqrt(" << d << ')';
    } else {
      os << mag.get_str() << "*sqrt(" << d << ')';
    }
  }
  return os.str();
}

BigFloat surd_to_float(const Surd& a, int digits) {
  if (digits < kMinDigits) throw ParamOutOfRange("precision below 32 digits");
  const int work = digits + 10;
  BigFloat acc(0L, work);
  for (const auto& [d, q] : a.terms()) {
    BigFloat t(q, work);
    if (d != 1) {
      BigFloat root(work);
      mpfr_set_ui(root.raw(), static_cast<unsigned long>(d), MPFR_RNDN);
      mpfr_sqrt(root.raw(), root.raw(), MPFR_RNDN);
      t = t * root;
    }
    acc = acc + t;
  }
  BigFloat out(digits);
  mpfr_set(out.raw(), acc.raw(), MPFR_RNDN);
  return out;
}

// -------------------------------------------------------------- Scalar

bool Scalar::is_rational() const {
  const Surd* s = surd();
  return s && s->is_rational();
}

Rational Scalar::rational() const {
  if (!is_rational()) throw InexactScalars("scalar " + to_string() + " is not rational");
  return surd()->rational_part();
}

BigFloat Scalar::to_float(int digits) const {
  if (const Surd* s = surd()) return surd_to_float(*s, digits);
  const BigFloat& f = *big_float();
  if (f.digits() == digits) return f;
  BigFloat r(digits);
  mpfr_set(r.raw(), f.raw(), MPFR_RNDN);
  return r;
}

int Scalar::digits() const {
  if (const BigFloat* f = big_float()) return f->digits();
  return default_digits();
}

namespace {

int joint_digits(const Scalar& a, const Scalar& b) {
  int d = 0;
  if (a.inexact()) d = std::max(d, a.big_float()->digits());
  if (b.inexact()) d = std::max(d, b.big_float()->digits());
  return d ? d : default_digits();
}

}  // namespace

Scalar operator+(const Scalar& a, const Scalar& b) {
  if (!a.inexact() && !b.inexact()) return Scalar(*a.surd() + *b.surd());
  int d = joint_digits(a, b);
  return Scalar(a.to_float(d) + b.to_float(d));
}

Scalar operator-(const Scalar& a, const Scalar& b) {
  if (!a.inexact() && !b.inexact()) return Scalar(*a.surd() - *b.surd());
  int d = joint_digits(a, b);
  return Scalar(a.to_float(d) - b.to_float(d));
}

Scalar operator*(const Scalar& a, const Scalar& b) {
  if (!a.inexact() && !b.inexact()) return Scalar(*a.surd() * *b.surd());
  // exact zero annihilates floats too
  if ((a.surd() && a.surd()->is_zero()) || (b.surd() && b.surd()->is_zero())) return Scalar();
  int d = joint_digits(a, b);
  return Scalar(a.to_float(d) * b.to_float(d));
}

Scalar operator/(const Scalar& a, const Scalar& b) { return scalar_div(a, b).value; }

Scalar Scalar::operator-() const {
  if (const Surd* s = surd()) return Scalar(-*s);
  return Scalar(-*big_float());
}

bool operator==(const Scalar& a, const Scalar& b) {
  if (!a.inexact() && !b.inexact()) return *a.surd() == *b.surd();
  return is_zero(a - b);
}

std::string Scalar::to_string() const {
  if (const Surd* s = surd()) return s->to_string();
  return big_float()->to_string();
}

DivResult scalar_div(const Scalar& a, const Scalar& b) {
  if (!b.inexact() && b.surd()->is_zero()) throw DivisionByZero("scalar division by zero");
  if (!a.inexact() && !b.inexact()) {
    const Surd& den = *b.surd();
    if (den.is_rational()) {
      return {Scalar(*a.surd() * Surd(Rational(1) / den.rational_part())), false};
    }
    if (auto inv = den.inverse()) return {Scalar(*a.surd() * *inv), false};
    int d = default_digits();
    return {Scalar(a.to_float(d) / b.to_float(d)), true};
  }
  int d = joint_digits(a, b);
  BigFloat den = b.to_float(d);
  if (den.is_exact_zero()) throw DivisionByZero("scalar division by zero");
  return {Scalar(a.to_float(d) / den), false};
}

bool is_zero(const Scalar& s) {
  if (const Surd* e = s.surd()) return e->is_zero();
  const BigFloat& f = *s.big_float();
  return f.abs() <= zero_tolerance(f.digits());
}

bool is_zero(const Scalar& s, const BigFloat& tolerance) {
  if (const Surd* e = s.surd()) return e->is_zero();
  return s.big_float()->abs() <= tolerance;
}

int sign(const Scalar& s) {
  if (const Surd* e = s.surd()) return e->sign();
  if (is_zero(s)) return 0;
  return s.big_float()->sign();
}

Scalar abs(const Scalar& s) { return sign(s) < 0 ? -s : s; }

Scalar sqrt(const Scalar& s) {
  if (const Surd* e = s.surd()) {
    if (e->sign() < 0) throw ParamOutOfRange("sqrt of a negative scalar");
    if (auto r = e->sqrt()) return Scalar(*r);
  }
  return Scalar(s.to_float(s.digits()).sqrt());
}

bool approx_equal(const Scalar& a, const Scalar& b, const BigFloat& tolerance) {
  if (!a.inexact() && !b.inexact()) return *a.surd() == *b.surd();
  return is_zero(a - b, tolerance);
}

std::string to_string(const Scalar& s) { return s.to_string(); }

// --------------------------------------------------------------- parsing

namespace detail {

Scalar parse_scalar_term(Cursor& cur) {
  if (cur.consume("sqrt(")) {
    std::string rad = cur.digits();
    cur.expect(')');
    return Scalar(Surd::term(Rational(1), Integer(rad)));
  }
  cur.skip_ws();
  std::size_t start = cur.pos;
  std::string whole = cur.digits();
  // Decimal literal: digits followed directly by '.' or an exponent marker.
  auto& t = cur.text;
  bool decimal = false;
  if (cur.pos < t.size() && t[cur.pos] == '.') decimal = true;
  if (cur.pos + 1 < t.size() && (t[cur.pos] == 'e' || t[cur.pos] == 'E') &&
      (std::isdigit(static_cast<unsigned char>(t[cur.pos + 1])) || t[cur.pos + 1] == '-' ||
       t[cur.pos + 1] == '+')) {
    decimal = true;
  }
  Scalar value;
  if (decimal) {
    std::size_t p = cur.pos;
    if (p < t.size() && t[p] == '.') {
      ++p;
      while (p < t.size() && std::isdigit(static_cast<unsigned char>(t[p]))) ++p;
    }
    if (p + 1 < t.size() && (t[p] == 'e' || t[p] == 'E')) {
      std::size_t q = p + 1;
      if (t[q] == '+' || t[q] == '-') ++q;
      if (q < t.size() && std::isdigit(static_cast<unsigned char>(t[q]))) {
        p = q;
        while (p < t.size() && std::isdigit(static_cast<unsigned char>(t[p]))) ++p;
      }
    }
    value = Scalar(BigFloat::parse(t.substr(start, p - start), default_digits()));
    cur.pos = p;
  } else {
    Integer num(whole);
    Integer den(1);
    if (cur.consume('/')) den = Integer(cur.digits());
    if (den == 0) cur.fail("zero denominator");
    Rational q(num, den);
    q.canonicalize();
    value = Scalar(q);
  }
  if (cur.looking_at("*sqrt(")) {
    cur.consume("*sqrt(");
    std::string rad = cur.digits();
    cur.expect(')');
    value = value * Scalar(Surd::term(Rational(1), Integer(rad)));
  }
  return value;
}

Scalar parse_scalar_sum(Cursor& cur) {
  Scalar total;
  bool first = true;
  while (true) {
    char c = cur.peek();
    bool neg = false;
    if (c == '+' || c == '-') {
      neg = c == '-';
      ++cur.pos;
    } else if (!first) {
      break;
    }
    Scalar term = parse_scalar_term(cur);
    total = neg ? total - term : total + term;
    first = false;
  }
  return total;
}

}  // namespace detail

Scalar parse_scalar(std::string_view text) {
  detail::Cursor cur{text, 0};
  if (cur.eof()) cur.fail("empty scalar");
  Scalar s = detail::parse_scalar_sum(cur);
  if (!cur.eof()) cur.fail("trailing characters");
  return s;
}

}  // namespace su3
