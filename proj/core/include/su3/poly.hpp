#pragma once

// Sparse multivariate polynomials over Q with named indeterminates.

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "su3/errors.hpp"
#include "su3/scalar.hpp"

namespace su3 {

/// Ordered list of variable names. Index 0 is the largest variable in every
/// term order.
class PolyRing {
 public:
  explicit PolyRing(std::vector<std::string> names);
  static std::shared_ptr<const PolyRing> make(std::vector<std::string> names);

  std::size_t size() const { return names_.size(); }
  const std::vector<std::string>& names() const { return names_; }
  const std::string& name(std::size_t i) const { return names_.at(i); }
  /// Throws UnknownName.
  std::size_t index(std::string_view name) const;
  bool contains(std::string_view name) const;
  /// True when `other` lists the same names in the same order, possibly followed by more.
  bool is_prefix_of(const PolyRing& other) const;

 private:
  std::vector<std::string> names_;
  std::map<std::string, std::size_t, std::less<>> lookup_;
};

using RingPtr = std::shared_ptr<const PolyRing>;

/// Sparse exponent vector: (variable index, exponent) pairs with increasing index.
class Monomial {
 public:
  using Entry = std::pair<std::uint32_t, std::uint32_t>;
  Monomial() = default;
  static Monomial variable(std::uint32_t index, std::uint32_t exponent = 1);

  const std::vector<Entry>& entries() const { return entries_; }
  bool is_one() const { return entries_.empty(); }
  std::uint32_t degree() const;
  std::uint32_t exponent(std::uint32_t index) const;
  bool divides(const Monomial& other) const;
  /// other / this; requires divides(other).
  Monomial quotient_of(const Monomial& other) const;
  Monomial shifted(std::int64_t offset) const;

  friend Monomial operator*(const Monomial& a, const Monomial& b);
  friend bool operator==(const Monomial& a, const Monomial& b) { return a.entries_ == b.entries_; }
  friend bool operator<(const Monomial& a, const Monomial& b) { return a.entries_ < b.entries_; }

 private:
  std::vector<Entry> entries_;
};

/// Degree reverse lexicographic comparison, variable 0 largest.
bool grevlex_less(const Monomial& a, const Monomial& b);

class Poly {
 public:
  using Terms = std::map<Monomial, Rational>;

  Poly() = default;
  Poly(long c);  // NOLINT: constants embed implicitly
  Poly(int c) : Poly(static_cast<long>(c)) {}  // NOLINT
  Poly(const Rational& c);  // NOLINT
  static Poly variable(const RingPtr& ring, std::size_t index);
  static Poly variable(const RingPtr& ring, std::string_view name);
  static Poly monomial(const RingPtr& ring, const Monomial& m, const Rational& c);

  /// Null for constants built without a ring.
  const RingPtr& ring() const { return ring_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  Rational constant_term() const;
  std::uint32_t total_degree() const;
  bool is_homogeneous() const;
  std::size_t size() const { return terms_.size(); }
  /// Leading monomial and coefficient in grevlex.
  std::pair<Monomial, Rational> leading_term() const;
  /// Indices of the variables that actually occur.
  std::vector<std::size_t> support() const;

  friend Poly operator+(const Poly& a, const Poly& b);
  friend Poly operator-(const Poly& a, const Poly& b);
  friend Poly operator*(const Poly& a, const Poly& b);
  Poly operator-() const;
  Poly& operator+=(const Poly& o) { return *this = *this + o; }
  Poly& operator-=(const Poly& o) { return *this = *this - o; }
  Poly& operator*=(const Poly& o) { return *this = *this * o; }
  friend bool operator==(const Poly& a, const Poly& b);
  Poly pow(unsigned n) const;
  Poly scaled(const Rational& c) const;
  /// Divide by the leading coefficient.
  Poly monic() const;

  /// Substitute values for all variables (the vector follows ring order).
  Scalar evaluate(const std::vector<Scalar>& values) const;
  Poly substitute(std::size_t index, const Poly& value) const;
  /// Re-express in `target`, which must extend this ring (same prefix).
  Poly rebase(const RingPtr& target) const;
  /// Rename variables through an index map into `target`.
  Poly remap(const RingPtr& target, const std::vector<std::size_t>& index_map) const;

  std::string to_string() const;

 private:
  void add_term(const Monomial& m, const Rational& c);
  static RingPtr join(const Poly& a, const Poly& b);
  RingPtr ring_;
  Terms terms_;
};

inline bool is_zero(const Poly& p) { return p.is_zero(); }

/// a / b when b divides a exactly.
std::optional<Poly> exact_divide(const Poly& a, const Poly& b);

/// expr := term { ('+'|'-') term }; term := factor { ('*'|'/') factor };
/// factor := atom ['^' digits]; atom := number | name | '(' expr ')' | '-' factor.
/// Division is only allowed by constants.
Poly parse_poly(std::string_view text, const RingPtr& ring);
std::string to_string(const Poly& p);

}  // namespace su3
