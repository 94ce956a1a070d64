#include "su3/poly.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

#include "parse_util.hpp"

namespace su3 {

// ---------------------------------------------------------------- PolyRing

PolyRing::PolyRing(std::vector<std::string> names) : names_(std::move(names)) {
  for (std::size_t i = 0; i < names_.size(); ++i) {
    if (!lookup_.emplace(names_[i], i).second) {
      throw ParseError("duplicate variable name '" + names_[i] + "'");
    }
  }
}

RingPtr PolyRing::make(std::vector<std::string> names) {
  return std::make_shared<const PolyRing>(std::move(names));
}

std::size_t PolyRing::index(std::string_view name) const {
  auto it = lookup_.find(name);
  if (it == lookup_.end()) throw UnknownName("unknown variable '" + std::string(name) + "'");
  return it->second;
}

bool PolyRing::contains(std::string_view name) const { return lookup_.find(name) != lookup_.end(); }

bool PolyRing::is_prefix_of(const PolyRing& other) const {
  if (other.names_.size() < names_.size()) return false;
  return std::equal(names_.begin(), names_.end(), other.names_.begin());
}

// ---------------------------------------------------------------- Monomial

Monomial Monomial::variable(std::uint32_t index, std::uint32_t exponent) {
  Monomial m;
  if (exponent > 0) m.entries_.emplace_back(index, exponent);
  return m;
}

std::uint32_t Monomial::degree() const {
  std::uint32_t d = 0;
  for (const auto& [v, e] : entries_) d += e;
  return d;
}

std::uint32_t Monomial::exponent(std::uint32_t index) const {
  for (const auto& [v, e] : entries_) {
    if (v == index) return e;
    if (v > index) break;
  }
  return 0;
}

bool Monomial::divides(const Monomial& other) const {
  auto it = other.entries_.begin();
  for (const auto& [v, e] : entries_) {
    while (it != other.entries_.end() && it->first < v) ++it;
    if (it == other.entries_.end() || it->first != v || it->second < e) return false;
  }
  return true;
}

Monomial Monomial::quotient_of(const Monomial& other) const {
  Monomial q;
  auto it = entries_.begin();
  for (const auto& [v, e] : other.entries_) {
    while (it != entries_.end() && it->first < v) ++it;
    std::uint32_t sub = (it != entries_.end() && it->first == v) ? it->second : 0;
    if (e > sub) q.entries_.emplace_back(v, e - sub);
  }
  return q;
}

Monomial Monomial::shifted(std::int64_t offset) const {
  Monomial m = *this;
  for (auto& [v, e] : m.entries_) {
    std::int64_t nv = static_cast<std::int64_t>(v) + offset;
    if (nv < 0) throw VariableMismatch("monomial shift below variable 0");
    v = static_cast<std::uint32_t>(nv);
  }
  return m;
}

Monomial operator*(const Monomial& a, const Monomial& b) {
  Monomial r;
  auto ia = a.entries_.begin();
  auto ib = b.entries_.begin();
  while (ia != a.entries_.end() || ib != b.entries_.end()) {
    if (ib == b.entries_.end() || (ia != a.entries_.end() && ia->first < ib->first)) {
      r.entries_.push_back(*ia++);
    } else if (ia == a.entries_.end() || ib->first < ia->first) {
      r.entries_.push_back(*ib++);
    } else {
      r.entries_.emplace_back(ia->first, ia->second + ib->second);
      ++ia;
      ++ib;
    }
  }
  return r;
}

bool grevlex_less(const Monomial& a, const Monomial& b) {
  std::uint32_t da = a.degree();
  std::uint32_t db = b.degree();
  if (da != db) return da < db;
  // Walk both from the highest variable index down; at the first difference
  // the monomial with the larger exponent is the smaller one.
  auto ia = a.entries().rbegin();
  auto ib = b.entries().rbegin();
  while (ia != a.entries().rend() && ib != b.entries().rend()) {
    if (ia->first != ib->first) return ia->first > ib->first;
    if (ia->second != ib->second) return ia->second > ib->second;
    ++ia;
    ++ib;
  }
  return false;
}

// ---------------------------------------------------------------- Poly

Poly::Poly(long c) {
  if (c != 0) terms_.emplace(Monomial(), Rational(c));
}

Poly::Poly(const Rational& c) {
  if (sgn(c) != 0) terms_.emplace(Monomial(), c);
}

Poly Poly::variable(const RingPtr& ring, std::size_t index) {
  if (index >= ring->size()) throw UnknownName("variable index out of range");
  return monomial(ring, Monomial::variable(static_cast<std::uint32_t>(index)), Rational(1));
}

Poly Poly::variable(const RingPtr& ring, std::string_view name) {
  return variable(ring, ring->index(name));
}

Poly Poly::monomial(const RingPtr& ring, const Monomial& m, const Rational& c) {
  Poly p;
  p.ring_ = ring;
  p.add_term(m, c);
  return p;
}

void Poly::add_term(const Monomial& m, const Rational& c) {
  if (sgn(c) == 0) return;
  auto [it, inserted] = terms_.emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (sgn(it->second) == 0) terms_.erase(it);
  }
}

RingPtr Poly::join(const Poly& a, const Poly& b) {
  if (!a.ring_) return b.ring_;
  if (!b.ring_ || a.ring_ == b.ring_) return a.ring_;
  if (a.ring_->names() == b.ring_->names()) return a.ring_;
  if (a.is_constant()) return b.ring_;
  if (b.is_constant()) return a.ring_;
  throw VariableMismatch("polynomials over different variable lists");
}

bool Poly::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.is_one());
}

Rational Poly::constant_term() const {
  auto it = terms_.find(Monomial());
  return it == terms_.end() ? Rational(0) : it->second;
}

std::uint32_t Poly::total_degree() const {
  std::uint32_t d = 0;
  for (const auto& [m, c] : terms_) d = std::max(d, m.degree());
  return d;
}

bool Poly::is_homogeneous() const {
  if (terms_.empty()) return true;
  std::uint32_t d = terms_.begin()->first.degree();
  for (const auto& [m, c] : terms_) {
    if (m.degree() != d) return false;
  }
  return true;
}

std::pair<Monomial, Rational> Poly::leading_term() const {
  if (terms_.empty()) throw DivisionByZero("leading term of the zero polynomial");
  auto best = terms_.begin();
  for (auto it = terms_.begin(); it != terms_.end(); ++it) {
    if (grevlex_less(best->first, it->first)) best = it;
  }
  return *best;
}

std::vector<std::size_t> Poly::support() const {
  std::vector<std::size_t> out;
  for (const auto& [m, c] : terms_) {
    for (const auto& [v, e] : m.entries()) out.push_back(v);
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

Poly operator+(const Poly& a, const Poly& b) {
  Poly r = a.terms_.size() >= b.terms_.size() ? a : b;
  const Poly& s = a.terms_.size() >= b.terms_.size() ? b : a;
  r.ring_ = Poly::join(a, b);
  for (const auto& [m, c] : s.terms_) r.add_term(m, c);
  return r;
}

Poly operator-(const Poly& a, const Poly& b) {
  Poly r = a;
  r.ring_ = Poly::join(a, b);
  for (const auto& [m, c] : b.terms_) r.add_term(m, -c);
  return r;
}

Poly operator*(const Poly& a, const Poly& b) {
  Poly r;
  r.ring_ = Poly::join(a, b);
  for (const auto& [ma, ca] : a.terms_) {
    for (const auto& [mb, cb] : b.terms_) r.add_term(ma * mb, ca * cb);
  }
  return r;
}

Poly Poly::operator-() const {
  Poly r = *this;
  for (auto& [m, c] : r.terms_) c = -c;
  return r;
}

bool operator==(const Poly& a, const Poly& b) {
  if (a.terms_ != b.terms_) return false;
  if (a.is_constant() || !a.ring_ || !b.ring_) return true;
  return a.ring_ == b.ring_ || a.ring_->names() == b.ring_->names();
}

Poly Poly::pow(unsigned n) const {
  Poly result(1L);
  result.ring_ = ring_;
  Poly base = *this;
  while (n) {
    if (n & 1u) result = result * base;
    n >>= 1;
    if (n) base = base * base;
  }
  return result;
}

Poly Poly::scaled(const Rational& c) const {
  if (sgn(c) == 0) {
    Poly z;
    z.ring_ = ring_;
    return z;
  }
  Poly r = *this;
  for (auto& [m, v] : r.terms_) v *= c;
  return r;
}

Poly Poly::monic() const {
  if (terms_.empty()) return *this;
  return scaled(Rational(1) / leading_term().second);
}

Scalar Poly::evaluate(const std::vector<Scalar>& values) const {
  Scalar total;
  for (const auto& [m, c] : terms_) {
    Scalar t(c);
    for (const auto& [v, e] : m.entries()) {
      if (v >= values.size()) throw VariableMismatch("missing value for variable");
      for (std::uint32_t k = 0; k < e; ++k) t = t * values[v];
    }
    total = total + t;
  }
  return total;
}

Poly Poly::substitute(std::size_t index, const Poly& value) const {
  Poly result;
  result.ring_ = join(*this, value);
  std::map<std::uint32_t, Poly> powers;
  for (const auto& [m, c] : terms_) {
    std::uint32_t e = m.exponent(static_cast<std::uint32_t>(index));
    Monomial rest;
    if (e == 0) {
      result.add_term(m, c);
      continue;
    }
    rest = Monomial::variable(static_cast<std::uint32_t>(index), e).quotient_of(m);
    auto it = powers.find(e);
    if (it == powers.end()) it = powers.emplace(e, value.pow(e)).first;
    result = result + monomial(result.ring_, rest, c) * it->second;
  }
  return result;
}

Poly Poly::rebase(const RingPtr& target) const {
  if (ring_ && !ring_->is_prefix_of(*target)) {
    throw VariableMismatch("target ring does not extend the polynomial's ring");
  }
  Poly r = *this;
  r.ring_ = target;
  return r;
}

Poly Poly::remap(const RingPtr& target, const std::vector<std::size_t>& index_map) const {
  Poly r;
  r.ring_ = target;
  for (const auto& [m, c] : terms_) {
    Monomial out;
    for (const auto& [v, e] : m.entries()) {
      out = out * Monomial::variable(static_cast<std::uint32_t>(index_map.at(v)), e);
    }
    r.add_term(out, c);
  }
  return r;
}

std::string Poly::to_string() const {
  if (terms_.empty()) return "0";
  std::vector<std::pair<Monomial, Rational>> sorted(terms_.begin(), terms_.end());
  std::sort(sorted.begin(), sorted.end(),
            [](const auto& a, const auto& b) { return grevlex_less(b.first, a.first); });
  std::ostringstream os;
  bool first = true;
  for (const auto& [m, c] : sorted) {
    bool neg = sgn(c) < 0;
    Rational mag = abs(c);
    if (first) {
      if (neg) os << '-';
    } else {
      os << (neg ? " - " : " + ");
    }
    first = false;
    bool wrote = false;
    if (m.is_one() || mag != 1) {
      os << mag.get_str();
      wrote = true;
    }
    for (const auto& [v, e] : m.entries()) {
      if (wrote) os << '*';
      os << (ring_ ? ring_->name(v) : "x" + std::to_string(v));
      if (e > 1) os << '^' << e;
      wrote = true;
    }
  }
  return os.str();
}

std::string to_string(const Poly& p) { return p.to_string(); }

std::optional<Poly> exact_divide(const Poly& a, const Poly& b) {
  if (b.is_zero()) throw DivisionByZero("polynomial division by zero");
  Poly quotient;
  quotient = quotient + Poly::monomial(a.ring() ? a.ring() : b.ring(), Monomial(), Rational(0));
  Poly rem = a;
  auto [lm_b, lc_b] = b.leading_term();
  while (!rem.is_zero()) {
    auto [lm, lc] = rem.leading_term();
    if (!lm_b.divides(lm)) return std::nullopt;
    Poly q = Poly::monomial(b.ring() ? b.ring() : a.ring(), lm_b.quotient_of(lm), lc / lc_b);
    quotient = quotient + q;
    rem = rem - q * b;
  }
  return quotient;
}

// ---------------------------------------------------------------- parser

namespace {

struct PolyParser {
  detail::Cursor cur;
  const RingPtr& ring;

  Poly expr() {
    Poly acc;
    bool first = true;
    while (true) {
      char c = cur.peek();
      if (c == '+' || c == '-') {
        ++cur.pos;
        Poly t = term();
        acc = c == '-' ? acc - t : acc + t;
      } else if (first) {
        acc = term();
      } else {
        break;
      }
      first = false;
    }
    return acc;
  }

  Poly term() {
    Poly acc = factor();
    while (true) {
      if (cur.consume('*')) {
        acc = acc * factor();
      } else if (cur.consume('/')) {
        Poly d = factor();
        if (!d.is_constant() || d.is_zero()) cur.fail("division by a non-constant");
        acc = acc.scaled(Rational(1) / d.constant_term());
      } else {
        return acc;
      }
    }
  }

  Poly factor() {
    Poly base = atom();
    if (cur.consume('^')) {
      std::string e = cur.digits();
      if (e.size() > 4) cur.fail("exponent too large");
      base = base.pow(static_cast<unsigned>(std::stoul(e)));
    }
    return base;
  }

  Poly atom() {
    char c = cur.peek();
    if (c == '(') {
      ++cur.pos;
      Poly inner = expr();
      cur.expect(')');
      return inner;
    }
    if (c == '-') {
      ++cur.pos;
      return -factor();
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      return Poly(Rational(Integer(cur.digits())));
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t start = cur.pos;
      while (cur.pos < cur.text.size() &&
             (std::isalnum(static_cast<unsigned char>(cur.text[cur.pos])) || cur.text[cur.pos] == '_')) {
        ++cur.pos;
      }
      std::string name(cur.text.substr(start, cur.pos - start));
      if (!ring || !ring->contains(name)) cur.fail("unknown variable '" + name + "'");
      return Poly::variable(ring, name);
    }
    cur.fail("unexpected character");
  }
};

}  // namespace

Poly parse_poly(std::string_view text, const RingPtr& ring) {
  PolyParser p{detail::Cursor{text, 0}, ring};
  if (p.cur.eof()) p.cur.fail("empty polynomial");
  Poly result = p.expr();
  if (!p.cur.eof()) p.cur.fail("trailing characters");
  if (result.is_constant() && ring) result = result.rebase(ring);
  return result;
}

}  // namespace su3
