#pragma once

// Exterior algebra of the dual of a fixed 6-dimensional space with basis
// e_1..e_6. Forms are sparse maps from strictly increasing index words to
// coefficients of any commutative ring R (Scalar for concrete forms, Poly for
// symbolic ansaetze).

#include <array>
#include <bit>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "su3/errors.hpp"
#include "su3/scalar.hpp"

namespace su3 {

constexpr int kDim = 6;

/// A strictly increasing word i_1 < ... < i_k in {1..6}, stored as a bitmask.
class IndexWord {
 public:
  constexpr IndexWord() = default;
  static constexpr IndexWord from_mask(std::uint8_t mask) {
    IndexWord w;
    w.mask_ = mask;
    return w;
  }
  /// Indices must be strictly increasing and in 1..6.
  static IndexWord of(std::initializer_list<int> indices);
  static IndexWord of(const std::vector<int>& indices);
  static constexpr IndexWord full() { return from_mask(0x3f); }

  constexpr std::uint8_t mask() const { return mask_; }
  constexpr int size() const { return std::popcount(mask_); }
  constexpr bool contains(int i) const { return (mask_ >> (i - 1)) & 1u; }
  std::vector<int> indices() const;
  /// Zero-based position of index i inside the word (i must be contained).
  int position(int i) const { return std::popcount(static_cast<std::uint8_t>(mask_ & ((1u << (i - 1)) - 1))); }
  IndexWord without(int i) const { return from_mask(mask_ & ~(1u << (i - 1))); }
  std::string to_string() const;  // "e^{1,2,3}"

  friend constexpr bool operator==(IndexWord a, IndexWord b) { return a.mask_ == b.mask_; }
  /// Lexicographic on the index sequences (e^{12} < e^{13} < e^{23}).
  friend bool operator<(IndexWord a, IndexWord b);

 private:
  std::uint8_t mask_ = 0;
};

/// All words of length k in lexicographic order (C(6,k) of them).
const std::vector<IndexWord>& words_of_degree(int k);

/// Sign of concatenating two disjoint words into sorted order; 0 if they overlap.
int merge_sign(IndexWord a, IndexWord b);

template <class R>
class KForm {
 public:
  using Map = std::map<IndexWord, R>;

  KForm() = default;
  explicit KForm(int degree) : degree_(degree) {
    if (degree < 0 || degree > kDim) throw DegreeOverflow("form degree out of range");
  }
  static KForm basis(IndexWord w, const R& coefficient = R(1)) {
    KForm f(w.size());
    f.add(w, coefficient);
    return f;
  }

  int degree() const { return degree_; }
  const Map& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }

  R coefficient(IndexWord w) const {
    auto it = terms_.find(w);
    return it == terms_.end() ? R(0) : it->second;
  }

  void add(IndexWord w, const R& c) {
    if (w.size() != degree_) throw DegreeOverflow("word length does not match form degree");
    using su3::is_zero;
    if (is_zero(c)) return;
    auto [it, inserted] = terms_.emplace(w, c);
    if (!inserted) {
      it->second = it->second + c;
      if (is_zero(it->second)) terms_.erase(it);
    }
  }

  template <class F>
  auto map_coefficients(F&& f) const -> KForm<decltype(f(std::declval<const R&>()))> {
    KForm<decltype(f(std::declval<const R&>()))> out(degree_);
    for (const auto& [w, c] : terms_) out.add(w, f(c));
    return out;
  }

  friend KForm operator+(const KForm& a, const KForm& b) {
    if (a.is_zero() && a.degree_ != b.degree_) return b;
    if (b.is_zero() && a.degree_ != b.degree_) return a;
    if (a.degree_ != b.degree_) throw DegreeOverflow("adding forms of different degree");
    KForm r = a;
    for (const auto& [w, c] : b.terms_) r.add(w, c);
    return r;
  }
  friend KForm operator-(const KForm& a, const KForm& b) { return a + (-b); }
  KForm operator-() const {
    KForm r(degree_);
    for (const auto& [w, c] : terms_) r.terms_.emplace(w, -c);
    return r;
  }
  friend KForm operator*(const R& s, const KForm& a) {
    KForm r(a.degree_);
    for (const auto& [w, c] : a.terms_) r.add(w, s * c);
    return r;
  }
  KForm& operator+=(const KForm& o) { return *this = *this + o; }

  friend bool operator==(const KForm& a, const KForm& b) {
    if (a.is_zero() && b.is_zero()) return true;
    if (a.degree_ != b.degree_ || a.terms_.size() != b.terms_.size()) return false;
    auto ib = b.terms_.begin();
    for (const auto& [w, c] : a.terms_) {
      if (!(w == ib->first) || !(c == ib->second)) return false;
      ++ib;
    }
    return true;
  }

 private:
  int degree_ = 0;
  Map terms_;
};

using Form = KForm<Scalar>;

/// Basis form e^{i1...ik}; the indices may come in any order (sign applied).
template <class R = Scalar>
KForm<R> basis_form(std::initializer_list<int> indices, const R& coefficient = R(1)) {
  std::vector<int> idx(indices);
  int sign = 1;
  for (std::size_t i = 0; i < idx.size(); ++i) {
    for (std::size_t j = i + 1; j < idx.size(); ++j) {
      if (idx[i] == idx[j]) return KForm<R>(static_cast<int>(idx.size()));
      if (idx[i] > idx[j]) {
        std::swap(idx[i], idx[j]);
        sign = -sign;
      }
    }
  }
  return KForm<R>::basis(IndexWord::of(idx), sign > 0 ? coefficient : -coefficient);
}

template <class R>
KForm<R> wedge(const KForm<R>& a, const KForm<R>& b) {
  const int deg = a.degree() + b.degree();
  if (deg > kDim) throw DegreeOverflow("wedge product exceeds top degree");
  KForm<R> r(deg);
  for (const auto& [wa, ca] : a.terms()) {
    for (const auto& [wb, cb] : b.terms()) {
      int s = merge_sign(wa, wb);
      if (s == 0) continue;
      R prod = ca * cb;
      r.add(IndexWord::from_mask(wa.mask() | wb.mask()), s > 0 ? prod : -prod);
    }
  }
  return r;
}

/// i_{e_j} a, contracting the first slot.
template <class R>
KForm<R> interior_basis(int j, const KForm<R>& a) {
  if (a.degree() == 0) throw DegreeUnderflow("interior product of a 0-form");
  KForm<R> r(a.degree() - 1);
  for (const auto& [w, c] : a.terms()) {
    if (!w.contains(j)) continue;
    r.add(w.without(j), (w.position(j) % 2 == 0) ? c : -c);
  }
  return r;
}

template <class R>
using Vector6 = std::array<R, kDim>;

template <class R>
KForm<R> interior(const Vector6<R>& v, const KForm<R>& a) {
  if (a.degree() == 0) throw DegreeUnderflow("interior product of a 0-form");
  KForm<R> r(a.degree() - 1);
  using su3::is_zero;
  for (int j = 1; j <= kDim; ++j) {
    if (is_zero(v[j - 1])) continue;
    r += v[j - 1] * interior_basis(j, a);
  }
  return r;
}

/// Coefficient of e^{123456}.
template <class R>
R top_coefficient(const KForm<R>& a) {
  if (a.degree() != kDim) throw DegreeOverflow("top_coefficient needs a 6-form");
  return a.coefficient(IndexWord::full());
}

/// v (x) (top * e^{123456}); canonical scaling keeps top = 1.
template <class R>
struct VectorValuedTop {
  Vector6<R> vector{};
  R top = R(1);
};

/// Inverse of v -> i_v e^{123456}: v_j = (-1)^{j+1} * coefficient of the word omitting j.
template <class R>
VectorValuedTop<R> five_form_iso(const KForm<R>& gamma) {
  if (gamma.degree() != kDim - 1) throw DegreeOverflow("five_form_iso needs a 5-form");
  VectorValuedTop<R> out;
  for (int j = 1; j <= kDim; ++j) {
    R c = gamma.coefficient(IndexWord::full().without(j));
    out.vector[j - 1] = (j % 2 == 1) ? c : -c;
  }
  return out;
}

// ------------------------------------------------------------------ text

/// form := term { ('+'|'-') term }
/// term := [coefficient '*'] 'e^{' digit {',' digit} '}' | '0'
/// coefficient := surdterm | '(' scalar ')' | decimal
Form parse_form(std::string_view text);
/// As parse_form, but an empty/zero form gets the given degree and any
/// other degree is rejected.
Form parse_form(std::string_view text, int expected_degree);
std::string to_string(const Form& f);

/// Generic printer: coefficients rendered by `coef`, wrapped in parentheses
/// when `coef` reports a compound expression.
template <class R>
std::string format_form(const KForm<R>& f,
                        const std::function<std::string(const R&)>& coef) {
  if (f.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [w, c] : f.terms()) {
    std::string cs = coef(c);
    if (!first) out += " + ";
    first = false;
    if (cs == "1") {
      out += w.to_string();
    } else {
      out += "(" + cs + ")*" + w.to_string();
    }
  }
  return out;
}

}  // namespace su3
