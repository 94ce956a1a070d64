#include "su3/exterior.hpp"

#include <algorithm>

#include "parse_util.hpp"

namespace su3 {

IndexWord IndexWord::of(std::initializer_list<int> indices) {
  return of(std::vector<int>(indices));
}

IndexWord IndexWord::of(const std::vector<int>& indices) {
  std::uint8_t mask = 0;
  int last = 0;
  for (int i : indices) {
    if (i < 1 || i > kDim) throw ParseError("index out of range: " + std::to_string(i));
    if (i <= last) throw ParseError("indices must be strictly increasing");
    mask |= static_cast<std::uint8_t>(1u << (i - 1));
    last = i;
  }
  return from_mask(mask);
}

std::vector<int> IndexWord::indices() const {
  std::vector<int> out;
  for (int i = 1; i <= kDim; ++i) {
    if (contains(i)) out.push_back(i);
  }
  return out;
}

std::string IndexWord::to_string() const {
  std::string out = "e^{";
  bool first = true;
  for (int i : indices()) {
    if (!first) out += ',';
    out += static_cast<char>('0' + i);
    first = false;
  }
  return out + "}";
}

bool operator<(IndexWord a, IndexWord b) {
  for (int i = 1; i <= kDim; ++i) {
    bool ca = a.contains(i);
    bool cb = b.contains(i);
    if (ca == cb) continue;
    // Shared prefix so far; the word holding i is smaller unless the other
    // one has already ended.
    IndexWord other = ca ? b : a;
    bool other_continues = (other.mask() >> i) != 0;
    if (ca) return other_continues;
    return !other_continues;
  }
  return false;
}

const std::vector<IndexWord>& words_of_degree(int k) {
  static const auto table = [] {
    std::array<std::vector<IndexWord>, kDim + 1> t;
    for (unsigned m = 0; m < (1u << kDim); ++m) {
      IndexWord w = IndexWord::from_mask(static_cast<std::uint8_t>(m));
      t[w.size()].push_back(w);
    }
    for (auto& v : t) std::sort(v.begin(), v.end());
    return t;
  }();
  if (k < 0 || k > kDim) throw DegreeOverflow("degree out of range");
  return table[k];
}

int merge_sign(IndexWord a, IndexWord b) {
  if (a.mask() & b.mask()) return 0;
  // Count pairs (i in a, j in b) with i > j.
  int inversions = 0;
  for (int j = 1; j <= kDim; ++j) {
    if (b.contains(j)) inversions += std::popcount(static_cast<std::uint8_t>(a.mask() >> j));
  }
  return inversions % 2 == 0 ? 1 : -1;
}

namespace {

IndexWord parse_word(detail::Cursor& cur) {
  if (!cur.consume("e^{")) cur.fail("expected 'e^{'");
  std::vector<int> idx;
  do {
    std::string d = cur.digits();
    if (d.size() != 1) cur.fail("basis index must be a single digit");
    idx.push_back(d[0] - '0');
  } while (cur.consume(','));
  cur.expect('}');
  try {
    return IndexWord::of(idx);
  } catch (const ParseError& e) {
    cur.fail(e.what());
  }
}

Form parse_terms(std::string_view text, int expected_degree) {
  detail::Cursor cur{text, 0};
  if (cur.eof()) cur.fail("empty form");
  if (cur.peek() == '0') {
    detail::Cursor probe = cur;
    probe.consume('0');
    if (probe.eof()) {
      if (expected_degree < 0) cur.fail("degree of zero form is ambiguous");
      return Form(expected_degree);
    }
  }
  Form result;
  bool first = true;
  int degree = -1;
  while (!cur.eof()) {
    bool neg = false;
    if (cur.consume('-')) {
      neg = true;
    } else if (!cur.consume('+') && !first) {
      cur.fail("expected '+' or '-'");
    }
    Scalar coef(1);
    if (cur.looking_at("e^{")) {
      // bare basis word
    } else if (cur.consume('(')) {
      coef = detail::parse_scalar_sum(cur);
      cur.expect(')');
      cur.expect('*');
    } else {
      coef = detail::parse_scalar_term(cur);
      cur.expect('*');
    }
    IndexWord w = parse_word(cur);
    if (degree < 0) {
      degree = w.size();
      result = Form(degree);
    } else if (w.size() != degree) {
      cur.fail("mixed degrees in form");
    }
    result.add(w, neg ? -coef : coef);
    first = false;
  }
  if (expected_degree >= 0 && degree != expected_degree) {
    throw ParseError("expected a " + std::to_string(expected_degree) + "-form, got degree " +
                     std::to_string(degree) + " in '" + std::string(text) + "'");
  }
  if (result.is_zero() && expected_degree >= 0) return Form(expected_degree);
  return result;
}

// Printed coefficient without its sign, plus the sign.
std::pair<std::string, bool> split_sign(const Scalar& c) {
  if (const Surd* s = c.surd(); s != nullptr && s->size() == 1) {
    bool neg = s->sign() < 0;
    std::string body = (neg ? -*s : *s).to_string();
    return {body, neg};
  }
  if (const BigFloat* f = c.big_float()) {
    bool neg = f->sign() < 0;
    return {(neg ? f->abs() : *f).to_string(), neg};
  }
  return {"(" + c.to_string() + ")", false};
}

}  // namespace

Form parse_form(std::string_view text) { return parse_terms(text, -1); }

Form parse_form(std::string_view text, int expected_degree) {
  return parse_terms(text, expected_degree);
}

std::string to_string(const Form& f) {
  if (f.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [w, c] : f.terms()) {
    auto [body, neg] = split_sign(c);
    if (first) {
      if (neg) out += "-";
    } else {
      out += neg ? " - " : " + ";
    }
    first = false;
    if (body != "1") out += body + "*";
    out += w.to_string();
  }
  return out;
}

}  // namespace su3
