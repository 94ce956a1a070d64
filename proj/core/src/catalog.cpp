#include <functional>

#include "su3/liealg.hpp"

namespace su3 {

namespace {

/// sqrt(num/den) as an exact surd.
Scalar root(long num, long den = 1) { return Scalar(Surd::sqrt_of(make_rational(num, den))); }

Scalar frac(long num, long den = 1) { return Scalar(make_rational(num, den)); }

Scalar divide(const Scalar& a, const Scalar& b) { return scalar_div(a, b).value; }

struct Term {
  Scalar coefficient;
  int i, j;
};

Form two_form(std::initializer_list<Term> terms) {
  Form f(2);
  for (const auto& t : terms) f.add(IndexWord::of({t.i, t.j}), t.coefficient);
  return f;
}

using Params = std::map<std::string, Scalar>;
using Builder = std::function<std::array<Form, kDim>(const Params&)>;

struct Definition {
  CatalogEntry entry;
  Builder build;
};

const Form kZero = Form(2);

Scalar s10_branch() { return root(49, 1320); }
Scalar s10_max() { return root(1, 22); }

std::array<Form, kDim> s10(const Scalar& r, const Scalar& t) {
  Scalar radicand = frac(1, 2) - Scalar(11) * t * t;
  if (is_zero(radicand)) radicand = Scalar(0);
  const Scalar q = sqrt(radicand);
  const Scalar a = root(4, 33);  // 2/sqrt(33)
  return {two_form({{a * r, 1, 5}, {r * t, 1, 6}, {r * q, 2, 6}}),
          two_form({{a * r, 2, 5}, {r * q, 1, 6}, {r * t, 2, 6}}),
          two_form({{-root(2, 3) * r, 1, 2}, {root(16, 33) * r, 3, 5}, {Scalar(2) * r * t, 3, 6}}),
          two_form({{root(9, 33) * r, 4, 5}, {Scalar(-4) * r * t, 4, 6}}),
          kZero,
          kZero};
}

std::array<Form, kDim> s12(const Scalar& r, const Scalar& s, const Scalar& t) {
  const Scalar n2 = Scalar(2) * sqrt(Scalar(1) + s * s + t * t);
  const Scalar h = frac(1, 2) * r;
  auto c = [&](const Scalar& num) { return divide(r * num, n2); };
  return {two_form({{h, 1, 5}, {c(Scalar(1) + s + t), 1, 6}}),
          two_form({{h, 2, 5}, {c(Scalar(1) - s - t), 2, 6}}),
          two_form({{h, 3, 5}, {c(t - s - Scalar(1)), 3, 6}}),
          two_form({{h, 4, 5}, {c(s - t - Scalar(1)), 4, 6}}),
          kZero,
          kZero};
}

CatalogEntry table_entry(std::string name, std::vector<std::string> parameters = {"r"},
                         std::string range = "r > 0") {
  return {std::move(name), "nonunimodular solvable, Ric(h) = -r^2 h for h = sum (e^i)^2",
          std::move(parameters), std::move(range), {}};
}

const std::vector<Definition>& definitions() {
  static const std::vector<Definition> defs = [] {
    std::vector<Definition> d;
    d.push_back({{"su2su2", "su(2) + su(2), compact semisimple", {}, "", {}}, [](const Params&) {
                   return std::array<Form, kDim>{
                       two_form({{1, 2, 3}}), two_form({{-1, 1, 3}}), two_form({{1, 1, 2}}),
                       two_form({{1, 5, 6}}), two_form({{-1, 4, 6}}), two_form({{1, 4, 5}})};
                 }});
    d.push_back({table_entry("s1"), [](const Params& p) {
                   const Scalar& r = p.at("r");
                   const Scalar a = root(1, 8) * r, b = root(1, 2) * r;
                   return std::array<Form, kDim>{
                       two_form({{a, 1, 6}}), two_form({{a, 2, 6}}), two_form({{a, 3, 6}}),
                       two_form({{a, 4, 6}}), two_form({{-b, 1, 2}, {-b, 3, 4}, {b, 5, 6}}), kZero};
                 }});
    d.push_back({table_entry("s2"), [](const Params& p) {
                   const Scalar& r = p.at("r");
                   return std::array<Form, kDim>{
                       two_form({{root(8, 105) * r, 1, 6}}),
                       two_form({{root(3, 70) * r, 2, 6}}),
                       two_form({{-root(4, 7) * r, 1, 2}, {root(7, 30) * r, 3, 6}}),
                       two_form({{root(12, 70) * r, 4, 6}}),
                       two_form({{-root(2, 7) * r, 1, 4}, {-root(4, 7) * r, 2, 3}, {root(10, 21) * r, 5, 6}}),
                       kZero};
                 }});
    d.push_back({table_entry("s3"), [](const Params& p) {
                   const Scalar& r = p.at("r");
                   return std::array<Form, kDim>{
                       two_form({{root(1, 55) * r, 1, 6}}),
                       two_form({{root(4, 55) * r, 2, 6}}),
                       two_form({{-root(6, 11) * r, 1, 2}, {root(9, 55) * r, 3, 6}}),
                       two_form({{-root(6, 11) * r, 1, 3}, {root(16, 55) * r, 4, 6}}),
                       two_form({{-root(4, 11) * r, 1, 4}, {-root(4, 11) * r, 2, 3}, {root(25, 55) * r, 5, 6}}),
                       kZero};
                 }});
    d.push_back({table_entry("s4"), [](const Params& p) {
                   const Scalar& r = p.at("r");
                   const Scalar s6 = root(6);
                   return std::array<Form, kDim>{
                       two_form({{frac(1, 30) * s6 * r, 1, 6}}),
                       two_form({{frac(3, 20) * s6 * r, 2, 6}}),
                       two_form({{-root(1, 2) * r, 1, 2}, {frac(11, 60) * s6 * r, 3, 6}}),
                       two_form({{-root(2, 3) * r, 1, 3}, {frac(13, 60) * s6 * r, 4, 6}}),
                       two_form({{-root(1, 2) * r, 1, 4}, {frac(1, 4) * s6 * r, 5, 6}}),
                       kZero};
                 }});
    d.push_back({table_entry("s5"), [](const Params& p) {
                   const Scalar& r = p.at("r");
                   return std::array<Form, kDim>{
                       two_form({{root(1, 18) * r, 1, 6}}),
                       two_form({{root(1, 8) * r, 2, 6}}),
                       two_form({{root(1, 8) * r, 3, 6}}),
                       two_form({{-root(1, 2) * r, 1, 2}, {root(25, 72) * r, 4, 6}}),
                       two_form({{-root(1, 2) * r, 1, 3}, {root(25, 72) * r, 5, 6}}),
                       kZero};
                 }});
    d.push_back({table_entry("s6"), [](const Params& p) {
                   const Scalar& r = p.at("r");
                   return std::array<Form, kDim>{
                       two_form({{root(1, 24) * r, 1, 6}}),
                       two_form({{root(1, 24) * r, 2, 6}}),
                       two_form({{-root(2, 3) * r, 1, 2}, {root(1, 6) * r, 3, 6}}),
                       two_form({{-root(1, 2) * r, 1, 3}, {root(3, 8) * r, 4, 6}}),
                       two_form({{-root(1, 2) * r, 2, 3}, {root(3, 8) * r, 5, 6}}),
                       kZero};
                 }});
    d.push_back({table_entry("s7"), [](const Params& p) {
                   const Scalar& r = p.at("r");
                   return std::array<Form, kDim>{
                       two_form({{root(1, 39) * r, 1, 6}}),
                       two_form({{root(4, 39) * r, 2, 6}}),
                       two_form({{-root(2, 3) * r, 1, 2}, {root(9, 39) * r, 3, 6}}),
                       two_form({{-root(2, 3) * r, 1, 3}, {root(16, 39) * r, 4, 6}}),
                       two_form({{root(9, 39) * r, 5, 6}}),
                       kZero};
                 }});
    d.push_back({table_entry("s8"), [](const Params& p) {
                   const Scalar& r = p.at("r");
                   return std::array<Form, kDim>{
                       two_form({{root(2, 21) * r, 1, 6}}),
                       two_form({{root(2, 21) * r, 2, 6}}),
                       two_form({{-root(2, 3) * r, 1, 2}, {root(8, 21) * r, 3, 6}}),
                       two_form({{root(3, 14) * r, 4, 6}}),
                       two_form({{root(3, 14) * r, 5, 6}}),
                       kZero};
                 }});
    d.push_back({table_entry("s9"), [](const Params& p) {
                   const Scalar a = root(1, 5) * p.at("r");
                   return std::array<Form, kDim>{two_form({{a, 1, 6}}), two_form({{a, 2, 6}}),
                                                 two_form({{a, 3, 6}}), two_form({{a, 4, 6}}),
                                                 two_form({{a, 5, 6}}), kZero};
                 }});
    {
      Definition s10def{table_entry("s10", {"r", "t"}, "r > 0, 0 ≤ t ≤ 1/√22"),
                        [](const Params& p) { return s10(p.at("r"), p.at("t")); }};
      s10def.entry.presets["t"] = {{"branch", s10_branch()}, {"max", s10_max()}};
      d.push_back(std::move(s10def));
    }
    d.push_back({table_entry("s11"), [](const Params& p) {
                   const Scalar& r = p.at("r");
                   auto k = [&](long n) { return Scalar(n) * root(1, 30) * r; };
                   return std::array<Form, kDim>{
                       two_form({{k(1), 1, 5}, {k(3), 1, 6}}),
                       two_form({{k(2), 2, 5}, {k(-4), 2, 6}}),
                       two_form({{-root(2, 3) * r, 1, 2}, {k(3), 3, 5}, {k(-1), 3, 6}}),
                       two_form({{-root(2, 3) * r, 1, 3}, {k(4), 4, 5}, {k(2), 4, 6}}),
                       kZero,
                       kZero};
                 }});
    d.push_back({table_entry("s12", {"r", "s", "t"}, "r > 0, 0 ≤ s ≤ t ≤ 1"),
                 [](const Params& p) { return s12(p.at("r"), p.at("s"), p.at("t")); }});
    d.push_back({table_entry("s13"), [](const Params& p) {
                   const Scalar& r = p.at("r");
                   const Scalar a = root(1, 3) * r, b = root(1, 2) * r, c = root(1, 6) * r;
                   return std::array<Form, kDim>{
                       two_form({{a, 1, 4}, {Scalar(-2) * c, 1, 6}}),
                       two_form({{a, 2, 4}, {b, 2, 5}, {c, 2, 6}}),
                       two_form({{a, 3, 4}, {-b, 3, 5}, {c, 3, 6}}),
                       kZero,
                       kZero,
                       kZero};
                 }});
    d.push_back({{"a6_99", "completely solvable, isomorphic to s3 with rational structure constants", {}, "",
                  {}},
                 [](const Params&) {
                   return std::array<Form, kDim>{
                       two_form({{5, 1, 6}, {1, 2, 5}, {1, 3, 4}}), two_form({{4, 2, 6}, {1, 3, 5}}),
                       two_form({{3, 3, 6}, {1, 4, 5}}), two_form({{2, 4, 6}}), two_form({{1, 5, 6}}),
                       kZero};
                 }});
    d.push_back({{"abelian", "abelian, d = 0", {}, "", {}}, [](const Params&) {
                   return std::array<Form, kDim>{kZero, kZero, kZero, kZero, kZero, kZero};
                 }});
    return d;
  }();
  return defs;
}

const Definition& find(std::string_view name) {
  for (const auto& d : definitions()) {
    if (d.entry.name == name) return d;
  }
  throw UnknownName("no catalog algebra named '" + std::string(name) + "'");
}

void check_range(const std::string& name, const Params& p) {
  auto fail = [&](const std::string& what) {
    throw ParamOutOfRange(name + ": " + what);
  };
  auto nonnegative = [](const Scalar& x) { return is_zero(x) || sign(x) > 0; };
  if (p.count("r") && !(sign(p.at("r")) > 0 && !is_zero(p.at("r")))) fail("r must be positive");
  if (name == "s10") {
    const Scalar& t = p.at("t");
    if (!nonnegative(t) || !nonnegative(frac(1, 22) - t * t)) fail("need 0 <= t <= 1/sqrt(22)");
  }
  if (name == "s12") {
    const Scalar &s = p.at("s"), &t = p.at("t");
    if (!nonnegative(s) || !nonnegative(t - s) || !nonnegative(Scalar(1) - t)) {
      fail("need 0 <= s <= t <= 1");
    }
  }
}

}  // namespace

const std::vector<CatalogEntry>& catalog_entries() {
  static const std::vector<CatalogEntry> entries = [] {
    std::vector<CatalogEntry> out;
    for (const auto& d : definitions()) out.push_back(d.entry);
    return out;
  }();
  return entries;
}

LieAlgebra catalog(std::string_view name, const ParamMap& params) {
  const Definition& def = find(name);
  Params p;
  for (const auto& key : def.entry.parameters) p[key] = key == "r" ? Scalar(1) : Scalar(0);
  for (const auto& [key, value] : params) {
    if (!p.count(key)) {
      throw UnknownName("algebra '" + def.entry.name + "' has no parameter '" + key + "'");
    }
    p[key] = value;
  }
  check_range(def.entry.name, p);
  return LieAlgebra(def.entry.name, def.build(p), p);
}

LieAlgebra catalog_from_spec(std::string_view spec) {
  std::string text(spec);
  auto comma = text.find(',');
  std::string name = text.substr(0, comma);
  const Definition& def = find(name);
  ParamMap params;
  while (comma != std::string::npos) {
    auto next = text.find(',', comma + 1);
    std::string item = text.substr(comma + 1, next == std::string::npos ? std::string::npos : next - comma - 1);
    comma = next;
    auto eq = item.find('=');
    if (eq == std::string::npos) throw ParseError("expected param=value, got '" + item + "'");
    std::string key = item.substr(0, eq);
    std::string value = item.substr(eq + 1);
    auto preset = def.entry.presets.find(key);
    if (preset != def.entry.presets.end() && preset->second.count(value)) {
      params[key] = preset->second.at(value);
    } else {
      params[key] = parse_scalar(value);
    }
  }
  return catalog(name, params);
}

}  // namespace su3
