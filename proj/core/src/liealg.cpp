#include "su3/liealg.hpp"

#include <set>
#include <sstream>

namespace su3 {

LieAlgebra::LieAlgebra(std::string name, std::array<Form, kDim> differential, ParamMap params,
                       bool check)
    : name_(std::move(name)), differential_(std::move(differential)), params_(std::move(params)) {
  for (auto& f : differential_) {
    if (f.is_zero()) f = Form(2);
    if (f.degree() != 2) throw DegreeOverflow("de^i must be a 2-form");
  }
  if (check && !check_jacobi(*this)) {
    throw JacobiViolation("structure equations of '" + name_ + "' violate d^2 = 0");
  }
}

bool LieAlgebra::is_rational() const {
  for (const auto& f : differential_) {
    for (const auto& [w, c] : f.terms()) {
      if (!c.is_rational()) return false;
    }
  }
  return true;
}

bool LieAlgebra::is_inexact() const {
  for (const auto& f : differential_) {
    for (const auto& [w, c] : f.terms()) {
      if (c.inexact()) return true;
    }
  }
  return false;
}

bool check_jacobi(const LieAlgebra& algebra) {
  for (int i = 1; i <= kDim; ++i) {
    Form dd = algebra.d(algebra.de(i));
    for (const auto& [w, c] : dd.terms()) {
      if (!is_zero(c)) return false;
    }
  }
  return true;
}

ScalarMatrix differential_matrix(const LieAlgebra& algebra, int k) {
  const auto& src = words_of_degree(k);
  const auto& dst = words_of_degree(k + 1);
  std::map<IndexWord, std::size_t> row_of;
  for (std::size_t r = 0; r < dst.size(); ++r) row_of[dst[r]] = r;
  ScalarMatrix m(dst.size(), src.size());
  for (std::size_t c = 0; c < src.size(); ++c) {
    Form img = algebra.d(Form::basis(src[c]));
    for (const auto& [w, v] : img.terms()) m(row_of.at(w), c) = v;
  }
  return m;
}

ClosedFormBasis closed_forms(const LieAlgebra& algebra, int k) {
  if (k < 1 || k > kDim) throw DegreeOverflow("closed_forms needs 1 <= k <= 6");
  ClosedFormBasis out;
  out.degree = k;
  const auto& words = words_of_degree(k);
  std::vector<ScalarVector> kernel;
  if (k == kDim) {
    kernel.push_back(ScalarVector{Scalar(1)});
  } else {
    kernel = nullspace(differential_matrix(algebra, k));
  }
  for (const auto& v : kernel) {
    Form f(k);
    for (std::size_t i = 0; i < words.size(); ++i) f.add(words[i], v[i]);
    out.basis.push_back(std::move(f));
  }
  return out;
}

namespace {

/// C[i][j][k] with [e_j, e_k] = sum_i C[i][j][k] e_i, from de^i = -sum C^i_jk e^{jk}.
using Brackets = std::array<std::array<std::array<Scalar, kDim>, kDim>, kDim>;

Brackets brackets_of(const LieAlgebra& algebra) {
  Brackets c{};
  for (int i = 0; i < kDim; ++i) {
    for (const auto& [w, v] : algebra.de(i + 1).terms()) {
      auto idx = w.indices();
      c[i][idx[0] - 1][idx[1] - 1] = -v;
      c[i][idx[1] - 1][idx[0] - 1] = v;
    }
  }
  return c;
}

}  // namespace

ScalarMatrix ricci(const LieAlgebra& algebra, const ScalarMatrix& metric) {
  if (metric.rows() != kDim || metric.cols() != kDim) throw SingularMetric("metric must be 6x6");
  auto inv = inverse(metric);
  if (!inv) throw SingularMetric("metric matrix is singular");
  const ScalarMatrix& hinv = *inv;
  const Brackets c = brackets_of(algebra);

  // <[e_a, e_b], e_l>
  auto bracket_pairing = [&](int a, int b, int l) {
    Scalar s;
    for (int m = 0; m < kDim; ++m) {
      if (!is_zero(c[m][a][b])) s += c[m][a][b] * metric(m, l);
    }
    return s;
  };

  // gamma[i][j][k]: coefficient of e_k in nabla_{e_i} e_j (Koszul formula).
  std::array<std::array<std::array<Scalar, kDim>, kDim>, kDim> gamma{};
  const Scalar half = Scalar(make_rational(1, 2));
  for (int i = 0; i < kDim; ++i) {
    for (int j = 0; j < kDim; ++j) {
      std::array<Scalar, kDim> lowered{};
      for (int l = 0; l < kDim; ++l) {
        lowered[l] = half * (bracket_pairing(i, j, l) - bracket_pairing(j, l, i) + bracket_pairing(l, i, j));
      }
      for (int k = 0; k < kDim; ++k) {
        Scalar s;
        for (int l = 0; l < kDim; ++l) {
          if (!is_zero(lowered[l])) s += hinv(k, l) * lowered[l];
        }
        gamma[i][j][k] = s;
      }
    }
  }

  auto nabla = [&](int i, const std::array<Scalar, kDim>& v) {
    std::array<Scalar, kDim> out{};
    for (int m = 0; m < kDim; ++m) {
      if (is_zero(v[m])) continue;
      for (int n = 0; n < kDim; ++n) out[n] += v[m] * gamma[i][m][n];
    }
    return out;
  };

  ScalarMatrix ric(kDim, kDim);
  for (int j = 0; j < kDim; ++j) {
    for (int k = 0; k < kDim; ++k) {
      Scalar total;
      for (int i = 0; i < kDim; ++i) {
        // [R(e_i, e_j) e_k]^i
        Scalar a = nabla(i, gamma[j][k])[i];
        Scalar b = nabla(j, gamma[i][k])[i];
        Scalar br;
        for (int m = 0; m < kDim; ++m) {
          if (!is_zero(c[m][i][j])) br += c[m][i][j] * gamma[m][k][i];
        }
        total += a - b - br;
      }
      ric(j, k) = total;
    }
  }
  return ric;
}

std::optional<Scalar> einstein_check(const LieAlgebra& algebra, const ScalarMatrix& metric) {
  ScalarMatrix ric = ricci(algebra, metric);
  std::size_t pi = 0, pj = 0;
  bool found = false;
  for (std::size_t i = 0; i < kDim && !found; ++i) {
    for (std::size_t j = 0; j < kDim && !found; ++j) {
      if (!is_zero(metric(i, j))) {
        pi = i;
        pj = j;
        found = true;
      }
    }
  }
  if (!found) throw SingularMetric("zero metric");
  Scalar mu = scalar_div(ric(pi, pj), metric(pi, pj)).value;
  const BigFloat tol = BigFloat::pow10(-30, default_digits());
  if (!approx_equal(ric, mu * metric, tol)) return std::nullopt;
  return mu;
}

ScalarMatrix jensen_metric() {
  ScalarMatrix h(kDim, kDim);
  for (std::size_t i = 0; i < kDim; ++i) h(i, i) = Scalar(2);
  for (std::size_t i = 0; i < 3; ++i) {
    h(i, i + 3) = Scalar(-1);
    h(i + 3, i) = Scalar(-1);
  }
  return h;
}

// ---------------------------------------------------------------- text format

LieAlgebra parse_algebra(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string line;
  std::string name;
  bool have_dim = false;
  std::array<Form, kDim> de;
  for (auto& f : de) f = Form(2);
  std::set<int> seen;
  int lineno = 0;
  auto trim = [](std::string s) {
    auto b = s.find_first_not_of(" \t\r");
    auto e = s.find_last_not_of(" \t\r");
    return b == std::string::npos ? std::string() : s.substr(b, e - b + 1);
  };
  while (std::getline(in, line)) {
    ++lineno;
    auto hash = line.find('#');
    if (hash != std::string::npos) line.resize(hash);
    line = trim(line);
    if (line.empty()) continue;
    auto where = [&] { return " (line " + std::to_string(lineno) + ")"; };
    if (line.rfind("algebra", 0) == 0) {
      name = trim(line.substr(7));
      if (name.empty()) throw ParseError("missing algebra name" + where());
      continue;
    }
    if (line.rfind("dim", 0) == 0) {
      if (trim(line.substr(3)) != "6") throw ParseError("only dim 6 is supported" + where());
      have_dim = true;
      continue;
    }
    if (line.rfind("de", 0) == 0) {
      auto eq = line.find('=');
      if (eq == std::string::npos) throw ParseError("expected 'de<i> = <form>'" + where());
      std::string idx = trim(line.substr(2, eq - 2));
      if (idx.size() != 1 || idx[0] < '1' || idx[0] > '6') {
        throw ParseError("bad differential index '" + idx + "'" + where());
      }
      int i = idx[0] - '0';
      if (!seen.insert(i).second) throw ParseError("de" + idx + " given twice" + where());
      de[i - 1] = parse_form(trim(line.substr(eq + 1)), 2);
      continue;
    }
    throw ParseError("unrecognized line '" + line + "'" + where());
  }
  if (name.empty()) throw ParseError("missing 'algebra <name>' line");
  if (!have_dim) throw ParseError("missing 'dim 6' line");
  return LieAlgebra(name, std::move(de));
}

std::string format_algebra(const LieAlgebra& algebra) {
  std::ostringstream os;
  os << "algebra " << algebra.name() << "\n" << "dim 6\n";
  for (int i = 1; i <= kDim; ++i) {
    if (!algebra.de(i).is_zero()) os << "de" << i << " = " << to_string(algebra.de(i)) << "\n";
  }
  return os.str();
}

// ---------------------------------------------------------------- rationalization

namespace {

std::vector<std::uint64_t> prime_factors(std::uint64_t n) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t p = 2; p * p <= n; ++p) {
    if (n % p == 0) {
      out.push_back(p);
      while (n % p == 0) n /= p;
    }
  }
  if (n > 1) out.push_back(n);
  return out;
}

/// Solves A x = b over GF(2) with 7 unknowns packed in bits; absent if inconsistent.
std::optional<unsigned> solve_gf2(std::vector<std::pair<unsigned, unsigned>> rows) {
  constexpr int n = kDim + 1;
  std::vector<int> pivot_row(n, -1);
  std::size_t r = 0;
  for (int col = 0; col < n; ++col) {
    std::size_t p = r;
    while (p < rows.size() && !((rows[p].first >> col) & 1u)) ++p;
    if (p == rows.size()) continue;
    std::swap(rows[p], rows[r]);
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (i != r && ((rows[i].first >> col) & 1u)) {
        rows[i].first ^= rows[r].first;
        rows[i].second ^= rows[r].second;
      }
    }
    pivot_row[col] = static_cast<int>(r);
    ++r;
  }
  for (std::size_t i = r; i < rows.size(); ++i) {
    if (rows[i].first == 0 && rows[i].second) return std::nullopt;
  }
  unsigned x = 0;
  for (int col = 0; col < n; ++col) {
    if (pivot_row[col] >= 0 && rows[static_cast<std::size_t>(pivot_row[col])].second) x |= 1u << col;
  }
  return x;
}

}  // namespace

std::optional<Rationalization> rationalize(const LieAlgebra& algebra) {
  if (algebra.is_inexact()) return std::nullopt;
  // Each coefficient q*sqrt(d) on e^{jk} in de^i becomes
  // q*sqrt(d * m0 * m_i * m_j * m_k) / (m0 m_j m_k) after f^i = sqrt(m0 m_i) e^i.
  struct Coef {
    int i, j, k;
    std::uint64_t d;
  };
  std::vector<Coef> coefs;
  std::set<std::uint64_t> primes;
  for (int i = 1; i <= kDim; ++i) {
    for (const auto& [w, c] : algebra.de(i).terms()) {
      const Surd& s = *c.surd();
      if (s.size() != 1) return std::nullopt;
      std::uint64_t d = s.terms().begin()->first;
      auto idx = w.indices();
      coefs.push_back({i, idx[0], idx[1], d});
      for (auto p : prime_factors(d)) primes.insert(p);
    }
  }
  std::array<std::uint64_t, kDim + 1> m{};
  m.fill(1);
  for (std::uint64_t p : primes) {
    std::vector<std::pair<unsigned, unsigned>> rows;
    for (const auto& c : coefs) {
      unsigned mask = 1u;  // x0
      mask ^= 1u << c.i;
      mask ^= 1u << c.j;
      mask ^= 1u << c.k;
      rows.emplace_back(mask, c.d % p == 0 ? 1u : 0u);
    }
    auto x = solve_gf2(std::move(rows));
    if (!x) return std::nullopt;
    for (int v = 0; v <= kDim; ++v) {
      if ((*x >> v) & 1u) m[v] *= p;
    }
  }
  std::array<Scalar, kDim> scale;
  std::array<Rational, kDim> diag;
  for (int i = 0; i < kDim; ++i) {
    Integer prod = Integer(static_cast<unsigned long>(m[0])) * static_cast<unsigned long>(m[i + 1]);
    scale[i] = Scalar(Surd::term(Rational(1), prod));
    diag[i] = Rational(Integer(1), prod);
  }
  std::array<Form, kDim> de;
  for (int i = 1; i <= kDim; ++i) {
    Form f(2);
    for (const auto& [w, c] : algebra.de(i).terms()) {
      auto idx = w.indices();
      Scalar factor = scalar_div(scale[i - 1], scale[idx[0] - 1] * scale[idx[1] - 1]).value;
      Scalar v = c * factor;
      if (!v.is_rational()) return std::nullopt;
      f.add(w, v);
    }
    de[i - 1] = std::move(f);
  }
  ParamMap params = algebra.params();
  return Rationalization{LieAlgebra(algebra.name() + "_rational", std::move(de), std::move(params)),
                         scale, diag};
}

}  // namespace su3
