#include <sstream>

#include "su3/matrix.hpp"

namespace su3 {

namespace {

// Float pivots between the zero tolerance and this bound are indistinguishable from noise.
BigFloat ambiguity_threshold(int digits) { return BigFloat::pow10(-20, digits); }

}  // namespace

Echelon row_reduce(ScalarMatrix m) {
  Echelon out;
  const std::size_t rows = m.rows();
  const std::size_t cols = m.cols();
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    // Exact pivots: first nonzero; float pivots: largest magnitude.
    std::size_t best = rows;
    BigFloat best_mag(0L, kMinDigits);
    for (std::size_t i = r; i < rows; ++i) {
      const Scalar& v = m(i, c);
      if (!v.inexact()) {
        if (v.surd()->is_zero()) continue;
        best = i;
        break;
      }
      out.inexact = true;
      BigFloat mag = v.big_float()->abs();
      if (best == rows || best_mag < mag) {
        best = i;
        best_mag = mag;
      }
    }
    if (best == rows) continue;
    const Scalar& piv = m(best, c);
    if (piv.inexact()) {
      int d = piv.digits();
      if (best_mag <= zero_tolerance(d)) {
        for (std::size_t i = r; i < rows; ++i) m(i, c) = Scalar();
        continue;
      }
      if (best_mag < ambiguity_threshold(d)) {
        throw InexactScalars("rank is ambiguous at float precision (pivot " +
                             best_mag.to_string(6) + ")");
      }
    }
    if (best != r) {
      for (std::size_t j = 0; j < cols; ++j) std::swap(m(r, j), m(best, j));
    }
    Scalar inv = scalar_div(Scalar(1), m(r, c)).value;
    for (std::size_t j = c; j < cols; ++j) m(r, j) = m(r, j) * inv;
    m(r, c) = Scalar(1);
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r || is_zero(m(i, c))) {
        if (i != r) m(i, c) = Scalar();
        continue;
      }
      Scalar f = m(i, c);
      for (std::size_t j = c; j < cols; ++j) m(i, j) = m(i, j) - f * m(r, j);
      m(i, c) = Scalar();
    }
    out.pivot_cols.push_back(c);
    ++r;
  }
  out.reduced = std::move(m);
  return out;
}

std::size_t rank(const ScalarMatrix& m) { return row_reduce(m).pivot_cols.size(); }

std::vector<ScalarVector> nullspace(const ScalarMatrix& m) {
  Echelon e = row_reduce(m);
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto c : e.pivot_cols) is_pivot[c] = true;
  std::vector<ScalarVector> basis;
  for (std::size_t free = 0; free < m.cols(); ++free) {
    if (is_pivot[free]) continue;
    ScalarVector v(m.cols(), Scalar());
    v[free] = Scalar(1);
    for (std::size_t k = 0; k < e.pivot_cols.size(); ++k) {
      v[e.pivot_cols[k]] = -e.reduced(k, free);
    }
    basis.push_back(std::move(v));
  }
  return basis;
}

std::optional<ScalarVector> solve(const ScalarMatrix& m, const ScalarVector& b) {
  ScalarMatrix aug(m.rows(), m.cols() + 1);
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) aug(i, j) = m(i, j);
    aug(i, m.cols()) = b[i];
  }
  Echelon e = row_reduce(aug);
  if (!e.pivot_cols.empty() && e.pivot_cols.back() == m.cols()) return std::nullopt;
  ScalarVector x(m.cols(), Scalar());
  for (std::size_t k = 0; k < e.pivot_cols.size(); ++k) x[e.pivot_cols[k]] = e.reduced(k, m.cols());
  return x;
}

std::optional<ScalarMatrix> inverse(const ScalarMatrix& m) {
  const std::size_t n = m.rows();
  if (m.cols() != n) throw DegreeOverflow("inverse of a non-square matrix");
  ScalarMatrix aug(n, 2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) aug(i, j) = m(i, j);
    aug(i, n + i) = Scalar(1);
  }
  Echelon e = row_reduce(aug);
  if (e.pivot_cols.size() < n || e.pivot_cols[n - 1] != n - 1) return std::nullopt;
  ScalarMatrix inv(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) inv(i, j) = e.reduced(i, n + j);
  return inv;
}

Scalar determinant(ScalarMatrix m) {
  const std::size_t n = m.rows();
  Scalar det(1);
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = n;
    for (std::size_t i = c; i < n; ++i) {
      if (!is_zero(m(i, c))) {
        p = i;
        break;
      }
    }
    if (p == n) return Scalar();
    if (p != c) {
      for (std::size_t j = 0; j < n; ++j) std::swap(m(c, j), m(p, j));
      det = -det;
    }
    det = det * m(c, c);
    Scalar inv = scalar_div(Scalar(1), m(c, c)).value;
    for (std::size_t i = c + 1; i < n; ++i) {
      if (is_zero(m(i, c))) continue;
      Scalar f = m(i, c) * inv;
      for (std::size_t j = c; j < n; ++j) m(i, j) = m(i, j) - f * m(c, j);
    }
  }
  return det;
}

bool is_zero(const ScalarMatrix& m) {
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j)
      if (!is_zero(m(i, j))) return false;
  return true;
}

bool is_symmetric(const ScalarMatrix& m) {
  if (m.rows() != m.cols()) return false;
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = i + 1; j < m.cols(); ++j)
      if (!(m(i, j) == m(j, i))) return false;
  return true;
}

bool approx_equal(const ScalarMatrix& a, const ScalarMatrix& b, const BigFloat& tolerance) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) return false;
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j)
      if (!approx_equal(a(i, j), b(i, j), tolerance)) return false;
  return true;
}

bool is_positive_definite(const ScalarMatrix& m) {
  if (!is_symmetric(m)) return false;
  for (std::size_t k = 1; k <= m.rows(); ++k) {
    ScalarMatrix minor(k, k);
    for (std::size_t i = 0; i < k; ++i)
      for (std::size_t j = 0; j < k; ++j) minor(i, j) = m(i, j);
    if (sign(determinant(minor)) <= 0) return false;
  }
  return true;
}

ScalarMatrix parse_matrix(std::string_view text) {
  // Rows separated by newlines or ';', entries by whitespace or ','.
  std::vector<std::vector<Scalar>> rows;
  std::string row;
  auto flush = [&] {
    std::vector<Scalar> entries;
    std::string cell;
    auto push = [&] {
      if (!cell.empty()) entries.push_back(parse_scalar(cell));
      cell.clear();
    };
    for (char ch : row) {
      if (ch == ',' || ch == ' ' || ch == '\t') {
        push();
      } else {
        cell += ch;
      }
    }
    push();
    if (!entries.empty()) rows.push_back(std::move(entries));
    row.clear();
  };
  for (char ch : text) {
    if (ch == '\n' || ch == ';') {
      flush();
    } else if (ch != '\r') {
      row += ch;
    }
  }
  flush();
  if (rows.empty()) throw ParseError("empty matrix");
  ScalarMatrix m(rows.size(), rows[0].size());
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != m.cols()) throw ParseError("ragged matrix rows");
    for (std::size_t j = 0; j < m.cols(); ++j) m(i, j) = rows[i][j];
  }
  return m;
}

std::string to_string(const ScalarMatrix& m) {
  std::ostringstream os;
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) {
      if (j) os << ' ';
      os << m(i, j).to_string();
    }
    os << '\n';
  }
  return os.str();
}

}  // namespace su3
