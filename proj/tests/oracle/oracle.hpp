#pragma once

// Reference implementation used only by tests. It works with fully
// antisymmetric component arrays, permutation sums and the bracket formula
// for d, and shares no code with the library.

#include <array>
#include <cstddef>
#include <map>
#include <stdexcept>
#include <vector>

#include <boost/multiprecision/cpp_bin_float.hpp>
#include <boost/multiprecision/cpp_int.hpp>

namespace oracle {

using Rat = boost::multiprecision::cpp_rational;
using Real = boost::multiprecision::cpp_bin_float_50;

constexpr int kN = 6;

using Indices = std::vector<int>;  // zero-based

/// All permutations of 0..n-1 with their signs.
const std::vector<std::pair<std::vector<int>, int>>& permutations(int n);
/// Strictly increasing index tuples of length k.
const std::vector<Indices>& increasing_tuples(int k);
/// Sign of sorting `idx`, 0 on repeats.
int sort_sign(Indices idx);

/// Dense antisymmetric k-tensor: component(i1..ik) = alpha(e_i1, ..., e_ik).
template <class T>
class Alt {
 public:
  explicit Alt(int k) : k_(k), data_(size_for(k), T(0)) {}

  int degree() const { return k_; }
  const T& at(const Indices& idx) const { return data_[offset(idx)]; }

  /// Sets the component on an increasing tuple and all its permutations.
  void set_sorted(const Indices& sorted, const T& value) {
    for (const auto& [perm, sign] : permutations(k_)) {
      Indices p(static_cast<std::size_t>(k_));
      for (int i = 0; i < k_; ++i) p[static_cast<std::size_t>(i)] = sorted[static_cast<std::size_t>(perm[static_cast<std::size_t>(i)])];
      data_[offset(p)] = sign > 0 ? value : T(-value);
    }
  }

  /// Components on increasing tuples, zeros omitted.
  std::map<Indices, T> sorted() const {
    std::map<Indices, T> out;
    for (const auto& idx : increasing_tuples(k_)) {
      if (at(idx) != 0) out.emplace(idx, at(idx));
    }
    return out;
  }

 private:
  static std::size_t size_for(int k) {
    std::size_t s = 1;
    for (int i = 0; i < k; ++i) s *= kN;
    return s;
  }
  static std::size_t offset(const Indices& idx) {
    std::size_t o = 0;
    for (int i : idx) o = o * kN + static_cast<std::size_t>(i);
    return o;
  }

  int k_;
  std::vector<T> data_;
};

template <class T>
T factorial(int n) {
  T f(1);
  for (int i = 2; i <= n; ++i) f *= i;
  return f;
}

/// (a ^ b)(v_1..v_n) = 1/(k! l!) sum_sigma sgn(sigma) a(v_sigma...) b(v_sigma...).
template <class T>
Alt<T> wedge(const Alt<T>& a, const Alt<T>& b) {
  const int k = a.degree(), l = b.degree(), n = k + l;
  if (n > kN) throw std::invalid_argument("wedge beyond top degree");
  Alt<T> out(n);
  const T norm = factorial<T>(k) * factorial<T>(l);
  for (const auto& idx : increasing_tuples(n)) {
    T sum(0);
    for (const auto& [perm, sign] : permutations(n)) {
      Indices left, right;
      for (int i = 0; i < k; ++i) left.push_back(idx[static_cast<std::size_t>(perm[static_cast<std::size_t>(i)])]);
      for (int i = k; i < n; ++i) right.push_back(idx[static_cast<std::size_t>(perm[static_cast<std::size_t>(i)])]);
      const T term = a.at(left) * b.at(right);
      if (sign > 0) sum += term; else sum -= term;
    }
    out.set_sorted(idx, sum / norm);
  }
  return out;
}

/// Structure constants: [e_i, e_j] = sum_k c[k][i][j] e_k.
template <class T>
using Brackets = std::array<std::array<std::array<T, kN>, kN>, kN>;

/// de^k(X, Y) = -e^k([X, Y]), so c^k_ij = -(de^k)_ij.
template <class T>
Brackets<T> brackets_from_differentials(const std::array<Alt<T>, kN>& de) {
  Brackets<T> c{};
  for (int k = 0; k < kN; ++k)
    for (int i = 0; i < kN; ++i)
      for (int j = 0; j < kN; ++j) c[k][i][j] = -de[static_cast<std::size_t>(k)].at({i, j});
  return c;
}

/// dα(X_0..X_k) = sum_{i<j} (-1)^{i+j} α([X_i, X_j], X_0, .., ^i, .., ^j, .., X_k).
template <class T>
Alt<T> d(const Brackets<T>& c, const Alt<T>& a) {
  const int k = a.degree();
  Alt<T> out(k + 1);
  for (const auto& idx : increasing_tuples(k + 1)) {
    T sum(0);
    for (int i = 0; i <= k; ++i) {
      for (int j = i + 1; j <= k; ++j) {
        Indices rest;
        for (int m = 0; m <= k; ++m) {
          if (m != i && m != j) rest.push_back(idx[static_cast<std::size_t>(m)]);
        }
        T inner(0);
        for (int m = 0; m < kN; ++m) {
          const T& cm = c[m][idx[static_cast<std::size_t>(i)]][idx[static_cast<std::size_t>(j)]];
          if (cm == 0) continue;
          Indices args{m};
          args.insert(args.end(), rest.begin(), rest.end());
          inner += cm * a.at(args);
        }
        if ((i + j) % 2 == 0) sum += inner; else sum -= inner;
      }
    }
    out.set_sorted(idx, sum);
  }
  return out;
}

/// i_{e_j} α.
template <class T>
Alt<T> contract(int j, const Alt<T>& a) {
  Alt<T> out(a.degree() - 1);
  for (const auto& idx : increasing_tuples(a.degree() - 1)) {
    Indices args{j};
    args.insert(args.end(), idx.begin(), idx.end());
    out.set_sorted(idx, a.at(args));
  }
  return out;
}

/// v with i_v vol = γ for a 5-form γ: v^a = (1/5!) ε^{a i1..i5} γ_{i1..i5}.
template <class T>
std::array<T, kN> vector_of_five_form(const Alt<T>& g) {
  std::array<T, kN> v{};
  for (int a = 0; a < kN; ++a) {
    T sum(0);
    for (const auto& [perm, sign] : permutations(kN)) {
      if (perm[0] != a) continue;
      Indices rest(perm.begin() + 1, perm.end());
      if (sign > 0) sum += g.at(rest); else sum -= g.at(rest);
    }
    v[static_cast<std::size_t>(a)] = sum / factorial<T>(5);
  }
  return v;
}

/// K(e_b) = vector of (i_{e_b} ρ) ^ ρ; λ = tr(K^2) / 6.
template <class T>
T hitchin_lambda(const Alt<T>& rho) {
  std::array<std::array<T, kN>, kN> k{};
  for (int b = 0; b < kN; ++b) {
    const auto col = vector_of_five_form(wedge(contract(b, rho), rho));
    for (int a = 0; a < kN; ++a) k[a][b] = col[static_cast<std::size_t>(a)];
  }
  T tr(0);
  for (int a = 0; a < kN; ++a)
    for (int b = 0; b < kN; ++b) tr += k[a][b] * k[b][a];
  return tr / 6;
}

/// Ricci tensor of the metric making e_1..e_6 orthonormal, from
/// Ric(X,X) = -1/2 sum |[X,e_i]|^2 - 1/2 B(X,X) + 1/4 sum <[e_i,e_j],X>^2 - <[Z,X],X>
/// with <Z, X> = tr ad_X, polarized.
template <class T>
std::array<std::array<T, kN>, kN> ricci_orthonormal(const Brackets<T>& c) {
  using Vec = std::array<T, kN>;
  auto bracket = [&](const Vec& x, const Vec& y) {
    Vec r{};
    for (int k = 0; k < kN; ++k)
      for (int i = 0; i < kN; ++i)
        for (int j = 0; j < kN; ++j) r[k] += c[k][i][j] * x[i] * y[j];
    return r;
  };
  auto dot = [](const Vec& x, const Vec& y) {
    T s(0);
    for (int i = 0; i < kN; ++i) s += x[i] * y[i];
    return s;
  };
  auto basis = [](int i) {
    Vec e{};
    e[i] = 1;
    return e;
  };
  auto ad = [&](const Vec& x) {  // matrix of ad_x
    std::array<Vec, kN> m{};
    for (int j = 0; j < kN; ++j) {
      const Vec col = bracket(x, basis(j));
      for (int i = 0; i < kN; ++i) m[i][j] = col[i];
    }
    return m;
  };
  Vec z{};
  for (int m = 0; m < kN; ++m) {
    const auto a = ad(basis(m));
    for (int i = 0; i < kN; ++i) z[m] += a[i][i];
  }
  auto quadratic = [&](const Vec& x) {
    T r(0);
    for (int i = 0; i < kN; ++i) {
      const Vec b = bracket(x, basis(i));
      r -= dot(b, b) / 2;
    }
    const auto a = ad(x);
    T killing(0);
    for (int i = 0; i < kN; ++i)
      for (int j = 0; j < kN; ++j) killing += a[i][j] * a[j][i];
    r -= killing / 2;
    for (int i = 0; i < kN; ++i) {
      for (int j = 0; j < kN; ++j) {
        const T s = dot(bracket(basis(i), basis(j)), x);
        r += s * s / 4;
      }
    }
    r -= dot(bracket(z, x), x);
    return r;
  };
  std::array<Vec, kN> ric{};
  for (int i = 0; i < kN; ++i) {
    for (int j = 0; j < kN; ++j) {
      Vec sum = basis(i);
      sum[j] += 1;
      ric[i][j] = (quadratic(sum) - quadratic(basis(i)) - quadratic(basis(j))) / 2;
    }
  }
  return ric;
}

}  // namespace oracle
