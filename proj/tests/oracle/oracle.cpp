#include "oracle.hpp"

#include <algorithm>
#include <numeric>

namespace oracle {

int sort_sign(Indices idx) {
  int sign = 1;
  for (std::size_t i = 0; i < idx.size(); ++i) {
    for (std::size_t j = i + 1; j < idx.size(); ++j) {
      if (idx[i] == idx[j]) return 0;
      if (idx[i] > idx[j]) sign = -sign;
    }
  }
  return sign;
}

const std::vector<std::pair<std::vector<int>, int>>& permutations(int n) {
  static const auto table = [] {
    std::array<std::vector<std::pair<std::vector<int>, int>>, kN + 1> t;
    for (int m = 0; m <= kN; ++m) {
      std::vector<int> p(static_cast<std::size_t>(m));
      std::iota(p.begin(), p.end(), 0);
      do {
        t[static_cast<std::size_t>(m)].emplace_back(p, sort_sign(p));
      } while (std::next_permutation(p.begin(), p.end()));
    }
    return t;
  }();
  return table.at(static_cast<std::size_t>(n));
}

const std::vector<Indices>& increasing_tuples(int k) {
  static const auto table = [] {
    std::array<std::vector<Indices>, kN + 1> t;
    for (unsigned mask = 0; mask < (1u << kN); ++mask) {
      Indices idx;
      for (int i = 0; i < kN; ++i) {
        if (mask & (1u << i)) idx.push_back(i);
      }
      t[idx.size()].push_back(idx);
    }
    for (auto& v : t) std::sort(v.begin(), v.end());
    return t;
  }();
  return table.at(static_cast<std::size_t>(k));
}

}  // namespace oracle
