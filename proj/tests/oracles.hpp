#pragma once

// Test-only reference implementations, deliberately independent of the
// library's elimination routines: cofactor determinants, Sylvester checks
// built on them, the emission order relation, and seeded matrix generators.

#include "zariski/exactalg.hpp"

#include <algorithm>
#include <random>
#include <vector>

namespace oracles {

using zariski::exactalg::IndexSet;
using zariski::exactalg::Int;
using zariski::exactalg::IntSymMatrix;

inline Int naive_det(const std::vector<std::vector<Int>>& m) {
  const std::size_t n = m.size();
  if (n == 1) return m[0][0];
  Int sum = 0;
  for (std::size_t c = 0; c < n; ++c) {
    if (m[0][c] == 0) continue;
    std::vector<std::vector<Int>> minor;
    minor.reserve(n - 1);
    for (std::size_t i = 1; i < n; ++i) {
      std::vector<Int> row;
      row.reserve(n - 1);
      for (std::size_t j = 0; j < n; ++j) {
        if (j != c) row.push_back(m[i][j]);
      }
      minor.push_back(std::move(row));
    }
    const Int term = m[0][c] * naive_det(minor);
    sum += (c % 2 == 0) ? term : -term;
  }
  return sum;
}

inline Int naive_det(const IntSymMatrix& a) {
  const int n = a.dim();
  std::vector<std::vector<Int>> m(n, std::vector<Int>(n));
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) m[i][j] = a.at(i, j);
  }
  return naive_det(m);
}

inline bool posdef_by_minors(const IntSymMatrix& a) {
  for (int k = 1; k <= a.dim(); ++k) {
    std::vector<std::vector<Int>> lead(k, std::vector<Int>(k));
    for (int i = 0; i < k; ++i) {
      for (int j = 0; j < k; ++j) lead[i][j] = a.at(i, j);
    }
    if (naive_det(lead) <= 0) return false;
  }
  return true;
}

// The strict total order the enumeration follows: S < T iff for some l >= 0
// the memberships agree on {1..l} and min(S \ {1..l}) < min(T \ {1..l}),
// where min(empty) = -infinity.
inline bool set_less(const std::vector<int>& s, const std::vector<int>& t, int n) {
  auto contains = [](const std::vector<int>& v, int x) {
    return std::binary_search(v.begin(), v.end(), x);
  };
  for (int l = 0; l <= n; ++l) {
    bool agree = true;
    for (int x = 1; x <= l && agree; ++x) agree = contains(s, x) == contains(t, x);
    if (!agree) continue;
    auto tail_min = [l](const std::vector<int>& v) {
      for (int x : v) {
        if (x > l) return x;
      }
      return -1;  // stands for -infinity
    };
    const int ms = tail_min(s);
    const int mt = tail_min(t);
    if (ms == -1 ? mt != -1 : (mt != -1 && ms < mt)) return true;
  }
  return false;
}

inline IntSymMatrix random_symmetric(std::mt19937& rng, int n, int lo, int hi) {
  std::uniform_int_distribution<int> dist(lo, hi);
  std::vector<Int> e(static_cast<std::size_t>(n) * n);
  for (int i = 0; i < n; ++i) {
    for (int j = i; j < n; ++j) {
      const int v = dist(rng);
      e[static_cast<std::size_t>(i) * n + j] = v;
      e[static_cast<std::size_t>(j) * n + i] = v;
    }
  }
  return IntSymMatrix(n, std::move(e));
}

inline std::vector<std::vector<int>> as_vectors(const std::vector<IndexSet>& sets) {
  std::vector<std::vector<int>> out;
  out.reserve(sets.size());
  for (const IndexSet& s : sets) out.push_back(s.values());
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace oracles
