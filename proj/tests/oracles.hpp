#pragma once

// Independent reference computations for the tests. Nothing here calls the
// library's enumeration or connectivity code.

#include <cstdint>
#include <numeric>
#include <random>
#include <utility>
#include <vector>

#include <gmpxx.h>

#include "chordgf/power_series.hpp"

namespace oracle {

using Matching = std::vector<std::pair<int, int>>;  // chords (a, b), a < b, 1-based

inline void extend(std::vector<int>& free_pts, Matching& cur, std::vector<Matching>& out) {
  if (free_pts.empty()) {
    out.push_back(cur);
    return;
  }
  const int first = free_pts.front();
  for (std::size_t i = 1; i < free_pts.size(); ++i) {
    const int other = free_pts[i];
    std::vector<int> rest;
    for (std::size_t j = 1; j < free_pts.size(); ++j) {
      if (j != i) rest.push_back(free_pts[j]);
    }
    cur.emplace_back(first, other);
    extend(rest, cur, out);
    cur.pop_back();
  }
}

inline std::vector<Matching> matchings(int n) {
  std::vector<int> pts(static_cast<std::size_t>(2 * n));
  std::iota(pts.begin(), pts.end(), 1);
  std::vector<Matching> out;
  Matching cur;
  extend(pts, cur, out);
  return out;
}

struct UnionFind {
  std::vector<int> parent;
  explicit UnionFind(int n) : parent(static_cast<std::size_t>(n)) { std::iota(parent.begin(), parent.end(), 0); }
  int find(int x) {
    while (parent[static_cast<std::size_t>(x)] != x) x = parent[static_cast<std::size_t>(x)] = parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(x)])];
    return x;
  }
  bool unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    parent[static_cast<std::size_t>(a)] = b;
    return true;
  }
};

inline bool cross(const std::pair<int, int>& u, const std::pair<int, int>& v) {
  return (u.first < v.first && v.first < u.second && u.second < v.second) ||
         (v.first < u.first && u.first < v.second && v.second < u.second);
}

// Connectivity of the crossing graph after deleting chord `skip` (-1: none).
inline bool connected_without(const Matching& m, int skip) {
  const int n = static_cast<int>(m.size());
  UnionFind uf(n);
  int components = n - (skip >= 0 ? 1 : 0);
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      if (i == skip || j == skip) continue;
      if (cross(m[static_cast<std::size_t>(i)], m[static_cast<std::size_t>(j)]) && uf.unite(i, j)) --components;
    }
  }
  return components == 1;
}

inline bool connected(const Matching& m) { return connected_without(m, -1); }

inline bool two_connected(const Matching& m) {
  if (m.size() < 2 || !connected(m)) return false;
  for (int c = 0; c < static_cast<int>(m.size()); ++c) {
    if (!connected_without(m, c)) return false;
  }
  return true;
}

inline mpz_class double_factorial(long odd) {
  mpz_class r = 1;
  for (long k = odd; k > 1; k -= 2) r *= k;
  return r;
}

// Classical recurrence for connected diagrams:
// a(n) = sum_{k=1}^{n-1} (2k - 1) a(k) a(n - k).
inline std::vector<mpz_class> connected_counts(int n_max) {
  std::vector<mpz_class> a(static_cast<std::size_t>(n_max + 1), 0);
  if (n_max >= 1) a[1] = 1;
  for (int n = 2; n <= n_max; ++n) {
    for (int k = 1; k < n; ++k) a[static_cast<std::size_t>(n)] += (2 * k - 1) * a[static_cast<std::size_t>(k)] * a[static_cast<std::size_t>(n - k)];
  }
  return a;
}

// Rank of the cycle space: |E| - |V| + #components.
inline int cycle_rank(int vertices, const std::vector<std::pair<int, int>>& edges) {
  UnionFind uf(vertices);
  int components = vertices;
  for (const auto& [a, b] : edges) {
    if (uf.unite(a, b)) --components;
  }
  return static_cast<int>(edges.size()) - vertices + components;
}

inline chordgf::Rational random_rational(std::mt19937& rng, int span = 9) {
  std::uniform_int_distribution<long> num(-span, span);
  std::uniform_int_distribution<long> den(1, span);
  return chordgf::Rational(mpz_class(num(rng)), mpz_class(den(rng)));
}

inline chordgf::PowerSeries random_series(std::mt19937& rng, std::size_t order, int span = 9) {
  std::vector<chordgf::Rational> c;
  for (std::size_t k = 0; k <= order; ++k) c.push_back(random_rational(rng, span));
  return chordgf::PowerSeries(std::move(c));
}

}  // namespace oracle
