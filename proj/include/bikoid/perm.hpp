#pragma once

#include <numeric>
#include <vector>

#include "bikoid/report.hpp"

namespace bikoid {

// Permutation of {0..n-1} stored as an image array.  The product follows
// f.g = g o f: first f, then g.
using Perm = std::vector<int>;

inline Perm perm_identity(int n) {
  Perm p(n);
  std::iota(p.begin(), p.end(), 0);
  return p;
}

// Transposition exchanging a and a+1 (0-based).
inline Perm transposition(int n, int a) {
  Perm p = perm_identity(n);
  std::swap(p[a], p[a + 1]);
  return p;
}

inline Perm perm_dot(Perm const& f, Perm const& g) {
  require(f.size() == g.size(), "permutation size mismatch");
  Perm r(f.size());
  for (std::size_t i = 0; i < f.size(); ++i) r[i] = g[f[i]];
  return r;
}

inline Perm perm_inverse(Perm const& f) {
  Perm r(f.size());
  for (std::size_t i = 0; i < f.size(); ++i) r[f[i]] = static_cast<int>(i);
  return r;
}

inline bool is_perm(Perm const& f) {
  std::vector<char> seen(f.size(), 0);
  for (int v : f) {
    if (v < 0 || v >= static_cast<int>(f.size()) || seen[v]) return false;
    seen[v] = 1;
  }
  return true;
}

// Left action on tuples: (f |> x)_i = x_{f(i)}.  Satisfies
// f |> (g |> x) = (f.g) |> x.
template <class T>
std::vector<T> perm_act(Perm const& f, std::vector<T> const& x) {
  require(f.size() == x.size(), "permutation/tuple size mismatch");
  std::vector<T> r(x.size());
  for (std::size_t i = 0; i < f.size(); ++i) r[i] = x[f[i]];
  return r;
}

}  // namespace bikoid
