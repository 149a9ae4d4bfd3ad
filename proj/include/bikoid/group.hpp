#pragma once

#include <algorithm>
#include <functional>
#include <map>
#include <string>
#include <vector>

#include "bikoid/perm.hpp"
#include "bikoid/report.hpp"

namespace bikoid {

using Table = std::vector<std::vector<int>>;

// Finite group given by its Cayley table on indices 0..order-1.  The identity
// and inverses are inferred; a table that is not a group still constructs so
// that verify_group can report what is wrong with it.
class FiniteGroup {
 public:
  FiniteGroup() : FiniteGroup(Table{{0}}) {}

  explicit FiniteGroup(Table mul, std::vector<std::string> labels = {})
      : mul_(std::move(mul)), labels_(std::move(labels)) {
    int n = static_cast<int>(mul_.size());
    require(n > 0, "group table is empty");
    for (auto const& row : mul_) {
      require(static_cast<int>(row.size()) == n, "group table is not square");
      for (int v : row)
        require(v >= 0 && v < n, "group table entry out of range");
    }
    require(labels_.empty() || static_cast<int>(labels_.size()) == n,
            "label count does not match order");
    // In a group the only idempotent is the identity.
    id_ = -1;
    for (int e = 0; e < n && id_ < 0; ++e)
      if (mul_[e][e] == e) id_ = e;
    inv_.assign(n, -1);
    if (id_ >= 0)
      for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
          if (mul_[a][b] == id_ && mul_[b][a] == id_) {
            inv_[a] = b;
            break;
          }
  }

  int order() const { return static_cast<int>(mul_.size()); }
  int mul(int a, int b) const { return mul_[a][b]; }
  int mul(int a, int b, int c) const { return mul_[mul_[a][b]][c]; }
  int id() const { return id_; }
  int inv(int a) const { return inv_[a]; }
  Table const& table() const { return mul_; }
  std::vector<std::string> const& labels() const { return labels_; }

  std::string label(int a) const {
    return labels_.empty() ? std::to_string(a) : labels_[a];
  }

  int find_label(std::string const& s) const {
    for (int a = 0; a < order(); ++a)
      if (label(a) == s) return a;
    return -1;
  }

  int pow(int a, long k) const {
    if (k < 0) return pow(inv(a), -k);
    int r = id_;
    for (long i = 0; i < k; ++i) r = mul_[r][a];
    return r;
  }

  bool is_abelian() const {
    for (int a = 0; a < order(); ++a)
      for (int b = 0; b < a; ++b)
        if (mul_[a][b] != mul_[b][a]) return false;
    return true;
  }

  int element_order(int a) const {
    int k = 1;
    for (int x = a; x != id_; x = mul_[x][a]) ++k;
    return k;
  }

 private:
  Table mul_;
  std::vector<std::string> labels_;
  int id_ = 0;
  std::vector<int> inv_;
};

inline Report verify_group(FiniteGroup const& g) {
  int n = g.order();
  if (g.id() < 0) return Report::fail("identity", {}, "no idempotent element");
  int e = g.id();
  for (int a = 0; a < n; ++a)
    if (g.mul(a, e) != a || g.mul(e, a) != a)
      return Report::fail("identity", {a, e});
  for (int a = 0; a < n; ++a)
    if (g.inv(a) < 0) return Report::fail("inverse", {a});
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c)
        if (g.mul(g.mul(a, b), c) != g.mul(a, g.mul(b, c)))
          return Report::fail("associativity", {a, b, c});
  return Report::pass();
}

inline int commutator(FiniteGroup const& g, int p, int q) {
  return g.mul(g.mul(p, q), g.mul(g.inv(p), g.inv(q)));
}

// Build a group from explicit elements and a product.  Elements must be
// closed under `op`; indices follow the order of `elems`.
template <class T, class Op, class Show>
FiniteGroup group_from_elements(std::vector<T> const& elems, Op op, Show show) {
  std::map<T, int> index;
  for (std::size_t i = 0; i < elems.size(); ++i)
    index[elems[i]] = static_cast<int>(i);
  int n = static_cast<int>(elems.size());
  Table mul(n, std::vector<int>(n));
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      auto it = index.find(op(elems[a], elems[b]));
      require(it != index.end(), "element set not closed under product");
      mul[a][b] = it->second;
    }
  std::vector<std::string> labels;
  for (auto const& x : elems) labels.push_back(show(x));
  return FiniteGroup(std::move(mul), std::move(labels));
}

inline FiniteGroup trivial_group() { return FiniteGroup(Table{{0}}, {"1"}); }

inline FiniteGroup cyclic_group(int n) {
  require(n > 0, "cyclic group of non-positive order");
  Table mul(n, std::vector<int>(n));
  std::vector<std::string> labels;
  for (int a = 0; a < n; ++a) {
    labels.push_back(std::to_string(a));
    for (int b = 0; b < n; ++b) mul[a][b] = (a + b) % n;
  }
  return FiniteGroup(std::move(mul), std::move(labels));
}

// Z_2 written multiplicatively as {1,-1}; index 0 is 1.
inline FiniteGroup sign_group() {
  return FiniteGroup(Table{{0, 1}, {1, 0}}, {"1", "-1"});
}

// All permutations of {1..n} in lexicographic order, product f.g = g o f.
// Labels are cycle notation with 1-based points.
inline std::string cycle_string(Perm const& p) {
  std::string s;
  std::vector<char> seen(p.size(), 0);
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (seen[i] || p[i] == static_cast<int>(i)) continue;
    s += "(";
    for (std::size_t j = i; !seen[j]; j = p[j]) {
      seen[j] = 1;
      s += std::to_string(j + 1);
    }
    s += ")";
  }
  return s.empty() ? "()" : s;
}

inline FiniteGroup symmetric_group(int n) {
  std::vector<Perm> elems;
  Perm p = perm_identity(n);
  do elems.push_back(p);
  while (std::next_permutation(p.begin(), p.end()));
  return group_from_elements(elems, perm_dot, cycle_string);
}

inline FiniteGroup direct_product(FiniteGroup const& a, FiniteGroup const& b) {
  int na = a.order(), nb = b.order();
  Table mul(na * nb, std::vector<int>(na * nb));
  std::vector<std::string> labels;
  for (int x = 0; x < na * nb; ++x) {
    labels.push_back("(" + a.label(x / nb) + "," + b.label(x % nb) + ")");
    for (int y = 0; y < na * nb; ++y)
      mul[x][y] = a.mul(x / nb, y / nb) * nb + b.mul(x % nb, y % nb);
  }
  return FiniteGroup(std::move(mul), std::move(labels));
}

// Left action of a group on a finite set or, when `space_group` is given, on
// a group by automorphisms.  act[g][x] is g |> x.
struct GroupAction {
  Table act;

  int operator()(int g, int x) const { return act[g][x]; }
  int space_size() const { return act.empty() ? 0 : static_cast<int>(act[0].size()); }
};

template <class F>
GroupAction action_from(FiniteGroup const& g, int space, F f) {
  GroupAction a;
  a.act.assign(g.order(), std::vector<int>(space));
  for (int x = 0; x < g.order(); ++x)
    for (int s = 0; s < space; ++s) a.act[x][s] = f(x, s);
  return a;
}

inline GroupAction trivial_action(FiniteGroup const& g, int space) {
  return action_from(g, space, [](int, int s) { return s; });
}

inline GroupAction conjugation_action(FiniteGroup const& g) {
  return action_from(g, g.order(),
                     [&](int a, int x) { return g.mul(g.mul(a, x), g.inv(a)); });
}

inline Report verify_action(FiniteGroup const& g, GroupAction const& a,
                            FiniteGroup const* space_group = nullptr) {
  if (static_cast<int>(a.act.size()) != g.order())
    return Report::fail("shape", {}, "action rows do not match actor order");
  int n = a.space_size();
  for (auto const& row : a.act) {
    if (static_cast<int>(row.size()) != n)
      return Report::fail("shape", {}, "ragged action table");
    for (int v : row)
      if (v < 0 || v >= n) return Report::fail("shape", {}, "action entry out of range");
  }
  if (space_group && space_group->order() != n)
    return Report::fail("shape", {}, "action space does not match group order");
  for (int x = 0; x < n; ++x)
    if (a(g.id(), x) != x) return Report::fail("unit", {x});
  for (int p = 0; p < g.order(); ++p)
    for (int q = 0; q < g.order(); ++q)
      for (int x = 0; x < n; ++x)
        if (a(p, a(q, x)) != a(g.mul(p, q), x))
          return Report::fail("compatibility", {p, q, x});
  if (space_group)
    for (int p = 0; p < g.order(); ++p)
      for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y)
          if (a(p, space_group->mul(x, y)) != space_group->mul(a(p, x), a(p, y)))
            return Report::fail("automorphism", {p, x, y});
  return Report::pass();
}

// G semidirect E with (g,a)(h,b) = (gh, a (g|>b)).  The pair (g,a) has index
// g*|E| + a.
struct SemidirectProduct {
  FiniteGroup group;
  int e_order = 1;

  int pair(int g, int a) const { return g * e_order + a; }
  int first(int x) const { return x / e_order; }
  int second(int x) const { return x % e_order; }
};

inline SemidirectProduct semidirect_product(FiniteGroup const& g,
                                            FiniteGroup const& e,
                                            GroupAction const& action) {
  if (!verify_action(g, action, &e))
    throw PreconditionError("semidirect product needs an action by automorphisms");
  int ng = g.order(), ne = e.order();
  Table mul(ng * ne, std::vector<int>(ng * ne));
  std::vector<std::string> labels;
  for (int x = 0; x < ng * ne; ++x) {
    int gx = x / ne, ax = x % ne;
    labels.push_back("(" + g.label(gx) + "," + e.label(ax) + ")");
    for (int y = 0; y < ng * ne; ++y) {
      int gy = y / ne, by = y % ne;
      mul[x][y] = g.mul(gx, gy) * ne + e.mul(ax, action(gx, by));
    }
  }
  return {FiniteGroup(std::move(mul), std::move(labels)), ne};
}

// Abelian gr-group: G acting by automorphisms on an abelian group A.  A is
// stored multiplicatively; additive notation is a display matter.
struct AbelianGrGroup {
  FiniteGroup g;
  FiniteGroup a;
  GroupAction action;
};

inline Report verify_gr_group(AbelianGrGroup const& gr) {
  if (auto r = verify_group(gr.g); !r) return r.check = "G:" + r.check, r;
  if (auto r = verify_group(gr.a); !r) return r.check = "A:" + r.check, r;
  for (int x = 0; x < gr.a.order(); ++x)
    for (int y = 0; y < x; ++y)
      if (gr.a.mul(x, y) != gr.a.mul(y, x)) return Report::fail("A abelian", {x, y});
  return verify_action(gr.g, gr.action, &gr.a);
}

// (Z_2, Z_3) with G = {1,-1} acting by x |> a = xa.
inline AbelianGrGroup gr_z2_z3() {
  FiniteGroup g = sign_group();
  FiniteGroup a = cyclic_group(3);
  GroupAction act = action_from(g, 3, [](int s, int x) { return s == 0 ? x : (3 - x) % 3; });
  return {g, a, act};
}

// Matrices over Z_p, row-major, used for GL(m, Z_p) acting on Z_p^m.
using Matrix = std::vector<int>;

struct LinearGroup {
  FiniteGroup group;
  std::vector<Matrix> mats;
};

inline LinearGroup general_linear_group(int m, int p) {
  std::vector<Matrix> elems;
  int total = 1;
  for (int i = 0; i < m * m; ++i) total *= p;
  auto mat_mul = [m, p](Matrix const& x, Matrix const& y) {
    Matrix r(m * m, 0);
    for (int i = 0; i < m; ++i)
      for (int j = 0; j < m; ++j) {
        int s = 0;
        for (int k = 0; k < m; ++k) s += x[i * m + k] * y[k * m + j];
        r[i * m + j] = s % p;
      }
    return r;
  };
  auto det_nonzero = [&](Matrix x) {
    // Gaussian elimination over Z_p.
    for (int c = 0; c < m; ++c) {
      int piv = -1;
      for (int r = c; r < m; ++r)
        if (x[r * m + c] % p) piv = r;
      if (piv < 0) return false;
      for (int k = 0; k < m; ++k) std::swap(x[c * m + k], x[piv * m + k]);
      int invp = 1;
      while (x[c * m + c] * invp % p != 1) ++invp;
      for (int r = c + 1; r < m; ++r) {
        int f = x[r * m + c] * invp % p;
        for (int k = 0; k < m; ++k)
          x[r * m + k] = ((x[r * m + k] - f * x[c * m + k]) % p + p) % p;
      }
    }
    return true;
  };
  for (int code = 0; code < total; ++code) {
    Matrix x(m * m);
    for (int i = 0, c = code; i < m * m; ++i, c /= p) x[i] = c % p;
    if (det_nonzero(x)) elems.push_back(x);
  }
  // Put the identity first.
  Matrix one(m * m, 0);
  for (int i = 0; i < m; ++i) one[i * m + i] = 1;
  std::stable_partition(elems.begin(), elems.end(), [&](Matrix const& x) { return x == one; });
  auto show = [m](Matrix const& x) {
    std::string s = "[";
    for (int i = 0; i < m * m; ++i) s += (i ? (i % m ? "," : ";") : "") + std::to_string(x[i]);
    return s + "]";
  };
  return {group_from_elements(elems, mat_mul, show), elems};
}

// Z_p^m additively, vector with coordinates v_0 + v_1 p + ...
inline FiniteGroup elementary_abelian(int m, int p) {
  int n = 1;
  for (int i = 0; i < m; ++i) n *= p;
  Table mul(n, std::vector<int>(n));
  std::vector<std::string> labels;
  for (int x = 0; x < n; ++x) {
    std::string s;
    for (int i = 0, c = x; i < m; ++i, c /= p) s += std::to_string(c % p);
    labels.push_back(m == 1 ? s : "(" + s + ")");
    for (int y = 0; y < n; ++y) {
      int r = 0, w = 1;
      for (int i = 0, cx = x, cy = y; i < m; ++i, cx /= p, cy /= p, w *= p)
        r += ((cx % p + cy % p) % p) * w;
      mul[x][y] = r;
    }
  }
  return FiniteGroup(std::move(mul), std::move(labels));
}

// GL(m, Z_p) acting on Z_p^m by matrix multiplication on column vectors.
inline AbelianGrGroup gr_general_linear(int m, int p) {
  LinearGroup gl = general_linear_group(m, p);
  FiniteGroup const& g = gl.group;
  FiniteGroup a = elementary_abelian(m, p);
  auto const& mats = gl.mats;
  GroupAction act = action_from(g, a.order(), [&](int x, int vec) {
    std::vector<int> coords(m);
    for (int i = 0, c = vec; i < m; ++i, c /= p) coords[i] = c % p;
    int r = 0, w = 1;
    for (int i = 0; i < m; ++i, w *= p) {
      int s = 0;
      for (int k = 0; k < m; ++k) s += mats[x][i * m + k] * coords[k];
      r += (s % p) * w;
    }
    return r;
  });
  return {g, a, act};
}

// Automorphisms of g, as image arrays, with product (phi psi)(x) = phi(psi(x))
// so that evaluation phi |> x = phi(x) is a left action.
struct AutomorphismGroup {
  FiniteGroup group;
  std::vector<std::vector<int>> maps;
};

inline AutomorphismGroup automorphism_group(FiniteGroup const& g) {
  int n = g.order();
  std::vector<int> others;
  for (int x = 0; x < n; ++x)
    if (x != g.id()) others.push_back(x);
  std::vector<std::vector<int>> maps;
  std::vector<int> img = others;
  do {
    std::vector<int> f(n);
    f[g.id()] = g.id();
    for (std::size_t i = 0; i < others.size(); ++i) f[others[i]] = img[i];
    bool hom = true;
    for (int x = 0; x < n && hom; ++x)
      for (int y = 0; y < n && hom; ++y)
        hom = f[g.mul(x, y)] == g.mul(f[x], f[y]);
    if (hom) maps.push_back(f);
  } while (std::next_permutation(img.begin(), img.end()));
  auto compose = [](std::vector<int> const& f, std::vector<int> const& h) {
    std::vector<int> r(f.size());
    for (std::size_t x = 0; x < f.size(); ++x) r[x] = f[h[x]];
    return r;
  };
  auto show = [](std::vector<int> const& f) {
    std::string s = "[";
    for (std::size_t i = 0; i < f.size(); ++i) s += (i ? "," : "") + std::to_string(f[i]);
    return s + "]";
  };
  FiniteGroup group = group_from_elements(maps, compose, show);
  return {group, maps};
}

}  // namespace bikoid
