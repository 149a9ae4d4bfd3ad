#pragma once

#include <algorithm>
#include <boost/multiprecision/cpp_int.hpp>
#include <cstdint>
#include <map>
#include <memory>
#include <numeric>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "bikoid/bikoid.hpp"
#include "bikoid/groupoid.hpp"
#include "bikoid/report.hpp"

namespace bikoid {

using Scalar = boost::multiprecision::cpp_rational;
using Index = std::int64_t;

// Sparse vector: (index, value) sorted by index, no zeros.
using SparseVec = std::vector<std::pair<Index, Scalar>>;

inline void normalize(SparseVec& v) {
  std::sort(v.begin(), v.end(), [](auto const& a, auto const& b) { return a.first < b.first; });
  SparseVec out;
  out.reserve(v.size());
  for (auto& e : v) {
    if (!out.empty() && out.back().first == e.first) out.back().second += e.second;
    else out.push_back(std::move(e));
  }
  out.erase(std::remove_if(out.begin(), out.end(), [](auto const& e) { return e.second == 0; }),
            out.end());
  v = std::move(out);
}

// Exact sparse matrix acting on column vectors, stored by column.
class LinearOperator {
 public:
  LinearOperator() = default;
  LinearOperator(Index rows, Index cols) : rows_(rows), cols_(cols), col_(cols) {}

  static LinearOperator identity(Index n) {
    LinearOperator m(n, n);
    for (Index i = 0; i < n; ++i) m.col_[i] = {{i, Scalar(1)}};
    return m;
  }

  // Column j has a single 1 in row p[j].
  static LinearOperator permutation(std::vector<Index> const& p) {
    Index n = static_cast<Index>(p.size());
    LinearOperator m(n, n);
    for (Index j = 0; j < n; ++j) m.col_[j] = {{p[j], Scalar(1)}};
    return m;
  }

  Index rows() const { return rows_; }
  Index cols() const { return cols_; }
  SparseVec const& column(Index j) const { return col_[j]; }

  void set_column(Index j, SparseVec v) {
    normalize(v);
    for (auto const& e : v)
      if (e.first < 0 || e.first >= rows_) throw PreconditionError("operator row index out of range");
    col_[j] = std::move(v);
  }

  void add(Index r, Index c, Scalar const& v) {
    if (r < 0 || r >= rows_ || c < 0 || c >= cols_) throw PreconditionError("operator index out of range");
    col_[c].push_back({r, v});
    normalize(col_[c]);
  }

  Scalar at(Index r, Index c) const {
    for (auto const& e : col_[c])
      if (e.first == r) return e.second;
    return 0;
  }

  Index nonzeros() const {
    Index k = 0;
    for (auto const& c : col_) k += static_cast<Index>(c.size());
    return k;
  }

  bool is_zero() const { return nonzeros() == 0; }

  // y = M x
  SparseVec apply(SparseVec const& x) const {
    SparseVec y;
    for (auto const& [j, s] : x)
      for (auto const& [i, v] : col_[j]) y.push_back({i, v * s});
    normalize(y);
    return y;
  }

  // Entries (row, col, value) in column-major order.
  std::vector<std::tuple<Index, Index, Scalar>> entries() const {
    std::vector<std::tuple<Index, Index, Scalar>> r;
    for (Index j = 0; j < cols_; ++j)
      for (auto const& [i, v] : col_[j]) r.emplace_back(i, j, v);
    return r;
  }

  LinearOperator transpose() const {
    LinearOperator t(cols_, rows_);
    for (Index j = 0; j < cols_; ++j)
      for (auto const& [i, v] : col_[j]) t.col_[i].push_back({j, v});
    return t;
  }

  // Row index per column when this is a permutation matrix.
  std::optional<std::vector<Index>> as_permutation() const {
    if (rows_ != cols_) return std::nullopt;
    std::vector<Index> p(cols_);
    std::vector<char> seen(rows_, 0);
    for (Index j = 0; j < cols_; ++j) {
      if (col_[j].size() != 1 || col_[j][0].second != 1) return std::nullopt;
      Index i = col_[j][0].first;
      if (seen[i]) return std::nullopt;
      seen[i] = 1;
      p[j] = i;
    }
    return p;
  }
  bool is_permutation() const { return as_permutation().has_value(); }

  friend LinearOperator operator*(LinearOperator const& a, LinearOperator const& b) {
    if (a.cols_ != b.rows_) throw PreconditionError("operator dimensions do not match");
    LinearOperator c(a.rows_, b.cols_);
    for (Index j = 0; j < b.cols_; ++j)
      if (!b.col_[j].empty()) c.col_[j] = a.apply(b.col_[j]);
    return c;
  }

  friend LinearOperator operator+(LinearOperator const& a, LinearOperator const& b) {
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw PreconditionError("operator dimensions do not match");
    LinearOperator c(a.rows_, a.cols_);
    for (Index j = 0; j < a.cols_; ++j) {
      SparseVec v = a.col_[j];
      v.insert(v.end(), b.col_[j].begin(), b.col_[j].end());
      normalize(v);
      c.col_[j] = std::move(v);
    }
    return c;
  }

  bool operator==(LinearOperator const& o) const {
    return rows_ == o.rows_ && cols_ == o.cols_ && col_ == o.col_;
  }
  bool operator!=(LinearOperator const& o) const { return !(*this == o); }

  // First column where the two operators differ, or -1.
  Index first_difference(LinearOperator const& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) return 0;
    for (Index j = 0; j < cols_; ++j)
      if (col_[j] != o.col_[j]) return j;
    return -1;
  }

 private:
  Index rows_ = 0, cols_ = 0;
  std::vector<SparseVec> col_;
};

// Least k >= 1 with M^k = I.  Permutation matrices use the lcm of the cycle
// lengths; anything else is multiplied out up to `bound`.
struct OrderResult {
  enum Status { Found, ExceedsBound } status;
  long order;
};

inline long exact_rank(LinearOperator const& m) {
  std::vector<std::vector<Scalar>> a(m.rows(), std::vector<Scalar>(m.cols()));
  for (auto const& [i, j, v] : m.entries()) a[i][j] = v;
  long rank = 0;
  Index rows = m.rows(), cols = m.cols();
  for (Index c = 0; c < cols && rank < rows; ++c) {
    Index piv = -1;
    for (Index r = rank; r < rows; ++r)
      if (a[r][c] != 0) {
        piv = r;
        break;
      }
    if (piv < 0) continue;
    std::swap(a[piv], a[rank]);
    for (Index r = rank + 1; r < rows; ++r) {
      if (a[r][c] == 0) continue;
      Scalar f = a[r][c] / a[rank][c];
      for (Index k = c; k < cols; ++k) a[r][k] -= f * a[rank][k];
    }
    ++rank;
  }
  return rank;
}

inline OrderResult operator_order(LinearOperator const& m, long bound = 10000) {
  if (m.rows() != m.cols()) throw PreconditionError("operator order needs a square operator");
  if (auto p = m.as_permutation()) {
    std::vector<char> seen(p->size(), 0);
    long l = 1;
    for (std::size_t s = 0; s < p->size(); ++s) {
      if (seen[s]) continue;
      long len = 0;
      for (Index j = static_cast<Index>(s); !seen[j]; j = (*p)[j]) {
        seen[j] = 1;
        ++len;
      }
      l = std::lcm(l, len);
      if (l > bound) return {OrderResult::ExceedsBound, bound};
    }
    return {OrderResult::Found, l};
  }
  for (Index j = 0; j < m.cols(); ++j)
    if (m.column(j).empty()) throw PreconditionError("operator is not invertible");
  if (m.rows() <= 512 && exact_rank(m) < m.rows()) throw PreconditionError("operator is not invertible");
  LinearOperator id = LinearOperator::identity(m.rows());
  LinearOperator pw = m;
  for (long k = 1; k <= bound; ++k) {
    if (pw == id) return {OrderResult::Found, k};
    pw = m * pw;
    if (pw.is_zero()) throw PreconditionError("operator is not invertible");
  }
  return {OrderResult::ExceedsBound, bound};
}

// Element of the groupoid algebra: finite sum of arrows with rational
// coefficients.
struct AlgebraElement {
  GroupoidPtr gamma;
  std::map<int, Scalar> terms;

  bool operator==(AlgebraElement const& o) const { return gamma == o.gamma && terms == o.terms; }
  bool operator!=(AlgebraElement const& o) const { return !(*this == o); }

  void add(int f, Scalar const& c) {
    if (f < 0 || f >= gamma->morphisms()) throw PreconditionError("arrow index out of range");
    Scalar& s = terms[f];
    s += c;
    if (s == 0) terms.erase(f);
  }
};

inline AlgebraElement arrow_element(GroupoidPtr g, int f) {
  AlgebraElement a{std::move(g), {}};
  a.add(f, 1);
  return a;
}

// 1 = sum of identities.
inline AlgebraElement algebra_unit(GroupoidPtr g) {
  AlgebraElement a{g, {}};
  for (int x = 0; x < g->objects(); ++x) a.add(g->id(x), 1);
  return a;
}

inline AlgebraElement algebra_add(AlgebraElement const& a, AlgebraElement const& b) {
  if (a.gamma != b.gamma) throw PreconditionError("elements of different groupoid algebras");
  AlgebraElement r = a;
  for (auto const& [f, c] : b.terms) r.add(f, c);
  return r;
}

// (x -a-> y)(x' -b-> y') = delta(y, x') (x -a*b-> y')
inline AlgebraElement algebra_mul(AlgebraElement const& a, AlgebraElement const& b) {
  if (a.gamma != b.gamma) throw PreconditionError("elements of different groupoid algebras");
  Groupoid const& g = *a.gamma;
  AlgebraElement r{a.gamma, {}};
  for (auto const& [f, c] : a.terms)
    for (auto const& [h, d] : b.terms)
      if (g.composable(f, h)) r.add(g.compose(f, h), c * d);
  return r;
}

// (a -g-> b)* = (b -g^-1-> a); conjugation is trivial over the rationals.
inline AlgebraElement star(AlgebraElement const& a) {
  AlgebraElement r{a.gamma, {}};
  for (auto const& [f, c] : a.terms) r.add(a.gamma->inv(f), c);
  return r;
}

// Element of the n-fold tensor power of the groupoid algebra.
struct TensorElement {
  GroupoidPtr gamma;
  int factors = 0;
  std::map<std::vector<int>, Scalar> terms;

  bool operator==(TensorElement const& o) const {
    return gamma == o.gamma && factors == o.factors && terms == o.terms;
  }
  bool operator!=(TensorElement const& o) const { return !(*this == o); }

  void add(std::vector<int> const& k, Scalar const& c) {
    if (static_cast<int>(k.size()) != factors) throw PreconditionError("tensor factor count mismatch");
    Scalar& s = terms[k];
    s += c;
    if (s == 0) terms.erase(k);
  }
};

inline TensorElement tensor_unit(GroupoidPtr g, int factors) {
  TensorElement t{g, factors, {}};
  std::vector<int> idx(factors, 0);
  int n = g->objects();
  if (n == 0) return t;
  while (true) {
    std::vector<int> k(factors);
    for (int i = 0; i < factors; ++i) k[i] = g->id(idx[i]);
    t.add(k, 1);
    int p = factors - 1;
    while (p >= 0 && ++idx[p] == n) idx[p--] = 0;
    if (p < 0) break;
  }
  return t;
}

inline TensorElement tensor_mul(TensorElement const& a, TensorElement const& b) {
  if (a.gamma != b.gamma || a.factors != b.factors)
    throw PreconditionError("tensor elements do not match");
  Groupoid const& g = *a.gamma;
  std::map<std::vector<int>, std::vector<std::pair<std::vector<int> const*, Scalar const*>>> by_src;
  for (auto const& [k, c] : b.terms) {
    std::vector<int> s(k.size());
    for (std::size_t i = 0; i < k.size(); ++i) s[i] = g.src(k[i]);
    by_src[s].push_back({&k, &c});
  }
  TensorElement r{a.gamma, a.factors, {}};
  for (auto const& [k, c] : a.terms) {
    std::vector<int> t(k.size());
    for (std::size_t i = 0; i < k.size(); ++i) t[i] = g.tgt(k[i]);
    auto it = by_src.find(t);
    if (it == by_src.end()) continue;
    for (auto const& [kb, cb] : it->second) {
      std::vector<int> m(k.size());
      for (std::size_t i = 0; i < k.size(); ++i) m[i] = g.compose(k[i], (*kb)[i]);
      r.add(m, c * *cb);
    }
  }
  return r;
}

// Place a two-factor element into factors (i, j) of an n-fold tensor, with
// the unit in the remaining factors.
inline TensorElement embed(TensorElement const& t, int n, int i, int j) {
  TensorElement r{t.gamma, n, {}};
  TensorElement one = tensor_unit(t.gamma, n - 2);
  for (auto const& [k, c] : t.terms)
    for (auto const& [u, d] : one.terms) {
      std::vector<int> m(n);
      std::size_t p = 0;
      for (int f = 0; f < n; ++f) {
        if (f == i) m[f] = k[0];
        else if (f == j) m[f] = k[1];
        else m[f] = u[p++];
      }
      r.add(m, c * d);
    }
  return r;
}

// R = sum_{x,y} L(x,y) (x) R(x,y)
inline TensorElement r_element(Bikoid const& k) {
  TensorElement t{k.gamma, 2, {}};
  for (int x = 0; x < k.objects(); ++x)
    for (int y = 0; y < k.objects(); ++y) t.add({k.L(x, y), k.R(x, y)}, 1);
  return t;
}

// R^-1 = sum_{x,y} L(x,y)^-1 (x) R(x,y)^-1, the term sitting at (x\y, y/x).
inline TensorElement r_inverse(Bikoid const& k) {
  Groupoid const& g = *k.gamma;
  TensorElement t{k.gamma, 2, {}};
  for (int x = 0; x < k.objects(); ++x)
    for (int y = 0; y < k.objects(); ++y) t.add({g.inv(k.L(x, y)), g.inv(k.R(x, y))}, 1);
  return t;
}

inline Report check_r_invertible(Bikoid const& k) {
  TensorElement r = r_element(k), ri = r_inverse(k), one = tensor_unit(k.gamma, 2);
  if (tensor_mul(r, ri) != one) return Report::fail("R R^-1 = 1");
  if (tensor_mul(ri, r) != one) return Report::fail("R^-1 R = 1");
  return Report::pass();
}

inline Report check_ybe(Bikoid const& k) {
  TensorElement r = r_element(k);
  TensorElement r12 = embed(r, 3, 0, 1), r13 = embed(r, 3, 0, 2), r23 = embed(r, 3, 1, 2);
  TensorElement lhs = tensor_mul(tensor_mul(r12, r13), r23);
  TensorElement rhs = tensor_mul(tensor_mul(r23, r13), r12);
  if (lhs != rhs) {
    std::vector<long> w;
    for (auto const& [key, c] : lhs.terms)
      if (!rhs.terms.count(key) || rhs.terms.at(key) != c) {
        w.assign(key.begin(), key.end());
        break;
      }
    if (w.empty())
      for (auto const& [key, c] : rhs.terms)
        if (!lhs.terms.count(key)) {
          w.assign(key.begin(), key.end());
          break;
        }
    return Report::fail("R12 R13 R23 = R23 R13 R12", w);
  }
  return Report::pass();
}

inline Report check_welded_r(Bikoid const& k) {
  TensorElement r = r_element(k);
  TensorElement r13 = embed(r, 3, 0, 2), r23 = embed(r, 3, 1, 2);
  if (tensor_mul(r13, r23) != tensor_mul(r23, r13)) return Report::fail("R13 R23 = R23 R13");
  return Report::pass();
}

// Right module over C(Gamma): column i of act(f) is e_i . f, so
// act(f * g) = act(g) act(f).
struct Representation {
  GroupoidPtr gamma;
  Index dim = 0;
  std::vector<LinearOperator> act;
  std::string kind;           // "right-regular", "object-regular" or free text
  bool orthonormal = false;   // basis is orthonormal for the inner product

  LinearOperator const& op(int f) const { return act[f]; }
};

inline Representation right_regular(GroupoidPtr g) {
  Representation rep{g, g->morphisms(), {}, "right-regular", true};
  for (int f = 0; f < g->morphisms(); ++f) {
    LinearOperator m(rep.dim, rep.dim);
    for (int h = 0; h < g->morphisms(); ++h)
      if (g->composable(h, f)) m.add(g->compose(h, f), h, 1);
    rep.act.push_back(std::move(m));
  }
  return rep;
}

// Basis C(Gamma_0); x . (a -> b) = delta(a, x) b.
inline Representation object_regular(GroupoidPtr g) {
  Representation rep{g, g->objects(), {}, "object-regular", true};
  for (int f = 0; f < g->morphisms(); ++f) {
    LinearOperator m(rep.dim, rep.dim);
    m.add(g->tgt(f), g->src(f), 1);
    rep.act.push_back(std::move(m));
  }
  return rep;
}

// Span of the objects in the connected component of x.
inline std::vector<int> component(Groupoid const& g, int x) {
  std::vector<int> r;
  for (int f : g.out(x)) r.push_back(g.tgt(f));
  std::sort(r.begin(), r.end());
  r.erase(std::unique(r.begin(), r.end()), r.end());
  return r;
}

inline Report verify_representation(Representation const& rep) {
  Groupoid const& g = *rep.gamma;
  if (static_cast<int>(rep.act.size()) != g.morphisms()) return Report::fail("shape");
  for (int f = 0; f < g.morphisms(); ++f)
    if (rep.act[f].rows() != rep.dim || rep.act[f].cols() != rep.dim) return Report::fail("shape", {f});
  LinearOperator sum(rep.dim, rep.dim);
  for (int x = 0; x < g.objects(); ++x) sum = sum + rep.act[g.id(x)];
  if (sum != LinearOperator::identity(rep.dim)) return Report::fail("unit", {}, "sum of identities is not 1");
  for (int f = 0; f < g.morphisms(); ++f)
    for (int h = 0; h < g.morphisms(); ++h) {
      LinearOperator p = rep.act[h] * rep.act[f];
      if (g.composable(f, h)) {
        if (p != rep.act[g.compose(f, h)]) return Report::fail("multiplicativity", {f, h});
      } else if (!p.is_zero()) {
        return Report::fail("orthogonality", {f, h}, "non-composable product is not zero");
      }
    }
  return Report::pass();
}

// act(f^-1) is the adjoint of act(f) for the orthonormal basis.
inline Report verify_unitary(Representation const& rep) {
  if (!rep.orthonormal) return Report::fail("unitary", {}, "no orthonormal basis declared");
  Groupoid const& g = *rep.gamma;
  for (int f = 0; f < g.morphisms(); ++f)
    if (rep.act[g.inv(f)] != rep.act[f].transpose()) return Report::fail("adjoint", {f});
  return Report::pass();
}

// Quantum double structure on C(AUT(G)) with (x -g-> g x g^-1):
//   Delta(x -g->) = sum_{yz=x} (y -g->) (x) (z -g->)
//   eps(x -g->) = delta(x, 1)
//   S(x -g->) = (g x^-1 g^-1 -g^-1->)
struct QuantumDouble {
  FiniteGroup grp;
  GroupoidPtr gamma;

  int arrow(int x, int g) const { return gamma->arrow(x, g); }
  int obj(int f) const { return gamma->src(f); }
  int lab(int f) const { return gamma->label(f); }

  TensorElement coproduct(int f) const {
    TensorElement t{gamma, 2, {}};
    int x = obj(f), g = lab(f);
    for (int y = 0; y < grp.order(); ++y) t.add({arrow(y, g), arrow(grp.mul(grp.inv(y), x), g)}, 1);
    return t;
  }
  Scalar counit(int f) const { return obj(f) == grp.id() ? 1 : 0; }
  int antipode(int f) const {
    int x = obj(f), g = lab(f);
    return arrow(grp.mul(g, grp.inv(x), grp.inv(g)), grp.inv(g));
  }

  // sum (g -h^-1->) (x) (h -1->)
  TensorElement r_matrix() const {
    TensorElement t{gamma, 2, {}};
    for (int g = 0; g < grp.order(); ++g)
      for (int h = 0; h < grp.order(); ++h) t.add({arrow(g, grp.inv(h)), arrow(h, grp.id())}, 1);
    return t;
  }
};

inline QuantumDouble quantum_double(FiniteGroup const& g) {
  return {g, std::make_shared<const Groupoid>(aut_groupoid(g))};
}

inline Report verify_quantum_double(QuantumDouble const& q) {
  Groupoid const& g = *q.gamma;
  int m = g.morphisms();
  auto apply_left = [&](TensorElement const& t, auto&& fn) {
    // fn maps one arrow to a tensor element; applied on factor 0.
    TensorElement r{q.gamma, t.factors + 1, {}};
    for (auto const& [k, c] : t.terms) {
      TensorElement d = fn(k[0]);
      for (auto const& [dk, dc] : d.terms) {
        std::vector<int> key = dk;
        key.insert(key.end(), k.begin() + 1, k.end());
        r.add(key, c * dc);
      }
    }
    return r;
  };
  auto apply_right = [&](TensorElement const& t, auto&& fn) {
    TensorElement r{q.gamma, t.factors + 1, {}};
    for (auto const& [k, c] : t.terms) {
      TensorElement d = fn(k.back());
      for (auto const& [dk, dc] : d.terms) {
        std::vector<int> key(k.begin(), k.end() - 1);
        key.insert(key.end(), dk.begin(), dk.end());
        r.add(key, c * dc);
      }
    }
    return r;
  };
  auto delta = [&](int f) { return q.coproduct(f); };
  AlgebraElement one = algebra_unit(q.gamma);
  for (int f = 0; f < m; ++f) {
    TensorElement d = q.coproduct(f);
    if (apply_left(d, delta) != apply_right(d, delta)) return Report::fail("coassociativity", {f});
    AlgebraElement l{q.gamma, {}}, r{q.gamma, {}}, sl{q.gamma, {}}, sr{q.gamma, {}};
    for (auto const& [k, c] : d.terms) {
      l.add(k[1], c * q.counit(k[0]));
      r.add(k[0], c * q.counit(k[1]));
      sl = algebra_add(sl, algebra_mul(arrow_element(q.gamma, q.antipode(k[0])), arrow_element(q.gamma, k[1])));
      sr = algebra_add(sr, algebra_mul(arrow_element(q.gamma, k[0]), arrow_element(q.gamma, q.antipode(k[1]))));
    }
    if (l != arrow_element(q.gamma, f) || r != arrow_element(q.gamma, f)) return Report::fail("counit", {f});
    AlgebraElement eps1{q.gamma, {}};
    if (q.counit(f) != 0) eps1 = one;
    if (sl != eps1 || sr != eps1) return Report::fail("antipode", {f});
    for (int h = 0; h < m; ++h) {
      TensorElement dp{q.gamma, 2, {}};
      Scalar ep = 0;
      if (g.composable(f, h)) {
        dp = q.coproduct(g.compose(f, h));
        ep = q.counit(g.compose(f, h));
      }
      if (tensor_mul(q.coproduct(f), q.coproduct(h)) != dp) return Report::fail("coproduct multiplicative", {f, h});
      if (ep != q.counit(f) * q.counit(h)) return Report::fail("counit multiplicative", {f, h});
    }
  }
  TensorElement d1{q.gamma, 2, {}};
  for (int x = 0; x < g.objects(); ++x)
    for (auto const& [k, c] : q.coproduct(g.id(x)).terms) d1.add(k, c);
  if (d1 != tensor_unit(q.gamma, 2)) return Report::fail("coproduct unital");
  return Report::pass();
}

}  // namespace bikoid
