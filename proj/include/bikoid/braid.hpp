#pragma once

#include <map>
#include <memory>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "bikoid/bikoid.hpp"
#include "bikoid/representation.hpp"
#include "bikoid/word.hpp"

namespace bikoid {

using RepPtr = std::shared_ptr<const Representation>;
using Coloring = std::vector<RepPtr>;

inline constexpr Index kDefaultDimCap = Index(1) << 22;

// Two-strand operator from A (x) B to B (x) A.  Basis index u * dim(B) + v
// on the domain and v' * dim(A) + u' on the codomain.
//   S+ : u (x) v -> sum_{x,y} v.R(x,y) (x) u.L(x,y)
//   S- : u (x) v -> sum_{x,y} v.L(x,y)^-1 (x) u.R(x,y)^-1
//   V  : u (x) v -> v (x) u
inline LinearOperator local_operator(Gen kind, Bikoid const& k, Representation const& A,
                                     Representation const& B) {
  Index da = A.dim, db = B.dim;
  LinearOperator m(da * db, da * db);
  if (kind == Gen::V) {
    for (Index u = 0; u < da; ++u)
      for (Index v = 0; v < db; ++v) m.add(v * da + u, u * db + v, 1);
    return m;
  }
  Groupoid const& g = *k.gamma;
  std::vector<SparseVec> cols(da * db);
  for (int x = 0; x < k.objects(); ++x)
    for (int y = 0; y < k.objects(); ++y) {
      // first factor acts on u in A, second on v in B
      int fa = kind == Gen::SPlus ? k.L(x, y) : g.inv(k.R(x, y));
      int fb = kind == Gen::SPlus ? k.R(x, y) : g.inv(k.L(x, y));
      LinearOperator const& ma = A.op(fa);
      LinearOperator const& mb = B.op(fb);
      for (Index u = 0; u < da; ++u) {
        SparseVec const& cu = ma.column(u);
        if (cu.empty()) continue;
        for (Index v = 0; v < db; ++v) {
          SparseVec const& cv = mb.column(v);
          if (cv.empty()) continue;
          SparseVec& out = cols[u * db + v];
          for (auto const& [rv, sv] : cv)
            for (auto const& [ru, su] : cu) out.push_back({rv * da + ru, sv * su});
        }
      }
    }
  for (Index c = 0; c < da * db; ++c) m.set_column(c, std::move(cols[c]));
  return m;
}

struct ColoredOperator {
  LinearOperator op;
  Coloring domain;
  Coloring codomain;
};

inline Index tensor_dim(Coloring const& c, Index cap) {
  Index d = 1;
  for (auto const& r : c) {
    if (r->dim <= 0) throw PreconditionError("representation of dimension zero");
    if (d > cap / r->dim) throw PreconditionError("tensor power exceeds the dimension cap");
    d *= r->dim;
  }
  if (d > cap) throw PreconditionError("tensor power exceeds the dimension cap");
  return d;
}

// Operator of the functor on the word w.  Generators act top to bottom, so
// the result for w1 w2 is eval(w2) eval(w1).
inline ColoredOperator eval_colored(BraidWord const& w, Bikoid const& k, Coloring const& colors,
                                    Index cap = kDefaultDimCap) {
  if (static_cast<int>(colors.size()) != w.n) throw PreconditionError("coloring length differs from strand count");
  for (auto const& r : colors)
    if (r->gamma != k.gamma) throw PreconditionError("representation and bikoid use different groupoids");
  Index total = tensor_dim(colors, cap);

  struct Step {
    LinearOperator const* local;
    Index block, low;  // low = product of dims right of the pair
    Index dnext;       // dim at position a+1 on the domain side
  };
  std::map<std::tuple<int, Representation const*, Representation const*>, LinearOperator> cache;
  std::vector<Step> steps;
  Coloring cur = colors;
  for (auto const& t : w.tokens) {
    int i = t.a - 1;
    auto key = std::make_tuple(static_cast<int>(t.kind), cur[i].get(), cur[i + 1].get());
    auto it = cache.find(key);
    if (it == cache.end()) it = cache.emplace(key, local_operator(t.kind, k, *cur[i], *cur[i + 1])).first;
    Index low = 1;
    for (std::size_t j = i + 2; j < cur.size(); ++j) low *= cur[j]->dim;
    steps.push_back({&it->second, cur[i]->dim * cur[i + 1]->dim * low, low, cur[i + 1]->dim});
    std::swap(cur[i], cur[i + 1]);
  }

  LinearOperator op(total, total);
  for (Index c = 0; c < total; ++c) {
    SparseVec v{{c, Scalar(1)}};
    for (Step const& s : steps) {
      SparseVec nv;
      for (auto const& [idx, val] : v) {
        Index hi = idx / s.block, rest = idx % s.block;
        Index pair = rest / s.low, lo = rest % s.low;
        for (auto const& [row, lv] : s.local->column(pair)) nv.push_back({hi * s.block + row * s.low + lo, val * lv});
      }
      normalize(nv);
      v = std::move(nv);
    }
    op.set_column(c, std::move(v));
  }
  return {std::move(op), colors, cur};
}

inline LinearOperator eval_word(BraidWord const& w, Bikoid const& k, RepPtr const& rep,
                                Index cap = kDefaultDimCap) {
  return eval_colored(w, k, Coloring(w.n, rep), cap).op;
}

// Basis index <-> digit tuple for a uniform tensor power.
inline std::vector<long> decode_index(Index idx, Index dim, int n) {
  std::vector<long> d(n);
  for (int i = n - 1; i >= 0; --i) {
    d[i] = static_cast<long>(idx % dim);
    idx /= dim;
  }
  return d;
}

inline Index encode_index(std::vector<long> const& d, Index dim) {
  Index r = 0;
  for (long x : d) r = r * dim + x;
  return r;
}

struct RelationResult {
  std::string relation;
  int n = 0;
  bool pass = false;
  bool required = true;
  std::vector<long> witness;  // basis tuple where the two sides first differ
  std::string lhs, rhs;
};

inline RelationResult compare_words(std::string name, BraidWord const& a, BraidWord const& b,
                                    Bikoid const& k, RepPtr const& rep, bool required, Index cap) {
  RelationResult r{std::move(name), a.n, true, required, {}, to_string(a), to_string(b)};
  LinearOperator ea = eval_word(a, k, rep, cap), eb = eval_word(b, k, rep, cap);
  Index j = ea.first_difference(eb);
  if (j >= 0) {
    r.pass = false;
    r.witness = decode_index(j, rep->dim, a.n);
  }
  return r;
}

inline std::string gen_text(Gen g, int a) {
  return to_string(BraidWord{2, {{g, a}}});
}

// Relations of the welded braid group at strand count n.  WIII is always
// evaluated; it only counts as required when `welded` is set.
inline std::vector<RelationResult> verify_relations(Bikoid const& k, RepPtr const& rep, int n, bool welded,
                                                    Index cap = kDefaultDimCap) {
  if (n < 2) throw PreconditionError("relations need at least two strands");
  std::vector<RelationResult> out;
  auto word = [&](std::vector<Token> t) { return BraidWord{n, std::move(t)}; };
  BraidWord id{n, {}};
  const Gen P = Gen::SPlus, M = Gen::SMinus, V = Gen::V;
  for (int a = 1; a <= n - 1; ++a) {
    std::string s = "[" + std::to_string(a) + "]";
    out.push_back(compare_words("VII" + s, word({{V, a}, {V, a}}), id, k, rep, true, cap));
    out.push_back(compare_words("RII+" + s, word({{P, a}, {M, a}}), id, k, rep, true, cap));
    out.push_back(compare_words("RII-" + s, word({{M, a}, {P, a}}), id, k, rep, true, cap));
  }
  std::vector<std::pair<Gen, Gen>> local = {{V, V}, {V, P}, {V, M}, {P, M}, {M, M}, {P, P}};
  for (int a = 1; a <= n - 1; ++a)
    for (int b = 1; b <= n - 1; ++b) {
      if (std::abs(a - b) < 2) continue;
      for (auto [x, y] : local) {
        std::string s = "Locality[" + gen_text(x, a) + "," + gen_text(y, b) + "]";
        out.push_back(compare_words(s, word({{x, a}, {y, b}}), word({{y, b}, {x, a}}), k, rep, true, cap));
      }
    }
  for (int a = 1; a <= n - 2; ++a) {
    std::string s = "[" + std::to_string(a) + "]";
    int b = a + 1;
    out.push_back(compare_words("RIII" + s, word({{P, a}, {P, b}, {P, a}}), word({{P, b}, {P, a}, {P, b}}), k,
                                rep, true, cap));
    out.push_back(compare_words("VIII" + s, word({{V, a}, {V, b}, {V, a}}), word({{V, b}, {V, a}, {V, b}}), k,
                                rep, true, cap));
    out.push_back(compare_words("MIII" + s, word({{V, a}, {V, b}, {P, a}}), word({{P, b}, {V, a}, {V, b}}), k,
                                rep, true, cap));
    out.push_back(compare_words("WIII" + s, word({{V, a}, {P, b}, {P, a}}), word({{P, b}, {P, a}, {V, b}}), k,
                                rep, welded, cap));
  }
  return out;
}

inline bool all_required_pass(std::vector<RelationResult> const& rs) {
  for (auto const& r : rs)
    if (r.required && !r.pass) return false;
  return true;
}

// The reversed welded move S+1 S+2 V1 = V2 S+1 S+2 at n = 3.
inline RelationResult check_forbidden_reverse(Bikoid const& k, RepPtr const& rep, Index cap = kDefaultDimCap) {
  BraidWord a = parse_word("S+1 S+2 V1", 3), b = parse_word("V2 S+1 S+2", 3);
  return compare_words("forbidden", a, b, k, rep, false, cap);
}

}  // namespace bikoid
