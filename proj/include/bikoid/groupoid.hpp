#pragma once

#include <string>
#include <vector>

#include "bikoid/group.hpp"
#include "bikoid/perm.hpp"
#include "bikoid/report.hpp"

namespace bikoid {

// Finite groupoid.  Composition is diagrammatic: compose(f, g) = f * g is
// defined when tgt(f) == src(g).  Morphisms leaving an object are kept in a
// list so the composition table only stores composable pairs.
class Groupoid {
 public:
  Groupoid() = default;

  // `comp(f, g)` is called for every composable pair and must return the
  // composite's index.
  template <class Comp>
  Groupoid(int objects, std::vector<int> src, std::vector<int> tgt, Comp comp)
      : nobj_(objects), src_(std::move(src)), tgt_(std::move(tgt)) {
    require(src_.size() == tgt_.size(), "source/target tables differ in size");
    out_.assign(nobj_, {});
    local_.assign(src_.size(), 0);
    for (int f = 0; f < morphisms(); ++f) {
      require(src_[f] >= 0 && src_[f] < nobj_ && tgt_[f] >= 0 && tgt_[f] < nobj_,
              "morphism endpoint out of range");
      local_[f] = static_cast<int>(out_[src_[f]].size());
      out_[src_[f]].push_back(f);
    }
    comp_.assign(morphisms(), {});
    for (int f = 0; f < morphisms(); ++f) {
      auto const& next = out_[tgt_[f]];
      comp_[f].resize(next.size());
      for (std::size_t j = 0; j < next.size(); ++j) {
        int h = comp(f, next[j]);
        require(h >= 0 && h < morphisms(), "composite out of range");
        comp_[f][j] = h;
      }
    }
    ident_.assign(nobj_, -1);
    for (int x = 0; x < nobj_; ++x)
      for (int f : out_[x])
        if (tgt_[f] == x && compose(f, f) == f) {
          ident_[x] = f;
          break;
        }
    inv_.assign(morphisms(), -1);
    for (int f = 0; f < morphisms(); ++f) {
      if (ident_[src_[f]] < 0) continue;
      for (int h : out_[tgt_[f]])
        if (tgt_[h] == src_[f] && compose(f, h) == ident_[src_[f]]) {
          inv_[f] = h;
          break;
        }
    }
  }

  int objects() const { return nobj_; }
  int morphisms() const { return static_cast<int>(src_.size()); }
  int src(int f) const { return src_[f]; }
  int tgt(int f) const { return tgt_[f]; }
  int id(int x) const { return ident_[x]; }
  int inv(int f) const { return inv_[f]; }
  bool composable(int f, int g) const { return tgt_[f] == src_[g]; }
  std::vector<int> const& out(int x) const { return out_[x]; }

  int compose(int f, int g) const {
    if (tgt_[f] != src_[g]) throw CompositionError("morphisms not composable", 0);
    return comp_[f][local_[g]];
  }

  std::vector<int> hom(int x, int y) const {
    std::vector<int> r;
    for (int f : out_[x])
      if (tgt_[f] == y) r.push_back(f);
    return r;
  }

  // Action groupoid data, when present: morphism (x -g-> g.x) has index
  // x * label_order + g.
  int label_order() const { return label_order_; }
  int label(int f) const { return f % label_order_; }
  int arrow(int x, int g) const { return x * label_order_ + g; }
  bool is_action_groupoid() const { return label_order_ > 0; }
  void set_label_order(int n) { label_order_ = n; }

  std::vector<std::string> object_labels;
  std::vector<std::string> arrow_labels;

 private:
  int nobj_ = 0;
  std::vector<int> src_, tgt_;
  std::vector<std::vector<int>> out_;
  std::vector<int> local_;
  std::vector<std::vector<int>> comp_;
  std::vector<int> ident_, inv_;
  int label_order_ = 0;
};

inline Report verify_groupoid(Groupoid const& g) {
  for (int x = 0; x < g.objects(); ++x) {
    if (g.id(x) < 0) return Report::fail("identity", {x});
    int e = g.id(x);
    if (g.src(e) != x || g.tgt(e) != x) return Report::fail("identity", {x});
  }
  for (int f = 0; f < g.morphisms(); ++f) {
    if (g.compose(g.id(g.src(f)), f) != f || g.compose(f, g.id(g.tgt(f))) != f)
      return Report::fail("unit law", {f});
    int h = g.inv(f);
    if (h < 0) return Report::fail("inverse", {f});
    if (g.compose(f, h) != g.id(g.src(f)) || g.compose(h, f) != g.id(g.tgt(f)))
      return Report::fail("inverse", {f});
    for (int a : g.out(g.tgt(f))) {
      int fa = g.compose(f, a);
      if (g.src(fa) != g.src(f) || g.tgt(fa) != g.tgt(a))
        return Report::fail("endpoints", {f, a});
      for (int b : g.out(g.tgt(a)))
        if (g.compose(fa, b) != g.compose(f, g.compose(a, b)))
          return Report::fail("associativity", {f, a, b});
    }
  }
  return Report::pass();
}

// Objects are the points of the space; arrows (x -g-> g.x) compose as
// (x -g-> g.x) * (g.x -h-> hg.x) = (x -hg-> hg.x).
inline Groupoid action_groupoid(FiniteGroup const& g, int space, GroupAction const& action) {
  if (action.space_size() != space || !verify_action(g, action))
    throw PreconditionError("action groupoid needs a verified left action");
  int n = g.order();
  std::vector<int> src, tgt;
  for (int x = 0; x < space; ++x)
    for (int a = 0; a < n; ++a) {
      src.push_back(x);
      tgt.push_back(action(a, x));
    }
  Groupoid gd(space, src, tgt, [&](int f, int h) {
    return (f / n) * n + g.mul(h % n, f % n);
  });
  gd.set_label_order(n);
  for (int x = 0; x < space; ++x) gd.object_labels.push_back(std::to_string(x));
  for (int f = 0; f < gd.morphisms(); ++f) gd.arrow_labels.push_back(g.label(f % n));
  return gd;
}

inline Groupoid aut_groupoid(FiniteGroup const& g) {
  Groupoid gd = action_groupoid(g, g.order(), conjugation_action(g));
  gd.object_labels = g.labels().empty() ? gd.object_labels : g.labels();
  return gd;
}

// Map between groupoids.  For the inclusions used in transport the object map
// is a bijection and the morphism map is injective.
struct GroupoidIso {
  std::vector<int> obj_map;
  std::vector<int> mor_map;
};

inline Report verify_groupoid_map(Groupoid const& dom, Groupoid const& cod,
                                  GroupoidIso const& m, bool require_bijective_objects = true) {
  if (static_cast<int>(m.obj_map.size()) != dom.objects() ||
      static_cast<int>(m.mor_map.size()) != dom.morphisms())
    return Report::fail("shape");
  std::vector<char> hit(cod.objects(), 0);
  for (int x = 0; x < dom.objects(); ++x) {
    int y = m.obj_map[x];
    if (y < 0 || y >= cod.objects() || hit[y]) return Report::fail("object map injective", {x});
    hit[y] = 1;
  }
  if (require_bijective_objects && dom.objects() != cod.objects())
    return Report::fail("object map surjective");
  std::vector<char> mhit(cod.morphisms(), 0);
  for (int f = 0; f < dom.morphisms(); ++f) {
    int h = m.mor_map[f];
    if (h < 0 || h >= cod.morphisms() || mhit[h]) return Report::fail("morphism map injective", {f});
    mhit[h] = 1;
    if (cod.src(h) != m.obj_map[dom.src(f)] || cod.tgt(h) != m.obj_map[dom.tgt(f)])
      return Report::fail("endpoints", {f});
  }
  for (int x = 0; x < dom.objects(); ++x)
    if (m.mor_map[dom.id(x)] != cod.id(m.obj_map[x])) return Report::fail("identities", {x});
  for (int f = 0; f < dom.morphisms(); ++f)
    for (int g : dom.out(dom.tgt(f)))
      if (m.mor_map[dom.compose(f, g)] != cod.compose(m.mor_map[f], m.mor_map[g]))
        return Report::fail("composition", {f, g});
  return Report::pass();
}

// Inverse of a map that is bijective on objects and on morphisms.
inline GroupoidIso inverse_iso(GroupoidIso const& m, int cod_objects, int cod_morphisms) {
  GroupoidIso r;
  r.obj_map.assign(cod_objects, -1);
  r.mor_map.assign(cod_morphisms, -1);
  for (std::size_t x = 0; x < m.obj_map.size(); ++x) r.obj_map[m.obj_map[x]] = static_cast<int>(x);
  for (std::size_t f = 0; f < m.mor_map.size(); ++f) r.mor_map[m.mor_map[f]] = static_cast<int>(f);
  for (int v : r.obj_map)
    if (v < 0) throw PreconditionError("map is not bijective on objects");
  for (int v : r.mor_map)
    if (v < 0) throw PreconditionError("map is not bijective on morphisms");
  return r;
}

// Morphism of the wreath product groupoid Gamma^n x| Sigma_n.  The arrow
// (gamma, f) goes from src(gamma) to f^-1 |> tgt(gamma), where
// (f |> x)_i = x_{f(i)}.
struct WreathMorphism {
  std::vector<int> arrows;
  Perm perm;

  bool operator==(WreathMorphism const& o) const {
    return arrows == o.arrows && perm == o.perm;
  }
  bool operator!=(WreathMorphism const& o) const { return !(*this == o); }
};

inline std::vector<int> wreath_source(Groupoid const& g, WreathMorphism const& w) {
  std::vector<int> s;
  for (int f : w.arrows) s.push_back(g.src(f));
  return s;
}

inline std::vector<int> wreath_target(Groupoid const& g, WreathMorphism const& w) {
  std::vector<int> t;
  for (int f : w.arrows) t.push_back(g.tgt(f));
  return perm_act(perm_inverse(w.perm), t);
}

inline WreathMorphism wreath_identity(Groupoid const& g, std::vector<int> const& objs) {
  WreathMorphism w;
  for (int x : objs) w.arrows.push_back(g.id(x));
  w.perm = perm_identity(static_cast<int>(objs.size()));
  return w;
}

// (gamma, f) * (phi, g) = (gamma * (f |> phi), f.g)
inline WreathMorphism wreath_compose(WreathMorphism const& a, WreathMorphism const& b,
                                     Groupoid const& gamma) {
  if (a.arrows.size() != b.arrows.size())
    throw CompositionError("wreath morphisms have different strand counts", -1);
  std::vector<int> moved = perm_act(a.perm, b.arrows);
  WreathMorphism r;
  r.perm = perm_dot(a.perm, b.perm);
  for (std::size_t i = 0; i < moved.size(); ++i) {
    if (gamma.tgt(a.arrows[i]) != gamma.src(moved[i]))
      throw CompositionError("wreath morphisms not composable at strand " +
                                 std::to_string(i + 1),
                             static_cast<int>(i));
    r.arrows.push_back(gamma.compose(a.arrows[i], moved[i]));
  }
  return r;
}

inline WreathMorphism wreath_inverse(WreathMorphism const& a, Groupoid const& gamma) {
  std::vector<int> inv;
  for (int f : a.arrows) inv.push_back(gamma.inv(f));
  Perm fi = perm_inverse(a.perm);
  return {perm_act(fi, inv), fi};
}

}  // namespace bikoid
