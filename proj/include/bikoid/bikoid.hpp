#pragma once

#include <memory>
#include <string>
#include <vector>

#include "bikoid/birack.hpp"
#include "bikoid/group.hpp"
#include "bikoid/groupoid.hpp"
#include "bikoid/report.hpp"
#include "bikoid/word.hpp"

namespace bikoid {

using GroupoidPtr = std::shared_ptr<const Groupoid>;

// Bikoid on a finite groupoid: holonomy arrows L(x,y): x -> x\y and
// R(x,y): y -> y/x for every pair of objects.  The lower birack is read off
// the targets.
struct Bikoid {
  GroupoidPtr gamma;
  Table l_map;
  Table r_map;
  std::string name;

  int objects() const { return gamma->objects(); }
  int L(int x, int y) const { return l_map[x][y]; }
  int R(int x, int y) const { return r_map[x][y]; }
  int under(int x, int y) const { return gamma->tgt(l_map[x][y]); }  // x\y
  int over(int y, int x) const { return gamma->tgt(r_map[x][y]); }   // y/x

  Birack lower() const {
    int n = objects();
    Table ov(n, std::vector<int>(n)), un(n, std::vector<int>(n));
    for (int x = 0; x < n; ++x)
      for (int y = 0; y < n; ++y) ov[x][y] = over(y, x), un[x][y] = under(x, y);
    return {ov, un};
  }
};

inline Report check_bikoid_shape(Bikoid const& k) {
  int n = k.objects();
  if (static_cast<int>(k.l_map.size()) != n || static_cast<int>(k.r_map.size()) != n)
    return Report::fail("shape");
  for (int x = 0; x < n; ++x) {
    if (static_cast<int>(k.l_map[x].size()) != n || static_cast<int>(k.r_map[x].size()) != n)
      return Report::fail("shape", {x});
    for (int y = 0; y < n; ++y) {
      int l = k.l_map[x][y], r = k.r_map[x][y];
      if (l < 0 || l >= k.gamma->morphisms() || r < 0 || r >= k.gamma->morphisms())
        return Report::fail("holonomy index out of range", {x, y});
    }
  }
  return Report::pass();
}

inline Report verify_bikoid(Bikoid const& k) {
  if (auto r = check_bikoid_shape(k); !r) return r;
  Groupoid const& g = *k.gamma;
  int n = k.objects();
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) {
      if (g.src(k.L(x, y)) != x) return Report::fail("src L(x,y) = x", {x, y});
      if (g.src(k.R(x, y)) != y) return Report::fail("src R(x,y) = y", {x, y});
    }
  Birack b = k.lower();
  if (auto r = verify_birack(b); !r) {
    r.check = "lower birack: " + r.check;
    return r;
  }
  auto bs = [&](int x, int y) { return b.backslash(x, y); };
  auto sl = [&](int y, int x) { return b.slash(y, x); };
  try {
    for (int x = 0; x < n; ++x)
      for (int y = 0; y < n; ++y)
        for (int z = 0; z < n; ++z) {
          int zy = sl(z, y);
          int xy = bs(x, y);
          int yx = sl(y, x);
          int lhs1 = g.compose(k.L(x, y), k.L(xy, z));
          int rhs1 = g.compose(k.L(x, zy), k.L(bs(x, zy), bs(y, z)));
          if (lhs1 != rhs1) return Report::fail("L L = L L", {x, y, z});
          int lhs2 = g.compose(k.R(x, y), k.L(yx, sl(z, xy)));
          int rhs2 = g.compose(k.L(y, z), k.R(bs(x, zy), bs(y, z)));
          if (lhs2 != rhs2) return Report::fail("R L = L R", {x, y, z});
          int lhs3 = g.compose(k.R(xy, z), k.R(yx, sl(z, xy)));
          int rhs3 = g.compose(k.R(y, z), k.R(x, zy));
          if (lhs3 != rhs3) return Report::fail("R R = R R", {x, y, z});
        }
  } catch (CompositionError const&) {
    return Report::fail("composability");
  }
  return Report::pass();
}

inline Report verify_welded_bikoid(Bikoid const& k) {
  if (auto r = verify_bikoid(k); !r) return r;
  Birack b = k.lower();
  if (auto r = verify_welded(b); !r) {
    r.check = "lower birack welded: " + r.check;
    return r;
  }
  Groupoid const& g = *k.gamma;
  int n = k.objects();
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      for (int z = 0; z < n; ++z) {
        if (k.L(x, z) != k.L(x, b.slash(z, y))) return Report::fail("L(x,z) = L(x,z/y)", {x, y, z});
        if (k.L(y, z) != k.L(y, b.slash(z, x))) return Report::fail("L(y,z) = L(y,z/x)", {x, y, z});
        int lhs = g.compose(k.R(x, z), k.R(y, b.slash(z, x)));
        int rhs = g.compose(k.R(y, z), k.R(x, b.slash(z, y)));
        if (lhs != rhs) return Report::fail("R R welded", {x, y, z});
      }
  return Report::pass();
}

// Birack on morphisms: gamma\phi = gamma * L(tgt gamma, tgt phi) and
// phi/gamma = phi * R(tgt gamma, tgt phi).
inline Birack upper_birack(Bikoid const& k) {
  Groupoid const& g = *k.gamma;
  int m = g.morphisms();
  Table ov(m, std::vector<int>(m)), un(m, std::vector<int>(m));
  for (int c = 0; c < m; ++c)
    for (int f = 0; f < m; ++f) {
      un[c][f] = g.compose(c, k.L(g.tgt(c), g.tgt(f)));
      ov[c][f] = g.compose(f, k.R(g.tgt(c), g.tgt(f)));
    }
  return {ov, un};
}

inline Essentiality is_essential_bikoid(Bikoid const& k) { return is_essential(upper_birack(k)); }

// Holonomies are all identities; the lower birack is trivial.
inline Bikoid trivial_bikoid(GroupoidPtr g) {
  int n = g->objects();
  Table l(n, std::vector<int>(n)), r(n, std::vector<int>(n));
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) l[x][y] = g->id(x), r[x][y] = g->id(y);
  return {g, l, r, "trivial"};
}

// X+_G on AUT(G): L(x,y) = (x -y^-1-> y^-1 x y), R(x,y) = (y -1-> y).
inline Bikoid finite_group_bikoid(FiniteGroup const& grp) {
  auto g = std::make_shared<const Groupoid>(aut_groupoid(grp));
  int n = grp.order();
  Table l(n, std::vector<int>(n)), r(n, std::vector<int>(n));
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) {
      l[x][y] = g->arrow(x, grp.inv(y));
      r[x][y] = g->arrow(y, grp.id());
    }
  return {g, l, r, "finite-group"};
}

// TRANS(G,A) = AUT(G x| A) with the abelian gr-group holonomies: the left
// strand carries (w^-1, 0) and the right strand (1, -(w^-1 |> a)) for
// objects x = (z,a), y = (w,b).
struct GrBikoid {
  Bikoid bikoid;
  SemidirectProduct product;
};

inline GrBikoid abelian_gr_bikoid(AbelianGrGroup const& gr) {
  if (auto r = verify_gr_group(gr); !r)
    throw PreconditionError("abelian gr-group fails verification: " + r.str());
  SemidirectProduct sp = semidirect_product(gr.g, gr.a, gr.action);
  auto g = std::make_shared<const Groupoid>(aut_groupoid(sp.group));
  int n = sp.group.order();
  Table l(n, std::vector<int>(n)), r(n, std::vector<int>(n));
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) {
      int a = sp.second(x);
      int w = sp.first(y);
      int wi = gr.g.inv(w);
      l[x][y] = g->arrow(x, sp.pair(wi, gr.a.id()));
      r[x][y] = g->arrow(y, sp.pair(gr.g.id(), gr.a.inv(gr.action(wi, a))));
    }
  return {{g, l, r, "gr"}, sp};
}

// Carry a bikoid along a groupoid map that is bijective on objects:
// L'(x',y') = m(L(m^-1 x', m^-1 y')) and likewise for R.
inline Bikoid transport(Bikoid const& k, GroupoidIso const& m, GroupoidPtr codomain) {
  int n = k.objects();
  if (static_cast<int>(m.obj_map.size()) != n || codomain->objects() != n)
    throw PreconditionError("transport needs a map bijective on objects");
  std::vector<int> back(n, -1);
  for (int x = 0; x < n; ++x) {
    int y = m.obj_map[x];
    if (y < 0 || y >= n || back[y] >= 0)
      throw PreconditionError("transport needs a map bijective on objects");
    back[y] = x;
  }
  Table l(n, std::vector<int>(n)), r(n, std::vector<int>(n));
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) {
      l[x][y] = m.mor_map[k.L(back[x], back[y])];
      r[x][y] = m.mor_map[k.R(back[x], back[y])];
    }
  return {codomain, l, r, k.name};
}

// X+(x,y) as the wreath morphism ((L(x,y), R(x,y)), t12) from (x,y) to
// (y/x, x\y).
inline WreathMorphism x_plus(Bikoid const& k, int x, int y) {
  return {{k.L(x, y), k.R(x, y)}, {1, 0}};
}

// X-(u,v) = X+(x,y)^-1 where (u,v) = (y/x, x\y).
inline WreathMorphism x_minus(Bikoid const& k, int u, int v) {
  int n = k.objects();
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      if (k.over(y, x) == u && k.under(x, y) == v) return wreath_inverse(x_plus(k, x, y), *k.gamma);
  throw PreconditionError("switch is not invertible");
}

// Evaluate a word in Gamma^n x| Sigma_n starting at the object tuple `objs`.
inline WreathMorphism wreath_word(Bikoid const& k, BraidWord const& w, std::vector<int> const& objs) {
  Groupoid const& g = *k.gamma;
  WreathMorphism acc = wreath_identity(g, objs);
  for (auto const& t : w.tokens) {
    std::vector<int> cur = wreath_target(g, acc);
    WreathMorphism step = wreath_identity(g, cur);
    int i = t.a - 1;
    WreathMorphism local;
    if (t.kind == Gen::SPlus) local = x_plus(k, cur[i], cur[i + 1]);
    else if (t.kind == Gen::SMinus) local = x_minus(k, cur[i], cur[i + 1]);
    else local = {{g.id(cur[i]), g.id(cur[i + 1])}, {1, 0}};
    step.arrows[i] = local.arrows[0];
    step.arrows[i + 1] = local.arrows[1];
    std::swap(step.perm[i], step.perm[i + 1]);
    acc = wreath_compose(acc, step, g);
  }
  return acc;
}

// Three-strand tower identities in Gamma^3 x| Sigma_3: the Reidemeister III
// tower always, the welded tower when `welded` is set, and X- X+ = id on
// pairs.
inline Report verify_bikoid_wreath(Bikoid const& k, bool welded) {
  int n = k.objects();
  BraidWord r3a = parse_word("S+1 S+2 S+1", 3), r3b = parse_word("S+2 S+1 S+2", 3);
  BraidWord w3a = parse_word("V1 S+2 S+1", 3), w3b = parse_word("S+2 S+1 V2", 3);
  try {
    for (int x = 0; x < n; ++x)
      for (int y = 0; y < n; ++y) {
        WreathMorphism p = x_plus(k, x, y);
        auto t = wreath_target(*k.gamma, p);
        WreathMorphism q = x_minus(k, t[0], t[1]);
        if (wreath_compose(p, q, *k.gamma) != wreath_identity(*k.gamma, {x, y}))
          return Report::fail("X+ X- = id", {x, y});
        if (wreath_compose(q, p, *k.gamma) != wreath_identity(*k.gamma, t))
          return Report::fail("X- X+ = id", {t[0], t[1]});
        for (int z = 0; z < n; ++z) {
          if (wreath_word(k, r3a, {x, y, z}) != wreath_word(k, r3b, {x, y, z}))
            return Report::fail("RIII tower", {x, y, z});
          if (welded && wreath_word(k, w3a, {x, y, z}) != wreath_word(k, w3b, {x, y, z}))
            return Report::fail("WIII tower", {x, y, z});
        }
      }
  } catch (CompositionError const& e) {
    return Report::fail("composability", {e.strand});
  } catch (PreconditionError const&) {
    return Report::fail("switch invertible");
  }
  return Report::pass();
}

}  // namespace bikoid
