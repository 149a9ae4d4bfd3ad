#pragma once

#include <map>
#include <memory>
#include <string>
#include <vector>

#include "bikoid/bikoid.hpp"
#include "bikoid/group.hpp"
#include "bikoid/groupoid.hpp"
#include "bikoid/report.hpp"

namespace bikoid {

// Crossed module d: E -> G with G acting on E by automorphisms.
struct CrossedModule {
  FiniteGroup e;
  FiniteGroup g;
  std::vector<int> boundary;
  GroupAction action;
  std::string name;

  int d(int x) const { return boundary[x]; }
  int act(int h, int x) const { return action(h, x); }

  // A = ker d, as E indices in increasing order.
  std::vector<int> kernel() const {
    std::vector<int> k;
    for (int x = 0; x < e.order(); ++x)
      if (boundary[x] == g.id()) k.push_back(x);
    return k;
  }
  bool in_kernel(int x) const { return boundary[x] == g.id(); }
};

inline Report verify_crossed_module(CrossedModule const& cm) {
  if (auto r = verify_group(cm.e); !r) return r.check = "E: " + r.check, r;
  if (auto r = verify_group(cm.g); !r) return r.check = "G: " + r.check, r;
  if (static_cast<int>(cm.boundary.size()) != cm.e.order())
    return Report::fail("shape", {}, "boundary table size");
  for (int v : cm.boundary)
    if (v < 0 || v >= cm.g.order()) return Report::fail("shape", {}, "boundary entry out of range");
  if (auto r = verify_action(cm.g, cm.action, &cm.e); !r) return r.check = "action: " + r.check, r;
  FiniteGroup const& E = cm.e;
  FiniteGroup const& G = cm.g;
  for (int x = 0; x < E.order(); ++x)
    for (int y = 0; y < E.order(); ++y)
      if (cm.d(E.mul(x, y)) != G.mul(cm.d(x), cm.d(y))) return Report::fail("homomorphism", {x, y});
  for (int h = 0; h < G.order(); ++h)
    for (int x = 0; x < E.order(); ++x)
      if (cm.d(cm.act(h, x)) != G.mul(h, cm.d(x), G.inv(h)))
        return Report::fail("1st Peiffer", {h, x});
  for (int x = 0; x < E.order(); ++x)
    for (int y = 0; y < E.order(); ++y)
      if (cm.act(cm.d(x), y) != E.mul(x, y, E.inv(x))) return Report::fail("2nd Peiffer", {x, y});
  // Consequences that should hold once the above pass.
  auto A = cm.kernel();
  for (int a : A) {
    for (int x = 0; x < E.order(); ++x)
      if (E.mul(a, x) != E.mul(x, a)) return Report::fail("A central", {a, x});
    for (int h = 0; h < G.order(); ++h)
      if (!cm.in_kernel(cm.act(h, a))) return Report::fail("A G-closed", {h, a});
  }
  return Report::pass();
}

// (A -> G, |>) with constant boundary.
inline CrossedModule gr_to_xmod(AbelianGrGroup const& gr) {
  if (auto r = verify_gr_group(gr); !r)
    throw PreconditionError("abelian gr-group fails verification: " + r.str());
  return {gr.a, gr.g, std::vector<int>(gr.a.order(), gr.g.id()), gr.action, "gr"};
}

// (G -id-> G, conjugation).
inline CrossedModule identity_xmod(FiniteGroup const& g) {
  std::vector<int> d(g.order());
  for (int x = 0; x < g.order(); ++x) d[x] = x;
  return {g, g, d, conjugation_action(g), "identity"};
}

// (G -Ad-> Aut(G), evaluation).
inline CrossedModule ad_xmod(FiniteGroup const& g) {
  AutomorphismGroup aut = automorphism_group(g);
  std::vector<int> d(g.order());
  for (int x = 0; x < g.order(); ++x) {
    std::vector<int> conj(g.order());
    for (int y = 0; y < g.order(); ++y) conj[y] = g.mul(x, y, g.inv(x));
    for (std::size_t k = 0; k < aut.maps.size(); ++k)
      if (aut.maps[k] == conj) d[x] = static_cast<int>(k);
  }
  GroupAction act = action_from(aut.group, g.order(), [&](int f, int y) { return aut.maps[f][y]; });
  return {g, aut.group, d, act, "ad"};
}

// Group of pairs (g, e) in G x E with product (g,e)(g',e') = (gg', e g|>e').
// S^2 is the subgroup e in A; T^2_R is the subset d(e) = [dR, g].  The
// membership predicate is rechecked after each product.
struct PairGroup {
  std::vector<std::pair<int, int>> elems;
  std::map<std::pair<int, int>, int> index;
  FiniteGroup group;
  int r = -1;  // R for T^2_R, -1 for S^2

  int find(int g, int e) const {
    auto it = index.find({g, e});
    if (it == index.end()) throw PreconditionError("pair is not an element of the group");
    return it->second;
  }
  int g_of(int x) const { return elems[x].first; }
  int e_of(int x) const { return elems[x].second; }
  int order() const { return static_cast<int>(elems.size()); }
};

template <class Member>
PairGroup build_pair_group(CrossedModule const& cm, Member member, int r) {
  PairGroup p;
  p.r = r;
  for (int g = 0; g < cm.g.order(); ++g)
    for (int e = 0; e < cm.e.order(); ++e)
      if (member(g, e)) {
        p.index[{g, e}] = static_cast<int>(p.elems.size());
        p.elems.push_back({g, e});
      }
  int n = p.order();
  Table mul(n, std::vector<int>(n));
  std::vector<std::string> labels;
  for (int x = 0; x < n; ++x) {
    auto [g1, e1] = p.elems[x];
    labels.push_back("(" + cm.g.label(g1) + "," + cm.e.label(e1) + ")");
    for (int y = 0; y < n; ++y) {
      auto [g2, e2] = p.elems[y];
      int gg = cm.g.mul(g1, g2);
      int ee = cm.e.mul(e1, cm.act(g1, e2));
      if (!member(gg, ee)) throw PreconditionError("pair product left the group");
      mul[x][y] = p.index.at({gg, ee});
    }
  }
  p.group = FiniteGroup(std::move(mul), std::move(labels));
  return p;
}

inline PairGroup build_S2(CrossedModule const& cm) {
  return build_pair_group(cm, [&](int, int e) { return cm.in_kernel(e); }, -1);
}

inline PairGroup build_T2R(CrossedModule const& cm, int r) {
  int dr = cm.d(r);
  return build_pair_group(
      cm, [&](int g, int e) { return cm.d(e) == commutator(cm.g, dr, g); }, r);
}

// psi_R(g, dR, e) = (g, R^-1 e g|>R)
inline int psi_R(CrossedModule const& cm, PairGroup const& s2, PairGroup const& t2, int x) {
  FiniteGroup const& E = cm.e;
  int R = t2.r;
  auto [g, e] = t2.elems[x];
  return s2.find(g, E.mul(E.inv(R), e, cm.act(g, R)));
}

// phi_R(g, J) = (g, dR, R J g|>R^-1)
inline int phi_R(CrossedModule const& cm, PairGroup const& s2, PairGroup const& t2, int x) {
  FiniteGroup const& E = cm.e;
  int R = t2.r;
  auto [g, j] = s2.elems[x];
  return t2.find(g, E.mul(R, j, cm.act(g, E.inv(R))));
}

// Theta(g, J) = (g, 1)
inline int theta(CrossedModule const& cm, PairGroup const& s2, int x) {
  return s2.find(s2.g_of(x), cm.e.id());
}

// Theta_R(g, dR, e) = (g, dR, R g|>R^-1)
inline int theta_R(CrossedModule const& cm, PairGroup const& t2, int x) {
  int g = t2.g_of(x);
  return t2.find(g, cm.e.mul(t2.r, cm.act(g, cm.e.inv(t2.r))));
}

// beta(g, K) = (1, K^-1)
inline int beta(CrossedModule const& cm, PairGroup const& s2, int x) {
  return s2.find(cm.g.id(), cm.e.inv(s2.e_of(x)));
}

// beta_R(g, dR, e) = (1, dR, R g|>R^-1 e^-1)
inline int beta_R(CrossedModule const& cm, PairGroup const& t2, int x) {
  auto [g, e] = t2.elems[x];
  FiniteGroup const& E = cm.e;
  return t2.find(cm.g.id(), E.mul(t2.r, cm.act(g, E.inv(t2.r)), E.inv(e)));
}

// E-actions on the objects.
// S^2: a > (g, K) = (d(a) g, K)
inline int e_act_S2(CrossedModule const& cm, PairGroup const& s2, int a, int x) {
  return s2.find(cm.g.mul(cm.d(a), s2.g_of(x)), s2.e_of(x));
}

// T^2_R: a > (g, dR, e) = (d(a) g, dR, R a R^-1 e a^-1)
inline int e_act_T2(CrossedModule const& cm, PairGroup const& t2, int a, int x) {
  FiniteGroup const& E = cm.e;
  int R = t2.r;
  int e = E.mul(E.mul(R, a, E.inv(R)), t2.e_of(x), E.inv(a));
  return t2.find(cm.g.mul(cm.d(a), t2.g_of(x)), e);
}

// Semidirect product P x|' E with (p,a)(q,b) = (pq, a g_p|>b); index p*|E|+a.
struct TransGroup {
  PairGroup objects;
  SemidirectProduct labels;
};

inline TransGroup build_trans_group(CrossedModule const& cm, PairGroup const& p) {
  GroupAction act = action_from(p.group, cm.e.order(), [&](int x, int a) { return cm.act(p.g_of(x), a); });
  return {p, semidirect_product(p.group, cm.e, act)};
}

// (g,J,a) > (h,K) = (d(a) g h g^-1, J g|>K (g h g^-1)|>J^-1)
inline int t_S2(CrossedModule const& cm, TransGroup const& t, int label, int x) {
  FiniteGroup const& G = cm.g;
  FiniteGroup const& E = cm.e;
  PairGroup const& s2 = t.objects;
  int p = t.labels.first(label), a = t.labels.second(label);
  auto [g, J] = s2.elems[p];
  auto [h, K] = s2.elems[x];
  int ghg = G.mul(g, h, G.inv(g));
  return s2.find(G.mul(cm.d(a), ghg), E.mul(J, cm.act(g, K), cm.act(ghg, E.inv(J))));
}

// (g,dR,e,a) > (h,dR,f) = (d(a) g h g^-1, dR, R a R^-1 e g|>f (g h g^-1)|>e^-1 a^-1)
inline int t_T2(CrossedModule const& cm, TransGroup const& t, int label, int x) {
  FiniteGroup const& G = cm.g;
  FiniteGroup const& E = cm.e;
  PairGroup const& t2 = t.objects;
  int R = t2.r;
  int p = t.labels.first(label), a = t.labels.second(label);
  auto [g, e] = t2.elems[p];
  auto [h, f] = t2.elems[x];
  int ghg = G.mul(g, h, G.inv(g));
  int rar = E.mul(R, a, E.inv(R));
  int rest = E.mul(E.mul(e, cm.act(g, f)), E.mul(cm.act(ghg, E.inv(e)), E.inv(a)));
  return t2.find(G.mul(cm.d(a), ghg), E.mul(rar, rest));
}

struct TransGroupoid {
  TransGroup group;
  GroupoidPtr gamma;
};

inline TransGroupoid trans_S2(CrossedModule const& cm) {
  TransGroup t = build_trans_group(cm, build_S2(cm));
  GroupAction act = action_from(t.labels.group, t.objects.order(),
                                [&](int h, int x) { return t_S2(cm, t, h, x); });
  auto g = std::make_shared<Groupoid>(action_groupoid(t.labels.group, t.objects.order(), act));
  g->object_labels = t.objects.group.labels();
  return {t, g};
}

inline TransGroupoid trans_T2R(CrossedModule const& cm, int r) {
  TransGroup t = build_trans_group(cm, build_T2R(cm, r));
  GroupAction act = action_from(t.labels.group, t.objects.order(),
                                [&](int h, int x) { return t_T2(cm, t, h, x); });
  auto g = std::make_shared<Groupoid>(action_groupoid(t.labels.group, t.objects.order(), act));
  g->object_labels = t.objects.group.labels();
  return {t, g};
}

// Phi_R: phi_R on objects, (x, (p, a)) -> (phi_R x, (phi_R p, a)) on arrows.
inline GroupoidIso Phi_R(CrossedModule const& cm, TransGroupoid const& s, TransGroupoid const& t) {
  PairGroup const& s2 = s.group.objects;
  PairGroup const& t2 = t.group.objects;
  GroupoidIso m;
  for (int x = 0; x < s2.order(); ++x) m.obj_map.push_back(phi_R(cm, s2, t2, x));
  int ne = cm.e.order();
  for (int f = 0; f < s.gamma->morphisms(); ++f) {
    int x = s.gamma->src(f);
    int lab = s.gamma->label(f);
    int p = s.group.labels.first(lab), a = s.group.labels.second(lab);
    int lab2 = phi_R(cm, s2, t2, p) * ne + a;
    m.mor_map.push_back(t.gamma->arrow(m.obj_map[x], lab2));
  }
  return m;
}

struct XmodBikoid {
  Bikoid bikoid;
  TransGroupoid trans;
};

// X+_{gr*} on TRANS(S^2): for x = (z,J), y = (w,K) the left label is
// (w^-1, 1_A, 1_E) and the right label (1_G, w^-1|>J^-1, 1_E).
inline XmodBikoid xmod_bikoid_gr_star(CrossedModule const& cm) {
  if (auto r = verify_crossed_module(cm); !r)
    throw PreconditionError("crossed module fails verification: " + r.str());
  TransGroupoid t = trans_S2(cm);
  PairGroup const& s2 = t.group.objects;
  FiniteGroup const& E = cm.e;
  int n = s2.order();
  Table l(n, std::vector<int>(n)), r(n, std::vector<int>(n));
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) {
      int J = s2.e_of(x);
      int w = s2.g_of(y);
      int wi = cm.g.inv(w);
      int left = t.group.labels.pair(s2.find(wi, E.id()), E.id());
      int right = t.group.labels.pair(s2.find(cm.g.id(), cm.act(wi, E.inv(J))), E.id());
      l[x][y] = t.gamma->arrow(x, left);
      r[x][y] = t.gamma->arrow(y, right);
    }
  return {{t.gamma, l, r, "xmod-gr-star"}, t};
}

// Same bikoid written with Theta and beta: left label (Theta(w,K)^-1, 1_E),
// right label (beta(Theta(w,K)^-1 > (z,J)), 1_E) with > the conjugation.
inline XmodBikoid xmod_bikoid_gr_star_theta(CrossedModule const& cm) {
  TransGroupoid t = trans_S2(cm);
  PairGroup const& s2 = t.group.objects;
  FiniteGroup const& E = cm.e;
  int n = s2.order();
  Table l(n, std::vector<int>(n)), r(n, std::vector<int>(n));
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) {
      int th = s2.group.inv(theta(cm, s2, y));
      int moved = t_S2(cm, t.group, t.group.labels.pair(th, E.id()), x);
      l[x][y] = t.gamma->arrow(x, t.group.labels.pair(th, E.id()));
      r[x][y] = t.gamma->arrow(y, t.group.labels.pair(beta(cm, s2, moved), E.id()));
    }
  return {{t.gamma, l, r, "xmod-gr-star"}, t};
}

struct XmodRBikoid {
  Bikoid bikoid;
  TransGroupoid source;
  TransGroupoid trans;
  GroupoidIso phi;
};

// X+_R: transport of X+_{gr*} along Phi_R.
inline XmodRBikoid xmod_bikoid_R(CrossedModule const& cm, int r) {
  XmodBikoid star = xmod_bikoid_gr_star(cm);
  TransGroupoid t = trans_T2R(cm, r);
  GroupoidIso phi = Phi_R(cm, star.trans, t);
  Bikoid k = transport(star.bikoid, phi, t.gamma);
  k.name = "xmod-R";
  return {k, star.trans, t, phi};
}

// X+_R from the closed formulas, independent of the transport.  For
// x = (z,dR,e), y = (w,dR,f) the left label is
// (w^-1, dR, R w^-1|>R^-1) with trivial E part, and the right label is
// (1, dR, R (w^-1 z)|>R^-1 w^-1|>e^-1 w^-1|>R R^-1).
inline Bikoid xmod_bikoid_R_explicit(CrossedModule const& cm, TransGroupoid const& t) {
  PairGroup const& t2 = t.group.objects;
  FiniteGroup const& E = cm.e;
  FiniteGroup const& G = cm.g;
  int R = t2.r, Ri = E.inv(R);
  int n = t2.order();
  Table l(n, std::vector<int>(n)), rr(n, std::vector<int>(n));
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) {
      auto [z, e] = t2.elems[x];
      int w = t2.g_of(y);
      int wi = G.inv(w);
      int left = t2.find(wi, E.mul(R, cm.act(wi, Ri)));
      int right_e = E.mul(E.mul(R, cm.act(G.mul(wi, z), Ri)),
                          E.mul(cm.act(wi, E.inv(e)), E.mul(cm.act(wi, R), Ri)));
      int right = t2.find(G.id(), right_e);
      l[x][y] = t.gamma->arrow(x, t.group.labels.pair(left, E.id()));
      rr[x][y] = t.gamma->arrow(y, t.group.labels.pair(right, E.id()));
    }
  return {t.gamma, l, rr, "xmod-R"};
}

// Target of the first strand: (w^-1 z w, dR, R w^-1|>R^-1 w^-1|>e (w^-1 z)|>R (w^-1 z w)|>R^-1).
inline int xmod_R_first_target(CrossedModule const& cm, PairGroup const& t2, int x, int y) {
  FiniteGroup const& E = cm.e;
  FiniteGroup const& G = cm.g;
  int R = t2.r, Ri = E.inv(R);
  auto [z, e] = t2.elems[x];
  int wi = G.inv(t2.g_of(y));
  int wz = G.mul(wi, z);
  int wzw = G.mul(wz, t2.g_of(y));
  int v = E.mul(E.mul(R, cm.act(wi, Ri)), E.mul(cm.act(wi, e), E.mul(cm.act(wz, R), cm.act(wzw, Ri))));
  return t2.find(wzw, v);
}

// Target of the second strand:
// (w, dR, R (w^-1 z)|>R^-1 w^-1|>e^-1 w^-1|>R R^-1 f w|>R R^-1 e z|>R w|>R^-1).
inline int xmod_R_second_target(CrossedModule const& cm, PairGroup const& t2, int x, int y) {
  FiniteGroup const& E = cm.e;
  FiniteGroup const& G = cm.g;
  int R = t2.r, Ri = E.inv(R);
  auto [z, e] = t2.elems[x];
  auto [w, f] = t2.elems[y];
  int wi = G.inv(w);
  std::vector<int> factors = {R,  cm.act(G.mul(wi, z), Ri), cm.act(wi, E.inv(e)), cm.act(wi, R), Ri, f,
                              cm.act(w, R), Ri, e, cm.act(z, R), cm.act(w, Ri)};
  int v = E.id();
  for (int c : factors) v = E.mul(v, c);
  return t2.find(w, v);
}

// Second strand label written as Theta_R(u) u^-1 and as beta_R(u), where
// u = Theta_R(y)^-1 > x under conjugation.
inline std::pair<int, int> xmod_R_second_label_forms(CrossedModule const& cm, TransGroup const& t,
                                                     int x, int y) {
  PairGroup const& t2 = t.objects;
  FiniteGroup const& P = t2.group;
  int th = P.inv(theta_R(cm, t2, y));
  int u = t_T2(cm, t, t.labels.pair(th, cm.e.id()), x);
  return {P.mul(theta_R(cm, t2, u), P.inv(u)), beta_R(cm, t2, u)};
}

// Inc: TRANS(G,A) -> TRANS(S^2), (g,J) -> (g,J), labels (w,k) -> (w,k,1_E).
inline GroupoidIso gr_inclusion(GrBikoid const& gr, CrossedModule const& cm, TransGroupoid const& s) {
  PairGroup const& s2 = s.group.objects;
  GroupoidIso m;
  SemidirectProduct const& sp = gr.product;
  for (int x = 0; x < gr.bikoid.objects(); ++x) m.obj_map.push_back(s2.find(sp.first(x), sp.second(x)));
  Groupoid const& src = *gr.bikoid.gamma;
  for (int f = 0; f < src.morphisms(); ++f) {
    int lab = src.label(f);
    int p = s2.find(sp.first(lab), sp.second(lab));
    m.mor_map.push_back(s.gamma->arrow(m.obj_map[src.src(f)], s.group.labels.pair(p, cm.e.id())));
  }
  return m;
}

}  // namespace bikoid
