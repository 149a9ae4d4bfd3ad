#pragma once

#include <functional>
#include <string>
#include <vector>

#include "bikoid/bikoid.hpp"
#include "bikoid/birack.hpp"
#include "bikoid/crossed_module.hpp"
#include "bikoid/group.hpp"
#include "bikoid/representation.hpp"

namespace bikoid {

struct NamedReport {
  std::string name;
  Report report;
  bool required = true;
};

inline bool suite_passes(std::vector<NamedReport> const& s) {
  for (auto const& r : s)
    if (r.required && !r.report) return false;
  return true;
}

inline std::vector<NamedReport> group_suite(FiniteGroup const& g) { return {{"group axioms", verify_group(g)}}; }

inline std::vector<NamedReport> birack_suite(Birack const& b) {
  Essentiality e = is_essential(b);
  Report ess = e.essential ? Report::fail("essential", e.witness) : Report::pass();
  return {{"birack axioms", verify_birack(b)}, {"welded", verify_welded(b), false}, {"non-essential", ess, false}};
}

inline Report check_homomorphism(FiniteGroup const& a, FiniteGroup const& b, std::function<int(int)> const& f) {
  for (int x = 0; x < a.order(); ++x)
    for (int y = 0; y < a.order(); ++y)
      if (f(a.mul(x, y)) != b.mul(f(x), f(y))) return Report::fail("homomorphism", {x, y});
  return Report::pass();
}

// Structure maps between S^2 and T^2_R for one R.
inline std::vector<NamedReport> t2r_suite(CrossedModule const& cm, PairGroup const& s2, int r) {
  std::vector<NamedReport> out;
  std::string tag = "[R=" + cm.e.label(r) + "]";
  PairGroup t2 = build_T2R(cm, r);
  out.push_back({"T2_R group" + tag, verify_group(t2.group)});
  auto psi = [&](int x) { return psi_R(cm, s2, t2, x); };
  auto phi = [&](int x) { return phi_R(cm, s2, t2, x); };
  out.push_back({"psi_R homomorphism" + tag, check_homomorphism(t2.group, s2.group, psi)});
  out.push_back({"phi_R homomorphism" + tag, check_homomorphism(s2.group, t2.group, phi)});
  Report rt = Report::pass();
  if (s2.order() != t2.order()) rt = Report::fail("cardinality");
  for (int x = 0; x < s2.order() && rt; ++x)
    if (psi(phi(x)) != x) rt = Report::fail("psi phi = id", {x});
  for (int x = 0; x < t2.order() && rt; ++x)
    if (phi(psi(x)) != x) rt = Report::fail("phi psi = id", {x});
  out.push_back({"psi_R phi_R mutually inverse" + tag, rt});
  Report th = Report::pass(), conj = Report::pass();
  for (int x = 0; x < t2.order(); ++x) {
    if (theta_R(cm, t2, theta_R(cm, t2, x)) != theta_R(cm, t2, x)) th = Report::fail("Theta_R idempotent", {x});
    if (theta_R(cm, t2, x) != phi(theta(cm, s2, psi(x)))) conj = Report::fail("Theta_R = phi Theta psi", {x});
    if (beta_R(cm, t2, x) != phi(beta(cm, s2, psi(x)))) conj = Report::fail("beta_R = phi beta psi", {x});
  }
  out.push_back({"Theta_R idempotent" + tag, th});
  out.push_back({"Theta_R, beta_R conjugate to Theta, beta" + tag, conj});
  out.push_back({"Theta_R homomorphism" + tag,
                 check_homomorphism(t2.group, t2.group, [&](int x) { return theta_R(cm, t2, x); })});
  Report eq = Report::pass();
  for (int a = 0; a < cm.e.order() && eq; ++a)
    for (int x = 0; x < t2.order(); ++x)
      if (psi(e_act_T2(cm, t2, a, x)) != e_act_S2(cm, s2, a, psi(x))) {
        eq = Report::fail("psi_R E-equivariant", {a, x});
        break;
      }
  out.push_back({"psi_R preserves E-actions" + tag, eq});
  return out;
}

// Compatibility a > (p > x) = p > ((p^-1 |> a) > x) for the TRANS actions.
inline Report check_trans_compatibility(CrossedModule const& cm, TransGroupoid const& t, bool t2) {
  PairGroup const& P = t.group.objects;
  SemidirectProduct const& sp = t.group.labels;
  for (int p = 0; p < P.order(); ++p)
    for (int a = 0; a < cm.e.order(); ++a)
      for (int x = 0; x < P.order(); ++x) {
        int lp = sp.pair(p, cm.e.id());
        int la = sp.pair(P.group.id(), a);
        int lb = sp.pair(P.group.id(), cm.act(cm.g.inv(P.g_of(p)), a));
        auto act = [&](int l, int y) { return t2 ? t_T2(cm, t.group, l, y) : t_S2(cm, t.group, l, y); };
        auto eact = [&](int e, int y) { return t2 ? e_act_T2(cm, P, e, y) : e_act_S2(cm, P, e, y); };
        if (act(la, act(lp, x)) != act(lp, act(lb, x))) return Report::fail("compatibility", {p, a, x});
        if (act(la, x) != eact(a, x)) return Report::fail("E-action", {a, x});
      }
  return Report::pass();
}

// Identities (d1) = (d2) and (d3) = (d4) are the RIII and WIII towers in
// the wreath product; they are covered by verify_bikoid_wreath.
inline std::vector<NamedReport> bikoid_suite(Bikoid const& k) {
  std::vector<NamedReport> out;
  out.push_back({"groupoid axioms", verify_groupoid(*k.gamma)});
  Report b = verify_bikoid(k);
  out.push_back({"bikoid axioms", b});
  if (!b) return out;
  out.push_back({"lower birack", verify_birack(k.lower())});
  Report w = verify_welded_bikoid(k);
  out.push_back({"welded", w, false});
  out.push_back({"wreath towers", verify_bikoid_wreath(k, static_cast<bool>(w))});
  out.push_back({"upper birack", verify_birack(upper_birack(k))});
  out.push_back({"R invertible", check_r_invertible(k)});
  out.push_back({"R Yang-Baxter", check_ybe(k)});
  Report wr = check_welded_r(k);
  out.push_back({"R13 R23 = R23 R13", wr, static_cast<bool>(w)});
  if (static_cast<bool>(wr) != static_cast<bool>(w))
    out.push_back({"welded R matches welded bikoid", Report::fail("mismatch")});
  return out;
}

inline std::vector<NamedReport> xmod_suite(CrossedModule const& cm) {
  std::vector<NamedReport> out;
  Report v = verify_crossed_module(cm);
  out.push_back({"crossed module axioms", v});
  if (!v) return out;
  PairGroup s2 = build_S2(cm);
  out.push_back({"S2 group", verify_group(s2.group)});
  Report th = Report::pass();
  for (int x = 0; x < s2.order(); ++x)
    if (theta(cm, s2, theta(cm, s2, x)) != theta(cm, s2, x)) th = Report::fail("Theta idempotent", {x});
  out.push_back({"Theta idempotent", th});
  XmodBikoid star = xmod_bikoid_gr_star(cm);
  out.push_back({"TRANS(S2) groupoid", verify_groupoid(*star.trans.gamma)});
  out.push_back({"TRANS(S2) compatibility", check_trans_compatibility(cm, star.trans, false)});
  XmodBikoid alt = xmod_bikoid_gr_star_theta(cm);
  out.push_back({"X+gr* two formulations agree",
                 alt.bikoid.l_map == star.bikoid.l_map && alt.bikoid.r_map == star.bikoid.r_map
                     ? Report::pass()
                     : Report::fail("X2 vs X2p")});
  out.push_back({"X+gr* W-bikoid", verify_welded_bikoid(star.bikoid)});
  for (int r = 0; r < cm.e.order(); ++r) {
    auto sub = t2r_suite(cm, s2, r);
    out.insert(out.end(), sub.begin(), sub.end());
    std::string tag = "[R=" + cm.e.label(r) + "]";
    XmodRBikoid xr = xmod_bikoid_R(cm, r);
    out.push_back({"TRANS(T2_R) compatibility" + tag, check_trans_compatibility(cm, xr.trans, true)});
    out.push_back({"Phi_R isomorphism" + tag, verify_groupoid_map(*star.trans.gamma, *xr.trans.gamma, xr.phi)});
    out.push_back({"X+R W-bikoid" + tag, verify_welded_bikoid(xr.bikoid)});
    Bikoid ex = xmod_bikoid_R_explicit(cm, xr.trans);
    PairGroup const& t2 = xr.trans.group.objects;
    Report agree = Report::pass();
    for (int x = 0; x < t2.order() && agree; ++x)
      for (int y = 0; y < t2.order(); ++y) {
        if (xr.bikoid.L(x, y) != ex.L(x, y)) agree = Report::fail("first strand label", {x, y});
        else if (xr.bikoid.R(x, y) != ex.R(x, y)) agree = Report::fail("second strand label", {x, y});
        else if (xr.bikoid.under(x, y) != xmod_R_first_target(cm, t2, x, y))
          agree = Report::fail("first strand target", {x, y});
        else if (xr.bikoid.over(y, x) != xmod_R_second_target(cm, t2, x, y))
          agree = Report::fail("second strand target", {x, y});
        else {
          auto [f1, f2] = xmod_R_second_label_forms(cm, xr.trans.group, x, y);
          int lab = xr.trans.group.labels.first(xr.bikoid.gamma->label(xr.bikoid.R(x, y)));
          if (f1 != f2 || f1 != lab) agree = Report::fail("second strand label forms", {x, y});
        }
        if (!agree) break;
      }
    out.push_back({"X+R transport = closed formulas" + tag, agree});
  }
  return out;
}

inline std::vector<NamedReport> gr_suite(AbelianGrGroup const& gr) {
  std::vector<NamedReport> out;
  Report v = verify_gr_group(gr);
  out.push_back({"gr-group axioms", v});
  if (!v) return out;
  CrossedModule cm = gr_to_xmod(gr);
  out.push_back({"associated crossed module", verify_crossed_module(cm)});
  GrBikoid gb = abelian_gr_bikoid(gr);
  auto bs = bikoid_suite(gb.bikoid);
  for (auto& r : bs) r.name = "X+gr " + r.name;
  out.insert(out.end(), bs.begin(), bs.end());
  // X+gr* restricted along Inc is X+gr.
  XmodBikoid star = xmod_bikoid_gr_star(cm);
  GroupoidIso inc = gr_inclusion(gb, cm, star.trans);
  Report ir = verify_groupoid_map(*gb.bikoid.gamma, *star.trans.gamma, inc);
  if (ir) {
    for (int x = 0; x < gb.bikoid.objects() && ir; ++x)
      for (int y = 0; y < gb.bikoid.objects(); ++y) {
        int ix = inc.obj_map[x], iy = inc.obj_map[y];
        if (inc.mor_map[gb.bikoid.L(x, y)] != star.bikoid.L(ix, iy) ||
            inc.mor_map[gb.bikoid.R(x, y)] != star.bikoid.R(ix, iy)) {
          ir = Report::fail("Inc carries X+gr to X+gr*", {x, y});
          break;
        }
      }
  }
  out.push_back({"Inc(X+gr) = X+gr*", ir});
  return out;
}

}  // namespace bikoid
