#include "catch_amalgamated.hpp"
#include "support.hpp"

using namespace bikoid;
using testing::elem;

namespace {

std::vector<CrossedModule> sample_xmods() {
  return {gr_to_xmod(gr_z2_z3()), identity_xmod(symmetric_group(3)), ad_xmod(symmetric_group(3)),
          gr_to_xmod(gr_general_linear(2, 2)), gr_to_xmod(gr_general_linear(1, 5))};
}

}  // namespace

TEST_CASE("sample crossed modules verify", "[xmod]") {
  for (auto const& cm : sample_xmods()) CHECK(verify_crossed_module(cm));
}

TEST_CASE("Peiffer failures are reported", "[xmod]") {
  // identity boundary needs the conjugation action
  CrossedModule cm = identity_xmod(symmetric_group(3));
  cm.action = trivial_action(cm.g, 6);
  Report r = verify_crossed_module(cm);
  REQUIRE_FALSE(r);
  CHECK(r.check == "1st Peiffer");

  // for abelian E the trivial action works
  FiniteGroup z3 = cyclic_group(3);
  CHECK(verify_crossed_module({z3, z3, {0, 1, 2}, trivial_action(z3, 3), "z3"}));
  // boundary not a homomorphism
  Report h = verify_crossed_module({z3, z3, {0, 2, 2}, trivial_action(z3, 3), "bad"});
  CHECK(h.check == "homomorphism");
}

TEST_CASE("second Peiffer failure", "[xmod]") {
  FiniteGroup s3 = symmetric_group(3);
  CrossedModule cm{s3, s3, std::vector<int>(6, s3.id()), conjugation_action(s3), "x"};
  // d trivial means d(x) acts trivially, so 2nd Peiffer asks E to be abelian
  Report r = verify_crossed_module(cm);
  REQUIRE_FALSE(r);
  CHECK(r.check == "2nd Peiffer");
}

TEST_CASE("S2 and T2_R sizes", "[xmod]") {
  CrossedModule cm = gr_to_xmod(gr_z2_z3());
  PairGroup s2 = build_S2(cm);
  CHECK(s2.order() == 6);
  for (int r = 0; r < 3; ++r) CHECK(build_T2R(cm, r).order() == 6);
  CrossedModule id = identity_xmod(symmetric_group(3));
  CHECK(build_S2(id).order() == 6);
  for (int r = 0; r < 6; ++r) {
    PairGroup t2 = build_T2R(id, r);
    CHECK(t2.order() == 6);
    CHECK(verify_group(t2.group));
  }
}

TEST_CASE("TRANS(S2) for (Z2,Z3)", "[xmod]") {
  CrossedModule cm = gr_to_xmod(gr_z2_z3());
  TransGroupoid t = trans_S2(cm);
  CHECK(t.gamma->objects() == 6);
  CHECK(t.gamma->morphisms() == 108);
  CHECK(verify_groupoid(*t.gamma));
  CHECK(check_trans_compatibility(cm, t, false));
}

TEST_CASE("structure maps", "[xmod]") {
  for (auto const& cm : sample_xmods()) {
    PairGroup s2 = build_S2(cm);
    for (int r = 0; r < cm.e.order(); ++r) CHECK(suite_passes(t2r_suite(cm, s2, r)));
    for (int x = 0; x < s2.order(); ++x) {
      CHECK(theta(cm, s2, theta(cm, s2, x)) == theta(cm, s2, x));
      // (g,J) = beta(g,J)^-1 Theta(g,J)
      CHECK(s2.group.mul(s2.group.inv(beta(cm, s2, x)), theta(cm, s2, x)) == x);
    }
  }
}

TEST_CASE("psi_R and phi_R on (Z2,Z3) by hand", "[xmod]") {
  AbelianGrGroup gr = gr_z2_z3();
  CrossedModule cm = gr_to_xmod(gr);
  PairGroup s2 = build_S2(cm);
  int m = elem(gr.g, "-1");
  int r = elem(gr.a, "1");
  PairGroup t2 = build_T2R(cm, r);
  // phi_R(-1, 0) = (-1, R + 0 + (-1)|>(-R)) = (-1, 1 + 1) = (-1, 2)
  CHECK(t2.elems[phi_R(cm, s2, t2, s2.find(m, 0))] == std::pair{m, 2});
  CHECK(t2.elems[phi_R(cm, s2, t2, s2.find(gr.g.id(), 1))] == std::pair{gr.g.id(), 1});
}

TEST_CASE("xmod suites", "[xmod]") {
  for (auto const& cm : sample_xmods()) {
    auto s = xmod_suite(cm);
    for (auto const& r : s) INFO(cm.name << " " << r.name << " " << r.report.str());
    CHECK(suite_passes(s));
  }
}

TEST_CASE("X+R for the identity crossed module of S3", "[xmod]") {
  CrossedModule cm = identity_xmod(symmetric_group(3));
  XmodBikoid star = xmod_bikoid_gr_star(cm);
  CHECK(verify_welded_bikoid(star.bikoid));
  for (int r = 0; r < 6; ++r) {
    XmodRBikoid xr = xmod_bikoid_R(cm, r);
    CHECK(verify_groupoid_map(*star.trans.gamma, *xr.trans.gamma, xr.phi));
    CHECK(verify_welded_bikoid(xr.bikoid));
  }
}

TEST_CASE("gr suites", "[xmod]") {
  for (auto const& gr : {gr_z2_z3(), gr_general_linear(1, 5), gr_general_linear(2, 2)}) {
    auto s = gr_suite(gr);
    for (auto const& r : s) INFO(r.name << " " << r.report.str());
    CHECK(suite_passes(s));
  }
}

TEST_CASE("corrupted boundary makes structure maps unavailable", "[xmod]") {
  CrossedModule cm = identity_xmod(symmetric_group(3));
  cm.boundary[1] = cm.g.id();
  CHECK_FALSE(verify_crossed_module(cm));
  CHECK_THROWS_AS(xmod_bikoid_gr_star(cm), PreconditionError);
}
