#include "catch_amalgamated.hpp"
#include "support.hpp"

using namespace bikoid;
using testing::share;

namespace {

struct Fixture {
  Bikoid k;
  RepPtr obj, reg;
  explicit Fixture(Bikoid b)
      : k(std::move(b)), obj(share(object_regular(k.gamma))), reg(share(right_regular(k.gamma))) {}
};

long order_of(BraidWord const& w, Bikoid const& k, RepPtr const& rep) {
  OrderResult r = operator_order(eval_word(w, k, rep));
  REQUIRE(r.status == OrderResult::Found);
  return r.order;
}

}  // namespace

TEST_CASE("degrees of the two-strand braiding", "[braid]") {
  BraidWord s = parse_word("S+1", 2);
  Fixture z2(finite_group_bikoid(cyclic_group(2)));
  CHECK(order_of(s, z2.k, z2.obj) == 2);
  CHECK(order_of(s, z2.k, z2.reg) == 4);
  Fixture x(xmod_bikoid_gr_star(gr_to_xmod(gr_z2_z3())).bikoid);
  CHECK(order_of(s, x.k, x.obj) == 12);
  CHECK(order_of(s, x.k, x.reg) == 12);
}

TEST_CASE("empty word and RII", "[braid]") {
  Fixture f(finite_group_bikoid(symmetric_group(3)));
  CHECK(eval_word(parse_word("", 2), f.k, f.reg) == LinearOperator::identity(36 * 36));
  CHECK(eval_word(parse_word("S+1 S-1", 2), f.k, f.reg) == LinearOperator::identity(36 * 36));
  CHECK(eval_word(parse_word("S-1 S+1", 2), f.k, f.obj) == LinearOperator::identity(36));
}

TEST_CASE("generators are permutation matrices", "[braid]") {
  for (Bikoid const& b : {finite_group_bikoid(symmetric_group(3)), abelian_gr_bikoid(gr_z2_z3()).bikoid,
                          xmod_bikoid_gr_star(gr_to_xmod(gr_z2_z3())).bikoid}) {
    Fixture f(b);
    for (auto const& rep : {f.obj, f.reg})
      for (char const* w : {"S+1", "S-1", "V1"}) CHECK(eval_word(parse_word(w, 2), f.k, rep).is_permutation());
  }
}

TEST_CASE("functoriality: eval(uv) = eval(v) eval(u)", "[braid]") {
  Fixture f(finite_group_bikoid(symmetric_group(3)));
  std::mt19937_64 rng(17);
  for (int t = 0; t < 40; ++t) {
    BraidWord u = testing::random_word(rng, 3, 4), v = testing::random_word(rng, 3, 4);
    CHECK(eval_word(u * v, f.k, f.obj) == eval_word(v, f.k, f.obj) * eval_word(u, f.k, f.obj));
  }
  Fixture g(abelian_gr_bikoid(gr_z2_z3()).bikoid);
  for (int t = 0; t < 10; ++t) {
    BraidWord u = testing::random_word(rng, 2, 4), v = testing::random_word(rng, 2, 4);
    CHECK(eval_word(u * v, g.k, g.reg) == eval_word(v, g.k, g.reg) * eval_word(u, g.k, g.reg));
  }
}

TEST_CASE("object-regular evaluation is the lower birack action", "[braid]") {
  Fixture f(finite_group_bikoid(symmetric_group(3)));
  Birack lower = f.k.lower();
  std::mt19937_64 rng(23);
  for (int t = 0; t < 30; ++t) {
    BraidWord w = testing::random_word(rng, 3, 6);
    LinearOperator m = eval_word(w, f.k, f.obj);
    auto p = m.as_permutation();
    REQUIRE(p);
    for (Index c = 0; c < 216; ++c) {
      auto objs = decode_index(c, 6, 3);
      std::vector<int> t3(objs.begin(), objs.end());
      auto out = birack_act(lower, w, t3);
      CHECK((*p)[c] == encode_index(std::vector<long>(out.begin(), out.end()), 6));
    }
  }
}

TEST_CASE("colored evaluation", "[braid]") {
  Fixture f(finite_group_bikoid(cyclic_group(2)));
  ColoredOperator c = eval_colored(parse_word("V1", 2), f.k, {f.obj, f.reg});
  CHECK(c.op.rows() == 8);
  CHECK(c.codomain[0] == f.reg);
  CHECK(c.codomain[1] == f.obj);
  // u (x) v -> v (x) u with domain index u*4+v, codomain v*2+u
  for (Index u = 0; u < 2; ++u)
    for (Index v = 0; v < 4; ++v) CHECK(c.op.at(v * 2 + u, u * 4 + v) == 1);
  CHECK(c.op.is_permutation());

  Fixture s(finite_group_bikoid(symmetric_group(3)));
  CHECK(eval_colored(parse_word("S+1 V2 S-1", 3), s.k, {s.obj, s.obj, s.obj}).op ==
        eval_word(parse_word("S+1 V2 S-1", 3), s.k, s.obj));
  std::mt19937_64 rng(29);
  for (int t = 0; t < 10; ++t) {
    BraidWord u = testing::random_word(rng, 3, 3), v = testing::random_word(rng, 3, 3);
    Coloring col = {s.obj, s.reg, s.obj};
    ColoredOperator a = eval_colored(u, s.k, col);
    ColoredOperator b = eval_colored(v, s.k, a.codomain);
    ColoredOperator ab = eval_colored(u * v, s.k, col);
    CHECK(ab.codomain == b.codomain);
    CHECK(ab.op == b.op * a.op);
  }
}

TEST_CASE("evaluation guards", "[braid]") {
  Fixture f(finite_group_bikoid(symmetric_group(3)));
  Fixture other(finite_group_bikoid(symmetric_group(3)));
  CHECK_THROWS_AS(eval_word(parse_word("S+1", 2), f.k, other.obj), PreconditionError);
  CHECK_THROWS_AS(eval_word(parse_word("S+1", 4), f.k, f.reg, 1000), PreconditionError);
  CHECK_THROWS_AS(eval_colored(parse_word("S+1", 3), f.k, {f.obj, f.obj}), PreconditionError);
}

TEST_CASE("relations on the object-regular representation", "[braid]") {
  for (Bikoid const& b : {finite_group_bikoid(symmetric_group(3)), abelian_gr_bikoid(gr_z2_z3()).bikoid,
                          trivial_bikoid(std::make_shared<const Groupoid>(aut_groupoid(cyclic_group(3))))}) {
    Fixture f(b);
    auto rs = verify_relations(f.k, f.obj, 3, true);
    for (auto const& r : rs) {
      INFO(r.relation);
      CHECK(r.pass);
    }
    CHECK(rs.size() == 3 * 2 + 4);
  }
}

TEST_CASE("locality appears from four strands", "[braid]") {
  Fixture f(finite_group_bikoid(cyclic_group(2)));
  auto rs = verify_relations(f.k, f.obj, 4, true);
  int loc = 0;
  for (auto const& r : rs) loc += r.relation.rfind("Locality", 0) == 0;
  CHECK(loc == 12);
  CHECK(all_required_pass(rs));
  auto two = verify_relations(f.k, f.obj, 2, true);
  CHECK(two.size() == 3);
  CHECK_THROWS_AS(verify_relations(f.k, f.obj, 1, true), PreconditionError);
}

TEST_CASE("non-welded bikoid fails WIII with a witness", "[braid]") {
  Fixture f(testing::codiscrete_bikoid(testing::non_welded_birack()));
  auto rs = verify_relations(f.k, f.obj, 3, false);
  bool wiii_failed = false;
  for (auto const& r : rs) {
    if (r.relation.rfind("WIII", 0) == 0) {
      CHECK_FALSE(r.required);
      if (!r.pass) {
        wiii_failed = true;
        CHECK(r.witness.size() == 3);
      }
    } else {
      INFO(r.relation);
      CHECK(r.pass);
    }
  }
  CHECK(wiii_failed);
  CHECK(all_required_pass(rs));
  CHECK_FALSE(all_required_pass(verify_relations(f.k, f.obj, 3, true)));
}

TEST_CASE("forbidden reverse move", "[braid]") {
  Fixture s3(finite_group_bikoid(symmetric_group(3)));
  RelationResult r = check_forbidden_reverse(s3.k, s3.reg);
  CHECK_FALSE(r.pass);
  CHECK(r.witness.size() == 3);
  Fixture z2(finite_group_bikoid(cyclic_group(2)));
  CHECK(check_forbidden_reverse(z2.k, z2.reg).pass);
  Fixture triv(trivial_bikoid(s3.k.gamma));
  CHECK(check_forbidden_reverse(triv.k, triv.reg).pass);
}
