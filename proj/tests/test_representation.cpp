#include "catch_amalgamated.hpp"
#include "support.hpp"

using namespace bikoid;
using testing::elem;
using testing::share;

namespace {

GroupoidPtr aut_ptr(FiniteGroup const& g) { return std::make_shared<const Groupoid>(aut_groupoid(g)); }

LinearOperator dense(std::vector<std::vector<int>> const& rows) {
  LinearOperator m(static_cast<Index>(rows.size()), static_cast<Index>(rows[0].size()));
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (std::size_t j = 0; j < rows[i].size(); ++j)
      if (rows[i][j]) m.add(static_cast<Index>(i), static_cast<Index>(j), rows[i][j]);
  return m;
}

}  // namespace

TEST_CASE("algebra product", "[rep]") {
  FiniteGroup s3 = symmetric_group(3);
  GroupoidPtr g = aut_ptr(s3);
  int a = g->arrow(elem(s3, "(12)"), elem(s3, "(13)"));
  REQUIRE(g->tgt(a) == elem(s3, "(23)"));
  int b = g->arrow(elem(s3, "(23)"), elem(s3, "(12)"));
  AlgebraElement ab = algebra_mul(arrow_element(g, a), arrow_element(g, b));
  REQUIRE(ab.terms.size() == 1);
  int f = ab.terms.begin()->first;
  CHECK(g->src(f) == elem(s3, "(12)"));
  CHECK(g->tgt(f) == elem(s3, "(13)"));
  CHECK(g->label(f) == s3.mul(elem(s3, "(12)"), elem(s3, "(13)")));
  // mismatched endpoints
  CHECK(algebra_mul(arrow_element(g, b), arrow_element(g, b)).terms.empty());
  CHECK(algebra_mul(algebra_unit(g), arrow_element(g, a)) == arrow_element(g, a));
  CHECK(algebra_mul(arrow_element(g, a), algebra_unit(g)) == arrow_element(g, a));
  CHECK_THROWS_AS(algebra_mul(arrow_element(g, a), arrow_element(aut_ptr(s3), a)), PreconditionError);
}

TEST_CASE("star", "[rep]") {
  GroupoidPtr g = aut_ptr(symmetric_group(3));
  CHECK(star(algebra_unit(g)) == algebra_unit(g));
  std::mt19937_64 rng(2);
  for (int t = 0; t < 50; ++t) {
    AlgebraElement a{g, {}}, b{g, {}};
    for (int k = 0; k < 4; ++k) {
      a.add(std::uniform_int_distribution<int>(0, 35)(rng), std::uniform_int_distribution<int>(-3, 3)(rng));
      b.add(std::uniform_int_distribution<int>(0, 35)(rng), std::uniform_int_distribution<int>(-3, 3)(rng));
    }
    CHECK(star(star(a)) == a);
    CHECK(star(algebra_mul(a, b)) == algebra_mul(star(b), star(a)));
    CHECK(algebra_mul(algebra_add(a, b), a) == algebra_add(algebra_mul(a, a), algebra_mul(b, a)));
  }
  CHECK(star(arrow_element(g, 7)) == arrow_element(g, g->inv(7)));
}

TEST_CASE("regular representations", "[rep]") {
  GroupoidPtr z2 = aut_ptr(cyclic_group(2));
  CHECK(right_regular(z2).dim == 4);
  CHECK(object_regular(z2).dim == 2);
  GroupoidPtr one = aut_ptr(trivial_group());
  Representation r1 = right_regular(one);
  CHECK(r1.dim == 1);
  CHECK(r1.op(0) == LinearOperator::identity(1));
  CHECK(verify_representation(r1));
  CHECK(verify_unitary(r1));
  TransGroupoid t = trans_S2(gr_to_xmod(gr_z2_z3()));
  CHECK(right_regular(t.gamma).dim == 108);
  CHECK(object_regular(t.gamma).dim == 6);
}

TEST_CASE("representation axioms and unitarity", "[rep]") {
  std::vector<GroupoidPtr> gs = {aut_ptr(cyclic_group(2)), aut_ptr(cyclic_group(3)), aut_ptr(symmetric_group(3)),
                                 abelian_gr_bikoid(gr_z2_z3()).bikoid.gamma,
                                 trans_S2(gr_to_xmod(gr_z2_z3())).gamma};
  for (auto const& g : gs)
    for (auto const& rep : {right_regular(g), object_regular(g)}) {
      CHECK(verify_representation(rep));
      CHECK(verify_unitary(rep));
    }
}

TEST_CASE("components are sub-representations", "[rep]") {
  GroupoidPtr g = aut_ptr(symmetric_group(3));
  Representation rep = object_regular(g);
  for (int x = 0; x < g->objects(); ++x) {
    std::vector<int> comp = component(*g, x);
    for (int f = 0; f < g->morphisms(); ++f)
      for (int y : comp)
        for (auto const& [row, v] : rep.op(f).column(y))
          CHECK(std::find(comp.begin(), comp.end(), static_cast<int>(row)) != comp.end());
  }
  CHECK(component(*g, symmetric_group(3).id()).size() == 1);
  CHECK(component(*g, elem(symmetric_group(3), "(12)")).size() == 3);
}

TEST_CASE("corrupted matrix fails", "[rep]") {
  Representation rep = right_regular(aut_ptr(symmetric_group(3)));
  rep.act[5].add(0, 0, 1);
  CHECK_FALSE(verify_representation(rep));
  Representation obj = object_regular(aut_ptr(symmetric_group(3)));
  LinearOperator m(6, 6);
  m.add(0, 1, 1);
  obj.act[8] = m;
  CHECK_FALSE(verify_unitary(obj));
}

TEST_CASE("R element", "[rep]") {
  FiniteGroup s3 = symmetric_group(3);
  Bikoid k = finite_group_bikoid(s3);
  TensorElement r = r_element(k);
  CHECK(r.terms.size() == 36);
  CHECK(check_r_invertible(k));
  CHECK(check_ybe(k));
  CHECK(check_welded_r(k));
  Bikoid gr = abelian_gr_bikoid(gr_z2_z3()).bikoid;
  CHECK(r_element(gr).terms.size() == 36);
  Bikoid triv = trivial_bikoid(k.gamma);
  CHECK(r_element(triv) == tensor_unit(k.gamma, 2));
  CHECK(tensor_mul(r, tensor_unit(k.gamma, 2)) == r);
}

TEST_CASE("R element of the finite-group bikoid is the quantum double R-matrix", "[rep]") {
  for (auto const& g : {cyclic_group(3), symmetric_group(3)}) {
    QuantumDouble q = quantum_double(g);
    CHECK(verify_quantum_double(q));
    Bikoid k = finite_group_bikoid(g);
    CHECK(r_element(k).terms == q.r_matrix().terms);
  }
}

TEST_CASE("corrupted holonomy breaks YBE", "[rep]") {
  FiniteGroup s3 = symmetric_group(3);
  Bikoid k = finite_group_bikoid(s3);
  int x = elem(s3, "(12)"), y = elem(s3, "(13)");
  k.l_map[x][y] = k.gamma->arrow(x, s3.mul(k.gamma->label(k.l_map[x][y]), elem(s3, "(123)")));
  CHECK_FALSE(check_ybe(k));
}

TEST_CASE("operator order", "[rep]") {
  CHECK(operator_order(LinearOperator::identity(5)).order == 1);
  CHECK(operator_order(LinearOperator::permutation({1, 2, 0, 4, 3})).order == 6);
  LinearOperator rot = dense({{0, -1}, {1, 0}});
  CHECK(operator_order(rot).order == 4);
  LinearOperator shear = dense({{1, 1}, {0, 1}});
  OrderResult s = operator_order(shear, 50);
  CHECK(s.status == OrderResult::ExceedsBound);
  CHECK_THROWS_AS(operator_order(dense({{1, 1}, {1, 1}})), PreconditionError);
  CHECK_THROWS_AS(operator_order(dense({{1, 0}, {0, 0}})), PreconditionError);
  LinearOperator half(1, 1);
  half.add(0, 0, Scalar(1) / 2);
  CHECK(operator_order(half, 20).status == OrderResult::ExceedsBound);
}

TEST_CASE("sparse operator arithmetic", "[rep]") {
  LinearOperator a = dense({{1, 2}, {0, 1}}), b = dense({{0, 1}, {1, 0}});
  CHECK(a * b == dense({{2, 1}, {1, 0}}));
  CHECK(a + b == dense({{1, 3}, {1, 1}}));
  CHECK(a.transpose() == dense({{1, 0}, {2, 1}}));
  CHECK(a.first_difference(b) == 0);
  CHECK(a.first_difference(a) == -1);
  CHECK(b.is_permutation());
  CHECK_FALSE(a.is_permutation());
  CHECK_THROWS_AS(a * LinearOperator(3, 3), PreconditionError);
}
