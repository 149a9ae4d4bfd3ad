#include "catch_amalgamated.hpp"
#include "mutation.hpp"

TEST_CASE("single-entry corruptions are caught", "[mutation]") {
  for (auto const& t : testing::all_mutations()) {
    INFO(t.what << ": " << t.caught << "/" << t.mutants << " caught, first survivor " << t.first_survivor);
    CHECK(t.all_caught());
  }
}

TEST_CASE("corrupted R identity is caught", "[mutation]") {
  using namespace bikoid;
  Bikoid k = abelian_gr_bikoid(gr_z2_z3()).bikoid;
  k.r_map[1][4] = k.gamma->arrow(4, (k.gamma->label(k.r_map[1][4]) + 1) % 6);
  bool caught = !check_ybe(k) || !check_r_invertible(k) || !verify_bikoid(k);
  CHECK(caught);
}
