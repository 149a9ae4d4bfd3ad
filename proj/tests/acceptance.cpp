// Acceptance run: one PASS/FAIL line per criterion, exit status 1 if any fails.
#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>

#include "catalog.hpp"
#include "mutation.hpp"

using namespace bikoid;
using bikoid::app::Catalog;

namespace {

struct Outcome {
  bool pass = true;
  std::string note;
  void fail(std::string const& why) {
    if (pass) note = why;
    pass = false;
  }
};

int failures = 0;

void criterion(int id, char const* title, std::function<void(Outcome&)> const& body) {
  auto start = std::chrono::steady_clock::now();
  Outcome o;
  try {
    body(o);
  } catch (std::exception const& e) {
    o.fail(std::string("exception: ") + e.what());
  }
  double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  if (!o.pass) ++failures;
  std::printf("%s  [%2d] %s (%.2fs)%s%s\n", o.pass ? "PASS" : "FAIL", id, title, secs, o.note.empty() ? "" : ": ",
              o.note.c_str());
  std::fflush(stdout);
}

RepPtr share(Representation r) { return std::make_shared<const Representation>(std::move(r)); }

long degree(Bikoid const& k, RepPtr const& rep) {
  OrderResult r = operator_order(eval_word(parse_word("S+1", 2), k, rep));
  return r.status == OrderResult::Found ? r.order : -1;
}

}  // namespace

int main() {
  Catalog cat;
  std::vector<std::string> builtins = Catalog::builtin_bikoids();

  criterion(1, "degrees 2, 4, 12, 12 of S+1 on two strands", [&](Outcome& o) {
    Bikoid z2 = finite_group_bikoid(cyclic_group(2));
    Bikoid x = xmod_bikoid_gr_star(gr_to_xmod(gr_z2_z3())).bikoid;
    long got[4] = {degree(z2, share(object_regular(z2.gamma))), degree(z2, share(right_regular(z2.gamma))),
                   degree(x, share(object_regular(x.gamma))), degree(x, share(right_regular(x.gamma)))};
    long want[4] = {2, 4, 12, 12};
    std::ostringstream os;
    os << got[0] << "," << got[1] << "," << got[2] << "," << got[3];
    for (int i = 0; i < 4; ++i)
      if (got[i] != want[i]) o.fail("got " + os.str());
    if (o.pass) o.note = os.str();
  });

  criterion(2, "welded braid relations at n=3 on object-regular, all built-in bikoids", [&](Outcome& o) {
    int checked = 0;
    for (auto const& name : builtins) {
      auto k = cat.bikoid(name);
      if (!k->welded) o.fail(name + " is not welded");
      auto rs = verify_relations(k->bikoid, cat.representation("object-regular", k), 3, true);
      for (auto const& r : rs) {
        ++checked;
        if (!r.pass) o.fail(name + " " + r.relation);
      }
    }
    if (o.pass) o.note = std::to_string(builtins.size()) + " bikoids, " + std::to_string(checked) + " relations";
  });

  criterion(3, "R R^-1 = 1, Yang-Baxter and welded R identities", [&](Outcome& o) {
    for (auto const& name : builtins) {
      auto k = cat.bikoid(name);
      if (!check_r_invertible(k->bikoid)) o.fail(name + " invertibility");
      if (!check_ybe(k->bikoid)) o.fail(name + " YBE");
      if (!check_welded_r(k->bikoid)) o.fail(name + " welded R");
    }
  });

  criterion(4, "essentiality and the forbidden move", [&](Outcome& o) {
    for (char const* name : {"finite-group:S3", "gr:Z2-Z3"}) {
      auto k = cat.bikoid(name);
      Essentiality e = is_essential_bikoid(k->bikoid);
      if (!e.essential || e.witness.size() != 3) o.fail(std::string(name) + " not essential");
      if (check_forbidden_reverse(k->bikoid, cat.representation("right-regular", k)).pass)
        o.fail(std::string(name) + " satisfies the forbidden move");
    }
    auto z2 = cat.bikoid("finite-group:Z2");
    if (is_essential_bikoid(z2->bikoid).essential) o.fail("Z2 essential");
    if (!check_forbidden_reverse(z2->bikoid, cat.representation("right-regular", z2)).pass)
      o.fail("Z2 violates the forbidden move");
  });

  CrossedModule cm = gr_to_xmod(gr_z2_z3());

  criterion(5, "X+R by transport equals the closed formulas, every R", [&](Outcome& o) {
    for (auto const& r : xmod_suite(cm))
      if (r.name.rfind("X+R transport", 0) == 0 && !r.report) o.fail(r.name + " " + r.report.str());
    int count = 0;
    for (auto const& r : xmod_suite(cm)) count += r.name.rfind("X+R transport", 0) == 0;
    if (count != cm.e.order()) o.fail("expected one check per R");
  });

  criterion(6, "psi_R, phi_R, Theta, Theta_R, beta_R identities", [&](Outcome& o) {
    PairGroup s2 = build_S2(cm);
    for (int x = 0; x < s2.order(); ++x)
      if (theta(cm, s2, theta(cm, s2, x)) != theta(cm, s2, x)) o.fail("Theta idempotent");
    for (int r = 0; r < cm.e.order(); ++r)
      for (auto const& nr : t2r_suite(cm, s2, r))
        if (!nr.report) o.fail(nr.name + " " + nr.report.str());
  });

  criterion(7, "oracle: 200 seeded cases plus single-generator sweep", [&](Outcome& o) {
    AbelianGrGroup gr = gr_z2_z3();
    OracleSummary s = run_oracle(gr, 200, 8, 20240611, 3);
    if (s.passed != 200 || s.trials != 200) o.fail(std::to_string(s.passed) + "/200 random");
    int sweep = 0;
    for (Gen g : {Gen::SPlus, Gen::SMinus, Gen::V})
      for (int x = 0; x < 6; ++x)
        for (int y = 0; y < 6; ++y) {
          GrTuple t{{x / 3, x % 3}, {y / 3, y % 3}};
          if (!compare_actions(BraidWord{2, {{g, 1}}}, t, gr)) o.fail("sweep " + std::to_string(x) + "," + std::to_string(y));
          ++sweep;
        }
    if (o.pass) o.note = "200/200 random, " + std::to_string(sweep) + "/" + std::to_string(sweep) + " sweep";
  });

  criterion(8, "representation axioms, unitarity, permutation generators", [&](Outcome& o) {
    for (auto const& name : builtins) {
      auto k = cat.bikoid(name);
      for (char const* kind : {"right-regular", "object-regular"}) {
        RepPtr rep = cat.representation(kind, k);
        if (!verify_representation(*rep)) o.fail(name + " " + kind + " axioms");
        if (!verify_unitary(*rep)) o.fail(name + " " + kind + " unitarity");
        for (char const* w : {"S+1", "S-1", "V1"})
          if (!eval_word(parse_word(w, 2), k->bikoid, rep).is_permutation())
            o.fail(name + " " + kind + " " + w + " not a permutation");
      }
    }
  });

  criterion(9, "underlying permutation on 500 random word pairs", [&](Outcome& o) {
    std::mt19937_64 rng(20240611);
    for (int t = 0; t < 500; ++t) {
      int n = std::uniform_int_distribution<int>(2, 6)(rng);
      BraidWord u = testing::random_word(rng, n, 10), v = testing::random_word(rng, n, 10);
      if (underlying_permutation(u * v) != perm_dot(underlying_permutation(u), underlying_permutation(v)))
        o.fail(to_string(u) + " | " + to_string(v));
    }
  });

  criterion(10, "every single-entry corruption flips a suite to fail", [&](Outcome& o) {
    int total = 0;
    for (auto const& t : testing::all_mutations()) {
      total += t.mutants;
      if (!t.all_caught()) o.fail(t.what + " survivor " + t.first_survivor);
    }
    if (o.pass) o.note = std::to_string(total) + " mutants caught";
  });

  std::printf("%s: %d criteria failed\n", failures ? "FAIL" : "PASS", failures);
  return failures ? 1 : 0;
}
