#pragma once

#include <functional>
#include <string>
#include <vector>

#include "support.hpp"

namespace testing {

using namespace bikoid;

struct MutationTally {
  std::string what;
  int mutants = 0;
  int caught = 0;
  std::string first_survivor;
  bool all_caught() const { return mutants > 0 && mutants == caught; }
};

// Every entry of every S3 group table bumped to the next value.
inline MutationTally mutate_group_table() {
  MutationTally t{"group table"};
  FiniteGroup s3 = symmetric_group(3);
  for (int i = 0; i < 6; ++i)
    for (int j = 0; j < 6; ++j) {
      Table m = s3.table();
      m[i][j] = (m[i][j] + 1) % 6;
      ++t.mutants;
      if (!suite_passes(group_suite(FiniteGroup(m)))) ++t.caught;
      else if (t.first_survivor.empty()) t.first_survivor = std::to_string(i) + "," + std::to_string(j);
    }
  return t;
}

// Every action and boundary entry of the identity crossed module of S3 and
// of the (Z2,Z3) crossed module.
inline MutationTally mutate_crossed_module() {
  MutationTally t{"crossed module"};
  auto check = [&](CrossedModule const& cm, std::string const& tag) {
    ++t.mutants;
    if (!verify_crossed_module(cm)) ++t.caught;
    else if (t.first_survivor.empty()) t.first_survivor = tag;
  };
  for (CrossedModule const& base : {identity_xmod(symmetric_group(3)), gr_to_xmod(gr_z2_z3())}) {
    int ne = base.e.order();
    for (int h = 0; h < base.g.order(); ++h)
      for (int x = 0; x < ne; ++x) {
        CrossedModule cm = base;
        cm.action.act[h][x] = (cm.action.act[h][x] + 1) % ne;
        check(cm, "action " + std::to_string(h) + "," + std::to_string(x));
      }
    for (int x = 0; x < ne; ++x) {
      CrossedModule cm = base;
      cm.boundary[x] = (cm.boundary[x] + 1) % base.g.order();
      check(cm, "boundary " + std::to_string(x));
    }
  }
  return t;
}

// Every holonomy of the S3 finite-group bikoid replaced by another arrow
// with the same source.
inline MutationTally mutate_bikoid() {
  MutationTally t{"bikoid holonomy"};
  Bikoid base = finite_group_bikoid(symmetric_group(3));
  Groupoid const& g = *base.gamma;
  for (int side = 0; side < 2; ++side)
    for (int x = 0; x < 6; ++x)
      for (int y = 0; y < 6; ++y) {
        Bikoid k = base;
        int& f = side == 0 ? k.l_map[x][y] : k.r_map[x][y];
        int s = g.src(f);
        f = g.arrow(s, (g.label(f) + 1) % 6);
        ++t.mutants;
        if (!suite_passes(bikoid_suite(k))) ++t.caught;
        else if (t.first_survivor.empty())
          t.first_survivor = (side ? "R" : "L") + std::string("(") + std::to_string(x) + "," + std::to_string(y) + ")";
      }
  return t;
}

// One entry of one representation matrix moved to a different row.
inline MutationTally mutate_representation() {
  MutationTally t{"representation matrix"};
  auto g = std::make_shared<const Groupoid>(aut_groupoid(symmetric_group(3)));
  for (auto make : {right_regular, object_regular}) {
    Representation base = make(g);
    for (int f = 0; f < g->morphisms(); f += 5) {
      Representation rep = base;
      LinearOperator& m = rep.act[f];
      Index c = 0;
      while (m.column(c).empty()) ++c;
      SparseVec col = m.column(c);
      col[0].first = (col[0].first + 1) % rep.dim;
      m.set_column(c, col);
      ++t.mutants;
      if (!verify_representation(rep) || !verify_unitary(rep)) ++t.caught;
      else if (t.first_survivor.empty()) t.first_survivor = base.kind + " arrow " + std::to_string(f);
    }
  }
  return t;
}

// A non-welded bikoid must fail WIII when welded relations are demanded.
inline MutationTally mutate_weldedness() {
  MutationTally t{"non-welded bikoid"};
  Bikoid k = codiscrete_bikoid(non_welded_birack());
  RepPtr rep = share(object_regular(k.gamma));
  ++t.mutants;
  if (!all_required_pass(verify_relations(k, rep, 3, true))) ++t.caught;
  else t.first_survivor = "WIII";
  return t;
}

inline std::vector<MutationTally> all_mutations() {
  return {mutate_group_table(), mutate_crossed_module(), mutate_bikoid(), mutate_representation(),
          mutate_weldedness()};
}

}  // namespace testing
