#pragma once

#include <algorithm>
#include <memory>
#include <random>
#include <string>

#include "bikoid/bikoid_all.hpp"

namespace testing {

using namespace bikoid;

inline int elem(FiniteGroup const& g, std::string const& label) {
  int i = g.find_label(label);
  if (i < 0) throw std::runtime_error("no element " + label);
  return i;
}

inline BraidWord random_word(std::mt19937_64& rng, int n, int max_len) {
  BraidWord w{n, {}};
  int len = std::uniform_int_distribution<int>(0, max_len)(rng);
  for (int i = 0; i < len; ++i)
    w.tokens.push_back({static_cast<Gen>(std::uniform_int_distribution<int>(0, 2)(rng)),
                        std::uniform_int_distribution<int>(1, n - 1)(rng)});
  return w;
}

inline RepPtr share(Representation r) { return std::make_shared<const Representation>(std::move(r)); }

}  // namespace testing

namespace testing {

// Bikoid on the codiscrete groupoid Z_n acting on itself by translation,
// with lower birack b.  Every square commutes there, so the bikoid axioms
// reduce to the birack axioms.
inline bikoid::Bikoid codiscrete_bikoid(bikoid::Birack const& b) {
  using namespace bikoid;
  int n = b.size();
  FiniteGroup zn = cyclic_group(n);
  GroupAction shift = action_from(zn, n, [n](int g, int x) { return (g + x) % n; });
  auto g = std::make_shared<const Groupoid>(action_groupoid(zn, n, shift));
  Table l(n, std::vector<int>(n)), r(n, std::vector<int>(n));
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) {
      l[x][y] = g->arrow(x, (b.backslash(x, y) - x + n) % n);
      r[x][y] = g->arrow(y, (b.slash(y, x) - y + n) % n);
    }
  return {g, l, r, "codiscrete"};
}

// First three-point birack, in a fixed enumeration order, that is not
// welded.  Two points are not enough: every two-point birack is welded.
inline bikoid::Birack non_welded_birack() {
  using namespace bikoid;
  std::vector<std::vector<int>> perms;
  std::vector<int> p = {0, 1, 2};
  do perms.push_back(p);
  while (std::next_permutation(p.begin(), p.end()));
  for (int code = 0; code < 6 * 6 * 6 * 6 * 6 * 6; ++code) {
    Table ov(3, std::vector<int>(3)), un(3, std::vector<int>(3));
    int c = code;
    for (int a = 0; a < 3; ++a, c /= 6) ov[a] = perms[c % 6];  // y -> y/a
    for (int a = 0; a < 3; ++a, c /= 6)
      for (int x = 0; x < 3; ++x) un[x][a] = perms[c % 6][x];  // x -> x\a
    Birack b(ov, un);
    if (verify_birack(b) && !verify_welded(b)) return b;
  }
  throw std::runtime_error("no non-welded birack");
}

}  // namespace testing
