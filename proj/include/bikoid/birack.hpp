#pragma once

#include <optional>
#include <vector>

#include "bikoid/group.hpp"
#include "bikoid/report.hpp"
#include "bikoid/word.hpp"

namespace bikoid {

// over[x][y] = y/x ("y over x"), under[x][y] = x\y ("x under y").  The
// switch is S(x,y) = (y/x, x\y).
class Birack {
 public:
  Birack() = default;
  Birack(Table over, Table under) : over_(std::move(over)), under_(std::move(under)) {
    int n = static_cast<int>(over_.size());
    require(static_cast<int>(under_.size()) == n, "birack tables differ in size");
    for (int x = 0; x < n; ++x) {
      require(static_cast<int>(over_[x].size()) == n && static_cast<int>(under_[x].size()) == n,
              "birack tables are not square");
      for (int y = 0; y < n; ++y)
        require(over_[x][y] >= 0 && over_[x][y] < n && under_[x][y] >= 0 && under_[x][y] < n,
                "birack entry out of range");
    }
  }

  int size() const { return static_cast<int>(over_.size()); }
  int slash(int y, int x) const { return over_[x][y]; }      // y/x
  int backslash(int x, int y) const { return under_[x][y]; }  // x\y
  Table const& over() const { return over_; }
  Table const& under() const { return under_; }

  std::pair<int, int> sw(int x, int y) const { return {over_[x][y], under_[x][y]}; }

  // Inverse switch, or nullopt if S is not a bijection.
  std::optional<std::vector<std::pair<int, int>>> inverse_switch() const {
    int n = size();
    std::vector<std::pair<int, int>> inv(n * n, {-1, -1});
    for (int x = 0; x < n; ++x)
      for (int y = 0; y < n; ++y) {
        auto [u, v] = sw(x, y);
        if (inv[u * n + v].first >= 0) return std::nullopt;
        inv[u * n + v] = {x, y};
      }
    return inv;
  }

 private:
  Table over_, under_;
};

inline Report verify_birack(Birack const& b) {
  int n = b.size();
  for (int a = 0; a < n; ++a) {
    std::vector<char> s1(n, 0), s2(n, 0);
    for (int x = 0; x < n; ++x) {
      int u = b.slash(x, a), v = b.backslash(x, a);
      if (s1[u]) return Report::fail("x -> x/a bijective", {a, x});
      if (s2[v]) return Report::fail("x -> x\\a bijective", {a, x});
      s1[u] = s2[v] = 1;
    }
  }
  if (!b.inverse_switch()) return Report::fail("switch bijective");
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      for (int z = 0; z < n; ++z) {
        // S1 S2 S1 versus S2 S1 S2 on (x,y,z).
        auto [a1, b1] = b.sw(x, y);
        auto [b2, c2] = b.sw(b1, z);
        auto [a3, b3] = b.sw(a1, b2);
        auto [q1, r1] = b.sw(y, z);
        auto [p2, q2] = b.sw(x, q1);
        auto [q3, r3] = b.sw(q2, r1);
        if (a3 != p2 || b3 != q3 || c2 != r3) return Report::fail("Yang-Baxter", {x, y, z});
      }
  return Report::pass();
}

inline Report verify_welded(Birack const& b) {
  int n = b.size();
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      for (int z = 0; z < n; ++z) {
        if (b.slash(b.slash(z, x), y) != b.slash(b.slash(z, y), x))
          return Report::fail("(z/x)/y = (z/y)/x", {x, y, z});
        if (b.backslash(y, z) != b.backslash(y, b.slash(z, x)))
          return Report::fail("y\\z = y\\(z/x)", {x, y, z});
        // Redundant with the previous equation; kept as a sanity check.
        if (b.backslash(x, z) != b.backslash(x, b.slash(z, y)))
          return Report::fail("x\\z = x\\(z/y) (redundant)", {x, y, z});
      }
  return Report::pass();
}

struct Essentiality {
  bool essential = false;
  std::vector<long> witness;  // (x,y,z) where one of the equations fails
  int equation = -1;          // 0, 1 or 2
};

inline Essentiality is_essential(Birack const& b) {
  int n = b.size();
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      for (int z = 0; z < n; ++z) {
        int eq = -1;
        if (b.backslash(b.backslash(x, y), z) != b.backslash(b.backslash(x, z), y)) eq = 0;
        else if (b.slash(y, x) != b.slash(y, b.backslash(x, z))) eq = 1;
        else if (b.slash(z, b.backslash(x, y)) != b.slash(z, x)) eq = 2;
        if (eq >= 0) return {true, {x, y, z}, eq};
      }
  return {};
}

// Right action of the virtual braid monoid on X^n.
inline std::vector<int> birack_act(Birack const& b, BraidWord const& w, std::vector<int> t) {
  if (static_cast<int>(t.size()) != w.n) throw StructuralError("tuple length differs from strand count");
  std::optional<std::vector<std::pair<int, int>>> inv;
  int n = b.size();
  for (auto const& tok : w.tokens) {
    if (tok.a < 1 || tok.a >= w.n) throw StructuralError("generator index out of range");
    int& x = t[tok.a - 1];
    int& y = t[tok.a];
    switch (tok.kind) {
      case Gen::V: std::swap(x, y); break;
      case Gen::SPlus: {
        auto [u, v] = b.sw(x, y);
        x = u, y = v;
        break;
      }
      case Gen::SMinus: {
        if (!inv) inv = b.inverse_switch();
        if (!inv) throw PreconditionError("switch is not invertible");
        auto [u, v] = (*inv)[x * n + y];
        x = u, y = v;
        break;
      }
    }
  }
  return t;
}

inline Birack trivial_birack(int n) {
  Table over(n, std::vector<int>(n)), under(n, std::vector<int>(n));
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) over[x][y] = y, under[x][y] = x;
  return {over, under};
}

// h/g = h and g\h = h^-1 g h.
inline Birack conjugation_quandle(FiniteGroup const& g) {
  int n = g.order();
  Table over(n, std::vector<int>(n)), under(n, std::vector<int>(n));
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) {
      over[x][y] = y;
      under[x][y] = g.mul(g.inv(y), x, y);
    }
  return {over, under};
}

}  // namespace bikoid
