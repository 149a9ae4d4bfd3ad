#pragma once

#include <map>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "bikoid/group.hpp"
#include "bikoid/report.hpp"
#include "bikoid/word.hpp"

namespace bikoid {

// Element of the free group on m_1..m_n.  Letter k > 0 is m_k, k < 0 is
// m_{-k}^-1.  Always freely reduced.
using FreeWord = std::vector<int>;

inline FreeWord reduce(FreeWord const& w) {
  FreeWord out;
  for (int l : w) {
    if (!out.empty() && out.back() == -l) out.pop_back();
    else out.push_back(l);
  }
  return out;
}

inline FreeWord fw_mul(FreeWord a, FreeWord const& b) {
  a.insert(a.end(), b.begin(), b.end());
  return reduce(a);
}

inline FreeWord fw_inv(FreeWord const& w) {
  FreeWord r(w.rbegin(), w.rend());
  for (int& l : r) l = -l;
  return r;
}

inline FreeWord m_gen(int i) { return {i}; }

// Z-linear combination of translates w . v_k, keyed by (w, k).
using Pi2Element = std::map<std::pair<FreeWord, int>, long>;

inline void p_add_term(Pi2Element& p, FreeWord const& w, int k, long c) {
  if (c == 0) return;
  long& s = p[{w, k}];
  s += c;
  if (s == 0) p.erase({w, k});
}

inline Pi2Element p_add(Pi2Element a, Pi2Element const& b, long scale = 1) {
  for (auto const& [key, c] : b) p_add_term(a, key.first, key.second, scale * c);
  return a;
}

// w . p
inline Pi2Element p_translate(FreeWord const& w, Pi2Element const& p) {
  Pi2Element r;
  for (auto const& [key, c] : p) p_add_term(r, fw_mul(w, key.first), key.second, c);
  return r;
}

inline Pi2Element v_gen(int k) { return {{{FreeWord{}, k}, 1}}; }

// Automorphism of (pi_1, pi_2) given by the images of the generators
// (index 0 unused).
struct PiMap {
  std::vector<FreeWord> m;
  std::vector<Pi2Element> v;
  bool operator==(PiMap const& o) const { return m == o.m && v == o.v; }
};

inline PiMap pi_identity(int n) {
  PiMap f;
  f.m.resize(n + 1);
  f.v.resize(n + 1);
  for (int i = 1; i <= n; ++i) f.m[i] = m_gen(i), f.v[i] = v_gen(i);
  return f;
}

inline FreeWord substitute(FreeWord const& w, PiMap const& f) {
  FreeWord r;
  for (int l : w) r = fw_mul(r, l > 0 ? f.m[l] : fw_inv(f.m[-l]));
  return r;
}

inline Pi2Element substitute(Pi2Element const& p, PiMap const& f) {
  Pi2Element r;
  for (auto const& [key, c] : p) r = p_add(r, p_translate(substitute(key.first, f), f.v[key.second]), c);
  return r;
}

// Images of the generators under one generator of WB_n.
//   V_i:  m_i <-> m_{i+1}, v_i <-> v_{i+1}
//   S+_i: m_i -> m_i^-1 m_{i+1} m_i, m_{i+1} -> m_i,
//         v_i -> m_i^-1 . v_{i+1}, v_{i+1} -> v_i + v_{i+1} - m_i^-1 . v_{i+1}
//   S-_i: m_i -> m_{i+1}, m_{i+1} -> m_{i+1} m_i m_{i+1}^-1,
//         v_i -> v_i + v_{i+1} - m_{i+1} . v_i, v_{i+1} -> m_{i+1} . v_i
inline PiMap generator_map(Token t, int n) {
  if (t.a < 1 || t.a >= n) throw StructuralError("generator index out of range");
  int i = t.a, j = t.a + 1;
  PiMap f = pi_identity(n);
  switch (t.kind) {
    case Gen::V:
      std::swap(f.m[i], f.m[j]);
      std::swap(f.v[i], f.v[j]);
      break;
    case Gen::SPlus: {
      FreeWord mi = fw_inv(m_gen(i));
      f.m[i] = fw_mul(fw_mul(mi, m_gen(j)), m_gen(i));
      f.m[j] = m_gen(i);
      Pi2Element moved = p_translate(mi, v_gen(j));
      f.v[i] = moved;
      f.v[j] = p_add(p_add(v_gen(i), v_gen(j)), moved, -1);
      break;
    }
    case Gen::SMinus: {
      f.m[i] = m_gen(j);
      f.m[j] = fw_mul(fw_mul(m_gen(j), m_gen(i)), fw_inv(m_gen(j)));
      Pi2Element moved = p_translate(m_gen(j), v_gen(i));
      f.v[i] = p_add(p_add(v_gen(i), v_gen(j)), moved, -1);
      f.v[j] = moved;
      break;
    }
  }
  return f;
}

inline FreeWord act_generator(Token t, FreeWord const& w, int n) { return substitute(w, generator_map(t, n)); }
inline Pi2Element act_generator(Token t, Pi2Element const& p, int n) { return substitute(p, generator_map(t, n)); }

// (f o g)(x) = f(g(x))
inline PiMap pi_compose(PiMap const& f, PiMap const& g) {
  PiMap r;
  r.m.resize(g.m.size());
  r.v.resize(g.v.size());
  for (std::size_t i = 1; i < g.m.size(); ++i) {
    r.m[i] = substitute(g.m[i], f);
    r.v[i] = substitute(g.v[i], f);
  }
  return r;
}

// B_* for a word, with (B B')_* = B'_* o B_*.
inline PiMap word_map(BraidWord const& w) {
  PiMap cur = pi_identity(w.n);
  for (auto const& t : w.tokens) cur = pi_compose(generator_map(t, w.n), cur);
  return cur;
}

// Tuple ((g_1,a_1),...,(g_n,a_n)) read as the pair of maps m_i -> g_i,
// v_i -> a_i with phi_2(w . v) = phi_1(w) |> phi_2(v).
using GrTuple = std::vector<std::pair<int, int>>;

struct GrHom {
  AbelianGrGroup const* gr;
  GrTuple tuple;

  int eval(FreeWord const& w) const {
    int g = gr->g.id();
    for (int l : w) {
      int x = tuple.at(std::abs(l) - 1).first;
      g = gr->g.mul(g, l > 0 ? x : gr->g.inv(x));
    }
    return g;
  }
  int eval(Pi2Element const& p) const {
    int a = gr->a.id();
    for (auto const& [key, c] : p) {
      int t = gr->action(eval(key.first), tuple.at(key.second - 1).second);
      a = gr->a.mul(a, gr->a.pow(t, c));
    }
    return a;
  }
};

inline GrHom gr_hom_from_tuple(GrTuple t, AbelianGrGroup const& gr) { return {&gr, std::move(t)}; }

// Underlying birack of the abelian gr-group bikoid:
//   (z,a)\(w,b) = (w^-1 z w, w^-1 |> a),  (w,b)/(z,a) = (w, a + b - w^-1 |> a).
inline std::pair<int, int> module_under(AbelianGrGroup const& gr, std::pair<int, int> x, std::pair<int, int> y) {
  auto [z, a] = x;
  int w = y.first;
  int wi = gr.g.inv(w);
  return {gr.g.mul(wi, z, w), gr.action(wi, a)};
}

inline std::pair<int, int> module_over(AbelianGrGroup const& gr, std::pair<int, int> y, std::pair<int, int> x) {
  auto [w, b] = y;
  int a = x.second;
  int wa = gr.action(gr.g.inv(w), a);
  return {w, gr.a.mul(a, b, gr.a.inv(wa))};
}

inline GrTuple module_birack_act(AbelianGrGroup const& gr, BraidWord const& w, GrTuple t) {
  std::vector<std::pair<int, int>> elems;
  for (int g = 0; g < gr.g.order(); ++g)
    for (int a = 0; a < gr.a.order(); ++a) elems.push_back({g, a});
  for (auto const& tok : w.tokens) {
    auto& x = t[tok.a - 1];
    auto& y = t[tok.a];
    if (tok.kind == Gen::V) {
      std::swap(x, y);
    } else if (tok.kind == Gen::SPlus) {
      auto u = module_over(gr, y, x), v = module_under(gr, x, y);
      x = u, y = v;
    } else {
      bool found = false;
      for (auto const& p : elems) {
        for (auto const& q : elems)
          if (module_over(gr, q, p) == x && module_under(gr, p, q) == y) {
            x = p, y = q;
            found = true;
            break;
          }
        if (found) break;
      }
      if (!found) throw PreconditionError("module birack switch is not invertible");
    }
  }
  return t;
}

// Reverse the order of the generators and mirror the strands, a -> n - a.
inline BraidWord dagger(BraidWord const& w) {
  BraidWord r{w.n, {}};
  for (auto it = w.tokens.rbegin(); it != w.tokens.rend(); ++it) r.tokens.push_back({it->kind, w.n - it->a});
  return r;
}

// Tuple obtained by evaluating phi on the images of the generators under B_*.
// The two sides are compared with the strands read from the right, i.e.
// via dagger on the word and reversal on the tuple.
inline GrTuple pi_route(AbelianGrGroup const& gr, BraidWord const& w, GrTuple const& t) {
  PiMap f = word_map(dagger(w));
  GrHom phi = gr_hom_from_tuple(GrTuple(t.rbegin(), t.rend()), gr);
  GrTuple out;
  for (int i = 1; i <= w.n; ++i) out.push_back({phi.eval(f.m[i]), phi.eval(f.v[i])});
  return GrTuple(out.rbegin(), out.rend());
}

inline Report compare_actions(BraidWord const& w, GrTuple const& t, AbelianGrGroup const& gr) {
  if (static_cast<int>(t.size()) != w.n) throw PreconditionError("tuple length differs from strand count");
  GrTuple a = module_birack_act(gr, w, t);
  GrTuple b = pi_route(gr, w, t);
  if (a != b) {
    std::vector<long> wit;
    for (auto [g, x] : t) wit.push_back(g), wit.push_back(x);
    return Report::fail("birack = pi route", wit, to_string(w));
  }
  return Report::pass();
}

struct OracleSummary {
  int trials = 0;
  int passed = 0;
  std::vector<std::string> failures;
};

// Random words of length <= max_len on 2 or 3 strands with random tuples.
inline OracleSummary run_oracle(AbelianGrGroup const& gr, int trials, int max_len, std::uint64_t seed,
                                int max_n = 3) {
  std::mt19937_64 rng(seed);
  OracleSummary s;
  for (int k = 0; k < trials; ++k) {
    int n = std::uniform_int_distribution<int>(2, max_n)(rng);
    int len = std::uniform_int_distribution<int>(0, std::max(0, max_len))(rng);
    BraidWord w{n, {}};
    for (int i = 0; i < len; ++i) {
      int kind = std::uniform_int_distribution<int>(0, 2)(rng);
      int a = std::uniform_int_distribution<int>(1, n - 1)(rng);
      w.tokens.push_back({static_cast<Gen>(kind), a});
    }
    GrTuple t;
    for (int i = 0; i < n; ++i)
      t.push_back({std::uniform_int_distribution<int>(0, gr.g.order() - 1)(rng),
                   std::uniform_int_distribution<int>(0, gr.a.order() - 1)(rng)});
    ++s.trials;
    Report r = compare_actions(w, t, gr);
    if (r) ++s.passed;
    else s.failures.push_back(r.str());
  }
  return s;
}

}  // namespace bikoid
