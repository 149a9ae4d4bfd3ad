#pragma once

#include <cctype>
#include <string>
#include <vector>

#include "bikoid/perm.hpp"
#include "bikoid/report.hpp"

namespace bikoid {

enum class Gen { SPlus, SMinus, V };

// One generator; `a` is the 1-based left strand.
struct Token {
  Gen kind;
  int a;
  bool operator==(Token const& o) const { return kind == o.kind && a == o.a; }
};

// Word in the monoid generated by S+_a, S-_a, V_a on n strands.  The product
// BB' stacks B above B', so tokens are read left to right.
struct BraidWord {
  int n = 1;
  std::vector<Token> tokens;

  bool operator==(BraidWord const& o) const { return n == o.n && tokens == o.tokens; }
  BraidWord operator*(BraidWord const& o) const {
    if (n != o.n) throw StructuralError("strand count mismatch");
    BraidWord r = *this;
    r.tokens.insert(r.tokens.end(), o.tokens.begin(), o.tokens.end());
    return r;
  }
};

inline std::string to_string(Token t) {
  switch (t.kind) {
    case Gen::SPlus: return "S+" + std::to_string(t.a);
    case Gen::SMinus: return "S-" + std::to_string(t.a);
    default: return "V" + std::to_string(t.a);
  }
}

inline std::string to_string(BraidWord const& w) {
  std::string s;
  for (std::size_t i = 0; i < w.tokens.size(); ++i) s += (i ? " " : "") + to_string(w.tokens[i]);
  return s;
}

// Grammar: whitespace separated S+k, S-k, Vk (any case); sk means S+k and
// sk' means S-k.
inline BraidWord parse_word(std::string const& text, int n) {
  if (n < 1) throw ParseError("strand count must be positive", 0);
  BraidWord w;
  w.n = n;
  std::size_t i = 0;
  while (i < text.size()) {
    if (std::isspace(static_cast<unsigned char>(text[i]))) {
      ++i;
      continue;
    }
    std::size_t start = i;
    while (i < text.size() && !std::isspace(static_cast<unsigned char>(text[i]))) ++i;
    std::string tok = text.substr(start, i - start);
    std::string low;
    for (char c : tok) low += static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
    Gen kind;
    std::size_t p = 1;
    bool prime = false;
    if (low[0] == 'v') {
      kind = Gen::V;
    } else if (low[0] == 's') {
      if (low.size() > 1 && low[1] == '+') kind = Gen::SPlus, p = 2;
      else if (low.size() > 1 && low[1] == '-') kind = Gen::SMinus, p = 2;
      else kind = Gen::SPlus;
      if (p == 1 && low.back() == '\'') prime = true, kind = Gen::SMinus;
    } else {
      throw ParseError("unknown generator '" + tok + "'", start);
    }
    std::string digits = low.substr(p, low.size() - p - (prime ? 1 : 0));
    if (digits.empty() || digits.size() > 6)
      throw ParseError("bad strand index in '" + tok + "'", start);
    for (char c : digits)
      if (!std::isdigit(static_cast<unsigned char>(c)))
        throw ParseError("bad strand index in '" + tok + "'", start);
    int a = std::stoi(digits);
    if (a < 1 || a > n - 1)
      throw ParseError("index " + std::to_string(a) + " out of range for " + std::to_string(n) +
                           " strands",
                       start);
    w.tokens.push_back({kind, a});
  }
  return w;
}

inline BraidWord make_word(int n, std::vector<Token> tokens) {
  for (auto const& t : tokens)
    if (t.a < 1 || t.a > n - 1) throw StructuralError("generator index out of range");
  return {n, std::move(tokens)};
}

// Every generator goes to the transposition of a and a+1; products use f.g.
inline Perm underlying_permutation(BraidWord const& w) {
  Perm p = perm_identity(w.n);
  for (auto const& t : w.tokens) p = perm_dot(p, transposition(w.n, t.a - 1));
  return p;
}

// Formal inverse: reverse and exchange S+ with S-.
inline BraidWord inverse_word(BraidWord const& w) {
  BraidWord r{w.n, {}};
  for (auto it = w.tokens.rbegin(); it != w.tokens.rend(); ++it) {
    Token t = *it;
    if (t.kind == Gen::SPlus) t.kind = Gen::SMinus;
    else if (t.kind == Gen::SMinus) t.kind = Gen::SPlus;
    r.tokens.push_back(t);
  }
  return r;
}

}  // namespace bikoid
