#pragma once

#include <array>
#include <cstdint>
#include <numeric>
#include <set>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "eulersq/square.hpp"

namespace eulersq {

// Placement formula for one exponent over the cyclic (simple-march) square:
// term x_t is the base selected in column t. Normalized so x_1 = 1; the terms
// are a permutation of 1..n and the row offsets x_t - t are pairwise distinct
// mod n (each term comes from a different row).
struct Directrix {
  int order = 0;
  std::vector<int> terms;

  friend bool operator==(const Directrix&, const Directrix&) = default;
  friend auto operator<=>(const Directrix& a, const Directrix& b) {
    return a.terms <=> b.terms;
  }
};

inline bool directrix_valid(const Directrix& d) {
  const int n = d.order;
  if (n < 1 || static_cast<int>(d.terms.size()) != n) return false;
  if (d.terms[0] != 1) return false;
  std::vector<bool> term_seen(n + 1, false), offset_seen(n, false);
  for (int t = 1; t <= n; ++t) {
    int x = d.terms[t - 1];
    if (x < 1 || x > n || term_seen[x]) return false;
    term_seen[x] = true;
    int off = mod1(x - t + 1, n) - 1;
    if (offset_seen[off]) return false;
    offset_seen[off] = true;
  }
  return true;
}

inline void require_valid(const Directrix& d, const char* what) {
  if (!directrix_valid(d))
    throw std::invalid_argument(std::string(what) + ": not a valid directrix");
}

// All normalized directrices of simple_march(n), lexicographically sorted.
// Column-by-column backtracking over unused terms and unused row offsets.
inline std::vector<Directrix> enumerate_directrices(int n) {
  if (n < 1) throw std::invalid_argument("enumerate_directrices: order must be >= 1");
  std::vector<Directrix> out;
  std::vector<int> terms(n);
  std::vector<bool> term_used(n + 1, false), offset_used(n, false);
  auto dfs = [&](auto&& self, int t) -> void {
    if (t > n) {
      out.push_back({n, terms});
      return;
    }
    int hi = (t == 1) ? 1 : n;  // normalization pins x_1 = 1
    for (int x = 1; x <= hi; ++x) {
      if (term_used[x]) continue;
      int off = mod1(x - t + 1, n) - 1;
      if (offset_used[off]) continue;
      term_used[x] = true;
      offset_used[off] = true;
      terms[t - 1] = x;
      self(self, t + 1);
      term_used[x] = false;
      offset_used[off] = false;
    }
  };
  dfs(dfs, 1);
  return out;
}

// Arithmetic-progression directrices x_t = 1 + (t-1)d. The step must be
// coprime to n (terms cover 1..n) and d-1 coprime to n as well (row offsets
// (d-1)(t-1) cover all residues).
inline std::vector<Directrix> ap_directrices(int n) {
  std::vector<Directrix> out;
  for (int d = 2; d <= n - 1; ++d) {
    if (std::gcd(d, n) != 1 || std::gcd(d - 1, n) != 1) continue;
    Directrix dir{n, std::vector<int>(n)};
    for (int t = 1; t <= n; ++t) dir.terms[t - 1] = mod1(1 + (t - 1) * d, n);
    out.push_back(std::move(dir));
  }
  return out;
}

// Affine rewriting rule (T, X) = (a.t + b.x + c, ...) mod n: the new formula
// carries term X at position T. Rules I..XI are the combination table of the
// two elementary exchanges; R3 is the doubling rule, valid for odd orders.
struct TransformRule {
  std::string_view id;
  int t_from_t, t_from_x, t_const;
  int x_from_t, x_from_x, x_const;
  bool odd_only;
};

inline constexpr std::array<TransformRule, 12> kTransformRules{{
    {"I", 0, 1, 0, 1, 0, 0, false},     // T = x,       X = t
    {"II", 1, 0, 0, 1, -1, 1, false},   // T = t,       X = 1 + t - x
    {"III", 1, -1, 1, 1, 0, 0, false},  // T = 1+t-x,   X = t
    {"IV", 0, 1, 0, -1, 1, 1, false},   // T = x,       X = 1 + x - t
    {"V", -1, 1, 1, 0, 1, 0, false},    // T = 1+x-t,   X = x
    {"VI", 1, -1, 1, 0, -1, 2, false},  // T = 1+t-x,   X = 2 - x
    {"VII", 0, -1, 2, 1, -1, 1, false}, // T = 2-x,     X = 1 + t - x
    {"VIII", -1, 1, 1, -1, 0, 2, false},// T = 1+x-t,   X = 2 - t
    {"IX", -1, 0, 2, -1, 1, 1, false},  // T = 2-t,     X = 1 + x - t
    {"X", 0, -1, 2, -1, 0, 2, false},   // T = 2-x,     X = 2 - t
    {"XI", -1, 0, 2, 0, -1, 2, false},  // T = 2-t,     X = 2 - x
    {"R3", 2, 0, -1, 0, 2, -1, true},   // T = 2t-1,    X = 2x - 1
}};

inline const TransformRule& find_rule(std::string_view id) {
  for (const TransformRule& rule : kTransformRules)
    if (rule.id == id) return rule;
  throw std::invalid_argument("unknown transform rule '" + std::string(id) + "'");
}

inline Directrix apply_rule(const Directrix& d, const TransformRule& rule) {
  const int n = d.order;
  if (rule.odd_only && n % 2 == 0)
    throw std::invalid_argument("apply_rule: rule " + std::string(rule.id) +
                                " requires an odd order");
  require_valid(d, "apply_rule");
  Directrix out{n, std::vector<int>(n, 0)};
  for (int t = 1; t <= n; ++t) {
    int x = d.terms[t - 1];
    int T = mod1(rule.t_from_t * t + rule.t_from_x * x + rule.t_const, n);
    int X = mod1(rule.x_from_t * t + rule.x_from_x * x + rule.x_const, n);
    out.terms[T - 1] = X;
  }
  if (!directrix_valid(out))
    throw std::logic_error("apply_rule: rule " + std::string(rule.id) +
                           " produced an invalid directrix");
  return out;
}

inline Directrix apply_rule(const Directrix& d, std::string_view rule_id) {
  return apply_rule(d, find_rule(rule_id));
}

// Position t keeps its slot, the term flips to (t+1) - x_t.
inline Directrix counter_directrix(const Directrix& d) { return apply_rule(d, "II"); }

// Smallest rule-closed set containing d (rules I..XI, plus R3 when the order
// is odd), iterated to a fixpoint; lexicographically sorted.
inline std::vector<Directrix> closure(const Directrix& d) {
  require_valid(d, "closure");
  std::set<Directrix> seen{d};
  std::vector<Directrix> queue{d};
  while (!queue.empty()) {
    Directrix cur = std::move(queue.back());
    queue.pop_back();
    for (const TransformRule& rule : kTransformRules) {
      if (rule.odd_only && cur.order % 2 == 0) continue;
      Directrix next = apply_rule(cur, rule);
      if (seen.insert(next).second) queue.push_back(next);
    }
  }
  return {seen.begin(), seen.end()};
}

// Row k carries the directrix shifted by k-1: the placement formulas for all
// n exponents stacked in order. Every row and column holds 1..n.
inline LatinSquare directrix_square(const Directrix& d) {
  require_valid(d, "directrix_square");
  const int n = d.order;
  Square out(n);
  for (int k = 1; k <= n; ++k)
    for (int t = 1; t <= n; ++t) out.at(k, t) = mod1(d.terms[t - 1] + k - 1, n);
  return out;
}

// Complete (Graeco-Latin) square over the simple march: the first-row
// exponents equal the directrix and each column's exponents continue
// naturally downwards. Orthogonal by the directrix row-offset condition.
inline GraecoLatinSquare complete_square(const Directrix& d) {
  require_valid(d, "complete_square");
  const int n = d.order;
  GraecoLatinSquare g{simple_march(n), Square(n)};
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j) g.exponent.at(i, j) = mod1(d.terms[j - 1] + i - 1, n);
  return g;
}

// Row reordering of a pair square; pandiagonality of the result is the
// caller's check via compose_numeric + verify.
inline GraecoLatinSquare pandiagonal_reorder(const GraecoLatinSquare& g,
                                             const std::vector<int>& row_order) {
  return {permute_rows(g.base, row_order), permute_rows(g.exponent, row_order)};
}

}  // namespace eulersq
