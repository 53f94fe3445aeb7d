#pragma once

#include <algorithm>
#include <array>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "eulersq/square.hpp"

namespace eulersq {

struct LatinReport {
  bool latin = false;
  std::string violation;  // empty when latin
};

// True iff every row and column is a permutation of 1..n. On failure the
// report names the first violation found (row-major order of discovery).
inline LatinReport is_latin(const Square& sq) {
  const int n = sq.order();
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j) {
      int v = sq.at(i, j);
      if (v < 1 || v > n)
        return {false, "value " + std::to_string(v) + " at (" + std::to_string(i) +
                           "," + std::to_string(j) + ") outside 1.." + std::to_string(n)};
    }
  for (int i = 1; i <= n; ++i) {
    std::vector<bool> seen(n + 1, false);
    for (int j = 1; j <= n; ++j) {
      int v = sq.at(i, j);
      if (seen[v])
        return {false, "row " + std::to_string(i) + " repeats value " + std::to_string(v)};
      seen[v] = true;
    }
  }
  for (int j = 1; j <= n; ++j) {
    std::vector<bool> seen(n + 1, false);
    for (int i = 1; i <= n; ++i) {
      int v = sq.at(i, j);
      if (seen[v])
        return {false, "column " + std::to_string(j) + " repeats value " + std::to_string(v)};
      seen[v] = true;
    }
  }
  return {true, ""};
}

struct VerificationReport {
  int order = 0;
  long long target = 0;
  std::vector<long long> row_sums;
  std::vector<long long> column_sums;
  std::array<long long, 2> diagonal_sums{0, 0};  // [0] top-left..bottom-right
  bool checked_broken = false;
  std::vector<long long> broken_down_sums;  // parallel to the main diagonal
  std::vector<long long> broken_up_sums;    // parallel to the anti-diagonal
  bool values_are_1_to_n2 = false;
  std::vector<int> duplicates;  // values occurring more than once, ascending
  bool is_semi_magic = false;   // every row and column hits the target
  bool is_magic = false;        // semi-magic + both diagonals + content is 1..n^2
  bool is_pandiagonal = false;  // magic + all 2(n-1) broken diagonals
};

// Sums every rank of the square against `target` (default: the magic
// constant for its order). Never throws: failures land in the report.
inline VerificationReport verify(const Square& sq, std::optional<long long> target = {},
                                 bool check_broken = false) {
  const int n = sq.order();
  VerificationReport rep;
  rep.order = n;
  rep.target = target.value_or(magic_constant(n));
  rep.row_sums.assign(n, 0);
  rep.column_sums.assign(n, 0);
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j) {
      rep.row_sums[i - 1] += sq.at(i, j);
      rep.column_sums[j - 1] += sq.at(i, j);
    }
  for (int i = 1; i <= n; ++i) {
    rep.diagonal_sums[0] += sq.at(i, i);
    rep.diagonal_sums[1] += sq.at(i, n + 1 - i);
  }

  std::map<int, int> counts;
  for (int v : sq.cells()) ++counts[v];
  rep.values_are_1_to_n2 = static_cast<int>(counts.size()) == n * n &&
                           counts.begin()->first == 1 && counts.rbegin()->first == n * n;
  for (const auto& [v, k] : counts)
    if (k > 1) {
      rep.duplicates.push_back(v);
      rep.values_are_1_to_n2 = false;
    }

  auto all_hit = [&](const std::vector<long long>& sums) {
    return std::all_of(sums.begin(), sums.end(),
                       [&](long long s) { return s == rep.target; });
  };
  rep.is_semi_magic = all_hit(rep.row_sums) && all_hit(rep.column_sums);
  rep.is_magic = rep.is_semi_magic && rep.diagonal_sums[0] == rep.target &&
                 rep.diagonal_sums[1] == rep.target && rep.values_are_1_to_n2;

  if (check_broken) {
    rep.checked_broken = true;
    for (int s = 1; s <= n - 1; ++s) {
      long long down = 0, up = 0;
      for (int i = 1; i <= n; ++i) {
        down += sq.at(i, mod1(i + s, n));
        up += sq.at(i, mod1(n + 1 - i + s, n));
      }
      rep.broken_down_sums.push_back(down);
      rep.broken_up_sums.push_back(up);
    }
    rep.is_pandiagonal = rep.is_magic && all_hit(rep.broken_down_sums) &&
                         all_hit(rep.broken_up_sums);
  }
  return rep;
}

struct OrthogonalityReport {
  bool orthogonal = false;
  // Pairs (A-value, B-value) seen more than once / never, ascending.
  std::vector<std::pair<int, int>> duplicate_pairs;
  std::vector<std::pair<int, int>> missing_pairs;
};

// Two same-order squares are orthogonal when superposing them yields all n^2
// ordered pairs exactly once.
inline OrthogonalityReport orthogonality_check(const Square& a, const Square& b) {
  const int n = a.order();
  if (b.order() != n)
    throw std::invalid_argument("orthogonality_check: order mismatch " +
                                std::to_string(n) + " vs " + std::to_string(b.order()));
  OrthogonalityReport rep;
  std::map<std::pair<int, int>, int> counts;
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j) ++counts[{a.at(i, j), b.at(i, j)}];
  for (const auto& [pair, k] : counts)
    if (k > 1) rep.duplicate_pairs.push_back(pair);
  for (int u = 1; u <= n; ++u)
    for (int v = 1; v <= n; ++v)
      if (!counts.count({u, v})) rep.missing_pairs.push_back({u, v});
  rep.orthogonal = rep.duplicate_pairs.empty() && rep.missing_pairs.empty();
  return rep;
}

struct GraecoReport {
  LatinReport base_report;
  LatinReport exponent_report;
  OrthogonalityReport orthogonality;
  bool valid = false;
};

inline GraecoReport check_graeco(const GraecoLatinSquare& g) {
  GraecoReport rep;
  if (g.base.order() != g.exponent.order())
    throw std::invalid_argument("check_graeco: base and exponent orders differ");
  rep.base_report = is_latin(g.base);
  rep.exponent_report = is_latin(g.exponent);
  rep.orthogonality = orthogonality_check(g.base, g.exponent);
  rep.valid = rep.base_report.latin && rep.exponent_report.latin &&
              rep.orthogonality.orthogonal;
  return rep;
}

// Collapses a Graeco-Latin square to numbers via the value codec. The result
// contains each of 1..n^2 once and is semi-magic; the diagonals carry no
// guarantee.
inline Square compose_numeric(const GraecoLatinSquare& g) {
  GraecoReport rep = check_graeco(g);
  if (!rep.valid) {
    std::string why = !rep.base_report.latin        ? "base: " + rep.base_report.violation
                      : !rep.exponent_report.latin ? "exponent: " + rep.exponent_report.violation
                                                   : "pairs are not all distinct";
    throw std::invalid_argument("compose_numeric: invalid Graeco-Latin square (" + why + ")");
  }
  const int n = g.order();
  Square out(n);
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j)
      out.at(i, j) = encode(g.base.at(i, j), g.exponent.at(i, j), n);
  return out;
}

struct AnalyzeReport {
  GraecoLatinSquare grid;
  GraecoReport check;
  bool belongs = false;  // both component grids Latin, all pairs distinct
};

// Decodes a numeric square holding 1..n^2 into its (base, exponent) grid and
// reports whether that pair grid is a valid Graeco-Latin square.
inline AnalyzeReport analyze_square(const Square& sq) {
  const int n = sq.order();
  std::vector<bool> seen(static_cast<std::size_t>(n) * n + 1, false);
  for (int v : sq.cells()) {
    if (v < 1 || v > n * n || seen[v])
      throw std::invalid_argument("analyze_square: cell values are not 1.." +
                                  std::to_string(n * n) + " exactly once");
    seen[v] = true;
  }
  AnalyzeReport rep;
  rep.grid.base = Square(n);
  rep.grid.exponent = Square(n);
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j) {
      BaseExponent be = decode(sq.at(i, j), n);
      rep.grid.base.at(i, j) = be.base;
      rep.grid.exponent.at(i, j) = be.exponent;
    }
  rep.check = check_graeco(rep.grid);
  rep.belongs = rep.check.valid;
  return rep;
}

}  // namespace eulersq
