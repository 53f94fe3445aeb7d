#pragma once

#include <algorithm>
#include <cstdlib>
#include <numeric>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "eulersq/square.hpp"

namespace eulersq {

// Letter squares reuse the integer grid: entry k stands for the k-th letter
// of its alphabet (1 = a resp. alpha). Letters may repeat within a rank;
// Latinness is not part of the type.
using LetterSquare = Square;

enum class Alphabet { latin, greek };

// One linear equation over the values of a single alphabet, stored as
// sum(coeffs[k] * value(letter k+1)) = 0 in canonical form: coefficients
// divided by their gcd, first nonzero coefficient positive.
struct LinearConstraint {
  Alphabet alphabet = Alphabet::latin;
  std::vector<int> coeffs;

  void canonicalize() {
    int g = 0;
    for (int c : coeffs) g = std::gcd(g, std::abs(c));
    if (g > 1)
      for (int& c : coeffs) c /= g;
    for (int c : coeffs) {
      if (c == 0) continue;
      if (c < 0)
        for (int& x : coeffs) x = -x;
      break;
    }
  }

  bool trivial() const {
    return std::all_of(coeffs.begin(), coeffs.end(), [](int c) { return c == 0; });
  }

  bool satisfied_by(const std::vector<int>& values) const {
    long long sum = 0;
    for (std::size_t k = 0; k < coeffs.size(); ++k)
      sum += static_cast<long long>(coeffs[k]) * values[k];
    return sum == 0;
  }

  friend bool operator==(const LinearConstraint&, const LinearConstraint&) = default;
};

// A pair of letter squares plus the value equations their ranks impose.
struct LetterSchema {
  LetterSquare latin;
  LetterSquare greek;
  std::vector<LinearConstraint> constraints;

  int order() const { return latin.order(); }
};

// Bijections from letters onto the two value sets: latin letters take the
// multiples 0, n, ..., (n-1)n, greek letters take 1..n.
struct ValueAssignment {
  std::vector<int> latin_values;
  std::vector<int> greek_values;

  friend bool operator==(const ValueAssignment&, const ValueAssignment&) = default;
};

namespace detail {

// A rank whose letter multiset is not the full alphabet must still sum to the
// whole-alphabet total; the difference of multiplicities is the equation.
inline std::optional<LinearConstraint> rank_constraint(Alphabet alphabet,
                                                       const std::vector<int>& letters,
                                                       int n) {
  LinearConstraint eq;
  eq.alphabet = alphabet;
  eq.coeffs.assign(n, -1);
  for (int v : letters) ++eq.coeffs[v - 1];
  if (eq.trivial()) return std::nullopt;
  eq.canonicalize();
  return eq;
}

inline void add_unique(std::vector<LinearConstraint>& list, const LinearConstraint& eq) {
  if (std::find(list.begin(), list.end(), eq) == list.end()) list.push_back(eq);
}

}  // namespace detail

// Equations forced by the two main diagonals. A diagonal containing the full
// alphabet contributes nothing; otherwise its letter sum must equal the
// alphabet sum, separately per alphabet.
inline std::vector<LinearConstraint> extract_diagonal_constraints(const LetterSchema& schema) {
  const int n = schema.order();
  std::vector<LinearConstraint> out;
  for (bool anti : {false, true}) {
    std::vector<int> latin_letters, greek_letters;
    for (int i = 1; i <= n; ++i) {
      int j = anti ? n + 1 - i : i;
      latin_letters.push_back(schema.latin.at(i, j));
      greek_letters.push_back(schema.greek.at(i, j));
    }
    if (auto eq = detail::rank_constraint(Alphabet::latin, latin_letters, n))
      detail::add_unique(out, *eq);
    if (auto eq = detail::rank_constraint(Alphabet::greek, greek_letters, n))
      detail::add_unique(out, *eq);
  }
  return out;
}

// Same extraction over every row and column; paired-letter squares posit
// exactly these equations.
inline std::vector<LinearConstraint> extract_line_constraints(const LetterSchema& schema) {
  const int n = schema.order();
  std::vector<LinearConstraint> out;
  auto scan = [&](const LetterSquare& grid, Alphabet alphabet) {
    for (int i = 1; i <= n; ++i)
      if (auto eq = detail::rank_constraint(alphabet, grid.row(i), n))
        detail::add_unique(out, *eq);
    for (int j = 1; j <= n; ++j)
      if (auto eq = detail::rank_constraint(alphabet, grid.column(j), n))
        detail::add_unique(out, *eq);
  };
  scan(schema.latin, Alphabet::latin);
  scan(schema.greek, Alphabet::greek);
  return out;
}

// Exhaustive enumeration of all value assignments satisfying the schema
// constraints, in lexicographic order of (latin values, greek values).
// Constraints never mix alphabets, so the two sides filter independently.
inline std::vector<ValueAssignment> solve_values(const LetterSchema& schema, int n) {
  std::vector<int> latin_base(n), greek_base(n);
  for (int k = 0; k < n; ++k) {
    latin_base[k] = k * n;
    greek_base[k] = k + 1;
  }

  auto admissible = [&](Alphabet alphabet, const std::vector<int>& values) {
    for (const LinearConstraint& eq : schema.constraints)
      if (eq.alphabet == alphabet && !eq.satisfied_by(values)) return false;
    return true;
  };

  std::vector<std::vector<int>> latin_ok, greek_ok;
  std::vector<int> perm = latin_base;
  do {
    if (admissible(Alphabet::latin, perm)) latin_ok.push_back(perm);
  } while (std::next_permutation(perm.begin(), perm.end()));
  perm = greek_base;
  do {
    if (admissible(Alphabet::greek, perm)) greek_ok.push_back(perm);
  } while (std::next_permutation(perm.begin(), perm.end()));

  std::vector<ValueAssignment> out;
  out.reserve(latin_ok.size() * greek_ok.size());
  for (const auto& lv : latin_ok)
    for (const auto& gv : greek_ok) out.push_back({lv, gv});
  return out;
}

// Numeric square induced by an assignment: each cell is the sum of its latin
// and greek letter values.
inline Square evaluate_schema(const LetterSchema& schema, const ValueAssignment& values) {
  const int n = schema.order();
  Square out(n);
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j)
      out.at(i, j) = values.latin_values[schema.latin.at(i, j) - 1] +
                     values.greek_values[schema.greek.at(i, j) - 1];
  return out;
}

// Mirror band for the greek-letter placement rule: a median row or column
// (odd orders only), or one of the two main diagonals.
struct MedianBand {
  enum class Kind { row, column, main_diagonal, anti_diagonal };

  Kind kind = Kind::main_diagonal;
  int index = 0;  // used by row/column bands; must be the median rank

  static MedianBand row_band(int index) { return {Kind::row, index}; }
  static MedianBand column_band(int index) { return {Kind::column, index}; }
  static MedianBand main_diagonal() { return {Kind::main_diagonal, 0}; }
  static MedianBand anti_diagonal() { return {Kind::anti_diagonal, 0}; }
};

namespace detail {

inline std::pair<int, int> mirror_cell(const MedianBand& band, int n, int i, int j) {
  switch (band.kind) {
    case MedianBand::Kind::row:
      return {2 * band.index - i, j};
    case MedianBand::Kind::column:
      return {i, 2 * band.index - j};
    case MedianBand::Kind::main_diagonal:
      return {j, i};
    case MedianBand::Kind::anti_diagonal:
      return {n + 1 - j, n + 1 - i};
  }
  throw std::logic_error("mirror_cell: unknown band kind");
}

}  // namespace detail

// Greek square derived from a latin letter square: give every cell the greek
// letter named after its latin letter, then exchange greek letters between
// cells mirrored across the band. Requires mirrored cells to hold distinct
// latin letters.
inline LetterSquare median_reflection(const LetterSquare& latin, const MedianBand& band) {
  const int n = latin.order();
  if (band.kind == MedianBand::Kind::row || band.kind == MedianBand::Kind::column) {
    if (n % 2 == 0)
      throw std::invalid_argument("median_reflection: even orders have no median row or column");
    if (band.index != (n + 1) / 2)
      throw std::invalid_argument("median_reflection: band index " + std::to_string(band.index) +
                                  " is not the median of order " + std::to_string(n));
  }
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j) {
      auto [mi, mj] = detail::mirror_cell(band, n, i, j);
      if ((mi != i || mj != j) && latin.at(i, j) == latin.at(mi, mj))
        throw std::invalid_argument(
            "median_reflection: mirrored cells (" + std::to_string(i) + "," +
            std::to_string(j) + ") and (" + std::to_string(mi) + "," + std::to_string(mj) +
            ") share letter " + std::to_string(latin.at(i, j)));
    }
  LetterSquare greek(n);
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j) {
      auto [mi, mj] = detail::mirror_cell(band, n, i, j);
      greek.at(i, j) = latin.at(mi, mj);
    }
  return greek;
}

}  // namespace eulersq
