#pragma once

#include <utility>
#include <vector>

#include "eulersq/letters.hpp"
#include "eulersq/square.hpp"
#include "eulersq/verify.hpp"

namespace eulersq {

namespace detail {

inline void require_satisfied(const LetterSchema& schema, const ValueAssignment& values,
                              const char* what) {
  for (const LinearConstraint& eq : schema.constraints) {
    const auto& side =
        eq.alphabet == Alphabet::latin ? values.latin_values : values.greek_values;
    if (!eq.satisfied_by(side))
      throw std::logic_error(std::string(what) + ": chosen values violate a schema constraint");
  }
}

}  // namespace detail

// The four order-3 magic squares reachable from the cyclic letter square with
// the greek letters mirrored across the middle column. Enumeration order is
// the canonical solve_values order.
inline std::vector<Square> construct_order3() {
  LetterSchema schema;
  schema.latin = Square::from_rows({{1, 2, 3}, {2, 3, 1}, {3, 1, 2}});
  schema.greek = median_reflection(schema.latin, MedianBand::column_band(2));
  schema.constraints = extract_diagonal_constraints(schema);
  std::vector<Square> out;
  for (const ValueAssignment& values : solve_values(schema, 3))
    out.push_back(evaluate_schema(schema, values));
  return out;
}

// Order-4 square from the diagonal-filled letter square: greek letters
// mirrored across the main diagonal, first column rotated to the back, values
// pinned by the resulting diagonal equations b+c = a+d and alpha+delta =
// beta+gamma.
inline Square construct_order4_diagonal() {
  LetterSchema schema;
  schema.latin = Square::from_rows({{1, 2, 3, 4}, {4, 3, 2, 1}, {2, 1, 4, 3}, {3, 4, 1, 2}});
  schema.greek = median_reflection(schema.latin, MedianBand::main_diagonal());
  schema.latin = rotate_columns_left(schema.latin, 1);
  schema.greek = rotate_columns_left(schema.greek, 1);
  schema.constraints = extract_diagonal_constraints(schema);
  ValueAssignment values{{0, 4, 8, 12}, {1, 2, 3, 4}};
  detail::require_satisfied(schema, values, "construct_order4_diagonal");
  return evaluate_schema(schema, values);
}

// The two order-4 squares built from conjugate letter pairs (two letters per
// rank, a+d = b+c). Rank balance supplies the constraints; the greek squares
// again come from the main-diagonal mirror.
inline std::pair<Square, Square> construct_order4_paired() {
  ValueAssignment values{{0, 4, 8, 12}, {1, 2, 3, 4}};
  auto build = [&](const std::vector<std::vector<int>>& latin_rows) {
    LetterSchema schema;
    schema.latin = Square::from_rows(latin_rows);
    schema.greek = median_reflection(schema.latin, MedianBand::main_diagonal());
    schema.constraints = extract_line_constraints(schema);
    for (const LinearConstraint& eq : extract_diagonal_constraints(schema))
      detail::add_unique(schema.constraints, eq);
    detail::require_satisfied(schema, values, "construct_order4_paired");
    return evaluate_schema(schema, values);
  };
  return {build({{1, 1, 4, 4}, {4, 4, 1, 1}, {2, 2, 3, 3}, {3, 3, 2, 2}}),
          build({{1, 4, 1, 4}, {2, 3, 2, 3}, {4, 1, 4, 1}, {3, 2, 3, 2}})};
}

// Order-5 square from the diagonal-completed letter square (top row in
// order, left diagonal filled so no rank repeats a letter), mirrored across
// the middle column, then rotated one column left. The diagonal equations
// force two interleaved arithmetic progressions.
inline Square construct_order5_diagonal() {
  LetterSchema schema;
  schema.latin = Square::from_rows({{1, 2, 3, 4, 5},
                                    {5, 3, 4, 1, 2},
                                    {4, 5, 2, 3, 1},
                                    {2, 4, 1, 5, 3},
                                    {3, 1, 5, 2, 4}});
  schema.greek = median_reflection(schema.latin, MedianBand::column_band(3));
  schema.latin = rotate_columns_left(schema.latin, 1);
  schema.greek = rotate_columns_left(schema.greek, 1);
  schema.constraints = extract_diagonal_constraints(schema);
  // d,b,a,c,e and alpha,beta,delta,epsilon,gamma in arithmetic progression.
  ValueAssignment values{{10, 5, 15, 0, 20}, {1, 2, 5, 3, 4}};
  detail::require_satisfied(schema, values, "construct_order5_diagonal");
  return evaluate_schema(schema, values);
}

// Order-5 square with the median-valued letter c repeated along the main
// diagonal and the other letters following alphabetically; greek letters
// mirrored across the middle row.
inline Square construct_order5_cyclic() {
  const int n = 5;
  LetterSchema schema;
  schema.latin = Square(n);
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j) schema.latin.at(i, j) = mod1(j - i + 3, n);
  schema.greek = median_reflection(schema.latin, MedianBand::row_band(3));
  schema.constraints = extract_diagonal_constraints(schema);
  ValueAssignment values{{0, 5, 10, 15, 20}, {1, 2, 3, 4, 5}};
  detail::require_satisfied(schema, values, "construct_order5_cyclic");
  return evaluate_schema(schema, values);
}

// Odd-order staircase rule: start directly below the center, walk diagonally
// down-right (wrapping), and after every n placements step two cells down.
inline Square staircase(int n) {
  if (n < 1 || n % 2 == 0)
    throw std::invalid_argument("staircase: order must be odd, got " + std::to_string(n));
  Square sq(n, 0);
  int r = mod1((n + 1) / 2 + 1, n);
  int c = (n + 1) / 2;
  for (int v = 1; v <= n * n; ++v) {
    sq.at(r, c) = v;
    if (v % n == 0) {
      r = mod1(r + 2, n);
    } else {
      r = mod1(r + 1, n);
      c = mod1(c + 1, n);
    }
  }
  return sq;
}

// Order-6 attempt from conjugate letter pairs (a+f = b+e = c+d per row,
// alpha+zeta = beta+epsilon = gamma+delta per column). Every row and column
// sums to 111, but both diagonals repeat a pair, so the result is semi-magic
// only; the report carries the failure.
inline std::pair<Square, VerificationReport> construct_order6_paired() {
  LetterSchema schema;
  schema.latin = Square::from_rows({{1, 1, 1, 6, 6, 6},
                                    {6, 6, 6, 1, 1, 1},
                                    {2, 2, 2, 5, 5, 5},
                                    {5, 5, 5, 2, 2, 2},
                                    {3, 3, 3, 4, 4, 4},
                                    {4, 4, 4, 3, 3, 3}});
  schema.greek = Square::from_rows({{1, 6, 2, 5, 3, 4},
                                    {1, 6, 2, 5, 3, 4},
                                    {1, 6, 2, 5, 3, 4},
                                    {6, 1, 5, 2, 4, 3},
                                    {6, 1, 5, 2, 4, 3},
                                    {6, 1, 5, 2, 4, 3}});
  schema.constraints = extract_line_constraints(schema);
  ValueAssignment values{{0, 6, 12, 18, 24, 30}, {1, 2, 3, 4, 5, 6}};
  detail::require_satisfied(schema, values, "construct_order6_paired");
  Square sq = evaluate_schema(schema, values);
  return {sq, verify(sq)};
}

}  // namespace eulersq
