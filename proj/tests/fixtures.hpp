#pragma once

#include <vector>

#include "eulersq/square.hpp"

// Classical reference grids used as frozen expectations across the suites.
namespace fixtures {

using eulersq::Square;

// Order-7 magic square with constant 175, decomposable into base/exponent grids.
inline Square order7_magic() {
  return Square::from_rows({{38, 14, 32, 1, 26, 44, 20},
                            {5, 23, 48, 17, 42, 11, 29},
                            {21, 39, 8, 33, 2, 27, 45},
                            {30, 6, 24, 49, 18, 36, 12},
                            {46, 15, 40, 9, 34, 3, 28},
                            {13, 31, 7, 25, 43, 19, 37},
                            {22, 47, 16, 41, 10, 35, 4}});
}

// Order-6 magic square with constant 111 (magic despite order 6 admitting no
// Graeco-Latin pair).
inline Square order6_magic() {
  return Square::from_rows({{3, 36, 30, 4, 11, 27},
                            {22, 13, 35, 12, 14, 15},
                            {16, 18, 8, 31, 17, 21},
                            {28, 20, 6, 29, 19, 9},
                            {32, 23, 25, 2, 24, 5},
                            {10, 1, 7, 33, 26, 34}});
}

// The four order-3 magic squares produced by the letter construction, in
// their historical numbering.
inline std::vector<Square> order3_magic() {
  return {Square::from_rows({{2, 9, 4}, {7, 5, 3}, {6, 1, 8}}),
          Square::from_rows({{8, 3, 4}, {1, 5, 9}, {6, 7, 2}}),
          Square::from_rows({{2, 7, 6}, {9, 5, 1}, {4, 3, 8}}),
          Square::from_rows({{8, 1, 6}, {3, 5, 7}, {4, 9, 2}})};
}

inline Square order4_diagonal() {
  return Square::from_rows(
      {{8, 10, 15, 1}, {11, 5, 4, 14}, {2, 16, 9, 7}, {13, 3, 6, 12}});
}

inline Square order4_paired_first() {
  return Square::from_rows(
      {{1, 4, 14, 15}, {13, 16, 2, 3}, {8, 5, 11, 10}, {12, 9, 7, 6}});
}

inline Square order4_paired_second() {
  return Square::from_rows(
      {{1, 14, 4, 15}, {8, 11, 5, 10}, {13, 2, 16, 3}, {12, 7, 9, 6}});
}

inline Square order5_diagonal() {
  return Square::from_rows({{8, 20, 2, 21, 14},
                            {16, 3, 15, 9, 22},
                            {25, 7, 19, 13, 1},
                            {4, 11, 23, 17, 10},
                            {12, 24, 6, 5, 18}});
}

inline Square order5_cyclic() {
  return Square::from_rows({{14, 20, 21, 2, 8},
                            {10, 11, 17, 23, 4},
                            {1, 7, 13, 19, 25},
                            {22, 3, 9, 15, 16},
                            {18, 24, 5, 6, 12}});
}

inline Square order5_staircase() {
  return Square::from_rows({{11, 24, 7, 20, 3},
                            {4, 12, 25, 8, 16},
                            {17, 5, 13, 21, 9},
                            {10, 18, 1, 14, 22},
                            {23, 6, 19, 2, 15}});
}

// Hand-applied staircase rule for order 3.
inline Square order3_staircase() {
  return Square::from_rows({{4, 9, 2}, {3, 5, 7}, {8, 1, 6}});
}

// simple_march(6) after swapping the 3/6 rectangle at rows 2,5 and columns 2,5.
inline Square order6_swapped() {
  return Square::from_rows({{1, 2, 3, 4, 5, 6},
                            {2, 6, 4, 5, 3, 1},
                            {3, 4, 5, 6, 1, 2},
                            {4, 5, 6, 1, 2, 3},
                            {5, 3, 1, 2, 6, 4},
                            {6, 1, 2, 3, 4, 5}});
}

// A classical order-6 attempt meeting the row and column conditions but
// repeating two pairs: (2,6) and (4,5) appear twice, (2,5) and (4,6) never.
inline Square order6_attempt_base() {
  return Square::from_rows({{1, 2, 3, 4, 5, 6},
                            {2, 3, 6, 5, 1, 4},
                            {3, 4, 1, 2, 6, 5},
                            {4, 6, 5, 3, 2, 1},
                            {5, 1, 2, 6, 4, 3},
                            {6, 5, 4, 1, 3, 2}});
}

inline Square order6_attempt_exponent() {
  return Square::from_rows({{1, 6, 4, 5, 3, 2},
                            {2, 1, 5, 4, 6, 3},
                            {3, 5, 2, 6, 4, 1},
                            {4, 3, 6, 2, 1, 5},
                            {5, 4, 3, 1, 2, 6},
                            {6, 2, 1, 3, 5, 4}});
}

// Orthogonal order-4 pair from the diagonal letter construction.
inline Square order4_pair_base() {
  return Square::from_rows({{1, 2, 3, 4}, {4, 3, 2, 1}, {2, 1, 4, 3}, {3, 4, 1, 2}});
}

inline Square order4_pair_exponent() {
  return Square::from_rows({{1, 4, 2, 3}, {2, 3, 1, 4}, {3, 2, 4, 1}, {4, 1, 3, 2}});
}

// An irregular order-7 complete square and the placement formulas read off it.
inline Square order7_complete_base() {
  return Square::from_rows({{1, 2, 3, 4, 5, 6, 7},
                            {2, 3, 1, 5, 4, 7, 6},
                            {3, 6, 5, 7, 1, 4, 2},
                            {4, 5, 6, 1, 7, 2, 3},
                            {5, 1, 7, 2, 6, 3, 4},
                            {6, 7, 4, 3, 2, 5, 1},
                            {7, 4, 2, 6, 3, 1, 5}});
}

inline Square order7_complete_exponent() {
  return Square::from_rows({{1, 6, 4, 3, 7, 5, 2},
                            {2, 7, 5, 4, 1, 6, 3},
                            {3, 1, 6, 5, 2, 7, 4},
                            {4, 2, 7, 6, 3, 1, 5},
                            {5, 3, 1, 7, 4, 2, 6},
                            {6, 4, 2, 1, 5, 3, 7},
                            {7, 5, 3, 2, 6, 4, 1}});
}

// Row e: the base found in each column at the cells carrying exponent e.
inline std::vector<std::vector<int>> order7_placement_formulas() {
  return {{1, 6, 7, 3, 4, 2, 5},
          {2, 5, 4, 6, 1, 3, 7},
          {3, 1, 2, 4, 7, 5, 6},
          {4, 7, 3, 5, 6, 1, 2},
          {5, 4, 1, 7, 2, 6, 3},
          {6, 2, 5, 1, 3, 7, 4},
          {7, 3, 6, 2, 5, 4, 1}};
}

// Exponent grids of the order-5 complete squares over the simple march: the
// plain composition of directrix 1 5 4 3 2, and its pandiagonal row
// reordering.
inline Square order5_complete_exponent() {
  return Square::from_rows({{1, 5, 4, 3, 2},
                            {2, 1, 5, 4, 3},
                            {3, 2, 1, 5, 4},
                            {4, 3, 2, 1, 5},
                            {5, 4, 3, 2, 1}});
}

inline Square order5_pandiagonal_exponent() {
  return Square::from_rows({{1, 5, 4, 3, 2},
                            {3, 2, 1, 5, 4},
                            {5, 4, 3, 2, 1},
                            {2, 1, 5, 4, 3},
                            {4, 3, 2, 1, 5}});
}

// The unique order-3 complete square's exponent grid (directrix 1 3 2).
inline Square order3_complete_exponent() {
  return Square::from_rows({{1, 3, 2}, {2, 1, 3}, {3, 2, 1}});
}

inline std::vector<std::vector<int>> order5_directrices() {
  return {{1, 3, 5, 2, 4}, {1, 4, 2, 5, 3}, {1, 5, 4, 3, 2}};
}

inline std::vector<std::vector<int>> order9_ap_directrices() {
  return {{1, 3, 5, 7, 9, 2, 4, 6, 8},
          {1, 6, 2, 7, 3, 8, 4, 9, 5},
          {1, 9, 8, 7, 6, 5, 4, 3, 2}};
}

}  // namespace fixtures
