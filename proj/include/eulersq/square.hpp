#pragma once

#include <algorithm>
#include <stdexcept>
#include <string>
#include <vector>

namespace eulersq {

// All public indices and cell values are 1-based. Modular arithmetic maps
// back into 1..n through mod1.
inline int mod1(int v, int n) {
  int m = (v - 1) % n;
  if (m < 0) m += n;
  return m + 1;
}

// n x n integer grid, row-major. Carrier for numeric magic squares, Latin
// squares and letter squares alike.
class Square {
 public:
  Square() = default;

  explicit Square(int order, int fill = 0) {
    if (order < 1) throw std::invalid_argument("Square: order must be >= 1");
    n_ = order;
    cells_.assign(static_cast<std::size_t>(order) * order, fill);
  }

  static Square from_rows(const std::vector<std::vector<int>>& rows) {
    Square sq(static_cast<int>(rows.size()));
    for (int r = 1; r <= sq.n_; ++r) {
      if (static_cast<int>(rows[r - 1].size()) != sq.n_)
        throw std::invalid_argument("Square: row " + std::to_string(r) +
                                    " has " + std::to_string(rows[r - 1].size()) +
                                    " entries, expected " + std::to_string(sq.n_));
      for (int c = 1; c <= sq.n_; ++c) sq.at(r, c) = rows[r - 1][c - 1];
    }
    return sq;
  }

  int order() const { return n_; }

  int at(int r, int c) const { return cells_[index(r, c)]; }
  int& at(int r, int c) { return cells_[index(r, c)]; }

  std::vector<int> row(int r) const {
    std::vector<int> out(n_);
    for (int c = 1; c <= n_; ++c) out[c - 1] = at(r, c);
    return out;
  }

  std::vector<int> column(int c) const {
    std::vector<int> out(n_);
    for (int r = 1; r <= n_; ++r) out[r - 1] = at(r, c);
    return out;
  }

  const std::vector<int>& cells() const { return cells_; }

  friend bool operator==(const Square&, const Square&) = default;

 private:
  std::size_t index(int r, int c) const {
    if (r < 1 || r > n_ || c < 1 || c > n_)
      throw std::out_of_range("Square: index (" + std::to_string(r) + "," +
                              std::to_string(c) + ") outside order " +
                              std::to_string(n_));
    return static_cast<std::size_t>(r - 1) * n_ + (c - 1);
  }

  int n_ = 0;
  std::vector<int> cells_;
};

// A Square whose rows and columns are each a permutation of 1..n. The alias
// documents intent in signatures; is_latin() in verify.hpp enforces it.
using LatinSquare = Square;

// Superposition of two Latin squares: Euler's latin numbers carrying greek
// numbers as exponents.
struct GraecoLatinSquare {
  Square base;
  Square exponent;

  int order() const { return base.order(); }

  friend bool operator==(const GraecoLatinSquare&, const GraecoLatinSquare&) = default;
};

// Common sum of each rank of an n x n magic square: n(1+n^2)/2.
inline long long magic_constant(int n) {
  if (n < 1) throw std::invalid_argument("magic_constant: order must be >= 1");
  long long x = n;
  return x * (1 + x * x) / 2;
}

struct BaseExponent {
  int base = 0;
  int exponent = 0;

  friend bool operator==(const BaseExponent&, const BaseExponent&) = default;
};

// Value codec: every v in 1..n^2 splits as (base-1)*n + exponent with
// base, exponent in 1..n. Exponents run 1..n, never 0; the n-multiples
// 0, n, ..., (n-1)n are the base side.
inline int encode(int base, int exponent, int n) {
  if (n < 1) throw std::invalid_argument("encode: order must be >= 1");
  if (base < 1 || base > n)
    throw std::out_of_range("encode: base " + std::to_string(base) +
                            " outside 1.." + std::to_string(n));
  if (exponent < 1 || exponent > n)
    throw std::out_of_range("encode: exponent " + std::to_string(exponent) +
                            " outside 1.." + std::to_string(n));
  return (base - 1) * n + exponent;
}

inline BaseExponent decode(int value, int n) {
  if (n < 1) throw std::invalid_argument("decode: order must be >= 1");
  if (value < 1 || value > n * n)
    throw std::out_of_range("decode: value " + std::to_string(value) +
                            " outside 1.." + std::to_string(n * n));
  return {(value - 1) / n + 1, (value - 1) % n + 1};
}

// Cyclic Latin square: cell(i,j) = i+j-1 (mod n). First row and column run
// 1..n in natural order.
inline LatinSquare simple_march(int n) {
  Square sq(n);
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j) sq.at(i, j) = mod1(i + j - 1, n);
  return sq;
}

namespace detail {

// Tiles the grid with a w x w first member; the block at block-row I and
// block-column J carries the member shifted by w*(I+J), wrapped mod n.
inline LatinSquare block_march(int n, const Square& member, const char* what) {
  const int w = member.order();
  if (n < w || n % w != 0)
    throw std::invalid_argument(std::string(what) + ": order " +
                                std::to_string(n) + " not divisible by " +
                                std::to_string(w));
  Square sq(n);
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j) {
      int shift = w * ((i - 1) / w + (j - 1) / w);
      sq.at(i, j) = mod1(member.at((i - 1) % w + 1, (j - 1) % w + 1) + shift, n);
    }
  return sq;
}

}  // namespace detail

inline LatinSquare double_march(int n) {
  return detail::block_march(n, Square::from_rows({{1, 2}, {2, 1}}), "double_march");
}

inline LatinSquare triple_march(int n) {
  // The only 3x3 first member once the first row and column are fixed.
  return detail::block_march(n, Square::from_rows({{1, 2, 3}, {2, 3, 1}, {3, 1, 2}}),
                             "triple_march");
}

enum class QuadrupleVariant { I, II, III, IV };

inline LatinSquare quadruple_march(int n, QuadrupleVariant variant) {
  static const std::vector<std::vector<std::vector<int>>> members = {
      {{1, 2, 3, 4}, {2, 1, 4, 3}, {3, 4, 1, 2}, {4, 3, 2, 1}},
      {{1, 2, 3, 4}, {2, 1, 4, 3}, {3, 4, 2, 1}, {4, 3, 1, 2}},
      {{1, 2, 3, 4}, {2, 3, 4, 1}, {3, 4, 1, 2}, {4, 1, 2, 3}},
      {{1, 2, 3, 4}, {2, 4, 1, 3}, {3, 1, 4, 2}, {4, 3, 2, 1}},
  };
  return detail::block_march(n, Square::from_rows(members[static_cast<int>(variant)]),
                             "quadruple_march");
}

// Removes the leading k columns and appends them on the right. Preserves row
// and column content; the diagonals generally change.
inline Square rotate_columns_left(const Square& sq, int k) {
  const int n = sq.order();
  if (k < 0 || k >= n)
    throw std::invalid_argument("rotate_columns_left: shift " + std::to_string(k) +
                                " outside 0.." + std::to_string(n - 1));
  Square out(n);
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j) out.at(i, j) = sq.at(i, mod1(j + k, n));
  return out;
}

inline void check_permutation(const std::vector<int>& perm, int n, const char* what) {
  if (static_cast<int>(perm.size()) != n)
    throw std::invalid_argument(std::string(what) + ": permutation has " +
                                std::to_string(perm.size()) + " entries, expected " +
                                std::to_string(n));
  std::vector<bool> seen(n + 1, false);
  for (int v : perm) {
    if (v < 1 || v > n || seen[v])
      throw std::invalid_argument(std::string(what) + ": not a permutation of 1.." +
                                  std::to_string(n));
    seen[v] = true;
  }
}

// Row k of the result is row perm[k] of the input.
inline Square permute_rows(const Square& sq, const std::vector<int>& perm) {
  const int n = sq.order();
  check_permutation(perm, n, "permute_rows");
  Square out(n);
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j) out.at(i, j) = sq.at(perm[i - 1], j);
  return out;
}

// Column k of the result is column perm[k] of the input.
inline Square permute_columns(const Square& sq, const std::vector<int>& perm) {
  const int n = sq.order();
  check_permutation(perm, n, "permute_columns");
  Square out(n);
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j) out.at(i, j) = sq.at(i, perm[j - 1]);
  return out;
}

// Replaces every cell value v by perm[v].
inline Square relabel_symbols(const Square& sq, const std::vector<int>& perm) {
  const int n = sq.order();
  check_permutation(perm, n, "relabel_symbols");
  Square out(n);
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j) out.at(i, j) = perm[sq.at(i, j) - 1];
  return out;
}

// Exchanges the two values sitting in the corners of the rectangle
// (r1,c1)-(r2,c2). Requires the a..b / b..a corner pattern; both rows and
// both columns keep their content, so Latinness survives. An involution.
inline LatinSquare rectangle_swap(const LatinSquare& sq, int r1, int c1, int r2, int c2) {
  const int n = sq.order();
  auto in_range = [n](int v) { return v >= 1 && v <= n; };
  if (!in_range(r1) || !in_range(c1) || !in_range(r2) || !in_range(c2))
    throw std::invalid_argument("rectangle_swap: corner outside the grid");
  if (r1 == r2 || c1 == c2)
    throw std::invalid_argument("rectangle_swap: corners must span a rectangle");
  const int a = sq.at(r1, c1);
  const int b = sq.at(r1, c2);
  if (sq.at(r2, c2) != a || sq.at(r2, c1) != b)
    throw std::invalid_argument("rectangle_swap: corners do not hold the a..b / b..a pattern");
  Square out = sq;
  out.at(r1, c1) = b;
  out.at(r2, c2) = b;
  out.at(r1, c2) = a;
  out.at(r2, c1) = a;
  return out;
}

}  // namespace eulersq
