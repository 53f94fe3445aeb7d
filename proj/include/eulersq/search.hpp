#pragma once

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstdint>
#include <functional>
#include <mutex>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <thread>
#include <vector>

#include "eulersq/square.hpp"
#include "eulersq/verify.hpp"

namespace eulersq {

// One cell per column of a Latin square, rows pairwise distinct and carried
// values pairwise distinct. The unnormalized cousin of a directrix.
struct Transversal {
  int order = 0;
  std::vector<int> rows;    // rows[t-1] = row selected in column t
  std::vector<int> values;  // values[t-1] = L(rows[t-1], t)

  friend bool operator==(const Transversal&, const Transversal&) = default;
};

namespace detail {

inline void require_latin(const LatinSquare& square, const char* what) {
  LatinReport rep = is_latin(square);
  if (!rep.latin)
    throw std::invalid_argument(std::string(what) + ": not a Latin square (" +
                                rep.violation + ")");
}

}  // namespace detail

// Column-by-column backtracking with used-row and used-value bitmasks.
// Emits transversals in lexicographic order of their row lists.
template <typename F>
inline void for_each_transversal(const LatinSquare& square, F&& emit) {
  const int n = square.order();
  if (n > 63) throw std::invalid_argument("for_each_transversal: order above 63");
  detail::require_latin(square, "for_each_transversal");

  std::vector<int> by_column(static_cast<std::size_t>(n) * n);  // 0-based values
  for (int t = 0; t < n; ++t)
    for (int r = 0; r < n; ++r) by_column[t * n + r] = square.at(r + 1, t + 1) - 1;

  std::vector<int> rows(n);
  std::uint64_t row_mask = 0, value_mask = 0;
  auto dfs = [&](auto&& self, int t) -> void {
    if (t == n) {
      Transversal out{n, std::vector<int>(n), std::vector<int>(n)};
      for (int k = 0; k < n; ++k) {
        out.rows[k] = rows[k] + 1;
        out.values[k] = by_column[k * n + rows[k]] + 1;
      }
      emit(std::move(out));
      return;
    }
    for (int r = 0; r < n; ++r) {
      if (row_mask >> r & 1) continue;
      int v = by_column[t * n + r];
      if (value_mask >> v & 1) continue;
      row_mask |= 1ull << r;
      value_mask |= 1ull << v;
      rows[t] = r;
      self(self, t + 1);
      row_mask &= ~(1ull << r);
      value_mask &= ~(1ull << v);
    }
  };
  dfs(dfs, 0);
}

inline std::vector<Transversal> transversals(const LatinSquare& square) {
  std::vector<Transversal> out;
  for_each_transversal(square, [&](Transversal t) { out.push_back(std::move(t)); });
  return out;
}

// Outcome of the orthogonal-mate search: either n pairwise disjoint
// transversals (giving the mate as a Graeco-Latin square) or an exhausted
// search with its counters.
struct MateCertificate {
  int order = 0;
  bool found = false;
  long long transversal_count = 0;
  long long nodes = 0;
  std::vector<Transversal> mate_transversals;  // k-th carries exponent k
  std::optional<GraecoLatinSquare> mate;
};

// Exact cover of the n^2 cells by n transversals. Two transversals are
// cell-disjoint iff they use different rows in every column, so the search
// keeps one used-row bitmask per column. Transversals are grouped by the row
// they use in column 1 (a disjoint family hits each such row once); groups
// are tried smallest-first, members in enumeration order, which makes the
// search deterministic.
inline MateCertificate orthogonal_mate(const LatinSquare& square) {
  const int n = square.order();
  std::vector<Transversal> all = transversals(square);

  MateCertificate cert;
  cert.order = n;
  cert.transversal_count = static_cast<long long>(all.size());

  std::vector<std::vector<int>> groups(n);
  for (std::size_t i = 0; i < all.size(); ++i) groups[all[i].rows[0] - 1].push_back(static_cast<int>(i));
  for (const auto& g : groups)
    if (g.empty()) return cert;

  std::vector<int> group_order(n);
  for (int k = 0; k < n; ++k) group_order[k] = k;
  std::sort(group_order.begin(), group_order.end(), [&](int a, int b) {
    if (groups[a].size() != groups[b].size()) return groups[a].size() < groups[b].size();
    return a < b;
  });

  std::vector<std::uint64_t> column_rows(n, 0);
  std::vector<int> chosen;
  chosen.reserve(n);
  auto dfs = [&](auto&& self, int depth) -> bool {
    if (depth == n) return true;
    for (int idx : groups[group_order[depth]]) {
      const Transversal& tr = all[idx];
      bool clash = false;
      for (int t = 0; t < n; ++t)
        if (column_rows[t] >> (tr.rows[t] - 1) & 1) {
          clash = true;
          break;
        }
      if (clash) continue;
      ++cert.nodes;
      for (int t = 0; t < n; ++t) column_rows[t] |= 1ull << (tr.rows[t] - 1);
      chosen.push_back(idx);
      if (self(self, depth + 1)) return true;
      chosen.pop_back();
      for (int t = 0; t < n; ++t) column_rows[t] &= ~(1ull << (tr.rows[t] - 1));
    }
    return false;
  };

  if (dfs(dfs, 0)) {
    cert.found = true;
    GraecoLatinSquare mate{square, Square(n)};
    for (int k = 0; k < n; ++k) {
      const Transversal& tr = all[chosen[k]];
      cert.mate_transversals.push_back(tr);
      for (int t = 0; t < n; ++t) mate.exponent.at(tr.rows[t], t + 1) = k + 1;
    }
    cert.mate = std::move(mate);
  }
  return cert;
}

// All reduced Latin squares (first row and first column in natural order),
// emitted in lexicographic row-major order. The guard keeps accidental
// combinatorial explosions out; raise max_order deliberately.
template <typename F>
inline void for_each_reduced_latin(int n, F&& emit, int max_order = 6) {
  if (n < 1) throw std::invalid_argument("for_each_reduced_latin: order must be >= 1");
  if (n > 63 || n > max_order)
    throw std::invalid_argument("for_each_reduced_latin: order " + std::to_string(n) +
                                " above the guard (" + std::to_string(max_order) + ")");
  Square sq(n);
  std::vector<std::uint64_t> row_mask(n + 1, 0), column_mask(n + 1, 0);
  for (int k = 1; k <= n; ++k) {
    sq.at(1, k) = k;
    sq.at(k, 1) = k;
    row_mask[1] |= 1ull << k;
    column_mask[k] |= 1ull << k;
    if (k > 1) {
      row_mask[k] |= 1ull << k;
      column_mask[1] |= 1ull << k;
    }
  }
  auto dfs = [&](auto&& self, int r, int c) -> void {
    if (r > n) {
      emit(sq);
      return;
    }
    if (c > n) {
      self(self, r + 1, 2);
      return;
    }
    for (int v = 1; v <= n; ++v) {
      std::uint64_t bit = 1ull << v;
      if ((row_mask[r] & bit) || (column_mask[c] & bit)) continue;
      row_mask[r] |= bit;
      column_mask[c] |= bit;
      sq.at(r, c) = v;
      self(self, r, c + 1);
      row_mask[r] &= ~bit;
      column_mask[c] &= ~bit;
    }
  };
  dfs(dfs, 2, 2);
}

inline std::vector<LatinSquare> enumerate_reduced_latin(int n, int max_order = 6) {
  std::vector<LatinSquare> out;
  for_each_reduced_latin(n, [&](const Square& sq) { out.push_back(sq); }, max_order);
  return out;
}

// Reduced representative of a Latin square: columns reordered so the first
// row reads 1..n, then rows reordered so the first column does. Both
// operations map transversals to transversals, so mate existence carries
// over.
inline LatinSquare reduced_form(const LatinSquare& square) {
  detail::require_latin(square, "reduced_form");
  const int n = square.order();
  std::vector<int> column_perm(n);
  for (int j = 1; j <= n; ++j) column_perm[square.at(1, j) - 1] = j;
  Square by_columns = permute_columns(square, column_perm);
  std::vector<int> row_perm(n);
  for (int i = 1; i <= n; ++i) row_perm[by_columns.at(i, 1) - 1] = i;
  return permute_rows(by_columns, row_perm);
}

struct SweepOptions {
  int order = 6;
  int jobs = 1;
  long long limit = 0;  // 0 = every reduced square
  int max_order = 6;
  long long progress_every = 0;  // 0 = no progress callbacks
  std::function<void(long long done, long long total, long long mates)> progress;
};

struct SweepReport {
  int order = 0;
  int jobs = 1;
  long long squares_checked = 0;
  long long mates_found = 0;
  std::vector<long long> mate_indices;     // indices into enumeration order
  std::vector<int> transversal_counts;     // per square, enumeration order
  long long nodes = 0;
  double seconds = 0.0;
  std::string note;
};

// Runs orthogonal_mate over every reduced square of the given order. Squares
// are distributed over workers through an atomic cursor; results are stored
// by enumeration index, so the report does not depend on the worker count.
inline SweepReport sweep_orthogonal_mates(const SweepOptions& opts) {
  auto start = std::chrono::steady_clock::now();
  std::vector<LatinSquare> squares = enumerate_reduced_latin(opts.order, opts.max_order);
  if (opts.limit > 0 && static_cast<long long>(squares.size()) > opts.limit)
    squares.resize(static_cast<std::size_t>(opts.limit));
  const long long total = static_cast<long long>(squares.size());

  std::vector<int> counts(total, 0);
  std::vector<char> found(total, 0);
  std::vector<long long> nodes(total, 0);
  std::atomic<long long> cursor{0}, done{0}, mates{0};
  std::mutex progress_mutex;

  auto work = [&]() {
    for (;;) {
      long long i = cursor.fetch_add(1);
      if (i >= total) break;
      MateCertificate cert = orthogonal_mate(squares[i]);
      counts[i] = static_cast<int>(cert.transversal_count);
      found[i] = cert.found ? 1 : 0;
      nodes[i] = cert.nodes;
      if (cert.found) mates.fetch_add(1);
      long long d = done.fetch_add(1) + 1;
      if (opts.progress_every > 0 && opts.progress && d % opts.progress_every == 0) {
        std::lock_guard<std::mutex> lock(progress_mutex);
        opts.progress(d, total, mates.load());
      }
    }
  };

  int jobs = std::max(1, opts.jobs);
  if (jobs == 1) {
    work();
  } else {
    std::vector<std::thread> pool;
    for (int k = 0; k < jobs; ++k) pool.emplace_back(work);
    for (auto& th : pool) th.join();
  }

  SweepReport rep;
  rep.order = opts.order;
  rep.jobs = jobs;
  rep.squares_checked = total;
  rep.transversal_counts.assign(counts.begin(), counts.end());
  for (long long i = 0; i < total; ++i) {
    rep.nodes += nodes[i];
    if (found[i]) rep.mate_indices.push_back(i);
  }
  rep.mates_found = static_cast<long long>(rep.mate_indices.size());
  rep.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  rep.note =
      "Checked reduced squares only: any Latin square reaches reduced form by column and "
      "row permutations, and those map transversals to transversals, so orthogonal-mate "
      "existence is unaffected.";
  return rep;
}

// The 36-officers sweep: every reduced order-6 Latin square, expecting zero
// mates.
inline SweepReport verify_no_order6_pair(SweepOptions opts = {}) {
  opts.order = 6;
  if (opts.max_order < 6) opts.max_order = 6;
  return sweep_orthogonal_mates(opts);
}

// All Latin squares reachable from the start by at most `depth` rectangle
// swaps, deduplicated, sorted by cell content.
inline std::vector<LatinSquare> rectangle_swap_orbit(const LatinSquare& start, int depth) {
  if (depth < 0) throw std::invalid_argument("rectangle_swap_orbit: negative depth");
  detail::require_latin(start, "rectangle_swap_orbit");
  const int n = start.order();
  std::set<std::vector<int>> seen{start.cells()};
  std::vector<Square> out{start}, frontier{start};
  for (int step = 0; step < depth && !frontier.empty(); ++step) {
    std::vector<Square> next;
    for (const Square& sq : frontier)
      for (int r1 = 1; r1 <= n; ++r1)
        for (int r2 = r1 + 1; r2 <= n; ++r2)
          for (int c1 = 1; c1 <= n; ++c1)
            for (int c2 = c1 + 1; c2 <= n; ++c2) {
              if (sq.at(r1, c1) != sq.at(r2, c2) || sq.at(r1, c2) != sq.at(r2, c1)) continue;
              Square swapped = rectangle_swap(sq, r1, c1, r2, c2);
              if (seen.insert(swapped.cells()).second) {
                out.push_back(swapped);
                next.push_back(std::move(swapped));
              }
            }
    frontier = std::move(next);
  }
  std::sort(out.begin(), out.end(),
            [](const Square& a, const Square& b) { return a.cells() < b.cells(); });
  return out;
}

}  // namespace eulersq
