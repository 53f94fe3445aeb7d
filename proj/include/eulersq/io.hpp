#pragma once

#include <algorithm>
#include <cctype>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "eulersq/directrix.hpp"
#include "eulersq/letters.hpp"
#include "eulersq/square.hpp"

namespace eulersq {

namespace detail {

inline std::vector<std::string> nonempty_lines(const std::string& text) {
  std::vector<std::string> lines;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    if (line.find_first_not_of(" \t\r") != std::string::npos) lines.push_back(line);
  }
  return lines;
}

inline std::vector<std::string> tokens(const std::string& line) {
  std::istringstream in(line);
  std::vector<std::string> out;
  std::string tok;
  while (in >> tok) out.push_back(tok);
  return out;
}

inline int parse_int(const std::string& tok, const char* what) {
  std::size_t used = 0;
  int v = 0;
  try {
    v = std::stoi(tok, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used != tok.size())
    throw std::invalid_argument(std::string(what) + ": bad integer '" + tok + "'");
  return v;
}

}  // namespace detail

// --- plain grids: n lines of n space-separated integers ---

inline std::string format_square_text(const Square& sq) {
  std::ostringstream out;
  for (int i = 1; i <= sq.order(); ++i) {
    for (int j = 1; j <= sq.order(); ++j) {
      if (j > 1) out << ' ';
      out << sq.at(i, j);
    }
    out << '\n';
  }
  return out.str();
}

inline Square parse_square_text(const std::string& text) {
  auto lines = detail::nonempty_lines(text);
  if (lines.empty()) throw std::invalid_argument("grid: no rows");
  const int n = static_cast<int>(lines.size());
  Square sq(n);
  for (int i = 1; i <= n; ++i) {
    auto toks = detail::tokens(lines[i - 1]);
    if (static_cast<int>(toks.size()) != n)
      throw std::invalid_argument("grid: line " + std::to_string(i) + " has " +
                                  std::to_string(toks.size()) + " entries, expected " +
                                  std::to_string(n));
    for (int j = 1; j <= n; ++j) sq.at(i, j) = detail::parse_int(toks[j - 1], "grid");
  }
  return sq;
}

// --- pair grids: n lines of n `base.exponent` tokens ---

inline std::string format_graeco_text(const GraecoLatinSquare& g) {
  std::ostringstream out;
  for (int i = 1; i <= g.order(); ++i) {
    for (int j = 1; j <= g.order(); ++j) {
      if (j > 1) out << ' ';
      out << g.base.at(i, j) << '.' << g.exponent.at(i, j);
    }
    out << '\n';
  }
  return out.str();
}

inline GraecoLatinSquare parse_graeco_text(const std::string& text) {
  auto lines = detail::nonempty_lines(text);
  if (lines.empty()) throw std::invalid_argument("graeco grid: no rows");
  const int n = static_cast<int>(lines.size());
  GraecoLatinSquare g{Square(n), Square(n)};
  for (int i = 1; i <= n; ++i) {
    auto toks = detail::tokens(lines[i - 1]);
    if (static_cast<int>(toks.size()) != n)
      throw std::invalid_argument("graeco grid: line " + std::to_string(i) + " has " +
                                  std::to_string(toks.size()) + " entries, expected " +
                                  std::to_string(n));
    for (int j = 1; j <= n; ++j) {
      const std::string& tok = toks[j - 1];
      auto dot = tok.find('.');
      if (dot == std::string::npos || dot == 0 || dot + 1 == tok.size())
        throw std::invalid_argument("graeco grid: bad token '" + tok + "'");
      g.base.at(i, j) = detail::parse_int(tok.substr(0, dot), "graeco grid");
      g.exponent.at(i, j) = detail::parse_int(tok.substr(dot + 1), "graeco grid");
    }
  }
  return g;
}

// --- JSON: {"order": n, "cells": [[...], ...]}; pair cells are [base, exponent] ---

inline nlohmann::json square_to_json(const Square& sq) {
  nlohmann::json cells = nlohmann::json::array();
  for (int i = 1; i <= sq.order(); ++i) cells.push_back(sq.row(i));
  return {{"order", sq.order()}, {"cells", cells}};
}

inline Square square_from_json(const nlohmann::json& j) {
  if (!j.is_object() || !j.contains("order") || !j.contains("cells"))
    throw std::invalid_argument("grid json: expected {order, cells}");
  std::vector<std::vector<int>> rows = j.at("cells").get<std::vector<std::vector<int>>>();
  Square sq = Square::from_rows(rows);
  if (j.at("order").get<int>() != sq.order())
    throw std::invalid_argument("grid json: order field does not match cells");
  return sq;
}

inline nlohmann::json graeco_cells_json(const GraecoLatinSquare& g) {
  nlohmann::json cells = nlohmann::json::array();
  for (int i = 1; i <= g.order(); ++i) {
    nlohmann::json row = nlohmann::json::array();
    for (int j = 1; j <= g.order(); ++j)
      row.push_back({g.base.at(i, j), g.exponent.at(i, j)});
    cells.push_back(row);
  }
  return cells;
}

inline nlohmann::json graeco_to_json(const GraecoLatinSquare& g) {
  return {{"order", g.order()}, {"cells", graeco_cells_json(g)}};
}

inline GraecoLatinSquare graeco_from_json(const nlohmann::json& j) {
  if (!j.is_object() || !j.contains("order") || !j.contains("cells"))
    throw std::invalid_argument("graeco json: expected {order, cells}");
  const auto& cells = j.at("cells");
  const int n = static_cast<int>(cells.size());
  GraecoLatinSquare g{Square(std::max(n, 1)), Square(std::max(n, 1))};
  for (int i = 1; i <= n; ++i) {
    const auto& row = cells.at(i - 1);
    if (static_cast<int>(row.size()) != n)
      throw std::invalid_argument("graeco json: ragged cells");
    for (int j2 = 1; j2 <= n; ++j2) {
      const auto& pair = row.at(j2 - 1);
      if (!pair.is_array() || pair.size() != 2)
        throw std::invalid_argument("graeco json: cell is not a [base, exponent] pair");
      g.base.at(i, j2) = pair.at(0).get<int>();
      g.exponent.at(i, j2) = pair.at(1).get<int>();
    }
  }
  if (j.at("order").get<int>() != n)
    throw std::invalid_argument("graeco json: order field does not match cells");
  return g;
}

// --- directrices: one line of n space-separated terms ---

inline std::string format_directrix(const Directrix& d) {
  std::ostringstream out;
  for (std::size_t k = 0; k < d.terms.size(); ++k) {
    if (k) out << ' ';
    out << d.terms[k];
  }
  return out.str();
}

inline Directrix parse_directrix(const std::string& text) {
  auto toks = detail::tokens(text);
  if (toks.empty()) throw std::invalid_argument("directrix: no terms");
  Directrix d{static_cast<int>(toks.size()), {}};
  for (const auto& tok : toks) d.terms.push_back(detail::parse_int(tok, "directrix"));
  require_valid(d, "directrix");
  return d;
}

// --- letter schemas: n lines of `Lg` tokens (latin lowercase, greek as
// uppercase ASCII stand-ins A=alpha, B=beta, ...), then constraint lines
// such as `2c = a + b` ---

inline std::string format_constraint(const LinearConstraint& eq) {
  auto letter = [&](int index) {
    char base = eq.alphabet == Alphabet::latin ? 'a' : 'A';
    return std::string(1, static_cast<char>(base + index));
  };
  std::ostringstream lhs, rhs;
  bool first_l = true, first_r = true;
  for (std::size_t k = 0; k < eq.coeffs.size(); ++k) {
    int c = eq.coeffs[k];
    if (c == 0) continue;
    std::ostringstream& side = c > 0 ? lhs : rhs;
    bool& first = c > 0 ? first_l : first_r;
    if (!first) side << " + ";
    first = false;
    if (std::abs(c) != 1) side << std::abs(c);
    side << letter(static_cast<int>(k));
  }
  if (first_l || first_r) throw std::invalid_argument("format_constraint: one-sided equation");
  return lhs.str() + " = " + rhs.str();
}

inline LinearConstraint parse_constraint(const std::string& line, int n) {
  auto eq_pos = line.find('=');
  if (eq_pos == std::string::npos)
    throw std::invalid_argument("constraint: missing '=' in '" + line + "'");
  LinearConstraint eq;
  eq.coeffs.assign(n, 0);
  bool alphabet_set = false;
  auto parse_side = [&](const std::string& side, int sign) {
    int coeff = 0;
    bool have_coeff = false;
    for (char ch : side) {
      if (ch == ' ' || ch == '\t' || ch == '+') continue;
      if (std::isdigit(static_cast<unsigned char>(ch))) {
        coeff = coeff * 10 + (ch - '0');
        have_coeff = true;
        continue;
      }
      Alphabet alphabet;
      int index;
      if (ch >= 'a' && ch < 'a' + n) {
        alphabet = Alphabet::latin;
        index = ch - 'a';
      } else if (ch >= 'A' && ch < 'A' + n) {
        alphabet = Alphabet::greek;
        index = ch - 'A';
      } else {
        throw std::invalid_argument(std::string("constraint: bad letter '") + ch + "'");
      }
      if (!alphabet_set) {
        eq.alphabet = alphabet;
        alphabet_set = true;
      } else if (eq.alphabet != alphabet) {
        throw std::invalid_argument("constraint: mixes the two alphabets: '" + line + "'");
      }
      eq.coeffs[index] += sign * (have_coeff ? coeff : 1);
      coeff = 0;
      have_coeff = false;
    }
    if (have_coeff)
      throw std::invalid_argument("constraint: dangling coefficient in '" + line + "'");
  };
  parse_side(line.substr(0, eq_pos), +1);
  parse_side(line.substr(eq_pos + 1), -1);
  if (!alphabet_set) throw std::invalid_argument("constraint: no letters in '" + line + "'");
  eq.canonicalize();
  return eq;
}

inline std::string format_letter_schema(const LetterSchema& schema) {
  std::ostringstream out;
  const int n = schema.order();
  for (int i = 1; i <= n; ++i) {
    for (int j = 1; j <= n; ++j) {
      if (j > 1) out << ' ';
      out << static_cast<char>('a' + schema.latin.at(i, j) - 1)
          << static_cast<char>('A' + schema.greek.at(i, j) - 1);
    }
    out << '\n';
  }
  for (const LinearConstraint& eq : schema.constraints) out << format_constraint(eq) << '\n';
  return out.str();
}

inline LetterSchema parse_letter_schema(const std::string& text) {
  auto lines = detail::nonempty_lines(text);
  if (lines.empty()) throw std::invalid_argument("letter schema: empty input");
  const int n = static_cast<int>(detail::tokens(lines[0]).size());
  if (n < 1 || static_cast<int>(lines.size()) < n)
    throw std::invalid_argument("letter schema: expected " + std::to_string(n) + " grid lines");
  LetterSchema schema;
  schema.latin = Square(n);
  schema.greek = Square(n);
  for (int i = 1; i <= n; ++i) {
    auto toks = detail::tokens(lines[i - 1]);
    if (static_cast<int>(toks.size()) != n)
      throw std::invalid_argument("letter schema: line " + std::to_string(i) +
                                  " has " + std::to_string(toks.size()) + " tokens");
    for (int j = 1; j <= n; ++j) {
      const std::string& tok = toks[j - 1];
      if (tok.size() != 2 || tok[0] < 'a' || tok[0] >= 'a' + n || tok[1] < 'A' ||
          tok[1] >= 'A' + n)
        throw std::invalid_argument("letter schema: bad token '" + tok + "'");
      schema.latin.at(i, j) = tok[0] - 'a' + 1;
      schema.greek.at(i, j) = tok[1] - 'A' + 1;
    }
  }
  for (std::size_t k = n; k < lines.size(); ++k)
    schema.constraints.push_back(parse_constraint(lines[k], n));
  return schema;
}

}  // namespace eulersq
