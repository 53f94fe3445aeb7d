#pragma once

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "eulersq/construct.hpp"
#include "eulersq/directrix.hpp"
#include "eulersq/io.hpp"
#include "eulersq/letters.hpp"
#include "eulersq/search.hpp"
#include "eulersq/square.hpp"
#include "eulersq/verify.hpp"

namespace eulersq::cli {

namespace detail {

inline int env_max_order(int fallback) {
  if (const char* v = std::getenv("EULER_SQUARES_MAX_ORDER")) {
    try {
      int n = std::stoi(v);
      if (n >= 1) return n;
    } catch (const std::exception&) {
    }
  }
  return fallback;
}

inline std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::invalid_argument("cannot open file '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

// Grid files come either as plain text or as the JSON object form.
inline Square load_square(const std::string& path) {
  std::string text = read_file(path);
  auto first = text.find_first_not_of(" \t\r\n");
  if (first != std::string::npos && text[first] == '{')
    return square_from_json(nlohmann::json::parse(text));
  return parse_square_text(text);
}

inline std::vector<int> parse_int_list(const std::string& text, const char* what) {
  std::vector<int> out;
  for (const std::string& tok : eulersq::detail::tokens(text))
    out.push_back(eulersq::detail::parse_int(tok, what));
  return out;
}

inline const char* yesno(bool b) { return b ? "yes" : "no"; }

struct Emitter {
  std::ostream& out;
  bool json = false;

  void square(const Square& sq) const {
    if (json)
      out << square_to_json(sq).dump() << '\n';
    else
      out << format_square_text(sq);
  }

  void squares(const std::vector<Square>& list) const {
    if (json) {
      nlohmann::json arr = nlohmann::json::array();
      for (const Square& sq : list) arr.push_back(square_to_json(sq));
      out << arr.dump() << '\n';
    } else {
      for (std::size_t k = 0; k < list.size(); ++k) {
        if (k) out << '\n';
        out << format_square_text(list[k]);
      }
    }
  }

  void graeco(const GraecoLatinSquare& g) const {
    if (json)
      out << graeco_to_json(g).dump() << '\n';
    else
      out << format_graeco_text(g);
  }
};

inline nlohmann::json verification_to_json(const VerificationReport& rep) {
  nlohmann::json j{{"order", rep.order},
                   {"target", rep.target},
                   {"row_sums", rep.row_sums},
                   {"column_sums", rep.column_sums},
                   {"diagonal_sums", {rep.diagonal_sums[0], rep.diagonal_sums[1]}},
                   {"values_are_1_to_n2", rep.values_are_1_to_n2},
                   {"duplicates", rep.duplicates},
                   {"is_semi_magic", rep.is_semi_magic},
                   {"is_magic", rep.is_magic}};
  if (rep.checked_broken) {
    j["broken_down_sums"] = rep.broken_down_sums;
    j["broken_up_sums"] = rep.broken_up_sums;
    j["is_pandiagonal"] = rep.is_pandiagonal;
  }
  return j;
}

inline void print_sums(std::ostream& out, const char* label,
                       const std::vector<long long>& sums) {
  out << label << ':';
  for (long long s : sums) out << ' ' << s;
  out << '\n';
}

inline void print_verification(std::ostream& out, const VerificationReport& rep) {
  out << "order: " << rep.order << '\n';
  out << "target: " << rep.target << '\n';
  print_sums(out, "row sums", rep.row_sums);
  print_sums(out, "column sums", rep.column_sums);
  out << "diagonal sums: " << rep.diagonal_sums[0] << ' ' << rep.diagonal_sums[1] << '\n';
  if (rep.checked_broken) {
    print_sums(out, "broken diagonal sums (down)", rep.broken_down_sums);
    print_sums(out, "broken diagonal sums (up)", rep.broken_up_sums);
  }
  out << "values are 1.." << rep.order * rep.order << ": " << yesno(rep.values_are_1_to_n2)
      << '\n';
  out << "duplicates:";
  if (rep.duplicates.empty())
    out << " none";
  else
    for (int v : rep.duplicates) out << ' ' << v;
  out << '\n';
  out << "semi-magic: " << yesno(rep.is_semi_magic) << '\n';
  out << "magic: " << yesno(rep.is_magic) << '\n';
  if (rep.checked_broken) out << "pandiagonal: " << yesno(rep.is_pandiagonal) << '\n';
}

}  // namespace detail

// Runs one command. Exit status 0 on success, 1 on domain errors (bad grids,
// violated preconditions, unreadable files), 2 on usage errors.
inline int run(std::vector<std::string> args, std::ostream& out, std::ostream& err) {
  CLI::App app{"magic squares, Latin squares and Graeco-Latin (Euler) squares"};
  app.require_subcommand(1);
  std::string format = "text";
  app.add_option("--format", format, "output format")
      ->check(CLI::IsMember({"text", "json"}));

  auto sub = [&](const std::string& name, const std::string& desc) {
    CLI::App* s = app.add_subcommand(name, desc);
    s->fallthrough();
    return s;
  };

  // magic-constant
  int mc_n = 0;
  CLI::App* mc = sub("magic-constant", "common rank sum of an order-n magic square");
  mc->add_option("n", mc_n, "square order")->required();
  mc->callback([&] {
    detail::Emitter emit{out, format == "json"};
    long long value = magic_constant(mc_n);
    if (emit.json)
      out << nlohmann::json{{"order", mc_n}, {"magic_constant", value}}.dump() << '\n';
    else
      out << value << '\n';
  });

  // construct
  int co_order = 0;
  std::string co_method, co_variant;
  CLI::App* co = sub("construct", "letter-method magic square constructions");
  co->add_option("--order", co_order, "square order")
      ->required()
      ->check(CLI::IsMember({3, 4, 5, 6}));
  co->add_option("--method", co_method, "diagonal, paired, cyclic or staircase");
  co->add_option("--variant", co_variant, "I..IV for order 3; 1 or 2 for order-4 paired");
  co->callback([&] {
    detail::Emitter emit{out, format == "json"};
    auto bad = [&](const std::string& msg) -> CLI::ValidationError {
      return CLI::ValidationError("construct", msg);
    };
    if (co_order == 3) {
      if (!co_method.empty()) throw bad("order 3 takes no --method");
      std::vector<Square> all = construct_order3();
      if (co_variant.empty()) {
        emit.squares(all);
        return;
      }
      // The canonical enumeration lists the historical variants as I, III, II, IV.
      static const std::map<std::string, int> index{{"I", 0}, {"II", 2}, {"III", 1}, {"IV", 3}};
      auto it = index.find(co_variant);
      if (it == index.end()) throw bad("order-3 variant must be I, II, III or IV");
      emit.square(all[it->second]);
    } else if (co_order == 4) {
      std::string method = co_method.empty() ? "diagonal" : co_method;
      if (method == "diagonal") {
        emit.square(construct_order4_diagonal());
      } else if (method == "paired") {
        auto [first, second] = construct_order4_paired();
        if (co_variant.empty())
          emit.squares({first, second});
        else if (co_variant == "1")
          emit.square(first);
        else if (co_variant == "2")
          emit.square(second);
        else
          throw bad("order-4 paired variant must be 1 or 2");
      } else {
        throw bad("order 4 methods: diagonal, paired");
      }
    } else if (co_order == 5) {
      std::string method = co_method.empty() ? "diagonal" : co_method;
      if (method == "diagonal")
        emit.square(construct_order5_diagonal());
      else if (method == "cyclic")
        emit.square(construct_order5_cyclic());
      else if (method == "staircase")
        emit.square(staircase(5));
      else
        throw bad("order 5 methods: diagonal, cyclic, staircase");
    } else {
      if (!co_method.empty() && co_method != "paired")
        throw bad("order 6 methods: paired");
      emit.square(construct_order6_paired().first);
    }
  });

  // staircase
  int st_n = 0;
  CLI::App* st = sub("staircase", "odd-order staircase magic square");
  st->add_option("n", st_n, "odd order")->required();
  st->callback([&] { detail::Emitter{out, format == "json"}.square(staircase(st_n)); });

  // march
  int ma_order = 0, ma_step = 1;
  std::string ma_member = "I";
  CLI::App* ma = sub("march", "march-form Latin squares");
  ma->add_option("--order", ma_order, "square order")->required();
  ma->add_option("--step", ma_step, "march width: 1, 2, 3 or 4")
      ->check(CLI::IsMember({1, 2, 3, 4}));
  ma->add_option("--member", ma_member, "first member (step 4 only)")
      ->check(CLI::IsMember({"I", "II", "III", "IV"}));
  ma->callback([&] {
    detail::Emitter emit{out, format == "json"};
    switch (ma_step) {
      case 1: emit.square(simple_march(ma_order)); break;
      case 2: emit.square(double_march(ma_order)); break;
      case 3: emit.square(triple_march(ma_order)); break;
      default: {
        static const std::map<std::string, QuadrupleVariant> variants{
            {"I", QuadrupleVariant::I},
            {"II", QuadrupleVariant::II},
            {"III", QuadrupleVariant::III},
            {"IV", QuadrupleVariant::IV}};
        emit.square(quadruple_march(ma_order, variants.at(ma_member)));
      }
    }
  });

  // verify
  std::string ve_file;
  bool ve_pandiagonal = false, ve_echo = false;
  long long ve_constant = 0;
  CLI::App* ve = sub("verify", "sum every rank of a grid file");
  ve->add_option("file", ve_file, "grid file (text or json)")->required();
  CLI::Option* ve_constant_opt = ve->add_option("--constant", ve_constant, "expected rank sum");
  ve->add_flag("--pandiagonal", ve_pandiagonal, "also sum the broken diagonals");
  ve->add_flag("--echo", ve_echo, "re-emit the parsed grid before the report");
  ve->callback([&] {
    Square sq = detail::load_square(ve_file);
    std::optional<long long> target;
    if (ve_constant_opt->count()) target = ve_constant;
    VerificationReport rep = verify(sq, target, ve_pandiagonal);
    if (format == "json") {
      nlohmann::json j = detail::verification_to_json(rep);
      if (ve_echo) j["cells"] = square_to_json(sq)["cells"];
      out << j.dump() << '\n';
    } else {
      if (ve_echo) out << format_square_text(sq);
      detail::print_verification(out, rep);
    }
  });

  // analyze
  std::string an_file;
  CLI::App* an = sub("analyze", "split a numeric square into base and exponent grids");
  an->add_option("file", an_file, "grid file holding 1..n^2")->required();
  an->callback([&] {
    AnalyzeReport rep = analyze_square(detail::load_square(an_file));
    if (format == "json") {
      out << nlohmann::json{{"order", rep.grid.order()},
                            {"cells", graeco_cells_json(rep.grid)},
                            {"base_is_latin", rep.check.base_report.latin},
                            {"exponent_is_latin", rep.check.exponent_report.latin},
                            {"pairs_distinct", rep.check.orthogonality.orthogonal},
                            {"valid", rep.belongs}}
                 .dump()
          << '\n';
    } else {
      out << format_graeco_text(rep.grid);
      out << "base latin: " << detail::yesno(rep.check.base_report.latin) << '\n';
      out << "exponent latin: " << detail::yesno(rep.check.exponent_report.latin) << '\n';
      out << "pairs distinct: " << detail::yesno(rep.check.orthogonality.orthogonal) << '\n';
      out << "graeco-latin: " << detail::yesno(rep.belongs) << '\n';
    }
  });

  // directrices
  int di_order = 0;
  std::string di_square;
  bool di_ap_only = false, di_raw = false;
  CLI::App* di = sub("directrices", "directrices of the simple march, or transversals of a grid");
  CLI::Option* di_order_opt = di->add_option("--order", di_order, "simple-march order");
  CLI::Option* di_square_opt = di->add_option("--square", di_square, "Latin square file");
  di->add_flag("--ap-only", di_ap_only, "arithmetic-progression directrices only");
  di->add_flag("--raw-transversals", di_raw, "unnormalized transversals (row per column)");
  di_order_opt->excludes(di_square_opt);
  di->callback([&] {
    bool json = format == "json";
    auto print_transversals = [&](const std::vector<Transversal>& list, int order) {
      if (json) {
        nlohmann::json arr = nlohmann::json::array();
        for (const Transversal& t : list)
          arr.push_back({{"rows", t.rows}, {"values", t.values}});
        out << nlohmann::json{{"order", order}, {"transversals", arr}}.dump() << '\n';
      } else {
        for (const Transversal& t : list) {
          for (std::size_t k = 0; k < t.rows.size(); ++k) {
            if (k) out << ' ';
            out << t.rows[k];
          }
          out << '\n';
        }
      }
    };
    if (di_square_opt->count()) {
      if (di_ap_only)
        throw CLI::ValidationError("directrices", "--ap-only needs --order");
      Square sq = detail::load_square(di_square);
      print_transversals(transversals(sq), sq.order());
      return;
    }
    if (!di_order_opt->count())
      throw CLI::ValidationError("directrices", "give --order N or --square FILE");
    int guard = detail::env_max_order(9);
    if (di_order > guard)
      throw std::invalid_argument("directrices: order " + std::to_string(di_order) +
                                  " above the guard (" + std::to_string(guard) +
                                  "); raise EULER_SQUARES_MAX_ORDER to override");
    if (di_raw) {
      print_transversals(transversals(simple_march(di_order)), di_order);
      return;
    }
    std::vector<Directrix> list =
        di_ap_only ? ap_directrices(di_order) : enumerate_directrices(di_order);
    if (json) {
      nlohmann::json arr = nlohmann::json::array();
      for (const Directrix& d : list) arr.push_back(d.terms);
      out << nlohmann::json{{"order", di_order}, {"directrices", arr}}.dump() << '\n';
    } else {
      for (const Directrix& d : list) out << format_directrix(d) << '\n';
    }
  });

  // transform
  std::string tr_rule, tr_terms;
  CLI::App* tr = sub("transform", "apply a directrix transformation rule");
  tr->add_option("--rule", tr_rule, "I..XI or R3")
      ->required()
      ->check(CLI::IsMember({"I", "II", "III", "IV", "V", "VI", "VII", "VIII", "IX", "X",
                             "XI", "R3"}));
  tr->add_option("terms", tr_terms, "directrix, e.g. \"1 3 5 2 4\"")->required();
  tr->callback([&] {
    Directrix d = apply_rule(parse_directrix(tr_terms), tr_rule);
    if (format == "json")
      out << nlohmann::json{{"order", d.order}, {"terms", d.terms}}.dump() << '\n';
    else
      out << format_directrix(d) << '\n';
  });

  // compose
  std::string cp_directrix, cp_reorder;
  bool cp_numeric = false;
  CLI::App* cp = sub("compose", "complete (Graeco-Latin) square from a directrix");
  cp->add_option("--directrix", cp_directrix, "directrix, e.g. \"1 3 5 2 4\"")->required();
  cp->add_option("--reorder", cp_reorder, "row order applied afterwards");
  cp->add_flag("--numeric", cp_numeric, "emit the composed numeric square");
  cp->callback([&] {
    GraecoLatinSquare g = complete_square(parse_directrix(cp_directrix));
    if (!cp_reorder.empty())
      g = pandiagonal_reorder(g, detail::parse_int_list(cp_reorder, "reorder"));
    detail::Emitter emit{out, format == "json"};
    if (cp_numeric)
      emit.square(compose_numeric(g));
    else
      emit.graeco(g);
  });

  // mate
  std::string mt_file;
  CLI::App* mt = sub("mate", "search for an orthogonal mate by exact cover");
  mt->add_option("file", mt_file, "Latin square file")->required();
  mt->callback([&] {
    MateCertificate cert = orthogonal_mate(detail::load_square(mt_file));
    if (format == "json") {
      nlohmann::json j{{"order", cert.order},
                       {"outcome", cert.found ? "mate" : "exhausted"},
                       {"transversal_count", cert.transversal_count},
                       {"nodes", cert.nodes}};
      if (cert.mate) j["mate"] = graeco_cells_json(*cert.mate);
      out << j.dump() << '\n';
    } else {
      out << "order: " << cert.order << '\n';
      out << "outcome: " << (cert.found ? "mate" : "exhausted") << '\n';
      out << "transversals: " << cert.transversal_count << '\n';
      out << "nodes: " << cert.nodes << '\n';
      if (cert.mate) out << format_graeco_text(*cert.mate);
    }
  });

  // swap
  std::string sw_file;
  int sw_r1 = 0, sw_c1 = 0, sw_r2 = 0, sw_c2 = 0;
  CLI::App* sw = sub("swap", "rectangle swap on a Latin square");
  sw->add_option("file", sw_file)->required();
  sw->add_option("r1", sw_r1)->required();
  sw->add_option("c1", sw_c1)->required();
  sw->add_option("r2", sw_r2)->required();
  sw->add_option("c2", sw_c2)->required();
  sw->callback([&] {
    detail::Emitter{out, format == "json"}.square(
        rectangle_swap(detail::load_square(sw_file), sw_r1, sw_c1, sw_r2, sw_c2));
  });

  // prove-six
  int ps_jobs = 1;
  long long ps_limit = 0, ps_progress = 1000;
  CLI::App* ps = sub("prove-six", "exhaust all reduced order-6 squares for orthogonal mates");
  ps->add_option("--jobs", ps_jobs, "worker threads")->check(CLI::PositiveNumber);
  ps->add_option("--limit", ps_limit, "stop after this many squares (0 = all)");
  ps->add_option("--progress", ps_progress, "progress interval on stderr (0 = silent)");
  ps->callback([&] {
    SweepOptions opts;
    opts.jobs = ps_jobs;
    opts.limit = ps_limit;
    opts.max_order = detail::env_max_order(6);
    opts.progress_every = ps_progress;
    opts.progress = [&](long long done, long long total, long long mates) {
      err << "checked=" << done << '/' << total << " mates=" << mates << '\n';
    };
    SweepReport rep = verify_no_order6_pair(opts);
    std::map<int, int> histogram;
    long long total_transversals = 0;
    for (int c : rep.transversal_counts) {
      ++histogram[c];
      total_transversals += c;
    }
    const char* outcome = rep.mates_found == 0 ? "exhausted" : "mate";
    if (format == "json") {
      nlohmann::json hist = nlohmann::json::object();
      for (const auto& [count, squares] : histogram)
        hist[std::to_string(count)] = squares;
      out << nlohmann::json{{"order", rep.order},
                            {"outcome", outcome},
                            {"squares_checked", rep.squares_checked},
                            {"mates_found", rep.mates_found},
                            {"mate_indices", rep.mate_indices},
                            {"transversal_count", total_transversals},
                            {"nodes", rep.nodes},
                            {"seconds", rep.seconds},
                            {"jobs", rep.jobs},
                            {"transversal_count_histogram", hist},
                            {"note", rep.note}}
                 .dump()
          << '\n';
    } else {
      out << "order: " << rep.order << '\n';
      out << "outcome: " << outcome << '\n';
      out << "squares checked: " << rep.squares_checked << '\n';
      out << "mates found: " << rep.mates_found << '\n';
      out << "transversals: " << total_transversals << '\n';
      out << "nodes: " << rep.nodes << '\n';
      out << "seconds: " << rep.seconds << '\n';
      out << "transversal counts:";
      for (const auto& [count, squares] : histogram)
        out << ' ' << count << 'x' << squares;
      out << '\n';
      out << "note: " << rep.note << '\n';
    }
  });

  try {
    std::reverse(args.begin(), args.end());
    app.parse(args);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return 1;
  }
  return 0;
}

}  // namespace eulersq::cli
