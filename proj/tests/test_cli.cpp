#include <catch2/catch_amalgamated.hpp>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "eulersq/cli.hpp"
#include "fixtures.hpp"

using namespace eulersq;

namespace {

struct RunResult {
  int status;
  std::string out;
  std::string err;
};

RunResult run_cli(std::vector<std::string> args) {
  std::ostringstream out, err;
  int status = cli::run(std::move(args), out, err);
  return {status, out.str(), err.str()};
}

class TempFile {
 public:
  explicit TempFile(const std::string& contents) {
    static int counter = 0;
    path_ = std::filesystem::temp_directory_path() /
            ("eulersq_cli_" + std::to_string(::getpid()) + "_" + std::to_string(counter++) +
             ".txt");
    std::ofstream(path_) << contents;
  }
  ~TempFile() { std::filesystem::remove(path_); }
  std::string path() const { return path_.string(); }

 private:
  std::filesystem::path path_;
};

}  // namespace

TEST_CASE("cli magic-constant") {
  RunResult r = run_cli({"magic-constant", "7"});
  CHECK(r.status == 0);
  CHECK(r.out == "175\n");

  RunResult json = run_cli({"magic-constant", "7", "--format", "json"});
  CHECK(json.status == 0);
  CHECK(nlohmann::json::parse(json.out) ==
        nlohmann::json({{"order", 7}, {"magic_constant", 175}}));
}

TEST_CASE("cli construct") {
  RunResult r = run_cli({"construct", "--order", "3", "--variant", "I"});
  CHECK(r.status == 0);
  CHECK(parse_square_text(r.out) == fixtures::order3_magic()[0]);

  RunResult all = run_cli({"construct", "--order", "3"});
  CHECK(all.status == 0);

  // Variant labels follow the historical numbering regardless of the
  // library's canonical list order.
  CHECK(parse_square_text(run_cli({"construct", "--order", "3", "--variant", "III"}).out) ==
        fixtures::order3_magic()[2]);
  CHECK(parse_square_text(run_cli({"construct", "--order", "3", "--variant", "IV"}).out) ==
        fixtures::order3_magic()[3]);

  RunResult paired = run_cli({"construct", "--order", "4", "--method", "paired"});
  CHECK(paired.status == 0);

  RunResult six = run_cli({"construct", "--order", "6"});
  CHECK(six.status == 0);
  CHECK(verify(parse_square_text(six.out)).is_semi_magic);

  CHECK(run_cli({"construct", "--order", "5", "--method", "bogus"}).status == 2);
  CHECK(run_cli({"construct", "--order", "7"}).status == 2);
}

TEST_CASE("cli staircase and march") {
  CHECK(parse_square_text(run_cli({"staircase", "5"}).out) == fixtures::order5_staircase());
  CHECK(run_cli({"staircase", "4"}).status == 1);

  CHECK(parse_square_text(run_cli({"march", "--order", "5"}).out) == simple_march(5));
  CHECK(parse_square_text(run_cli({"march", "--order", "6", "--step", "2"}).out) ==
        double_march(6));
  CHECK(parse_square_text(run_cli({"march", "--order", "9", "--step", "3"}).out) ==
        triple_march(9));
  CHECK(parse_square_text(
            run_cli({"march", "--order", "4", "--step", "4", "--member", "II"}).out) ==
        quadruple_march(4, QuadrupleVariant::II));
  CHECK(run_cli({"march", "--order", "5", "--step", "2"}).status == 1);
}

TEST_CASE("cli verify") {
  TempFile grid(format_square_text(fixtures::order7_magic()));

  RunResult r = run_cli({"verify", grid.path()});
  CHECK(r.status == 0);
  CHECK(r.out.find("magic: yes") != std::string::npos);
  CHECK(r.out.find("target: 175") != std::string::npos);

  RunResult json = run_cli({"verify", grid.path(), "--format", "json", "--pandiagonal"});
  nlohmann::json rep = nlohmann::json::parse(json.out);
  CHECK(rep["is_magic"] == true);
  CHECK(rep["target"] == 175);
  CHECK(rep.contains("is_pandiagonal"));

  SECTION("echo re-emits the parsed grid") {
    RunResult echoed = run_cli({"verify", grid.path(), "--echo"});
    CHECK(parse_square_text(echoed.out.substr(0, echoed.out.find("order:"))) ==
          fixtures::order7_magic());
  }
  SECTION("missing file is a domain error") {
    CHECK(run_cli({"verify", "/nonexistent/grid.txt"}).status == 1);
  }
  SECTION("json grid files load too") {
    TempFile jgrid(square_to_json(fixtures::order7_magic()).dump());
    RunResult rj = run_cli({"verify", jgrid.path()});
    CHECK(rj.status == 0);
    CHECK(rj.out.find("magic: yes") != std::string::npos);
  }
  SECTION("explicit constant") {
    RunResult custom = run_cli({"verify", grid.path(), "--constant", "111"});
    CHECK(custom.out.find("semi-magic: no") != std::string::npos);
  }
}

TEST_CASE("cli analyze") {
  TempFile grid(format_square_text(fixtures::order5_staircase()));
  RunResult r = run_cli({"analyze", grid.path(), "--format", "json"});
  CHECK(r.status == 0);
  nlohmann::json rep = nlohmann::json::parse(r.out);
  CHECK(rep["valid"] == true);
  CHECK(rep["base_is_latin"] == true);

  TempFile bad("1 4\n4 1\n");
  CHECK(run_cli({"analyze", bad.path()}).status == 1);
}

TEST_CASE("cli directrices") {
  RunResult r = run_cli({"directrices", "--order", "5"});
  CHECK(r.status == 0);
  CHECK(r.out == "1 3 5 2 4\n1 4 2 5 3\n1 5 4 3 2\n");

  RunResult ap = run_cli({"directrices", "--order", "9", "--ap-only"});
  CHECK(ap.status == 0);
  CHECK(ap.out == "1 3 5 7 9 2 4 6 8\n1 6 2 7 3 8 4 9 5\n1 9 8 7 6 5 4 3 2\n");

  RunResult raw = run_cli({"directrices", "--order", "3", "--raw-transversals"});
  CHECK(raw.status == 0);
  CHECK(raw.out.find('\n') != std::string::npos);

  SECTION("square files give raw transversals") {
    TempFile grid(format_square_text(fixtures::order6_swapped()));
    RunResult sq = run_cli({"directrices", "--square", grid.path(), "--format", "json"});
    nlohmann::json rep = nlohmann::json::parse(sq.out);
    CHECK(rep["order"] == 6);
    CHECK(rep["transversals"].size() > 0);
  }
  SECTION("order guard honours the environment override") {
    CHECK(run_cli({"directrices", "--order", "10"}).status == 1);
    ::setenv("EULER_SQUARES_MAX_ORDER", "11", 1);
    CHECK(run_cli({"directrices", "--order", "11"}).status == 0);
    ::unsetenv("EULER_SQUARES_MAX_ORDER");
  }
  SECTION("usage errors") {
    CHECK(run_cli({"directrices"}).status == 2);
    TempFile grid(format_square_text(simple_march(3)));
    CHECK(run_cli({"directrices", "--square", grid.path(), "--ap-only"}).status == 2);
  }
}

TEST_CASE("cli transform and compose") {
  RunResult r = run_cli({"transform", "--rule", "I", "1 4 2 7 6 3 5"});
  CHECK(r.status == 0);
  CHECK(r.out == "1 3 6 2 7 5 4\n");
  CHECK(run_cli({"transform", "--rule", "XII", "1 3 2"}).status == 2);
  CHECK(run_cli({"transform", "--rule", "I", "1 2 3"}).status == 1);

  RunResult graeco = run_cli({"compose", "--directrix", "1 3 2"});
  CHECK(graeco.status == 0);
  CHECK(parse_graeco_text(graeco.out) ==
        GraecoLatinSquare{simple_march(3), fixtures::order3_complete_exponent()});

  RunResult numeric = run_cli({"compose", "--directrix", "1 5 4 3 2", "--reorder",
                               "1 3 5 2 4", "--numeric"});
  CHECK(numeric.status == 0);
  Square composed = parse_square_text(numeric.out);
  CHECK(verify(composed, {}, true).is_pandiagonal);

  SECTION("text and json describe the same grids") {
    RunResult as_json = run_cli({"compose", "--directrix", "1 3 2", "--format", "json"});
    CHECK(graeco_from_json(nlohmann::json::parse(as_json.out)) ==
          parse_graeco_text(graeco.out));
  }
}

TEST_CASE("cli mate and swap") {
  TempFile five(format_square_text(simple_march(5)));
  RunResult mate = run_cli({"mate", five.path(), "--format", "json"});
  CHECK(mate.status == 0);
  nlohmann::json rep = nlohmann::json::parse(mate.out);
  CHECK(rep["outcome"] == "mate");
  CHECK(rep["transversal_count"] == 15);
  CHECK(rep.contains("mate"));

  TempFile four(format_square_text(simple_march(4)));
  nlohmann::json none = nlohmann::json::parse(run_cli({"mate", four.path(), "--format", "json"}).out);
  CHECK(none["outcome"] == "exhausted");
  CHECK(none["transversal_count"] == 0);

  TempFile six(format_square_text(simple_march(6)));
  RunResult swapped = run_cli({"swap", six.path(), "2", "2", "5", "5"});
  CHECK(swapped.status == 0);
  CHECK(parse_square_text(swapped.out) == fixtures::order6_swapped());
  CHECK(run_cli({"swap", six.path(), "1", "1", "2", "2"}).status == 1);

  TempFile not_latin("1 2\n1 2\n");
  CHECK(run_cli({"mate", not_latin.path()}).status == 1);
}

TEST_CASE("cli prove-six on a limited run") {
  RunResult r = run_cli({"prove-six", "--limit", "50", "--jobs", "2", "--progress", "20"});
  CHECK(r.status == 0);
  CHECK(r.out.find("squares checked: 50") != std::string::npos);
  CHECK(r.out.find("mates found: 0") != std::string::npos);
  CHECK(r.err.find("checked=20/50 mates=0") != std::string::npos);
  CHECK(r.err.find("checked=40/50 mates=0") != std::string::npos);

  RunResult json = run_cli({"prove-six", "--limit", "10", "--progress", "0", "--format", "json"});
  nlohmann::json rep = nlohmann::json::parse(json.out);
  CHECK(rep["squares_checked"] == 10);
  CHECK(rep["mates_found"] == 0);
  CHECK(rep["outcome"] == "exhausted");
  CHECK(rep.contains("transversal_count"));
  CHECK(rep.contains("nodes"));
  CHECK(rep.contains("transversal_count_histogram"));
}

TEST_CASE("cli output round-trips through its own parsers") {
  for (auto args : {std::vector<std::string>{"march", "--order", "7"},
                    std::vector<std::string>{"construct", "--order", "4"},
                    std::vector<std::string>{"staircase", "7"}}) {
    RunResult text = run_cli(args);
    REQUIRE(text.status == 0);
    Square from_text = parse_square_text(text.out);

    std::vector<std::string> json_args = args;
    json_args.push_back("--format");
    json_args.push_back("json");
    RunResult json = run_cli(json_args);
    REQUIRE(json.status == 0);
    Square from_json = square_from_json(nlohmann::json::parse(json.out));
    CHECK(from_text == from_json);
    CHECK(parse_square_text(format_square_text(from_text)) == from_text);
  }
}

TEST_CASE("cli usage errors") {
  CHECK(run_cli({}).status == 2);
  CHECK(run_cli({"conjure"}).status == 2);
  CHECK(run_cli({"magic-constant"}).status == 2);
  CHECK(run_cli({"--help"}).status == 0);
}
