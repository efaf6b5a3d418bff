#include "helpers.hpp"

#include "symdyn/error.hpp"
#include "symdyn/report.hpp"
#include "symdyn/spec_file.hpp"

#include <doctest.h>
#include <json.hpp>

#include <sys/wait.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <set>
#include <sstream>

using namespace symdyn;

namespace {

const char* const every_kind[] = {
    R"({"kind":"full","alphabet":["0","1","2"]})",
    R"({"kind":"sft","alphabet":["0","1"],"forbidden":["11"]})",
    R"({"kind":"sofic","alphabet":["0","1"],"states":["q0","q1"],"edges":[["q0","1","q0"],["q0","0","q1"],["q1","0","q0"]]})",
    R"({"kind":"even"})",
    R"({"kind":"beta","dstar":{"preperiod":[1],"period":[1,0]}})",
    R"({"kind":"beta","polynomial":[-1,-1,1],"horizon":32})",
    R"({"kind":"beta","value":"3/2","precision":128})",
    R"({"kind":"sturmian","partial_quotients":[1,1,1,1,1,1,1,1,1,1],"horizon":30})",
    R"({"kind":"context-free"})",
    R"({"kind":"product","left":{"kind":"even"},"right":{"kind":"full","alphabet":["a"]}})",
    R"({"kind":"reverse","base":{"kind":"context-free"}})",
    R"({"kind":"higher-block","base":{"kind":"even"},"window":3})",
    R"({"kind":"block-image","domain":{"kind":"even"},"table":[["0","x"],["1","x"]],"target":["x"]})",
    R"({"kind":"disjoint-union","left":{"kind":"even"},"right":{"kind":"even"},"suffix":"'"})",
    R"({"kind":"selector","data":{"kind":"even"},"markers":["a","b","c"]})",
    R"({"kind":"marker-interleave","letters":{"kind":"context-free"}})",
    R"({"kind":"star-collapse","base":{"kind":"marker-interleave","letters":{"kind":"context-free"}},"collapse":["1","2","3"]})",
    R"({"kind":"sturmian-modulated","base":{"kind":"even"},"partial_quotients":[1,1,1,1,1,1,1,1],"horizon":30})",
};

std::string parse_error_at(const std::string& text) {
  try {
    parse_spec(text);
  } catch (const ParseError& e) {
    return e.where();
  }
  return "<no error>";
}

struct Run {
  int code;
  std::string out;
};

std::filesystem::path scratch() {
  static const auto dir = [] {
    auto d = std::filesystem::temp_directory_path() / ("symdyn_cli_test_" + std::to_string(::getpid()));
    std::filesystem::create_directories(d);
    return d;
  }();
  return dir;
}

std::string spec_file(const std::string& name, const std::string& text) {
  const auto path = scratch() / (name + ".json");
  std::ofstream(path) << text;
  return path.string();
}

Run cli(const std::string& args) {
  const auto out = scratch() / "out.txt";
  const std::string command = std::string(SYMDYN_CLI) + " " + args + " > " + out.string() + " 2>/dev/null";
  const int status = std::system(command.c_str());
  std::ifstream in(out);
  std::stringstream text;
  text << in.rdbuf();
  return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, text.str()};
}

std::vector<std::string> lines(const std::string& text) {
  std::vector<std::string> out;
  std::stringstream in(text);
  for (std::string line; std::getline(in, line);) out.push_back(line);
  return out;
}

}  // namespace

TEST_SUITE("spec_cli") {
  TEST_CASE("every kind parses, builds and round-trips") {
    std::set<std::string> seen;
    for (const char* text : every_kind) {
      CAPTURE(text);
      const auto e = parse_spec(text);
      seen.insert(e.kind);
      CHECK(parse_spec(emit_spec(e)) == e);
      const auto x = build_space(e);
      CHECK(x->words(3).size() > 0);
    }
    CHECK(seen == std::set<std::string>(spec_kinds().begin(), spec_kinds().end()));
  }

  TEST_CASE("a numeric beta normalizes to its polynomial") {
    const auto e = parse_spec(R"({"kind":"beta","value":"3/2"})");
    CHECK(e.polynomial == std::vector<std::int64_t>{-3, 2});
    const auto g = build_space(parse_spec(R"({"kind":"beta","polynomial":[-1,-1,1]})"));
    CHECK(testing_util::words_of(*g, 4) == testing_util::words_of(*golden_mean_sft(), 4));
  }

  TEST_CASE("parse errors carry a JSON pointer") {
    CHECK(parse_error_at(R"({"kind":"full","alphabet":["0"],"bogus":1})") == "/bogus");
    CHECK(parse_error_at(R"({"kind":"reverse","base":{"kind":"even","x":2}})") == "/base/x");
    CHECK(parse_error_at(R"({"kind":"nope"})") == "/kind");
    CHECK(parse_error_at(R"({"kind":"sft","alphabet":["0","1"]})") == "");
    CHECK(parse_error_at(R"({"kind":"sofic","alphabet":["0"],"states":["q"],"edges":[["q","0"]]})") == "/edges/0");
    CHECK(parse_error_at(R"({"kind":"beta","polynomial":[-1,1],"value":"2"})") == "");
    CHECK(parse_error_at(R"({"kind":"sturmian","partial_quotients":[1,"x"]})") == "/partial_quotients/1");
    CHECK(parse_error_at("[1,2") == "");
  }

  TEST_CASE("semantic failures surface as construction errors") {
    CHECK_THROWS_AS(build_space(parse_spec(R"({"kind":"sft","alphabet":["0","1"],"forbidden":["0","1"]})")),
                    ConstructionError);
    CHECK_THROWS_AS(build_space(parse_spec(R"({"kind":"higher-block","base":{"kind":"even"},"window":0})")),
                    ConstructionError);
  }

  TEST_CASE("report outputs") {
    RunConfig config;
    config.max_n = 3;
    std::stringstream classes;
    run_classes(even_shift(), config, classes);
    const auto rows = lines(classes.str());
    REQUIRE(rows.size() >= 5);
    CHECK(rows[1] == "n,count_L,count_F,count_P,count_E,k_used,exact_F,exact_P,exact_E");
    CHECK(rows[3] == "2,4,3,3,4,-1,true,true,true");

    config.format = Format::json;
    config.modes = {Mode::follower};
    std::stringstream json_classes;
    run_classes(even_shift(), config, json_classes);
    const auto j = nlohmann::json::parse(json_classes.str());
    REQUIRE(j.is_array());
    CHECK(j[2]["count_F"] == 3);
    CHECK(j[2]["count_E"].is_null());

    config.format = Format::csv;
    config.n = 2;
    std::stringstream words;
    run_words(golden_beta_shift(), config, words);
    CHECK(lines(words.str()) == std::vector<std::string>{"# seed=0", "word", "00", "01", "10"});
  }

  TEST_CASE("command line exit codes") {
    const auto even = spec_file("even", R"({"kind":"even"})");
    const auto bad = spec_file("bad", R"({"kind":"full","alphabet":["0","1"],"bogus":1})");
    const auto broken = spec_file("broken", R"({"kind":"sft","alphabet":["0"],"forbidden":["0"]})");
    const auto sturm = spec_file("sturm", R"({"kind":"sturmian","partial_quotients":[1,1,1,1,1,1],"horizon":10})");

    const auto words = cli("words --spec " + even + " --n 3");
    CHECK(words.code == 0);
    CHECK(lines(words.out).size() == 2 + 7);

    const auto classes = cli("classes --spec " + even + " --max-n 4 --mode e --seed 9");
    CHECK(classes.code == 0);
    CHECK(lines(classes.out).front() == "# seed=9");
    CHECK(lines(classes.out)[4] == "3,7,,,5,-1,,,true");

    const auto entropy = cli("entropy --spec " + even + " --format json --max-n 3");
    CHECK(entropy.code == 0);
    CHECK(nlohmann::json::parse(entropy.out).is_array());

    CHECK(cli("constraints --spec " + even + " --max-n 4").code == 0);
    CHECK(cli("classes --spec " + bad).code == 2);
    CHECK(cli("classes --spec " + broken).code == 2);
    CHECK(cli("classes --spec /nonexistent/spec.json").code == 2);
    CHECK(cli("classes --spec " + even + " --mode q").code == 2);
    CHECK(cli("").code == 2);
    CHECK(cli("words --spec " + sturm + " --n 20").code == 3);
    CHECK(cli("words --spec " + even + " --n 12 --cap 10").code == 3);
    CHECK(cli("verify paper-examples --format json").code == 1);
  }
}
