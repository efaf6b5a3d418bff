#include "symdyn/checks.hpp"
#include "symdyn/error.hpp"
#include "symdyn/report.hpp"
#include "symdyn/spec_file.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <iostream>

namespace {

constexpr int exit_fail = 1;
constexpr int exit_usage = 2;
constexpr int exit_resource = 3;

std::vector<symdyn::Mode> modes_of(const std::string& text) {
  if (text == "all") return {symdyn::Mode::follower, symdyn::Mode::predecessor, symdyn::Mode::extender};
  return {symdyn::parse_mode(text)};
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) out += c == '"' ? std::string("\"\"") : std::string(1, c);
  return out + "\"";
}

int print_verify(const std::vector<symdyn::CheckResult>& rows, const symdyn::RunConfig& config) {
  bool failed = false, errored = false;
  for (const auto& r : rows) {
    failed = failed || r.verdict == symdyn::Verdict::fail;
    errored = errored || r.verdict == symdyn::Verdict::error;
  }
  if (config.format == symdyn::Format::csv) {
    std::cout << "# seed=" << config.seed << "\n";
    std::cout << "id,anchor,parameters,observed,required,verdict\n";
    for (const auto& r : rows)
      std::cout << csv_field(r.id) << "," << csv_field(r.anchor) << "," << csv_field(r.parameters) << ","
                << csv_field(r.observed) << "," << csv_field(r.required) << "," << symdyn::verdict_name(r.verdict)
                << "\n";
  } else {
    nlohmann::json out = nlohmann::json::array();
    for (const auto& r : rows)
      out.push_back({{"id", r.id},
                     {"anchor", r.anchor},
                     {"parameters", r.parameters},
                     {"observed", r.observed},
                     {"required", r.required},
                     {"verdict", symdyn::verdict_name(r.verdict)}});
    std::cout << out.dump(2) << "\n";
  }
  if (failed) return exit_fail;
  return errored ? exit_resource : 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Follower, predecessor and extender set counts of shift spaces"};
  app.require_subcommand(1);

  symdyn::RunConfig config;
  std::string spec_path, mode = "all", format = "csv", suite = "all";
  std::size_t k = 0, k_max = 0;

  auto common = [&](CLI::App* sub, bool with_spec) {
    if (with_spec) sub->add_option("--spec", spec_path, "shift spec file (JSON)")->required()->check(CLI::ExistingFile);
    sub->add_option("--format", format, "csv or json")->check(CLI::IsMember({"csv", "json"}));
    sub->add_option("--seed", config.seed, "random seed, recorded in the output");
    sub->add_option("--cap", config.cap, "maximum number of words per enumeration level")->check(CLI::PositiveNumber);
  };
  auto counting = [&](CLI::App* sub) {
    sub->add_option("--max-n", config.max_n, "largest word length")->check(CLI::PositiveNumber);
    sub->add_option("--k", k, "fixed context bound (disables the sweep and the sofic path)");
    sub->add_option("--k-max", k_max, "largest context bound tried by the sweep (default n+2)");
    sub->add_option("--stability", config.stability, "sweep stops after this many equal counts")
        ->check(CLI::PositiveNumber);
    sub->add_option("--mode", mode, "f, p, e or all")->check(CLI::IsMember({"f", "p", "e", "all"}));
  };

  auto* words = app.add_subcommand("words", "list L_n");
  common(words, true);
  words->add_option("--n", config.n, "word length")->required();
  auto* classes = app.add_subcommand("classes", "count follower/predecessor/extender classes");
  common(classes, true);
  counting(classes);
  auto* entropy = app.add_subcommand("entropy", "per-n entropy values and certified bounds");
  common(entropy, true);
  counting(entropy);
  auto* constraints = app.add_subcommand("constraints", "left constraint counts");
  common(constraints, true);
  counting(constraints);
  auto* verify = app.add_subcommand("verify", "run a check suite");
  common(verify, false);
  verify->add_option("suite", suite, "paper-examples, inequalities, constructions or all")
      ->check(CLI::IsMember({"paper-examples", "inequalities", "constructions", "all"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : exit_usage;
  }

  auto* sub = app.get_subcommands().front();
  auto given = [&](const char* name) {
    const auto* opt = sub->get_option_no_throw(name);
    return opt && opt->count() > 0;
  };
  if (given("--k")) config.k = k;
  if (given("--k-max")) config.k_max = k_max;
  config.format = format == "json" ? symdyn::Format::json : symdyn::Format::csv;

  try {
    config.modes = modes_of(mode);
    symdyn::set_enumeration_cap(config.cap);
    if (sub == verify) return print_verify(symdyn::run_suite(suite, config.seed), config);

    const auto space = symdyn::build_space(symdyn::parse_spec_file(spec_path));
    if (sub == words) symdyn::run_words(space, config, std::cout);
    else if (sub == classes) symdyn::run_classes(space, config, std::cout);
    else if (sub == entropy) symdyn::run_entropy(space, config, std::cout);
    else symdyn::run_constraints(space, config, std::cout);
    return 0;
  } catch (const symdyn::ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return exit_usage;
  } catch (const symdyn::ResourceError& e) {
    std::cerr << "resource error: " << e.what() << "\n";
    return exit_resource;
  } catch (const symdyn::PrecisionError& e) {
    std::cerr << "precision budget exhausted: " << e.what() << "\n";
    return exit_resource;
  } catch (const symdyn::CertificationError& e) {
    std::cerr << "horizon too short: " << e.what() << "\n";
    return exit_resource;
  } catch (const symdyn::ContractError& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return exit_usage;
  } catch (const symdyn::ConstructionError& e) {
    std::cerr << "invalid spec: " << e.what() << "\n";
    return exit_usage;
  } catch (const symdyn::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return exit_fail;
  }
}
