#pragma once

#include "symdyn/sofic.hpp"

#include <cstdint>
#include <functional>
#include <random>
#include <string>
#include <vector>

namespace symdyn {

enum class Verdict { pass, fail, error };

std::string verdict_name(Verdict v);

struct CheckResult {
  std::string id;
  std::string anchor;  // the statement being reproduced
  std::string parameters;
  std::string observed;
  std::string required;
  Verdict verdict = Verdict::pass;
  double seconds = 0;
};

struct Check {
  int criterion = 0;
  std::string id;
  std::string suite;  // paper-examples, inequalities, constructions
  double time_limit = 0;  // seconds
  std::function<CheckResult(std::uint64_t seed)> run;
};

/// The acceptance checks in criterion order.
const std::vector<Check>& acceptance_checks();

/// Runs one check, timing it. Library errors turn into an ERROR verdict and a run past
/// the time limit into FAIL.
CheckResult run_check(const Check& check, std::uint64_t seed);

/// Runs the checks of a suite (paper-examples, inequalities, constructions or all). Throws
/// ContractError for an unknown suite.
std::vector<CheckResult> run_suite(const std::string& suite, std::uint64_t seed);

/// Presentation with `states` states on the digit alphabet of size `letters`, each labeled
/// edge present with probability `density`, redrawn until every state is essential.
SoficPresentation random_presentation(std::mt19937_64& rng, std::size_t states = 4, std::size_t letters = 2,
                                      double density = 0.35);

}  // namespace symdyn
