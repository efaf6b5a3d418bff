#pragma once

#include "symdyn/classify.hpp"
#include "symdyn/language.hpp"

#include <cstdint>
#include <optional>
#include <ostream>
#include <vector>

namespace symdyn {

enum class Format { csv, json };

struct RunConfig {
  std::size_t n = 4;      // words
  std::size_t max_n = 6;  // classes, entropy, constraints
  std::optional<std::size_t> k;      // fixed context bound instead of a sweep
  std::optional<std::size_t> k_max;  // sweep ceiling; default n + 2
  std::size_t stability = 2;
  std::vector<Mode> modes{Mode::follower, Mode::predecessor, Mode::extender};
  Format format = Format::csv;
  std::uint64_t seed = 0;
  std::size_t cap = 5'000'000;  // enumeration cap
};

/// Rows n = 1..max_n. Spaces with a sofic presentation (explicit, or from a finite
/// automaton) of at most 64 states are counted exactly unless a fixed k is requested;
/// otherwise all modes of a row share one k, the largest any requested mode's sweep needed.
/// Left constraints (n >= 2) are added when `constraints` is set.
CountTable count_table(const SpacePtr& space, const RunConfig& config, bool constraints = false);

/// L_n in lexicographic order of symbol indices.
void run_words(const SpacePtr& space, const RunConfig& config, std::ostream& out);
/// CSV columns n,count_L,count_F,count_P,count_E,k_used,exact_F,exact_P,exact_E; fields of
/// modes not requested are empty (null in JSON).
void run_classes(const SpacePtr& space, const RunConfig& config, std::ostream& out);
/// Rows quantity,n,count,value,exact,bound for h and each requested mode's entropy.
void run_entropy(const SpacePtr& space, const RunConfig& config, std::ostream& out);
/// Rows n,count_L,count_C,value,k_used,exact_C for n = 2..max_n.
void run_constraints(const SpacePtr& space, const RunConfig& config, std::ostream& out);

}  // namespace symdyn
