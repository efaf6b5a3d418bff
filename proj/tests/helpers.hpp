#pragma once

#include "oracles.hpp"

#include "symdyn/shift_space.hpp"

#include <string>
#include <vector>

namespace testing_util {

inline std::vector<std::string> words_of(const symdyn::ShiftSpace& space, std::size_t n) {
  std::vector<std::string> out;
  const auto& level = space.words(n);
  for (std::size_t i = 0; i < level.size(); ++i) out.push_back(symdyn::format_word(space.alphabet(), level[i]));
  return out;
}

/// Membership through the library, for single-character alphabets.
inline oracle::Member member_of(symdyn::SpacePtr space) {
  return [space](const std::string& w) { return space->membership(symdyn::Word::parse(space->alphabet_ptr(), w)); };
}

inline std::string letters_of(const symdyn::ShiftSpace& space) {
  std::string out;
  for (const auto& t : space.alphabet().tokens()) out += t;
  return out;
}

/// Symbols of a word given in token syntax.
inline std::vector<symdyn::Symbol> sym(const symdyn::ShiftSpace& space, const std::string& text) {
  const auto w = symdyn::Word::parse(space.alphabet_ptr(), text);
  return {w.symbols().begin(), w.symbols().end()};
}

}  // namespace testing_util

#include "symdyn/transforms.hpp"

namespace testing_util {

struct Named {
  std::string name;
  symdyn::SpacePtr space;
  std::size_t depth;  // word lengths cheap enough for exhaustive property checks
};

/// One instance of every space family and transform.
inline std::vector<Named> roster() {
  using namespace symdyn;
  auto gb = golden_beta_shift();
  auto x2 = disjoint_union(reverse(gb), reverse(gb));
  auto interleave = marker_interleave(context_free_shift());
  return {
      {"full", full_shift(digit_alphabet(2)), 9},
      {"even", even_shift(), 9},
      {"golden-sft", golden_mean_sft(), 9},
      {"golden-beta", gb, 9},
      {"tribonacci-beta", beta_shift({{{}, {1, 1, 0}, false}, 0}), 9},
      {"preperiodic-beta", beta_shift({{{1}, {1, 0}, false}, 0}), 9},
      {"sturmian", sturmian({{1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1}, 40}), 10},
      {"context-free", context_free_shift(), 7},
      {"product", product(golden_mean_sft(), even_shift()), 5},
      {"reverse", reverse(context_free_shift()), 7},
      {"higher-block", higher_block(even_shift(), 3), 6},
      {"disjoint-union", disjoint_union(golden_mean_sft(), even_shift()), 7},
      {"selector", selector_shift(x2), 6},
      {"marker-interleave", interleave, 6},
      {"star-collapse", star_collapse(interleave, {{"1", "2", "3"}, {}, "*"}), 6},
      {"sturmian-modulated", sturmian_modulated(gb, {{1, 1, 1, 1, 1, 1, 1, 1, 1}, 40}), 6},
  };
}

}  // namespace testing_util
