#pragma once

#include "symdyn/shift_space.hpp"
#include "symdyn/spaces.hpp"

#include <array>
#include <string>
#include <utility>
#include <vector>

namespace symdyn {

/// Alphabet A1 x A2 with tokens "(x,y)"; symbol i*|A2| + j pairs x_i with y_j.
SpacePtr product(SpacePtr left, SpacePtr right);

/// Membership of w is membership of w read backwards.
SpacePtr reverse(SpacePtr base);

/// Recoding whose letters are the window-words of the base. A window of 1 keeps the base's
/// tokens; larger windows use tokens "[t1,t2,...]".
class HigherBlockShift final : public ShiftSpace {
 public:
  HigherBlockShift(SpacePtr base, std::size_t window);

  bool contains(std::span<const Symbol> w) const override;
  std::optional<std::size_t> exact_context_bound() const override;
  std::unique_ptr<Automaton> automaton(Direction dir) const override;
  bool finite_automaton(Direction dir) const override { return base_->finite_automaton(dir); }
  std::string describe() const override;

  const SpacePtr& base() const noexcept { return base_; }
  std::size_t window() const noexcept { return window_; }
  /// The base word carried by a letter.
  std::span<const Symbol> block(Symbol letter) const { return blocks_[letter]; }

 private:
  SpacePtr base_;
  std::size_t window_;
  std::vector<std::vector<Symbol>> blocks_;
};

SpacePtr higher_block(SpacePtr base, std::size_t window);

/// Sliding block code of radius r: each (2r+1)-word of the domain maps to a target token.
struct BlockMap {
  std::size_t radius = 0;
  std::vector<std::pair<std::vector<Symbol>, std::string>> table;
  /// Target alphabet order; empty means first appearance over L_{2r+1} in lexicographic order.
  std::vector<std::string> target_tokens;
};

/// Image of the domain under a block map. Throws ConstructionError unless the table covers
/// exactly L_{2r+1} of the domain.
SpacePtr block_image(SpacePtr domain, const BlockMap& map, std::string name = "block-image");

/// 1-block map sending chosen letters to one star token and fixing the rest. Letters are
/// chosen by token (`collapse`) or, on a higher-block space, by the token of the first
/// coordinate of their block (`collapse_first`). The target alphabet lists the surviving
/// tokens in base order followed by the star.
struct StarCollapse {
  std::vector<std::string> collapse;
  std::vector<std::string> collapse_first;
  std::string star = "*";
};

SpacePtr star_collapse(SpacePtr base, const StarCollapse& spec);

/// Union of two spaces on disjoint alphabets; the right alphabet's tokens get `suffix`.
/// Throws ConstructionError if the relabeled alphabets still overlap.
SpacePtr disjoint_union(SpacePtr left, SpacePtr right, std::string suffix = "'");

/// Markers adjoined to a data space: markers may not be adjacent or at distance two, and
/// the data letters picked by the markers (odd positions after the first marker, even
/// positions after the second, none after the third) must form a word of the data space.
SpacePtr selector_shift(SpacePtr data, std::array<std::string, 3> markers = {"a", "b", "c"});

/// Period-4 blocks s x1 x2 x3 with selector s in {1,2,3} and x_j letters of a 3-letter
/// space; the letters x_s chosen by the selectors must form a word of that space. A
/// truncated leading block's selector is unseen and ranges over all three choices.
SpacePtr marker_interleave(SpacePtr letters);

/// Pairs a Sturmian word with a base word that advances on the Sturmian 1s. Alphabet
/// "(star,0)" followed by "(t,1)" for each base token t.
SpacePtr sturmian_modulated(SpacePtr base, SturmianSpec rotation, std::string star = "*");

}  // namespace symdyn
