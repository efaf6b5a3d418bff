#pragma once

#include "symdyn/shift_space.hpp"

#include <array>
#include <optional>
#include <string>
#include <vector>

namespace symdyn {

/// Labeled graph presenting a sofic shift: a word is legal when some path carries it.
struct SoficPresentation {
  struct Edge {
    std::size_t from;
    Symbol label;
    std::size_t to;
    bool operator==(const Edge&) const = default;
  };

  AlphabetPtr alphabet;
  std::vector<std::string> states;
  std::vector<Edge> edges;

  std::size_t state_count() const noexcept { return states.size(); }
  /// Every state has an incoming and an outgoing edge.
  bool essential() const;
  /// Largest essential subgraph (iteratively drops sources and sinks); states keep their
  /// relative order.
  SoficPresentation trimmed() const;
  /// Same graph with every edge reversed.
  SoficPresentation reversed() const;
};

/// Builds a sofic presentation from a list of (from, label, to) token triples.
SoficPresentation make_presentation(AlphabetPtr alphabet, std::vector<std::string> states,
                                    const std::vector<std::array<std::string, 3>>& edges);

/// Recognizer whose states are the presentation's vertices.
std::unique_ptr<Automaton> make_graph_automaton(const SoficPresentation& p);

class SoficShift final : public ShiftSpace {
 public:
  /// Trims `p` to its essential part; throws ConstructionError if nothing remains.
  explicit SoficShift(SoficPresentation p, std::string name = "sofic");

  bool contains(std::span<const Symbol> w) const override;
  std::unique_ptr<Automaton> automaton(Direction dir) const override;
  bool finite_automaton(Direction) const override { return true; }
  std::optional<SoficPresentation> explicit_presentation() const override { return presentation_; }
  std::string describe() const override { return name_; }

  const SoficPresentation& presentation() const noexcept { return presentation_; }

 private:
  SoficPresentation presentation_;
  std::string name_;
  std::vector<std::vector<std::vector<std::size_t>>> out_;  // out_[q][a] = targets
};

class FullShift final : public ShiftSpace {
 public:
  explicit FullShift(AlphabetPtr alphabet) : ShiftSpace(std::move(alphabet)) {}

  bool contains(std::span<const Symbol> w) const override;
  std::optional<std::size_t> exact_context_bound() const override { return 0; }
  std::unique_ptr<Automaton> automaton(Direction dir) const override;
  bool finite_automaton(Direction) const override { return true; }
  std::optional<SoficPresentation> explicit_presentation() const override;
  std::string describe() const override;
};

SpacePtr full_shift(AlphabetPtr alphabet);
SpacePtr sofic(SoficPresentation p);

/// States q0, q1; q0 -1-> q0, q0 -0-> q1, q1 -0-> q0.
SoficPresentation even_presentation();
SpacePtr even_shift();

/// Presentation obtainable for a space: its explicit one, or the reachable part of its
/// forward automaton when that is finite. nullopt when unavailable or larger than
/// `max_states` after trimming.
std::optional<SoficPresentation> sofic_presentation(const ShiftSpace& space, std::size_t max_states = 64,
                                                    std::size_t explore_cap = 100'000);

}  // namespace symdyn
