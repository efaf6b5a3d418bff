#include "symdyn/sofic.hpp"

#include <unordered_map>

namespace symdyn {

// Every state reachable from the start frontier reads a subset of L(X), and the start
// frontier reads all of it, so the reachable graph presents X once sources and sinks are
// trimmed (extendability keeps every legal word on a path between cycles).
std::optional<SoficPresentation> sofic_presentation(const ShiftSpace& space, std::size_t max_states,
                                                    std::size_t explore_cap) {
  if (auto p = space.explicit_presentation()) {
    auto t = p->trimmed();
    if (t.state_count() > max_states) return std::nullopt;
    return t;
  }
  if (!space.finite_automaton(Direction::forward)) return std::nullopt;

  auto aut = space.automaton(Direction::forward);
  const std::size_t a_size = space.alphabet().size();
  std::unordered_map<State, std::size_t> index;
  std::vector<State> order;
  for (State s : aut->start()) {
    index.emplace(s, order.size());
    order.push_back(s);
  }
  SoficPresentation p;
  p.alphabet = space.alphabet_ptr();
  for (std::size_t i = 0; i < order.size(); ++i) {
    for (std::size_t a = 0; a < a_size; ++a) {
      for (State t : aut->next(order[i], static_cast<Symbol>(a))) {
        auto [it, inserted] = index.emplace(t, order.size());
        if (inserted) {
          if (order.size() >= explore_cap) return std::nullopt;
          order.push_back(t);
        }
        p.edges.push_back({i, static_cast<Symbol>(a), it->second});
      }
    }
  }
  for (std::size_t i = 0; i < order.size(); ++i) p.states.push_back("s" + std::to_string(i));
  auto t = p.trimmed();
  if (t.states.empty() || t.state_count() > max_states) return std::nullopt;
  return t;
}

}  // namespace symdyn
