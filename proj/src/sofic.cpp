#include "symdyn/sofic.hpp"

#include "symdyn/error.hpp"

#include <algorithm>
#include <tuple>
#include <unordered_map>

namespace symdyn {

bool SoficPresentation::essential() const {
  std::vector<bool> in(states.size()), out(states.size());
  for (const auto& e : edges) {
    out[e.from] = true;
    in[e.to] = true;
  }
  for (std::size_t q = 0; q < states.size(); ++q)
    if (!in[q] || !out[q]) return false;
  return true;
}

SoficPresentation SoficPresentation::trimmed() const {
  std::vector<bool> alive(states.size(), true);
  bool changed = true;
  while (changed) {
    changed = false;
    std::vector<bool> in(states.size()), out(states.size());
    for (const auto& e : edges) {
      if (!alive[e.from] || !alive[e.to]) continue;
      out[e.from] = true;
      in[e.to] = true;
    }
    for (std::size_t q = 0; q < states.size(); ++q) {
      if (alive[q] && (!in[q] || !out[q])) {
        alive[q] = false;
        changed = true;
      }
    }
  }
  SoficPresentation result;
  result.alphabet = alphabet;
  std::vector<std::size_t> renumber(states.size(), 0);
  for (std::size_t q = 0; q < states.size(); ++q) {
    if (!alive[q]) continue;
    renumber[q] = result.states.size();
    result.states.push_back(states[q]);
  }
  for (const auto& e : edges)
    if (alive[e.from] && alive[e.to]) result.edges.push_back({renumber[e.from], e.label, renumber[e.to]});
  std::sort(result.edges.begin(), result.edges.end(), [](const Edge& x, const Edge& y) {
    return std::tie(x.from, x.label, x.to) < std::tie(y.from, y.label, y.to);
  });
  result.edges.erase(std::unique(result.edges.begin(), result.edges.end()), result.edges.end());
  return result;
}

SoficPresentation SoficPresentation::reversed() const {
  SoficPresentation result = *this;
  for (auto& e : result.edges) std::swap(e.from, e.to);
  return result;
}

SoficPresentation make_presentation(AlphabetPtr alphabet, std::vector<std::string> states,
                                    const std::vector<std::array<std::string, 3>>& edges) {
  SoficPresentation p;
  p.alphabet = std::move(alphabet);
  std::unordered_map<std::string, std::size_t> index;
  for (std::size_t i = 0; i < states.size(); ++i)
    if (!index.emplace(states[i], i).second) throw ConstructionError("duplicate state '" + states[i] + "'");
  p.states = std::move(states);
  for (const auto& [from, label, to] : edges) {
    auto f = index.find(from), t = index.find(to);
    if (f == index.end() || t == index.end()) throw ConstructionError("edge references unknown state");
    auto sym = p.alphabet->find(label);
    if (!sym) throw ConstructionError("edge label '" + label + "' not in alphabet");
    p.edges.push_back({f->second, *sym, t->second});
  }
  return p;
}

namespace {

/// States are the graph's vertices; the empty word may sit at any of them.
class GraphAutomaton final : public Automaton {
 public:
  explicit GraphAutomaton(const SoficPresentation& p)
      : Automaton(p.alphabet->size()), out_(p.states.size(), std::vector<std::vector<State>>(p.alphabet->size())) {
    for (std::size_t q = 0; q < p.states.size(); ++q) intern({static_cast<std::int64_t>(q)});
    for (const auto& e : p.edges) out_[e.from][e.label].push_back(static_cast<State>(e.to));
  }

 protected:
  void compute_start(std::vector<State>& out) override {
    for (State q = 0; q < out_.size(); ++q) out.push_back(q);
  }
  void compute_next(State s, Symbol a, std::vector<State>& out) override { out = out_[s][a]; }

 private:
  std::vector<std::vector<std::vector<State>>> out_;
};

}  // namespace

std::unique_ptr<Automaton> make_graph_automaton(const SoficPresentation& p) {
  return std::make_unique<GraphAutomaton>(p);
}

SoficShift::SoficShift(SoficPresentation p, std::string name)
    : ShiftSpace(p.alphabet), presentation_(p.trimmed()), name_(std::move(name)) {
  if (presentation_.states.empty()) throw ConstructionError("sofic presentation has no essential part");
  out_.assign(presentation_.states.size(), std::vector<std::vector<std::size_t>>(alphabet().size()));
  for (const auto& e : presentation_.edges) out_[e.from][e.label].push_back(e.to);
}

bool SoficShift::contains(std::span<const Symbol> w) const {
  const std::size_t q = presentation_.states.size();
  std::vector<char> current(q, 1), following(q);
  for (Symbol a : w) {
    std::fill(following.begin(), following.end(), 0);
    bool any = false;
    for (std::size_t s = 0; s < q; ++s) {
      if (!current[s]) continue;
      for (std::size_t t : out_[s][a]) {
        following[t] = 1;
        any = true;
      }
    }
    if (!any) return false;
    current.swap(following);
  }
  return true;
}

std::unique_ptr<Automaton> SoficShift::automaton(Direction dir) const {
  return std::make_unique<GraphAutomaton>(dir == Direction::forward ? presentation_ : presentation_.reversed());
}

bool FullShift::contains(std::span<const Symbol> w) const {
  return std::all_of(w.begin(), w.end(), [&](Symbol s) { return s < alphabet().size(); });
}

std::optional<SoficPresentation> FullShift::explicit_presentation() const {
  SoficPresentation p;
  p.alphabet = alphabet_ptr();
  p.states = {"q"};
  for (std::size_t a = 0; a < alphabet().size(); ++a) p.edges.push_back({0, static_cast<Symbol>(a), 0});
  return p;
}

std::unique_ptr<Automaton> FullShift::automaton(Direction) const {
  return std::make_unique<GraphAutomaton>(*explicit_presentation());
}

std::string FullShift::describe() const { return "full(" + std::to_string(alphabet().size()) + ")"; }

SpacePtr full_shift(AlphabetPtr alphabet) { return std::make_shared<FullShift>(std::move(alphabet)); }

SpacePtr sofic(SoficPresentation p) { return std::make_shared<SoficShift>(std::move(p)); }

SoficPresentation even_presentation() {
  return make_presentation(digit_alphabet(2), {"q0", "q1"},
                           {{{"q0", "1", "q0"}}, {{"q0", "0", "q1"}}, {{"q1", "0", "q0"}}});
}

SpacePtr even_shift() { return std::make_shared<SoficShift>(even_presentation(), "even"); }

}  // namespace symdyn
