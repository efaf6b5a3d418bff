#include "symdyn/error.hpp"
#include "symdyn/spaces.hpp"

#include <algorithm>

namespace symdyn {

namespace {

constexpr std::uint64_t max_windows = 1u << 22;

bool occurs_in(std::span<const Symbol> needle, std::span<const Symbol> hay) {
  if (needle.size() > hay.size()) return false;
  return std::search(hay.begin(), hay.end(), needle.begin(), needle.end()) != hay.end();
}

std::vector<std::vector<Symbol>> prune(std::vector<std::vector<Symbol>> words) {
  std::sort(words.begin(), words.end(),
            [](const auto& x, const auto& y) { return x.size() != y.size() ? x.size() < y.size() : x < y; });
  words.erase(std::unique(words.begin(), words.end()), words.end());
  std::vector<std::vector<Symbol>> kept;
  for (const auto& w : words) {
    bool redundant = std::any_of(kept.begin(), kept.end(), [&](const auto& k) { return occurs_in(k, w); });
    if (!redundant) kept.push_back(w);
  }
  std::sort(kept.begin(), kept.end());
  return kept;
}

}  // namespace

Sft::Sft(SftSpec spec) : ShiftSpace(spec.alphabet) {
  const std::size_t a = alphabet().size();
  for (const auto& f : spec.forbidden) {
    if (f.empty()) throw ConstructionError("forbidden words must be nonempty");
    for (Symbol s : f)
      if (s >= a) throw ConstructionError("forbidden word uses a symbol outside the alphabet");
  }
  forbidden_ = prune(std::move(spec.forbidden));
  for (const auto& f : forbidden_) memory_ = std::max(memory_, f.size() - 1);

  std::uint64_t windows = 1;
  for (std::size_t i = 0; i < memory_; ++i) {
    windows *= a;
    if (windows > max_windows) throw ResourceError("de Bruijn graph too large", max_windows);
  }

  // Vertices: locally legal m-words; edges u -> v labeled by the last letter of v.
  std::vector<std::vector<Symbol>> vertex_words(windows);
  std::vector<char> legal(windows, 0);
  for (std::uint64_t code = 0; code < windows; ++code) {
    std::vector<Symbol> w(memory_);
    std::uint64_t c = code;
    for (std::size_t i = memory_; i-- > 0;) {
      w[i] = static_cast<Symbol>(c % a);
      c /= a;
    }
    legal[code] = locally_legal(w);
    vertex_words[code] = std::move(w);
  }
  SoficPresentation g;
  g.alphabet = alphabet_ptr();
  std::vector<std::size_t> vertex_of(windows, 0);
  std::vector<std::uint64_t> code_of;
  for (std::uint64_t code = 0; code < windows; ++code) {
    if (!legal[code]) continue;
    vertex_of[code] = g.states.size();
    code_of.push_back(code);
    g.states.push_back(memory_ == 0 ? "q" : format_word(alphabet(), vertex_words[code]));
  }
  std::vector<Symbol> edge_word(memory_ + 1);
  for (std::size_t v = 0; v < code_of.size(); ++v) {
    const auto& u = vertex_words[code_of[v]];
    std::copy(u.begin(), u.end(), edge_word.begin());
    for (std::size_t s = 0; s < a; ++s) {
      edge_word[memory_] = static_cast<Symbol>(s);
      if (!locally_legal(edge_word)) continue;
      const std::uint64_t target = memory_ == 0 ? 0 : window_code(std::span(edge_word).subspan(1));
      g.edges.push_back({v, static_cast<Symbol>(s), vertex_of[target]});
    }
  }
  graph_ = g.trimmed();
  if (graph_.states.empty()) throw ConstructionError("SFT language is empty after trimming");

  retained_.assign(windows, 0);
  // trimmed() keeps relative order, so match surviving names back to codes.
  std::size_t cursor = 0;
  for (std::size_t v = 0; v < g.states.size() && cursor < graph_.states.size(); ++v) {
    if (g.states[v] == graph_.states[cursor]) {
      retained_[code_of[v]] = 1;
      ++cursor;
    }
  }
}

bool Sft::locally_legal(std::span<const Symbol> w) const {
  return std::none_of(forbidden_.begin(), forbidden_.end(), [&](const auto& f) { return occurs_in(f, w); });
}

std::uint64_t Sft::window_code(std::span<const Symbol> w) const {
  std::uint64_t code = 0;
  for (Symbol s : w) code = code * alphabet().size() + s;
  return code;
}

bool Sft::contains(std::span<const Symbol> w) const {
  for (Symbol s : w)
    if (s >= alphabet().size()) return false;
  if (!locally_legal(w)) return false;
  if (memory_ == 0) return true;
  if (w.size() >= memory_) {
    for (std::size_t i = 0; i + memory_ <= w.size(); ++i)
      if (!retained_[window_code(w.subspan(i, memory_))]) return false;
    return true;
  }
  std::vector<Symbol> window(memory_);
  for (std::uint64_t code = 0; code < retained_.size(); ++code) {
    if (!retained_[code]) continue;
    std::uint64_t c = code;
    for (std::size_t i = memory_; i-- > 0;) {
      window[i] = static_cast<Symbol>(c % alphabet().size());
      c /= alphabet().size();
    }
    if (occurs_in(w, window)) return true;
  }
  return false;
}

std::unique_ptr<Automaton> Sft::automaton(Direction dir) const {
  return make_graph_automaton(dir == Direction::forward ? graph_ : graph_.reversed());
}

SpacePtr sft(SftSpec spec) { return std::make_shared<Sft>(std::move(spec)); }

SpacePtr golden_mean_sft() { return sft({digit_alphabet(2), {{1, 1}}}); }

}  // namespace symdyn
