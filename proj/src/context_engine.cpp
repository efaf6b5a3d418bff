#include "symdyn/classify.hpp"

#include <algorithm>
#include <unordered_map>

namespace symdyn {

namespace {

struct IntVectorHash {
  std::size_t operator()(const std::vector<std::int32_t>& v) const noexcept {
    std::size_t h = v.size();
    for (auto x : v) h ^= static_cast<std::size_t>(x) + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
    return h;
  }
};

/// Numbers signatures by first appearance.
class Grouper {
 public:
  std::uint32_t add(const std::vector<std::int32_t>& sig) {
    auto [it, inserted] = ids_.emplace(sig, static_cast<std::uint32_t>(ids_.size()));
    return it->second;
  }
  std::size_t size() const noexcept { return ids_.size(); }

 private:
  std::unordered_map<std::vector<std::int32_t>, std::uint32_t, IntVectorHash> ids_;
};

}  // namespace

struct ContextEngine::Impl {
  LazyDfa dfa;
  std::size_t alphabet_size;
  // classes_[j][d]: class of DFA state d for continuations of length <= j (-1: dead).
  std::vector<std::unordered_map<std::uint32_t, std::int32_t>> classes;
  std::vector<std::unordered_map<std::vector<std::int32_t>, std::int32_t, IntVectorHash>> interned;
  // left_[k]: DFA states reached by the length-k words, sorted.
  std::vector<std::vector<std::uint32_t>> left;
  std::unordered_map<std::size_t, std::vector<std::uint32_t>> word_states;

  Impl(const ShiftSpace& space, std::size_t cap)
      : dfa(space.automaton(Direction::forward), cap), alphabet_size(space.alphabet().size()) {}

  std::int32_t cls(std::uint32_t d, std::size_t j) {
    if (!dfa.live(d)) return -1;
    if (j == 0) return 0;
    if (classes.size() <= j) {
      classes.resize(j + 1);
      interned.resize(j + 1);
    }
    if (auto it = classes[j].find(d); it != classes[j].end()) return it->second;
    std::vector<std::int32_t> row(alphabet_size);
    for (std::size_t a = 0; a < alphabet_size; ++a) row[a] = cls(dfa.step(d, static_cast<Symbol>(a)), j - 1);
    auto& table = interned[j];
    auto [it, inserted] = table.emplace(std::move(row), static_cast<std::int32_t>(table.size()));
    classes[j].emplace(d, it->second);
    return it->second;
  }

  const std::vector<std::uint32_t>& left_states(std::size_t k) {
    if (left.empty()) left.push_back({dfa.start()});
    while (left.size() <= k) {
      std::vector<std::uint32_t> next;
      for (auto d : left.back())
        for (std::size_t a = 0; a < alphabet_size; ++a) {
          const auto t = dfa.step(d, static_cast<Symbol>(a));
          if (dfa.live(t)) next.push_back(t);
        }
      std::sort(next.begin(), next.end());
      next.erase(std::unique(next.begin(), next.end()), next.end());
      left.push_back(std::move(next));
    }
    return left[k];
  }

  const std::vector<std::uint32_t>& states_of(const ShiftSpace& space, std::size_t n) {
    auto it = word_states.find(n);
    if (it != word_states.end()) return it->second;
    const WordSet& words = space.words(n);
    std::vector<std::uint32_t> states(words.size());
    const auto start = dfa.start();
    for (std::size_t i = 0; i < words.size(); ++i) states[i] = dfa.run(start, words[i]);
    return word_states.emplace(n, std::move(states)).first->second;
  }
};

ContextEngine::ContextEngine(SpacePtr space, std::size_t dfa_state_cap)
    : space_(std::move(space)), impl_(std::make_unique<Impl>(*space_, dfa_state_cap)) {}

ContextEngine::~ContextEngine() = default;

Classification ContextEngine::classify(std::size_t n, std::size_t k, Mode mode) {
  auto& m = *impl_;
  const WordSet& words = space_->words(n);
  Classification out;
  out.class_of.resize(words.size());
  Grouper groups;
  std::vector<std::int32_t> sig;
  if (mode == Mode::follower) {
    const auto& states = m.states_of(*space_, n);
    for (std::size_t i = 0; i < words.size(); ++i) out.class_of[i] = groups.add({m.cls(states[i], k)});
  } else {
    const auto left = m.left_states(k);
    sig.resize(left.size());
    for (std::size_t i = 0; i < words.size(); ++i) {
      for (std::size_t j = 0; j < left.size(); ++j) {
        const auto d = m.dfa.run(left[j], words[i]);
        sig[j] = mode == Mode::predecessor ? (m.dfa.live(d) ? 1 : 0) : m.cls(d, k);
      }
      out.class_of[i] = groups.add(sig);
    }
  }
  out.count = groups.size();
  return out;
}

std::uint64_t ContextEngine::left_constraints(std::size_t n, std::size_t k) {
  auto& m = *impl_;
  const WordSet& words = space_->words(n);
  const auto& states = m.states_of(*space_, n);
  const auto start = m.dfa.start();
  std::uint64_t count = 0;
  for (std::size_t i = 0; i < words.size(); ++i) {
    const auto v = m.dfa.run(start, words[i].subspan(1));
    if (m.cls(states[i], k) != m.cls(v, k)) ++count;
  }
  return count;
}

}  // namespace symdyn
