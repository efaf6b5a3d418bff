#pragma once

#include "symdyn/word.hpp"

#include <cstdint>
#include <deque>
#include <memory>
#include <span>
#include <unordered_map>
#include <vector>

namespace symdyn {

using State = std::uint32_t;
using StateKey = std::vector<std::int64_t>;

struct StateKeyHash {
  std::size_t operator()(const StateKey& key) const noexcept;
  std::size_t operator()(const std::vector<State>& key) const noexcept;
};

/// Incremental recognizer for a factorial language, built lazily.
///
/// States are tuples of integers interned to dense ids. After reading a word the recognizer
/// holds a frontier (sorted set of states); the frontier is nonempty exactly when the word
/// read so far belongs to the language. Forward automata read left to right, backward
/// automata read right to left (they recognize the reversed language).
///
/// Instances memoize per (state, symbol) and are not thread-safe; each thread builds its own
/// from the immutable ShiftSpace.
class Automaton {
 public:
  explicit Automaton(std::size_t alphabet_size) : alphabet_size_(alphabet_size) {}
  virtual ~Automaton() = default;
  Automaton(const Automaton&) = delete;
  Automaton& operator=(const Automaton&) = delete;

  std::size_t alphabet_size() const noexcept { return alphabet_size_; }

  /// Frontier for the empty word.
  const std::vector<State>& start();

  /// Sorted successors of `s` under `a`. The reference stays valid for the lifetime of the
  /// automaton.
  const std::vector<State>& next(State s, Symbol a);

  /// Frontier after reading `word` from the start frontier.
  std::vector<State> run(std::span<const Symbol> word);

  std::size_t state_count() const noexcept { return keys_.size(); }
  const StateKey& key(State s) const { return keys_[s]; }

 protected:
  virtual void compute_start(std::vector<State>& out) = 0;
  virtual void compute_next(State s, Symbol a, std::vector<State>& out) = 0;

  State intern(const StateKey& key);

 private:
  std::size_t alphabet_size_;
  std::vector<StateKey> keys_;
  std::unordered_map<StateKey, State, StateKeyHash> ids_;
  std::vector<State> start_;
  bool has_start_ = false;
  std::vector<std::int32_t> slot_;
  std::deque<std::vector<State>> results_;
};

/// Sorts and deduplicates a frontier in place.
void normalize(std::vector<State>& frontier);

/// Lazy subset construction over an Automaton. DFA state 0 is the dead state (empty
/// frontier); every other DFA state is live.
class LazyDfa {
 public:
  static constexpr std::uint32_t dead = 0;

  explicit LazyDfa(std::unique_ptr<Automaton> automaton, std::size_t state_cap = 20'000'000);

  std::uint32_t start();
  std::uint32_t step(std::uint32_t d, Symbol a);
  std::uint32_t run(std::uint32_t d, std::span<const Symbol> word);
  bool live(std::uint32_t d) const noexcept { return d != dead; }

  std::size_t alphabet_size() const noexcept { return alphabet_size_; }
  std::size_t state_count() const noexcept { return frontiers_.size(); }
  const std::vector<State>& frontier(std::uint32_t d) const { return frontiers_[d]; }
  Automaton& automaton() noexcept { return *automaton_; }

 private:
  std::uint32_t intern(std::vector<State>&& frontier);

  std::unique_ptr<Automaton> automaton_;
  std::size_t alphabet_size_;
  std::size_t state_cap_;
  std::vector<std::vector<State>> frontiers_;
  std::unordered_map<std::vector<State>, std::uint32_t, StateKeyHash> ids_;
  std::vector<std::uint32_t> delta_;
  std::uint32_t start_ = static_cast<std::uint32_t>(-1);
  std::vector<State> scratch_;
};

}  // namespace symdyn
