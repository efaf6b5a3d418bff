#pragma once

#include "symdyn/automaton.hpp"
#include "symdyn/word.hpp"

#include <cstddef>
#include <cstdint>
#include <deque>
#include <memory>
#include <mutex>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace symdyn {

struct SoficPresentation;

/// Flat list of equal-length words in lexicographic order of symbol indices.
class WordSet {
 public:
  explicit WordSet(std::size_t length = 0) : length_(length) {}

  std::size_t length() const noexcept { return length_; }
  std::size_t size() const noexcept { return length_ == 0 ? count_ : data_.size() / length_; }
  std::span<const Symbol> operator[](std::size_t i) const {
    return {data_.data() + i * length_, length_};
  }
  void push_back(std::span<const Symbol> w);
  void reserve(std::size_t count) { data_.reserve(count * length_); }

 private:
  std::size_t length_;
  std::size_t count_ = 0;  // only used for the empty-word set
  std::vector<Symbol> data_;
};

/// Global cap on the number of words held by one enumeration level (default 5e6).
std::size_t enumeration_cap() noexcept;
void set_enumeration_cap(std::size_t cap);

enum class Direction { forward, backward };

/// A shift space presented through its language: a pure membership predicate over finite
/// words plus optional structure used by exact algorithms.
///
/// Implementations are immutable after construction and safe to query from several threads.
class ShiftSpace : public std::enable_shared_from_this<ShiftSpace> {
 public:
  explicit ShiftSpace(AlphabetPtr alphabet);
  virtual ~ShiftSpace();
  ShiftSpace(const ShiftSpace&) = delete;
  ShiftSpace& operator=(const ShiftSpace&) = delete;

  const Alphabet& alphabet() const noexcept { return *alphabet_; }
  const AlphabetPtr& alphabet_ptr() const noexcept { return alphabet_; }

  /// Membership of a word; throws ContractError if the word's alphabet differs.
  bool membership(const Word& w) const;

  /// Membership for raw symbol indices; indices must be < alphabet().size().
  virtual bool contains(std::span<const Symbol> w) const = 0;

  /// Context length that makes bounded follower/predecessor/extender classification exact,
  /// when one is known (shifts of finite type: the memory).
  virtual std::optional<std::size_t> exact_context_bound() const { return std::nullopt; }

  /// Recognizer for the language (forward) or its reversal (backward). The default wraps
  /// contains() and keeps whole words as states.
  virtual std::unique_ptr<Automaton> automaton(Direction dir) const;

  /// True when automaton(dir) has finitely many reachable states and is exact for all word
  /// lengths, so exhausting it yields a sofic presentation.
  virtual bool finite_automaton(Direction) const { return false; }

  /// A presentation supplied by construction (SFT, sofic, full shift).
  virtual std::optional<SoficPresentation> explicit_presentation() const;

  virtual std::string describe() const = 0;

  /// L_n, memoized per space and length.
  const WordSet& words(std::size_t n) const;

 private:
  AlphabetPtr alphabet_;
  struct LanguageCache;
  mutable std::unique_ptr<LanguageCache> cache_;
  mutable std::mutex cache_mutex_;
};

using SpacePtr = std::shared_ptr<const ShiftSpace>;

/// Automaton that stores the word read so far as its state and asks contains().
std::unique_ptr<Automaton> make_word_automaton(SpacePtr space, Direction dir);

}  // namespace symdyn
