#include "symdyn/shift_space.hpp"

#include "symdyn/error.hpp"
#include "symdyn/sofic.hpp"

#include <atomic>

namespace symdyn {

namespace {
std::atomic<std::size_t> g_enumeration_cap{5'000'000};
}

std::size_t enumeration_cap() noexcept { return g_enumeration_cap.load(); }

void set_enumeration_cap(std::size_t cap) {
  if (cap == 0) throw ContractError("enumeration cap must be positive");
  g_enumeration_cap.store(cap);
}

void WordSet::push_back(std::span<const Symbol> w) {
  if (w.size() != length_) throw ContractError("word length does not match WordSet");
  if (length_ == 0) {
    ++count_;
    return;
  }
  data_.insert(data_.end(), w.begin(), w.end());
}

struct ShiftSpace::LanguageCache {
  std::unique_ptr<LazyDfa> dfa;
  std::deque<WordSet> levels;                       // levels[n] = L_n
  std::deque<std::vector<std::uint32_t>> states;    // DFA state after each word
};

ShiftSpace::ShiftSpace(AlphabetPtr alphabet) : alphabet_(std::move(alphabet)) {
  if (!alphabet_) throw ContractError("shift space needs an alphabet");
}

ShiftSpace::~ShiftSpace() = default;

bool ShiftSpace::membership(const Word& w) const {
  if (!(*w.alphabet() == *alphabet_))
    throw ContractError("word alphabet does not match shift space alphabet");
  return contains(w.symbols());
}

std::optional<SoficPresentation> ShiftSpace::explicit_presentation() const { return std::nullopt; }

std::unique_ptr<Automaton> ShiftSpace::automaton(Direction dir) const {
  return make_word_automaton(shared_from_this(), dir);
}

const WordSet& ShiftSpace::words(std::size_t n) const {
  std::lock_guard lock(cache_mutex_);
  if (!cache_) {
    cache_ = std::make_unique<LanguageCache>();
    cache_->dfa = std::make_unique<LazyDfa>(automaton(Direction::forward));
    WordSet empty(0);
    empty.push_back({});
    cache_->levels.push_back(std::move(empty));
    cache_->states.push_back({cache_->dfa->start()});
  }
  auto& c = *cache_;
  const std::size_t cap = enumeration_cap();
  const std::size_t a_size = alphabet_->size();
  std::vector<Symbol> buffer;
  while (c.levels.size() <= n) {
    const std::size_t len = c.levels.size();
    const WordSet& prev = c.levels.back();
    const auto& prev_states = c.states.back();
    WordSet level(len);
    std::vector<std::uint32_t> level_states;
    buffer.resize(len);
    for (std::size_t i = 0; i < prev.size(); ++i) {
      auto w = prev[i];
      std::copy(w.begin(), w.end(), buffer.begin());
      for (std::size_t a = 0; a < a_size; ++a) {
        const auto d = c.dfa->step(prev_states[i], static_cast<Symbol>(a));
        if (!c.dfa->live(d)) continue;
        if (level.size() >= cap) throw ResourceError("language enumeration of length " + std::to_string(len) + " exceeded word cap", cap);
        buffer[len - 1] = static_cast<Symbol>(a);
        level.push_back(buffer);
        level_states.push_back(d);
      }
    }
    c.levels.push_back(std::move(level));
    c.states.push_back(std::move(level_states));
  }
  return c.levels[n];
}

namespace {

class WordAutomaton final : public Automaton {
 public:
  WordAutomaton(SpacePtr space, Direction dir)
      : Automaton(space->alphabet().size()), space_(std::move(space)), dir_(dir) {}

 protected:
  void compute_start(std::vector<State>& out) override { out.push_back(intern({})); }

  void compute_next(State s, Symbol a, std::vector<State>& out) override {
    StateKey k = key(s);
    if (dir_ == Direction::forward) {
      k.push_back(a);
    } else {
      k.insert(k.begin(), a);
    }
    std::vector<Symbol> w(k.begin(), k.end());
    if (space_->contains(w)) out.push_back(intern(k));
  }

 private:
  SpacePtr space_;
  Direction dir_;
};

}  // namespace

std::unique_ptr<Automaton> make_word_automaton(SpacePtr space, Direction dir) {
  return std::make_unique<WordAutomaton>(std::move(space), dir);
}

}  // namespace symdyn
