#include "symdyn/error.hpp"
#include "symdyn/transforms.hpp"

#include <algorithm>
#include <unordered_set>

namespace symdyn {

namespace {

// ---------------------------------------------------------------------------------------
// selector shift

enum Governor : std::int64_t { none = 0, odd = 1, even = 2, skip = 3 };

class SelectorShift final : public ShiftSpace {
 public:
  SelectorShift(SpacePtr data, AlphabetPtr alphabet)
      : ShiftSpace(std::move(alphabet)), data_(std::move(data)), markers_at_(data_->alphabet().size()) {}

  bool is_marker(Symbol s) const noexcept { return s >= markers_at_; }
  Governor governor(Symbol marker) const noexcept { return static_cast<Governor>(marker - markers_at_ + 1); }

  bool contains(std::span<const Symbol> w) const override {
    std::size_t last_marker = w.size();
    for (std::size_t i = 0; i < w.size(); ++i) {
      if (!is_marker(w[i])) continue;
      if (last_marker != w.size() && i - last_marker <= 2) return false;
      last_marker = i;
    }
    std::vector<Symbol> eta;
    Governor g = none;
    std::size_t index = 0;
    for (Symbol s : w) {
      if (is_marker(s)) {
        g = governor(s);
        index = 0;
        continue;
      }
      ++index;
      if ((g == odd && index % 2 == 1) || (g == even && index % 2 == 0)) eta.push_back(s);
    }
    return data_->contains(eta);
  }

  std::unique_ptr<Automaton> automaton(Direction dir) const override;
  bool finite_automaton(Direction dir) const override { return data_->finite_automaton(dir); }
  std::string describe() const override { return "selector(" + data_->describe() + ")"; }

  const SpacePtr& data() const noexcept { return data_; }

 private:
  SpacePtr data_;
  Symbol markers_at_;
};

/// Forward key: (letters since the last marker capped at 2, governor, parity of the
/// segment index, data state). Backward runs guess the governor and the index parity of
/// each segment from its right end and check the guess when the marker arrives.
class SelectorAutomaton final : public Automaton {
 public:
  SelectorAutomaton(const SelectorShift& space, Direction dir)
      : Automaton(space.alphabet().size()), space_(space), data_(space.data()->automaton(dir)), dir_(dir) {}

 protected:
  void compute_start(std::vector<State>& out) override {
    const auto& starts = data_->start();
    if (dir_ == Direction::forward) {
      for (State q : starts) out.push_back(intern({2, none, 0, q}));
      return;
    }
    for (std::int64_t g = none; g <= skip; ++g)
      for (std::int64_t parity = 0; parity < 2; ++parity)
        for (State q : starts) out.push_back(intern({2, g, parity, q}));
  }

  void compute_next(State s, Symbol a, std::vector<State>& out) override {
    const StateKey k = key(s);
    const std::int64_t gap = k[0], g = k[1], parity = k[2];
    const auto q = static_cast<State>(k[3]);
    if (space_.is_marker(a)) {
      if (gap < 2) return;
      if (dir_ == Direction::forward) {
        out.push_back(intern({0, space_.governor(a), 0, q}));
        return;
      }
      // The segment to the right started at index 1, so the next index would be 0.
      if (g != space_.governor(a) || parity != 0) return;
      for (std::int64_t g2 = none; g2 <= skip; ++g2)
        for (std::int64_t p2 = 0; p2 < 2; ++p2) out.push_back(intern({0, g2, p2, q}));
      return;
    }
    const std::int64_t next_gap = std::min<std::int64_t>(gap + 1, 2);
    // Forward: parity of the index of this letter is 1 - parity. Backward: it is `parity`.
    const std::int64_t index_parity = dir_ == Direction::forward ? 1 - parity : parity;
    const bool take = (g == odd && index_parity == 1) || (g == even && index_parity == 0);
    const std::int64_t next_parity = 1 - parity;
    if (!take) {
      out.push_back(intern({next_gap, g, next_parity, q}));
      return;
    }
    for (State t : data_->next(q, a)) out.push_back(intern({next_gap, g, next_parity, t}));
  }

 private:
  const SelectorShift& space_;
  std::unique_ptr<Automaton> data_;
  Direction dir_;
};

std::unique_ptr<Automaton> SelectorShift::automaton(Direction dir) const {
  return std::make_unique<SelectorAutomaton>(*this, dir);
}

// ---------------------------------------------------------------------------------------
// marker interleave

constexpr Symbol first_letter = 3;  // alphabet: 1, 2, 3, then the letters of the base

class InterleaveShift final : public ShiftSpace {
 public:
  InterleaveShift(SpacePtr letters, AlphabetPtr alphabet)
      : ShiftSpace(std::move(alphabet)), letters_(std::move(letters)) {}

  bool contains(std::span<const Symbol> w) const override {
    const std::size_t n = w.size();
    if (n == 0) return true;
    for (std::size_t phase = 0; phase < 4; ++phase) {
      // Position i has role (phase + i) mod 4; role 0 is the selector.
      bool typed = true;
      for (std::size_t i = 0; i < n && typed; ++i) typed = (((phase + i) % 4 == 0) == (w[i] < first_letter));
      if (!typed) continue;
      // Letter chosen by a selector at position p with value s, or none when outside w.
      auto chosen = [&](std::ptrdiff_t p, std::size_t s) -> int {
        const std::ptrdiff_t at = p + static_cast<std::ptrdiff_t>(s);
        if (at < 0 || at >= static_cast<std::ptrdiff_t>(n)) return -1;
        return w[at] - first_letter;
      };
      std::vector<Symbol> tail;
      const std::ptrdiff_t first_block = phase == 0 ? 0 : 4 - static_cast<std::ptrdiff_t>(phase);
      for (std::ptrdiff_t p = first_block; p < static_cast<std::ptrdiff_t>(n); p += 4) {
        const int x = chosen(p, w[p] + 1u);
        if (x >= 0) tail.push_back(static_cast<Symbol>(x));
      }
      if (phase == 0) {
        if (letters_->contains(tail)) return true;
        continue;
      }
      // The leading block's selector sits before w; try every value it could take.
      const std::ptrdiff_t hidden = -static_cast<std::ptrdiff_t>(phase);
      for (std::size_t s = 1; s <= 3; ++s) {
        const int x = chosen(hidden, s);
        std::vector<Symbol> selected;
        if (x >= 0) selected.push_back(static_cast<Symbol>(x));
        selected.insert(selected.end(), tail.begin(), tail.end());
        if (letters_->contains(selected)) return true;
      }
    }
    return false;
  }

  std::unique_ptr<Automaton> automaton(Direction dir) const override;
  bool finite_automaton(Direction dir) const override { return letters_->finite_automaton(dir); }
  std::string describe() const override { return "marker-interleave(" + letters_->describe() + ")"; }

  const SpacePtr& letters() const noexcept { return letters_; }

 private:
  SpacePtr letters_;
};

/// Key (role of the next position, selector of the current block, base state). Forward
/// runs read the selector before its letters; selector 0 means nothing is left to pick in
/// the block. Backward runs guess each block's selector at its right end and check it
/// when the selector arrives.
class InterleaveAutomaton final : public Automaton {
 public:
  InterleaveAutomaton(const InterleaveShift& space, Direction dir)
      : Automaton(space.alphabet().size()), base_(space.letters()->automaton(dir)), dir_(dir) {}

 protected:
  void compute_start(std::vector<State>& out) override {
    for (State q : base_->start()) {
      if (dir_ == Direction::forward) {
        out.push_back(intern({0, 0, q}));
        for (std::int64_t role = 1; role < 4; ++role) {
          if (role > 1) out.push_back(intern({role, 0, q}));
          for (std::int64_t s = role; s <= 3; ++s) out.push_back(intern({role, s, q}));
        }
      } else {
        for (std::int64_t role = 0; role < 4; ++role)
          for (std::int64_t s = 1; s <= 3; ++s) out.push_back(intern({role, s, q}));
      }
    }
  }

  void compute_next(State st, Symbol a, std::vector<State>& out) override {
    const StateKey k = key(st);
    const std::int64_t role = k[0], s = k[1];
    const auto q = static_cast<State>(k[2]);
    const bool is_selector = a < first_letter;
    if (is_selector != (role == 0)) return;
    if (dir_ == Direction::forward) {
      if (is_selector) {
        out.push_back(intern({1, a + 1, q}));
        return;
      }
      const std::int64_t next_role = (role + 1) % 4;
      if (s != role) {
        out.push_back(intern({next_role, s, q}));
        return;
      }
      for (State t : base_->next(q, static_cast<Symbol>(a - first_letter))) out.push_back(intern({next_role, 0, t}));
      return;
    }
    if (is_selector) {
      if (a + 1 != s) return;
      for (std::int64_t s2 = 1; s2 <= 3; ++s2) out.push_back(intern({3, s2, q}));
      return;
    }
    if (s != role) {
      out.push_back(intern({role - 1, s, q}));
      return;
    }
    for (State t : base_->next(q, static_cast<Symbol>(a - first_letter))) out.push_back(intern({role - 1, s, t}));
  }

 private:
  std::unique_ptr<Automaton> base_;
  Direction dir_;
};

std::unique_ptr<Automaton> InterleaveShift::automaton(Direction dir) const {
  return std::make_unique<InterleaveAutomaton>(*this, dir);
}

// ---------------------------------------------------------------------------------------
// Sturmian modulation

class ModulatedShift final : public ShiftSpace {
 public:
  ModulatedShift(SpacePtr base, SpacePtr rotation, AlphabetPtr alphabet)
      : ShiftSpace(std::move(alphabet)), base_(std::move(base)), rotation_(std::move(rotation)) {}

  bool contains(std::span<const Symbol> w) const override {
    std::vector<Symbol> bits, letters;
    for (Symbol s : w) {
      bits.push_back(s == 0 ? 0 : 1);
      if (s != 0) letters.push_back(static_cast<Symbol>(s - 1));
    }
    return rotation_->contains(bits) && base_->contains(letters);
  }

  std::unique_ptr<Automaton> automaton(Direction dir) const override;
  std::string describe() const override { return "sturmian-modulated(" + base_->describe() + ")"; }

  const SpacePtr& base() const noexcept { return base_; }
  const SpacePtr& rotation() const noexcept { return rotation_; }

 private:
  SpacePtr base_, rotation_;
};

class ModulatedAutomaton final : public Automaton {
 public:
  ModulatedAutomaton(const ModulatedShift& space, Direction dir)
      : Automaton(space.alphabet().size()),
        rotation_(space.rotation()->automaton(dir)),
        base_(space.base()->automaton(dir)) {}

 protected:
  void compute_start(std::vector<State>& out) override {
    for (State r : rotation_->start())
      for (State b : base_->start()) out.push_back(intern({r, b}));
  }
  void compute_next(State s, Symbol a, std::vector<State>& out) override {
    const StateKey k = key(s);
    const auto& rs = rotation_->next(static_cast<State>(k[0]), a == 0 ? 0 : 1);
    if (rs.empty()) return;
    if (a == 0) {
      for (State r : rs) out.push_back(intern({r, k[1]}));
      return;
    }
    const auto& bs = base_->next(static_cast<State>(k[1]), static_cast<Symbol>(a - 1));
    for (State r : rs)
      for (State b : bs) out.push_back(intern({r, b}));
  }

 private:
  std::unique_ptr<Automaton> rotation_, base_;
};

std::unique_ptr<Automaton> ModulatedShift::automaton(Direction dir) const {
  return std::make_unique<ModulatedAutomaton>(*this, dir);
}

void require_fresh(const std::vector<std::string>& tokens, const std::string& kind) {
  std::unordered_set<std::string> seen;
  for (const auto& t : tokens)
    if (!seen.insert(t).second) throw ConstructionError(kind + ": token '" + t + "' collides with the base alphabet");
}

}  // namespace

SpacePtr selector_shift(SpacePtr data, std::array<std::string, 3> markers) {
  std::vector<std::string> tokens = data->alphabet().tokens();
  tokens.insert(tokens.end(), markers.begin(), markers.end());
  require_fresh(tokens, "selector");
  auto alphabet = make_alphabet(std::move(tokens));
  return std::make_shared<SelectorShift>(std::move(data), std::move(alphabet));
}

SpacePtr marker_interleave(SpacePtr letters) {
  if (letters->alphabet().size() != 3) throw ConstructionError("marker interleave needs a 3-letter base");
  std::vector<std::string> tokens{"1", "2", "3"};
  const auto& base = letters->alphabet().tokens();
  tokens.insert(tokens.end(), base.begin(), base.end());
  require_fresh(tokens, "marker-interleave");
  auto alphabet = make_alphabet(std::move(tokens));
  return std::make_shared<InterleaveShift>(std::move(letters), std::move(alphabet));
}

SpacePtr sturmian_modulated(SpacePtr base, SturmianSpec rotation, std::string star) {
  std::vector<std::string> tokens{"(" + star + ",0)"};
  for (const auto& t : base->alphabet().tokens()) tokens.push_back("(" + t + ",1)");
  require_fresh(tokens, "sturmian-modulated");
  auto alphabet = make_alphabet(std::move(tokens));
  return std::make_shared<ModulatedShift>(std::move(base), sturmian(std::move(rotation)), std::move(alphabet));
}

}  // namespace symdyn
