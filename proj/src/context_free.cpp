#include "symdyn/spaces.hpp"

namespace symdyn {

namespace {

constexpr Symbol a_sym = 0, b_sym = 1, c_sym = 2;

/// Deterministic scan of the factor rules. Before the first c the state keeps the excess of
/// a's over b's and whether a b was seen; after a c it keeps the counts of the current
/// segment, rejecting as soon as b's outnumber a's.
struct Scan {
  bool after_c = false;
  std::int64_t x = 0;  // excess (before c) or a-count (after c)
  std::int64_t y = 0;  // seen_b flag (before c) or b-count (after c)

  bool step(Symbol s) {
    if (!after_c) {
      if (s == a_sym) {
        if (y) return false;
        ++x;
      } else if (s == b_sym) {
        y = 1;
        if (x > 0) --x;
      } else {
        if (x > 0) return false;
        after_c = true;
        x = y = 0;
      }
      return true;
    }
    if (s == a_sym) {
      if (y > 0) return false;
      ++x;
    } else if (s == b_sym) {
      if (y + 1 > x) return false;
      ++y;
    } else {
      if (x != y) return false;
      x = y = 0;
    }
    return true;
  }
};

// The reversed language is the image of the language under a <-> b, so the backward
// recognizer runs the same scan on swapped letters.
class ContextFreeAutomaton final : public Automaton {
 public:
  explicit ContextFreeAutomaton(Direction dir) : Automaton(3), swap_(dir == Direction::backward) {}

 protected:
  void compute_start(std::vector<State>& out) override { out.push_back(intern({0, 0, 0})); }

  void compute_next(State s, Symbol a, std::vector<State>& out) override {
    const StateKey& k = key(s);
    Scan scan{k[0] != 0, k[1], k[2]};
    if (swap_ && a != c_sym) a = a == a_sym ? b_sym : a_sym;
    if (!scan.step(a)) return;
    out.push_back(intern({scan.after_c ? 1 : 0, scan.x, scan.y}));
  }

 private:
  bool swap_;
};

}  // namespace

ContextFreeShift::ContextFreeShift() : ShiftSpace(make_alphabet({"a", "b", "c"})) {}

bool ContextFreeShift::contains(std::span<const Symbol> w) const {
  Scan scan;
  for (Symbol s : w)
    if (s > c_sym || !scan.step(s)) return false;
  return true;
}

std::unique_ptr<Automaton> ContextFreeShift::automaton(Direction dir) const {
  return std::make_unique<ContextFreeAutomaton>(dir);
}

SpacePtr context_free_shift() { return std::make_shared<ContextFreeShift>(); }

}  // namespace symdyn
