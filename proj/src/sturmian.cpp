#include "symdyn/error.hpp"
#include "symdyn/spaces.hpp"

#include <algorithm>
#include <limits>

namespace symdyn {

namespace {

std::int64_t checked_step(std::int64_t a, std::int64_t x, std::int64_t y) {
  std::int64_t out = 0;
  if (__builtin_mul_overflow(a, x, &out) || __builtin_add_overflow(out, y, &out))
    throw PrecisionError("continued fraction convergent overflows 64 bits");
  return out;
}

/// Letter i of the coding that starts in grid cell c: 1 iff {t + i*eta} lies in [1-eta, 1),
/// measured in units of 1/(2Q) with t at the cell midpoint.
Symbol letter(const SturmianRotation& r, std::int64_t cell) {
  return cell >= r.q - r.p ? 1 : 0;
}

/// Forward states: (letters read, the cells of the current position still consistent).
/// Backward states store the cell of the first letter instead and move it left.
class SturmianAutomaton final : public Automaton {
 public:
  SturmianAutomaton(SturmianRotation r, Direction dir) : Automaton(2), r_(r), dir_(dir) {}

 protected:
  void compute_start(std::vector<State>& out) override {
    StateKey k{0};
    for (std::int64_t c = 0; c < r_.q; ++c) k.push_back(c);
    out.push_back(intern(k));
  }

  void compute_next(State s, Symbol a, std::vector<State>& out) override {
    const StateKey& k = key(s);
    if (static_cast<std::size_t>(k[0]) >= r_.horizon)
      throw PrecisionError("Sturmian word longer than the certified horizon " + std::to_string(r_.horizon));
    StateKey next{k[0] + 1};
    for (std::size_t i = 1; i < k.size(); ++i) {
      std::int64_t c = k[i];
      if (dir_ == Direction::forward) {
        if (letter(r_, c) != a) continue;
        next.push_back((c + r_.p) % r_.q);
      } else {
        c = ((c - r_.p) % r_.q + r_.q) % r_.q;
        if (letter(r_, c) != a) continue;
        next.push_back(c);
      }
    }
    if (next.size() == 1) return;
    std::sort(next.begin() + 1, next.end());
    out.push_back(intern(next));
  }

 private:
  SturmianRotation r_;
  Direction dir_;
};

}  // namespace

std::int64_t SturmianRotation::floor_multiple(std::size_t n) const {
  if (n > horizon) throw PrecisionError("floor(n*eta) requested beyond the certified horizon");
  return static_cast<std::int64_t>(n) * p / q;
}

std::int64_t SturmianRotation::ceil_multiple(std::size_t n) const {
  return n == 0 ? 0 : floor_multiple(n) + 1;
}

SturmianRotation sturmian_rotation(const SturmianSpec& spec) {
  if (spec.partial_quotients.empty()) throw ConstructionError("Sturmian rotation needs partial quotients");
  for (auto a : spec.partial_quotients)
    if (a <= 0) throw ConstructionError("partial quotients must be positive");
  // Convergents p_k/q_k of [0; a1, a2, ...]; the cylinder of a1..aK is the interval between
  // p_K/q_K and (p_K + p_{K-1})/(q_K + q_{K-1}), and no fraction inside it has denominator
  // below 2 q_K + q_{K-1}.
  std::int64_t p_prev = 1, q_prev = 0, p_cur = 0, q_cur = 1;
  for (auto a : spec.partial_quotients) {
    const std::int64_t p_next = checked_step(a, p_cur, p_prev), q_next = checked_step(a, q_cur, q_prev);
    p_prev = p_cur;
    q_prev = q_cur;
    p_cur = p_next;
    q_cur = q_next;
    const std::int64_t mq = checked_step(2, q_cur, q_prev);
    if (mq > static_cast<std::int64_t>(spec.horizon)) {
      if (mq > std::numeric_limits<std::int32_t>::max())
        throw PrecisionError("Sturmian horizon too large for the rotation grid");
      return {checked_step(2, p_cur, p_prev), mq, spec.horizon};
    }
  }
  throw PrecisionError(std::to_string(spec.partial_quotients.size()) +
                       " partial quotients do not certify Sturmian words of length " +
                       std::to_string(spec.horizon));
}

SturmianShift::SturmianShift(SturmianSpec spec)
    : ShiftSpace(digit_alphabet(2)), spec_(std::move(spec)), rotation_(sturmian_rotation(spec_)) {}

bool SturmianShift::contains(std::span<const Symbol> w) const {
  const auto& r = rotation_;
  const std::size_t n = w.size();
  if (n > r.horizon)
    throw PrecisionError("Sturmian word of length " + std::to_string(n) + " exceeds the certified horizon " +
                         std::to_string(r.horizon));
  // The points {-j*eta}, j = 0..n, cut the circle into the n+1 arcs on which the length-n
  // coding is constant; start just after each cut.
  for (std::size_t j = 0; j <= n; ++j) {
    std::int64_t cell = ((-static_cast<std::int64_t>(j) * r.p) % r.q + r.q) % r.q;
    bool match = true;
    for (std::size_t i = 0; i < n && match; ++i) {
      match = letter(r, cell) == w[i];
      cell = (cell + r.p) % r.q;
    }
    if (match) return true;
  }
  return false;
}

std::unique_ptr<Automaton> SturmianShift::automaton(Direction dir) const {
  return std::make_unique<SturmianAutomaton>(rotation_, dir);
}

SpacePtr sturmian(SturmianSpec spec) { return std::make_shared<SturmianShift>(std::move(spec)); }

}  // namespace symdyn
