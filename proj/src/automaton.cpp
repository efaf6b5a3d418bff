#include "symdyn/automaton.hpp"

#include "symdyn/error.hpp"

#include <algorithm>

namespace symdyn {

namespace {
constexpr std::uint32_t unknown = static_cast<std::uint32_t>(-1);

inline std::size_t mix(std::size_t h, std::uint64_t v) noexcept {
  v *= 0x9e3779b97f4a7c15ULL;
  v ^= v >> 29;
  return (h ^ v) * 0xbf58476d1ce4e5b9ULL + 0x94d049bb133111ebULL;
}
}  // namespace

std::size_t StateKeyHash::operator()(const StateKey& key) const noexcept {
  std::size_t h = key.size();
  for (auto v : key) h = mix(h, static_cast<std::uint64_t>(v));
  return h;
}

std::size_t StateKeyHash::operator()(const std::vector<State>& key) const noexcept {
  std::size_t h = key.size();
  for (auto v : key) h = mix(h, v);
  return h;
}

void normalize(std::vector<State>& frontier) {
  std::sort(frontier.begin(), frontier.end());
  frontier.erase(std::unique(frontier.begin(), frontier.end()), frontier.end());
}

State Automaton::intern(const StateKey& key) {
  auto [it, inserted] = ids_.try_emplace(key, static_cast<State>(keys_.size()));
  if (inserted) keys_.push_back(key);
  return it->second;
}

const std::vector<State>& Automaton::start() {
  if (!has_start_) {
    compute_start(start_);
    normalize(start_);
    has_start_ = true;
  }
  return start_;
}

const std::vector<State>& Automaton::next(State s, Symbol a) {
  const std::size_t index = static_cast<std::size_t>(s) * alphabet_size_ + a;
  if (index < slot_.size() && slot_[index] >= 0) return results_[static_cast<std::size_t>(slot_[index])];
  std::vector<State> out;
  compute_next(s, a, out);
  normalize(out);
  // compute_next may intern new states, so size the slot table afterwards.
  const std::size_t needed = std::max(index + 1, keys_.size() * alphabet_size_);
  if (slot_.size() < needed) slot_.resize(std::max(needed, slot_.size() * 2), -1);
  results_.push_back(std::move(out));
  slot_[index] = static_cast<std::int32_t>(results_.size() - 1);
  return results_.back();
}

std::vector<State> Automaton::run(std::span<const Symbol> word) {
  std::vector<State> current = start();
  std::vector<State> following;
  for (Symbol a : word) {
    following.clear();
    for (State s : current) {
      const auto& succ = next(s, a);
      following.insert(following.end(), succ.begin(), succ.end());
    }
    normalize(following);
    current.swap(following);
    if (current.empty()) break;
  }
  return current;
}

LazyDfa::LazyDfa(std::unique_ptr<Automaton> automaton, std::size_t state_cap)
    : automaton_(std::move(automaton)), alphabet_size_(automaton_->alphabet_size()), state_cap_(state_cap) {
  intern({});  // dead
}

std::uint32_t LazyDfa::intern(std::vector<State>&& frontier) {
  auto it = ids_.find(frontier);
  if (it != ids_.end()) return it->second;
  if (frontiers_.size() >= state_cap_) throw ResourceError("subset construction exceeded state cap", state_cap_);
  const auto id = static_cast<std::uint32_t>(frontiers_.size());
  ids_.emplace(frontier, id);
  frontiers_.push_back(std::move(frontier));
  delta_.resize(frontiers_.size() * alphabet_size_, unknown);
  if (id == dead)
    for (std::size_t a = 0; a < alphabet_size_; ++a) delta_[a] = dead;
  return id;
}

std::uint32_t LazyDfa::start() {
  if (start_ == unknown) {
    std::vector<State> f = automaton_->start();
    start_ = intern(std::move(f));
  }
  return start_;
}

std::uint32_t LazyDfa::step(std::uint32_t d, Symbol a) {
  const std::size_t index = static_cast<std::size_t>(d) * alphabet_size_ + a;
  if (delta_[index] != unknown) return delta_[index];
  scratch_.clear();
  // Copy: automaton_->next may not touch frontiers_, but intern below may reallocate it.
  const std::vector<State> source = frontiers_[d];
  for (State s : source) {
    const auto& succ = automaton_->next(s, a);
    scratch_.insert(scratch_.end(), succ.begin(), succ.end());
  }
  normalize(scratch_);
  const std::uint32_t target = intern(std::vector<State>(scratch_));
  delta_[index] = target;
  return target;
}

std::uint32_t LazyDfa::run(std::uint32_t d, std::span<const Symbol> word) {
  for (Symbol a : word) {
    if (d == dead) return dead;
    d = step(d, a);
  }
  return d;
}

}  // namespace symdyn
