#include "symdyn/classify.hpp"
#include "symdyn/error.hpp"

#include <bit>
#include <exception>
#include <unordered_map>
#include <unordered_set>

namespace symdyn {

namespace {

constexpr std::size_t max_states = 64;

std::uint64_t full_mask(std::size_t states) {
  return states == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << states) - 1;
}

struct RowsHash {
  std::size_t operator()(const std::vector<std::uint64_t>& v) const noexcept {
    std::size_t h = v.size();
    for (auto x : v) h ^= std::hash<std::uint64_t>{}(x) + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
    return h;
  }
};

}  // namespace

TransitionRelation TransitionRelation::identity(std::size_t states) {
  TransitionRelation r;
  r.rows.resize(states);
  for (std::size_t i = 0; i < states; ++i) r.rows[i] = std::uint64_t{1} << i;
  return r;
}

TransitionRelation TransitionRelation::letter(const SoficPresentation& p, Symbol a) {
  if (p.state_count() > max_states) throw ResourceError("sofic presentation has too many states", max_states);
  TransitionRelation r;
  r.rows.assign(p.state_count(), 0);
  for (const auto& e : p.edges)
    if (e.label == a) r.rows[e.from] |= std::uint64_t{1} << e.to;
  return r;
}

TransitionRelation TransitionRelation::then(const TransitionRelation& v) const {
  TransitionRelation out;
  out.rows.assign(rows.size(), 0);
  for (std::size_t i = 0; i < rows.size(); ++i) out.rows[i] = v.image(rows[i]);
  return out;
}

std::uint64_t TransitionRelation::image(std::uint64_t subset) const {
  std::uint64_t out = 0;
  while (subset) {
    const int i = std::countr_zero(subset);
    out |= rows[i];
    subset &= subset - 1;
  }
  return out;
}

bool TransitionRelation::empty() const {
  for (auto r : rows)
    if (r) return false;
  return true;
}

TransitionRelation relation_of(const SoficPresentation& p, std::span<const Symbol> w) {
  TransitionRelation r = TransitionRelation::identity(p.state_count());
  for (Symbol a : w) r = r.then(TransitionRelation::letter(p, a));
  return r;
}

SubsetPairAtlas build_atlas(const SoficPresentation& p, std::size_t cap) {
  const std::size_t q = p.state_count();
  if (q > max_states) throw ResourceError("sofic presentation has too many states", max_states);
  std::vector<TransitionRelation> letters;
  for (std::size_t a = 0; a < p.alphabet->size(); ++a) letters.push_back(TransitionRelation::letter(p, static_cast<Symbol>(a)));

  auto explore = [&](auto step) {
    std::vector<std::uint64_t> order{full_mask(q)};
    std::unordered_set<std::uint64_t> seen{full_mask(q)};
    for (std::size_t i = 0; i < order.size(); ++i) {
      for (const auto& r : letters) {
        const std::uint64_t t = step(r, order[i]);
        if (t == 0 || !seen.insert(t).second) continue;
        if (order.size() >= cap) throw ResourceError("subset atlas too large", cap);
        order.push_back(t);
      }
    }
    return order;
  };
  SubsetPairAtlas atlas;
  atlas.ends = explore([](const TransitionRelation& r, std::uint64_t s) { return r.image(s); });
  atlas.starts = explore([](const TransitionRelation& r, std::uint64_t t) {
    std::uint64_t pre = 0;
    for (std::size_t i = 0; i < r.rows.size(); ++i)
      if (r.rows[i] & t) pre |= std::uint64_t{1} << i;
    return pre;
  });
  return atlas;
}

SoficClassifier::SoficClassifier(SoficPresentation p, std::size_t atlas_cap) : p_(p.trimmed()) {
  if (p_.states.empty()) throw ConstructionError("sofic presentation has no essential part");
  if (p_.state_count() > max_states) throw ResourceError("sofic presentation has too many states", max_states);
  atlas_ = build_atlas(p_, atlas_cap);
  for (std::size_t a = 0; a < p_.alphabet->size(); ++a)
    letters_.push_back(TransitionRelation::letter(p_, static_cast<Symbol>(a)));
}

const std::vector<TransitionRelation>& SoficClassifier::relations(std::size_t n) {
  if (levels_.empty()) levels_.push_back({TransitionRelation::identity(p_.state_count())});
  while (levels_.size() <= n) {
    std::vector<TransitionRelation> next;
    std::unordered_set<std::vector<std::uint64_t>, RowsHash> seen;
    for (const auto& r : levels_.back())
      for (const auto& a : letters_) {
        TransitionRelation t = r.then(a);
        if (t.empty() || !seen.insert(t.rows).second) continue;
        next.push_back(std::move(t));
      }
    levels_.push_back(std::move(next));
  }
  return levels_[n];
}

std::vector<std::uint64_t> SoficClassifier::predicate(const TransitionRelation& r, Mode mode) const {
  const auto& ends = atlas_.ends;
  const auto& starts = atlas_.starts;
  std::vector<std::uint64_t> bits;
  auto put = [&](std::size_t i, bool v) {
    if (bits.size() <= i / 64) bits.resize(i / 64 + 1, 0);
    if (v) bits[i / 64] |= std::uint64_t{1} << (i % 64);
  };
  switch (mode) {
    case Mode::follower: {
      const std::uint64_t reach = r.image(full_mask(p_.state_count()));
      for (std::size_t t = 0; t < starts.size(); ++t) put(t, (reach & starts[t]) != 0);
      break;
    }
    case Mode::predecessor:
      for (std::size_t s = 0; s < ends.size(); ++s) put(s, r.image(ends[s]) != 0);
      break;
    case Mode::extender:
      for (std::size_t s = 0; s < ends.size(); ++s) {
        const std::uint64_t reach = r.image(ends[s]);
        for (std::size_t t = 0; t < starts.size(); ++t) put(s * starts.size() + t, (reach & starts[t]) != 0);
      }
      break;
  }
  return bits;
}

std::uint64_t SoficClassifier::count(std::size_t n, Mode mode, Kernel kernel) {
  const auto& rels = relations(n);
  std::vector<std::vector<std::uint64_t>> preds(rels.size());
  const auto total = static_cast<std::int64_t>(rels.size());
  if (kernel == Kernel::parallel) {
    std::exception_ptr failure;
#pragma omp parallel for schedule(dynamic, 8)
    for (std::int64_t i = 0; i < total; ++i) {
      try {
        preds[i] = predicate(rels[i], mode);
      } catch (...) {
#pragma omp critical(symdyn_sofic_failure)
        if (!failure) failure = std::current_exception();
      }
    }
    if (failure) std::rethrow_exception(failure);
  } else {
    for (std::int64_t i = 0; i < total; ++i) preds[i] = predicate(rels[i], mode);
  }
  std::unordered_set<std::vector<std::uint64_t>, RowsHash> distinct(preds.begin(), preds.end());
  return distinct.size();
}

std::uint64_t SoficClassifier::left_constraints(std::size_t n) {
  if (n < 2) throw ContractError("left constraints need n >= 2");
  // Words of length n-1 grouped by relation, with multiplicities.
  std::unordered_map<std::vector<std::uint64_t>, std::uint64_t, RowsHash> level{
      {TransitionRelation::identity(p_.state_count()).rows, 1}};
  for (std::size_t j = 0; j + 1 < n; ++j) {
    std::unordered_map<std::vector<std::uint64_t>, std::uint64_t, RowsHash> next;
    for (const auto& [rows, mult] : level)
      for (const auto& a : letters_) {
        TransitionRelation t = TransitionRelation{rows}.then(a);
        if (!t.empty()) next[t.rows] += mult;
      }
    level.swap(next);
  }
  std::uint64_t count = 0;
  for (const auto& [rows, mult] : level) {
    const TransitionRelation v{rows};
    const auto fv = predicate(v, Mode::follower);
    for (const auto& a : letters_) {
      const TransitionRelation av = a.then(v);
      if (!av.empty() && predicate(av, Mode::follower) != fv) count += mult;
    }
  }
  return count;
}

std::uint64_t classify_sofic_exact(const SoficPresentation& p, std::size_t n, Mode mode) {
  return SoficClassifier(p).count(n, mode);
}

}  // namespace symdyn
