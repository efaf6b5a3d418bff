#include "symdyn/transforms.hpp"

#include "symdyn/error.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <unordered_set>

namespace symdyn {

namespace {

std::string join_tokens(const Alphabet& a, std::span<const Symbol> w, const char* open, const char* close) {
  std::string out = open;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (i) out += ",";
    out += a.token(w[i]);
  }
  return out + close;
}

// ---------------------------------------------------------------------------------------
// product

class ProductShift final : public ShiftSpace {
 public:
  ProductShift(SpacePtr left, SpacePtr right, AlphabetPtr alphabet)
      : ShiftSpace(std::move(alphabet)), left_(std::move(left)), right_(std::move(right)) {}

  bool contains(std::span<const Symbol> w) const override {
    const std::size_t m = right_->alphabet().size();
    std::vector<Symbol> x(w.size()), y(w.size());
    for (std::size_t i = 0; i < w.size(); ++i) {
      x[i] = static_cast<Symbol>(w[i] / m);
      y[i] = static_cast<Symbol>(w[i] % m);
    }
    return left_->contains(x) && right_->contains(y);
  }

  std::optional<std::size_t> exact_context_bound() const override {
    auto a = left_->exact_context_bound(), b = right_->exact_context_bound();
    if (!a || !b) return std::nullopt;
    return std::max(*a, *b);
  }

  std::unique_ptr<Automaton> automaton(Direction dir) const override;
  bool finite_automaton(Direction dir) const override {
    return left_->finite_automaton(dir) && right_->finite_automaton(dir);
  }
  std::string describe() const override { return "product(" + left_->describe() + "," + right_->describe() + ")"; }

 private:
  SpacePtr left_, right_;
};

class PairAutomaton final : public Automaton {
 public:
  PairAutomaton(std::unique_ptr<Automaton> x, std::unique_ptr<Automaton> y)
      : Automaton(x->alphabet_size() * y->alphabet_size()), x_(std::move(x)), y_(std::move(y)) {}

 protected:
  void compute_start(std::vector<State>& out) override { combine(x_->start(), y_->start(), out); }
  void compute_next(State s, Symbol a, std::vector<State>& out) override {
    const StateKey& k = key(s);
    const std::size_t m = y_->alphabet_size();
    const auto& xs = x_->next(static_cast<State>(k[0]), static_cast<Symbol>(a / m));
    if (xs.empty()) return;
    combine(xs, y_->next(static_cast<State>(k[1]), static_cast<Symbol>(a % m)), out);
  }

 private:
  void combine(const std::vector<State>& xs, const std::vector<State>& ys, std::vector<State>& out) {
    for (State p : xs)
      for (State q : ys) out.push_back(intern({p, q}));
  }

  std::unique_ptr<Automaton> x_, y_;
};

std::unique_ptr<Automaton> ProductShift::automaton(Direction dir) const {
  return std::make_unique<PairAutomaton>(left_->automaton(dir), right_->automaton(dir));
}

// ---------------------------------------------------------------------------------------
// reverse

class ReverseShift final : public ShiftSpace {
 public:
  explicit ReverseShift(SpacePtr base) : ShiftSpace(base->alphabet_ptr()), base_(std::move(base)) {}

  bool contains(std::span<const Symbol> w) const override {
    std::vector<Symbol> r(w.rbegin(), w.rend());
    return base_->contains(r);
  }
  std::optional<std::size_t> exact_context_bound() const override { return base_->exact_context_bound(); }
  std::unique_ptr<Automaton> automaton(Direction dir) const override {
    return base_->automaton(dir == Direction::forward ? Direction::backward : Direction::forward);
  }
  bool finite_automaton(Direction dir) const override {
    return base_->finite_automaton(dir == Direction::forward ? Direction::backward : Direction::forward);
  }
  std::optional<SoficPresentation> explicit_presentation() const override {
    if (auto p = base_->explicit_presentation()) return p->reversed();
    return std::nullopt;
  }
  std::string describe() const override { return "reverse(" + base_->describe() + ")"; }

 private:
  SpacePtr base_;
};

// ---------------------------------------------------------------------------------------
// higher block

AlphabetPtr block_alphabet(const ShiftSpace& base, std::size_t window) {
  const WordSet& words = base.words(window);
  std::vector<std::string> tokens;
  tokens.reserve(words.size());
  for (std::size_t i = 0; i < words.size(); ++i)
    tokens.push_back(window == 1 ? base.alphabet().token(words[i][0]) : join_tokens(base.alphabet(), words[i], "[", "]"));
  return make_alphabet(std::move(tokens));
}

/// Forward states are (base state, last letter) after a nonempty word, plus a start state;
/// a new letter must agree with the previous one on the window-1 overlapping symbols and
/// advances the base automaton by its last symbol. Backward runs mirror this.
class BlockAutomaton final : public Automaton {
 public:
  BlockAutomaton(const HigherBlockShift& space, Direction dir)
      : Automaton(space.alphabet().size()), space_(space), base_(space.base()->automaton(dir)), dir_(dir) {}

 protected:
  void compute_start(std::vector<State>& out) override { out.push_back(intern({-1, -1})); }

  void compute_next(State s, Symbol a, std::vector<State>& out) override {
    const StateKey& k = key(s);
    const auto block = space_.block(a);
    const std::size_t w = block.size();
    if (k[0] < 0) {
      std::vector<State> frontier = base_->start();
      for (std::size_t i = 0; i < w && !frontier.empty(); ++i) {
        const Symbol x = dir_ == Direction::forward ? block[i] : block[w - 1 - i];
        std::vector<State> following;
        for (State q : frontier) {
          const auto& n = base_->next(q, x);
          following.insert(following.end(), n.begin(), n.end());
        }
        normalize(following);
        frontier.swap(following);
      }
      for (State q : frontier) out.push_back(intern({q, a}));
      return;
    }
    const auto prev = space_.block(static_cast<Symbol>(k[1]));
    bool overlap = dir_ == Direction::forward ? std::equal(prev.begin() + 1, prev.end(), block.begin())
                                              : std::equal(block.begin() + 1, block.end(), prev.begin());
    if (!overlap) return;
    const Symbol x = dir_ == Direction::forward ? block[w - 1] : block[0];
    for (State q : base_->next(static_cast<State>(k[0]), x)) out.push_back(intern({q, a}));
  }

 private:
  const HigherBlockShift& space_;
  std::unique_ptr<Automaton> base_;
  Direction dir_;
};

// ---------------------------------------------------------------------------------------
// block image

class ImageShift final : public ShiftSpace {
 public:
  ImageShift(SpacePtr domain, SpacePtr inner, std::vector<int> letter_map, AlphabetPtr target, std::size_t radius,
             std::string name)
      : ShiftSpace(std::move(target)),
        domain_(std::move(domain)),
        inner_(std::move(inner)),
        radius_(radius),
        name_(std::move(name)),
        preimages_(alphabet().size()) {
    for (std::size_t b = 0; b < letter_map.size(); ++b)
      if (letter_map[b] >= 0) preimages_[letter_map[b]].push_back(static_cast<Symbol>(b));
  }

  bool contains(std::span<const Symbol> v) const override {
    std::vector<Symbol> prefix;
    prefix.reserve(v.size());
    return search(v, prefix);
  }

  std::unique_ptr<Automaton> automaton(Direction dir) const override;
  bool finite_automaton(Direction dir) const override { return inner_->finite_automaton(dir); }
  std::string describe() const override {
    return name_ + "(" + domain_->describe() + ",r=" + std::to_string(radius_) + ")";
  }

  const std::vector<std::vector<Symbol>>& preimages() const noexcept { return preimages_; }
  const SpacePtr& inner() const noexcept { return inner_; }

 private:
  // Depth-first search over preimage letters; every prefix must itself be legal.
  bool search(std::span<const Symbol> v, std::vector<Symbol>& prefix) const {
    if (prefix.size() == v.size()) return true;
    for (Symbol b : preimages_[v[prefix.size()]]) {
      prefix.push_back(b);
      if (inner_->contains(prefix) && search(v, prefix)) return true;
      prefix.pop_back();
    }
    return false;
  }

  SpacePtr domain_, inner_;
  std::size_t radius_;
  std::string name_;
  std::vector<std::vector<Symbol>> preimages_;
};

/// Same states as the inner automaton; a target letter moves along every preimage letter.
class ImageAutomaton final : public Automaton {
 public:
  ImageAutomaton(const ImageShift& space, Direction dir)
      : Automaton(space.alphabet().size()), space_(space), inner_(space.inner()->automaton(dir)) {}

 protected:
  void compute_start(std::vector<State>& out) override {
    for (State q : inner_->start()) out.push_back(intern({q}));
  }
  void compute_next(State s, Symbol a, std::vector<State>& out) override {
    const State q = static_cast<State>(key(s)[0]);
    for (Symbol b : space_.preimages()[a])
      for (State t : inner_->next(q, b)) out.push_back(intern({t}));
  }

 private:
  const ImageShift& space_;
  std::unique_ptr<Automaton> inner_;
};

std::unique_ptr<Automaton> ImageShift::automaton(Direction dir) const {
  return std::make_unique<ImageAutomaton>(*this, dir);
}

// ---------------------------------------------------------------------------------------
// disjoint union

class UnionShift final : public ShiftSpace {
 public:
  UnionShift(SpacePtr left, SpacePtr right, AlphabetPtr alphabet)
      : ShiftSpace(std::move(alphabet)), left_(std::move(left)), right_(std::move(right)) {}

  bool contains(std::span<const Symbol> w) const override {
    if (w.empty()) return true;
    const std::size_t n = left_->alphabet().size();
    const bool on_left = w[0] < n;
    std::vector<Symbol> local(w.size());
    for (std::size_t i = 0; i < w.size(); ++i) {
      if ((w[i] < n) != on_left) return false;
      local[i] = static_cast<Symbol>(on_left ? w[i] : w[i] - n);
    }
    return on_left ? left_->contains(local) : right_->contains(local);
  }

  std::optional<std::size_t> exact_context_bound() const override {
    auto a = left_->exact_context_bound(), b = right_->exact_context_bound();
    if (!a || !b) return std::nullopt;
    return std::max({*a, *b, std::size_t{1}});
  }

  std::unique_ptr<Automaton> automaton(Direction dir) const override;
  bool finite_automaton(Direction dir) const override {
    return left_->finite_automaton(dir) && right_->finite_automaton(dir);
  }
  std::optional<SoficPresentation> explicit_presentation() const override {
    auto a = left_->explicit_presentation(), b = right_->explicit_presentation();
    if (!a || !b) return std::nullopt;
    SoficPresentation p;
    p.alphabet = alphabet_ptr();
    const std::size_t offset = a->states.size();
    const auto shift = static_cast<Symbol>(left_->alphabet().size());
    for (const auto& s : a->states) p.states.push_back("L:" + s);
    for (const auto& s : b->states) p.states.push_back("R:" + s);
    p.edges = a->edges;
    for (const auto& e : b->edges) p.edges.push_back({e.from + offset, static_cast<Symbol>(e.label + shift), e.to + offset});
    return p;
  }
  std::string describe() const override {
    return "disjoint-union(" + left_->describe() + "," + right_->describe() + ")";
  }

  const SpacePtr& left() const noexcept { return left_; }
  const SpacePtr& right() const noexcept { return right_; }

 private:
  SpacePtr left_, right_;
};

/// States are (side, child state); a letter from the other side's alphabet kills a state.
class UnionAutomaton final : public Automaton {
 public:
  UnionAutomaton(std::unique_ptr<Automaton> x, std::unique_ptr<Automaton> y)
      : Automaton(x->alphabet_size() + y->alphabet_size()), x_(std::move(x)), y_(std::move(y)) {}

 protected:
  void compute_start(std::vector<State>& out) override {
    for (State q : x_->start()) out.push_back(intern({0, q}));
    for (State q : y_->start()) out.push_back(intern({1, q}));
  }
  void compute_next(State s, Symbol a, std::vector<State>& out) override {
    const StateKey& k = key(s);
    const std::size_t n = x_->alphabet_size();
    const bool letter_left = a < n;
    if (letter_left != (k[0] == 0)) return;
    const auto& next = letter_left ? x_->next(static_cast<State>(k[1]), a)
                                   : y_->next(static_cast<State>(k[1]), static_cast<Symbol>(a - n));
    for (State q : next) out.push_back(intern({k[0], q}));
  }

 private:
  std::unique_ptr<Automaton> x_, y_;
};

std::unique_ptr<Automaton> UnionShift::automaton(Direction dir) const {
  return std::make_unique<UnionAutomaton>(left_->automaton(dir), right_->automaton(dir));
}

}  // namespace

SpacePtr product(SpacePtr left, SpacePtr right) {
  std::vector<std::string> tokens;
  for (const auto& x : left->alphabet().tokens())
    for (const auto& y : right->alphabet().tokens()) tokens.push_back("(" + x + "," + y + ")");
  auto alphabet = make_alphabet(std::move(tokens));
  return std::make_shared<ProductShift>(std::move(left), std::move(right), std::move(alphabet));
}

SpacePtr reverse(SpacePtr base) { return std::make_shared<ReverseShift>(std::move(base)); }

HigherBlockShift::HigherBlockShift(SpacePtr base, std::size_t window)
    : ShiftSpace(window == 0 ? throw ConstructionError("higher-block window must be at least 1")
                             : block_alphabet(*base, window)),
      base_(std::move(base)),
      window_(window) {
  const WordSet& words = base_->words(window_);
  for (std::size_t i = 0; i < words.size(); ++i) blocks_.emplace_back(words[i].begin(), words[i].end());
}

bool HigherBlockShift::contains(std::span<const Symbol> w) const {
  if (w.empty()) return true;
  std::vector<Symbol> flat(blocks_[w[0]]);
  for (std::size_t i = 1; i < w.size(); ++i) {
    const auto& prev = blocks_[w[i - 1]];
    const auto& cur = blocks_[w[i]];
    if (!std::equal(prev.begin() + 1, prev.end(), cur.begin())) return false;
    flat.push_back(cur.back());
  }
  return base_->contains(flat);
}

std::optional<std::size_t> HigherBlockShift::exact_context_bound() const {
  auto k = base_->exact_context_bound();
  if (!k) return std::nullopt;
  // A single following or preceding letter already fixes the overlapping window - 1 symbols.
  return window_ == 1 ? *k : std::max<std::size_t>(*k, 1);
}

std::unique_ptr<Automaton> HigherBlockShift::automaton(Direction dir) const {
  return std::make_unique<BlockAutomaton>(*this, dir);
}

std::string HigherBlockShift::describe() const {
  return "higher-block(" + base_->describe() + ",w=" + std::to_string(window_) + ")";
}

SpacePtr higher_block(SpacePtr base, std::size_t window) {
  return std::make_shared<HigherBlockShift>(std::move(base), window);
}

SpacePtr block_image(SpacePtr domain, const BlockMap& map, std::string name) {
  const std::size_t w = 2 * map.radius + 1;
  SpacePtr inner = map.radius == 0 ? domain : higher_block(domain, w);
  const WordSet& words = domain->words(w);

  std::map<std::vector<Symbol>, std::string> table;
  for (const auto& [word, token] : map.table) {
    if (word.size() != w) throw ConstructionError("block map entry has length " + std::to_string(word.size()) +
                                                  ", expected " + std::to_string(w));
    if (!table.emplace(word, token).second)
      throw ConstructionError("block map lists " + format_word(domain->alphabet(), word) + " twice");
  }

  std::vector<std::string> tokens = map.target_tokens;
  std::unordered_map<std::string, int> target_index;
  for (std::size_t i = 0; i < tokens.size(); ++i) target_index.emplace(tokens[i], static_cast<int>(i));
  const bool fixed_targets = !tokens.empty();

  const std::size_t inner_letters = inner->alphabet().size();
  std::vector<int> letter_map(inner_letters, -1);
  std::size_t covered = 0;
  for (std::size_t i = 0; i < words.size(); ++i) {
    std::vector<Symbol> word(words[i].begin(), words[i].end());
    auto it = table.find(word);
    if (it == table.end())
      throw ConstructionError("block map is not defined on " + format_word(domain->alphabet(), word));
    ++covered;
    auto [pos, inserted] = target_index.emplace(it->second, static_cast<int>(tokens.size()));
    if (inserted) {
      if (fixed_targets) throw ConstructionError("block map target '" + it->second + "' missing from target alphabet");
      tokens.push_back(it->second);
    }
    // Inner letters are the window-words in the same lexicographic order (or the symbols).
    const std::size_t letter = map.radius == 0 ? word[0] : i;
    letter_map[letter] = pos->second;
  }
  if (covered != table.size()) throw ConstructionError("block map has entries outside the domain's language");
  if (tokens.empty()) throw ConstructionError("block map has no target symbols");
  return std::make_shared<ImageShift>(domain, inner, std::move(letter_map), make_alphabet(std::move(tokens)),
                                      map.radius, std::move(name));
}

SpacePtr star_collapse(SpacePtr base, const StarCollapse& spec) {
  const Alphabet& a = base->alphabet();
  std::set<std::string> by_token(spec.collapse.begin(), spec.collapse.end());
  std::set<std::string> by_first(spec.collapse_first.begin(), spec.collapse_first.end());
  const auto* blocks = dynamic_cast<const HigherBlockShift*>(base.get());
  if (!by_first.empty() && !blocks)
    throw ConstructionError("collapse by first coordinate needs a higher-block space");
  for (const auto& t : by_token)
    if (!a.find(t)) throw ConstructionError("collapse token '" + t + "' not in alphabet");
  if (blocks)
    for (const auto& t : by_first)
      if (!blocks->base()->alphabet().find(t))
        throw ConstructionError("collapse token '" + t + "' not in the block alphabet's base");

  auto collapsed = [&](Symbol s) {
    if (by_token.count(a.token(s))) return true;
    return blocks && by_first.count(blocks->base()->alphabet().token(blocks->block(s)[0])) > 0;
  };
  BlockMap map;
  for (std::size_t s = 0; s < a.size(); ++s) {
    if (!collapsed(static_cast<Symbol>(s))) {
      if (a.token(static_cast<Symbol>(s)) == spec.star)
        throw ConstructionError("star token '" + spec.star + "' already in alphabet");
      map.target_tokens.push_back(a.token(static_cast<Symbol>(s)));
    }
  }
  map.target_tokens.push_back(spec.star);
  const WordSet& letters = base->words(1);
  for (std::size_t i = 0; i < letters.size(); ++i) {
    const Symbol s = letters[i][0];
    map.table.push_back({{s}, collapsed(s) ? spec.star : a.token(s)});
  }
  return block_image(std::move(base), map, "star-collapse");
}

SpacePtr disjoint_union(SpacePtr left, SpacePtr right, std::string suffix) {
  std::vector<std::string> tokens = left->alphabet().tokens();
  std::unordered_set<std::string> seen(tokens.begin(), tokens.end());
  for (const auto& t : right->alphabet().tokens()) {
    std::string relabeled = t + suffix;
    if (!seen.insert(relabeled).second)
      throw ConstructionError("disjoint union alphabets overlap at '" + relabeled + "'");
    tokens.push_back(std::move(relabeled));
  }
  auto alphabet = make_alphabet(std::move(tokens));
  return std::make_shared<UnionShift>(std::move(left), std::move(right), std::move(alphabet));
}

}  // namespace symdyn
