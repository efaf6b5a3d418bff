#pragma once

#include "symdyn/shift_space.hpp"
#include "symdyn/sofic.hpp"

#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace symdyn {

enum class Mode { follower, predecessor, extender };

std::string mode_name(Mode m);
/// "f", "p", "e" (or the full names); throws ContractError otherwise.
Mode parse_mode(const std::string& text);

/// Canonical k-bounded context set of one word. Contexts range over L_{<=k} (empty word
/// included) in enumeration order; extender payloads are row-major over (s, u).
struct ContextSignature {
  Mode mode = Mode::follower;
  std::size_t k = 0;
  std::vector<std::uint64_t> bits;
  std::size_t hash = 0;

  bool operator==(const ContextSignature& o) const { return mode == o.mode && k == o.k && bits == o.bits; }
};

/// Literal signature via membership queries. Throws DomainError if w is not in L(X).
ContextSignature signature(const ShiftSpace& space, std::span<const Symbol> w, std::size_t k, Mode mode);
ContextSignature signature(const ShiftSpace& space, const Word& w, std::size_t k, Mode mode);

/// Partition of L_n: class ids numbered by first appearance in enumeration order.
struct Classification {
  std::size_t count = 0;
  std::vector<std::uint32_t> class_of;
};

enum class Route {
  engine,            // lazy DFA with level-wise context classes (production)
  literal_serial,    // membership-query signatures, one thread
  literal_parallel,  // membership-query signatures, OpenMP over words
};

/// Groups L_n(X) by k-bounded context set. The count is a lower bound on the true number of
/// classes and equals it once k reaches the space's exact context bound.
Classification classify_bounded(const SpacePtr& space, std::size_t n, std::size_t k, Mode mode,
                                Route route = Route::engine);

/// Reusable deterministic view of a space for bounded classification.
///
/// Two words have the same length-k follower contexts iff the DFA states they reach agree
/// on liveness for every continuation of length <= k; these classes are computed level by
/// level and memoized. Predecessor and extender contexts are read off the DFA states
/// reachable by the length-k words of the language.
class ContextEngine {
 public:
  explicit ContextEngine(SpacePtr space, std::size_t dfa_state_cap = 20'000'000);
  ~ContextEngine();
  ContextEngine(const ContextEngine&) = delete;
  ContextEngine& operator=(const ContextEngine&) = delete;

  Classification classify(std::size_t n, std::size_t k, Mode mode);
  /// Words av of L_n whose k-bounded follower contexts differ from those of v.
  std::uint64_t left_constraints(std::size_t n, std::size_t k);

  const SpacePtr& space() const noexcept { return space_; }

 private:
  struct Impl;
  SpacePtr space_;
  std::unique_ptr<Impl> impl_;
};

// ---------------------------------------------------------------------------------------
// Exact classification for sofic presentations

/// Boolean |Q| x |Q| relation of a word: bit j of row i is set when some path from i to j
/// carries the word. Presentations are limited to 64 states.
struct TransitionRelation {
  std::vector<std::uint64_t> rows;

  static TransitionRelation identity(std::size_t states);
  static TransitionRelation letter(const SoficPresentation& p, Symbol a);
  /// Relation of uv from those of u (this) and v.
  TransitionRelation then(const TransitionRelation& v) const;
  std::uint64_t image(std::uint64_t subset) const;
  bool empty() const;

  bool operator==(const TransitionRelation& o) const { return rows == o.rows; }
};

TransitionRelation relation_of(const SoficPresentation& p, std::span<const Symbol> w);

/// Reachable end-state subsets (forward from the full state set) and start-state subsets
/// (backward from the full state set); the empty subset is left out.
struct SubsetPairAtlas {
  std::vector<std::uint64_t> ends;
  std::vector<std::uint64_t> starts;
};

SubsetPairAtlas build_atlas(const SoficPresentation& p, std::size_t cap = 1u << 20);

enum class Kernel { serial, parallel };

class SoficClassifier {
 public:
  /// Throws ResourceError beyond 64 states or when the atlas exceeds `atlas_cap` subsets.
  explicit SoficClassifier(SoficPresentation p, std::size_t atlas_cap = 1u << 20);

  /// Distinct relations of the words of L_n, in a deterministic order.
  const std::vector<TransitionRelation>& relations(std::size_t n);
  /// Exact number of distinct follower/predecessor/extender sets among words of length n.
  std::uint64_t count(std::size_t n, Mode mode, Kernel kernel = Kernel::parallel);
  /// Exact number of left constraints of length n.
  std::uint64_t left_constraints(std::size_t n);

  /// Predicate encoding the context set of a word with relation r.
  std::vector<std::uint64_t> predicate(const TransitionRelation& r, Mode mode) const;

  const SoficPresentation& presentation() const noexcept { return p_; }
  const SubsetPairAtlas& atlas() const noexcept { return atlas_; }

 private:
  SoficPresentation p_;
  SubsetPairAtlas atlas_;
  std::vector<TransitionRelation> letters_;
  std::vector<std::vector<TransitionRelation>> levels_;
};

std::uint64_t classify_sofic_exact(const SoficPresentation& p, std::size_t n, Mode mode);

// ---------------------------------------------------------------------------------------
// k sweeps and left constraints

struct SweepOptions {
  std::size_t k_min = 0;
  std::optional<std::size_t> k_max;  // default max(n + 2, k_min)
  std::size_t stability_window = 2;
};

struct SweepResult {
  std::uint64_t count = 0;
  bool certified = false;
  std::size_t k_used = 0;
  std::vector<std::uint64_t> counts;  // counts[i] is the count at k_min + i
};

/// Raises k until the count has been constant for `stability_window` consecutive values of
/// k >= 1 or k_max is reached, never stopping below a declared exact context bound that k_max
/// allows. certified: the space declares k* <= k_used.
SweepResult k_sweep(ContextEngine& engine, std::size_t n, Mode mode, const SweepOptions& options = {});
SweepResult k_sweep(const SpacePtr& space, std::size_t n, Mode mode, const SweepOptions& options = {});

/// Words av of L_n (n >= 2) with F(av) != F(v) at bound k.
std::uint64_t left_constraint_count(const SpacePtr& space, std::size_t n, std::size_t k);

}  // namespace symdyn
