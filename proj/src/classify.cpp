#include "symdyn/classify.hpp"
#include "symdyn/error.hpp"

#include "classify_internal.hpp"

#include <algorithm>

namespace symdyn {

Classification classify_bounded(const SpacePtr& space, std::size_t n, std::size_t k, Mode mode, Route route) {
  if (n == 0) throw ContractError("classification needs n >= 1");
  switch (route) {
    case Route::engine: return ContextEngine(space).classify(n, k, mode);
    case Route::literal_serial: return classify_literal(*space, n, k, mode, false);
    case Route::literal_parallel: return classify_literal(*space, n, k, mode, true);
  }
  throw ContractError("unknown classification route");
}

SweepResult k_sweep(ContextEngine& engine, std::size_t n, Mode mode, const SweepOptions& options) {
  const std::size_t window = options.stability_window;
  const std::size_t k_max = options.k_max.value_or(std::max(n + 2, options.k_min));
  if (window < 1) throw ContractError("stability window must be at least 1");
  if (k_max < options.k_min) throw ContractError("k_max below k_min");
  const auto bound = engine.space()->exact_context_bound();
  // Keep going until the declared bound when it is reachable, so the answer is certified.
  const std::size_t floor_k = bound && *bound <= k_max ? *bound : 0;

  SweepResult out;
  std::size_t run = 0;
  for (std::size_t k = options.k_min; k <= k_max; ++k) {
    const std::uint64_t c = engine.classify(n, k, mode).count;
    // The k = 0 count is always 1 and cannot open a plateau.
    run = k == 0 ? 0 : (run > 0 && out.counts.back() == c ? run + 1 : 1);
    out.counts.push_back(c);
    out.count = c;
    out.k_used = k;
    if (run >= window && k >= floor_k) break;
  }
  out.certified = bound && *bound <= out.k_used;
  return out;
}

SweepResult k_sweep(const SpacePtr& space, std::size_t n, Mode mode, const SweepOptions& options) {
  ContextEngine engine(space);
  return k_sweep(engine, n, mode, options);
}

std::uint64_t left_constraint_count(const SpacePtr& space, std::size_t n, std::size_t k) {
  if (n < 2) throw ContractError("left constraints need n >= 2");
  return ContextEngine(space).left_constraints(n, k);
}

}  // namespace symdyn
