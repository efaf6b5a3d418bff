#include "symdyn/checks.hpp"

#include <cstdio>
#include <cstdlib>

// One line per acceptance criterion; exits nonzero when any criterion is not met.
int main(int argc, char** argv) {
  const std::uint64_t seed = argc > 1 ? std::strtoull(argv[1], nullptr, 10) : 0;
  int failures = 0;
  for (const auto& check : symdyn::acceptance_checks()) {
    const auto r = symdyn::run_check(check, seed);
    if (r.verdict != symdyn::Verdict::pass) ++failures;
    std::printf("[%s] #%d %s (%.2fs / %.0fs): %s | observed %s | required %s\n",
                symdyn::verdict_name(r.verdict).c_str(), check.criterion, r.id.c_str(), r.seconds,
                check.time_limit, r.parameters.c_str(), r.observed.c_str(), r.required.c_str());
    std::fflush(stdout);
  }
  std::printf("%d of %zu criteria met\n", static_cast<int>(symdyn::acceptance_checks().size()) - failures,
              symdyn::acceptance_checks().size());
  return failures == 0 ? 0 : 1;
}
