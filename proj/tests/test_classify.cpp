#include "helpers.hpp"

#include "symdyn/checks.hpp"
#include "symdyn/classify.hpp"
#include "symdyn/error.hpp"

#include <doctest.h>

#include <cmath>
#include <map>
#include <random>

using namespace symdyn;

namespace {

struct OracleCase {
  std::string name;
  SpacePtr space;
  oracle::Member member;
  std::size_t max_n;
  std::size_t k;
};

oracle::Member sturmian_member(double eta) {
  auto cache = std::make_shared<std::map<std::size_t, std::set<std::string>>>();
  return [eta, cache](const std::string& w) {
    auto it = cache->find(w.size());
    if (it == cache->end()) it = cache->emplace(w.size(), oracle::rotation_factors(eta, w.size())).first;
    return it->second.count(w) > 0;
  };
}

std::vector<OracleCase> oracle_cases() {
  const double eta = (std::sqrt(5.0) - 1) / 2;
  return {
      {"full", full_shift(digit_alphabet(2)), [](const std::string&) { return true; }, 4, 3},
      {"even", even_shift(), oracle::even, 5, 4},
      {"golden", golden_mean_sft(), oracle::golden, 5, 3},
      {"golden-beta", golden_beta_shift(), [](const std::string& w) { return oracle::beta(w, {}, {1, 0}); }, 5, 3},
      {"tribonacci-beta", beta_shift({{{}, {1, 1, 0}, false}, 0}),
       [](const std::string& w) { return oracle::beta(w, {}, {1, 1, 0}); }, 5, 4},
      {"sturmian", sturmian({std::vector<std::int64_t>(12, 1), 40}), sturmian_member(eta), 4, 4},
      {"context-free", context_free_shift(), oracle::context_free, 4, 3},
  };
}

std::size_t count(const SpacePtr& x, std::size_t n, std::size_t k, Mode m, Route route = Route::engine) {
  return classify_bounded(x, n, k, m, route).count;
}

const Mode all_modes[] = {Mode::follower, Mode::predecessor, Mode::extender};

char mode_letter(Mode m) { return m == Mode::follower ? 'f' : m == Mode::predecessor ? 'p' : 'e'; }

}  // namespace

TEST_SUITE("classify") {
  TEST_CASE("every route agrees with the brute-force class oracle") {
    for (const auto& c : oracle_cases()) {
      const std::string letters = testing_util::letters_of(*c.space);
      for (std::size_t n = 1; n <= c.max_n; ++n)
        for (std::size_t k = 0; k <= c.k; ++k)
          for (Mode m : all_modes) {
            CAPTURE(c.name);
            CAPTURE(n);
            CAPTURE(k);
            CAPTURE(mode_name(m));
            const std::size_t truth = oracle::classes(letters, n, k, mode_letter(m), c.member);
            CHECK(count(c.space, n, k, m) == truth);
            CHECK(count(c.space, n, k, m, Route::literal_serial) == truth);
            CHECK(count(c.space, n, k, m, Route::literal_parallel) == truth);
          }
    }
  }

  TEST_CASE("engine and literal partitions coincide") {
    for (const auto& [name, space, depth] : testing_util::roster()) {
      CAPTURE(name);
      const std::size_t n = std::min<std::size_t>(depth, 4), k = 2;
      for (Mode m : all_modes) {
        const auto a = classify_bounded(space, n, k, m, Route::engine);
        const auto b = classify_bounded(space, n, k, m, Route::literal_serial);
        const auto c = classify_bounded(space, n, k, m, Route::literal_parallel);
        CHECK(a.class_of == b.class_of);
        CHECK(b.class_of == c.class_of);
      }
    }
  }

  TEST_CASE("even shift class counts") {
    // Extender classes: for words containing a 1 the parities of the leading and trailing
    // zero runs; for 0^n the parity of n.
    const std::vector<std::uint64_t> f{2, 3, 3, 3, 3, 3}, e{2, 4, 5, 5, 5, 5};
    SoficClassifier exact(even_presentation());
    ContextEngine engine(even_shift());
    for (std::size_t n = 1; n <= 6; ++n) {
      CAPTURE(n);
      CHECK(exact.count(n, Mode::follower) == f[n - 1]);
      CHECK(exact.count(n, Mode::predecessor) == f[n - 1]);
      CHECK(exact.count(n, Mode::extender) == e[n - 1]);
      CHECK(engine.classify(n, 2 * n + 2, Mode::extender).count == e[n - 1]);
    }
    CHECK(exact.count(3, Mode::extender, Kernel::serial) == 5);
  }

  TEST_CASE("full shift has one class per mode") {
    SoficClassifier exact(*full_shift(digit_alphabet(3))->explicit_presentation());
    for (std::size_t n = 1; n <= 5; ++n)
      for (Mode m : all_modes) CHECK(exact.count(n, m) == 1);
  }

  TEST_CASE("counts grow with k and extenders dominate") {
    for (const auto& [name, space, depth] : testing_util::roster()) {
      CAPTURE(name);
      ContextEngine engine(space);
      const std::size_t n = std::min<std::size_t>(depth, 4);
      std::map<Mode, std::size_t> last;
      for (std::size_t k = 0; k <= 4; ++k) {
        std::map<Mode, std::size_t> now;
        for (Mode m : all_modes) {
          now[m] = engine.classify(n, k, m).count;
          CHECK(now[m] >= last[m]);
          CHECK(now[m] <= space->words(n).size());
        }
        CHECK(now[Mode::extender] >= std::max(now[Mode::follower], now[Mode::predecessor]));
        last = now;
      }
    }
  }

  TEST_CASE("sofic kernels agree on random presentations") {
    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 25; ++trial) {
      const auto p = random_presentation(rng, 2 + trial % 5, 2 + trial % 2, 0.3);
      SoficClassifier exact(p);
      ContextEngine engine(sofic(p));
      for (std::size_t n = 1; n <= 4; ++n)
        for (Mode m : all_modes) {
          const auto s = exact.count(n, m, Kernel::serial);
          CHECK(s == exact.count(n, m, Kernel::parallel));
          // Bounded counts never exceed the exact count.
          CHECK(s >= engine.classify(n, 3, m).count);
        }
    }
  }

  TEST_CASE("exact sofic counts equal long-context bounded counts") {
    std::mt19937_64 rng(5);
    for (int trial = 0; trial < 12; ++trial) {
      const auto p = random_presentation(rng, 3, 2, 0.4);
      SoficClassifier exact(p);
      ContextEngine engine(sofic(p));
      for (std::size_t n = 1; n <= 3; ++n)
        for (Mode m : all_modes) CHECK(exact.count(n, m) == engine.classify(n, 2 * 8 + n, m).count);
    }
  }

  TEST_CASE("transition relations compose") {
    const auto p = even_presentation();
    std::mt19937_64 rng(3);
    for (int trial = 0; trial < 50; ++trial) {
      std::vector<Symbol> u(rng() % 5), v(rng() % 5);
      for (auto& s : u) s = static_cast<Symbol>(rng() % 2);
      for (auto& s : v) s = static_cast<Symbol>(rng() % 2);
      std::vector<Symbol> uv = u;
      uv.insert(uv.end(), v.begin(), v.end());
      CHECK(relation_of(p, u).then(relation_of(p, v)) == relation_of(p, uv));
    }
    CHECK(relation_of(p, {}) == TransitionRelation::identity(2));
    const std::vector<Symbol> bad{1, 0, 1};
    CHECK(relation_of(p, bad).empty());
  }

  TEST_CASE("sweeps certify shifts of finite type") {
    const std::vector<std::uint64_t> e{2, 3, 4, 4, 4};
    for (std::size_t n = 1; n <= 5; ++n)
      for (Mode m : all_modes) {
        const auto s = k_sweep(golden_mean_sft(), n, m);
        CHECK(s.certified);
        CHECK(s.count == (m == Mode::extender ? e[n - 1] : 2));
      }
    const auto f = k_sweep(context_free_shift(), 3, Mode::follower);
    CHECK_FALSE(f.certified);
    CHECK(f.counts.size() == f.k_used + 1);
    SweepOptions narrow;
    narrow.k_min = 3;
    narrow.k_max = 2;
    CHECK_THROWS_AS(k_sweep(even_shift(), 2, Mode::follower, narrow), ContractError);
  }

  TEST_CASE("context-free sweep values") {
    const std::vector<std::uint64_t> f{3, 4, 7, 9, 12, 14}, e{3, 6, 12, 21, 34, 51};
    ContextEngine engine(context_free_shift());
    for (std::size_t n = 1; n <= 6; ++n) {
      CAPTURE(n);
      CHECK(k_sweep(engine, n, Mode::follower).count == f[n - 1]);
      CHECK(k_sweep(engine, n, Mode::extender).count == e[n - 1]);
    }
  }

  TEST_CASE("left constraints") {
    SoficClassifier golden(*sofic_presentation(*golden_beta_shift()));
    for (std::size_t n = 2; n <= 6; ++n) CHECK(golden.left_constraints(n) == 0);
    SoficClassifier even(even_presentation());
    for (const auto& c : oracle_cases()) {
      const std::string letters = testing_util::letters_of(*c.space);
      ContextEngine engine(c.space);
      for (std::size_t n = 2; n <= c.max_n; ++n) {
        CAPTURE(c.name);
        CAPTURE(n);
        CHECK(engine.left_constraints(n, c.k) == oracle::left_constraints(letters, n, c.k, c.member));
        CHECK(left_constraint_count(c.space, n, c.k) == engine.left_constraints(n, c.k));
      }
    }
    ContextEngine even_engine(even_shift());
    for (std::size_t n = 2; n <= 5; ++n) CHECK(even.left_constraints(n) == even_engine.left_constraints(n, 2 * n + 4));
  }
}
