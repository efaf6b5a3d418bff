#include "helpers.hpp"

#include "symdyn/error.hpp"
#include "symdyn/spaces.hpp"

#include <doctest.h>

#include <cmath>
#include <random>

using namespace symdyn;
using testing_util::member_of;
using testing_util::words_of;

namespace {

void check_against(const SpacePtr& space, const oracle::Member& truth, std::size_t max_n) {
  const std::string letters = testing_util::letters_of(*space);
  for (std::size_t n = 0; n <= max_n; ++n) {
    CAPTURE(n);
    CHECK(words_of(*space, n) == oracle::language(letters, n, truth));
  }
}

/// Avoids every forbidden word and sits inside a longer word that does too.
bool sft_oracle(const std::string& w, const std::vector<std::string>& forbidden, std::size_t pad) {
  auto clean = [&](const std::string& x) {
    for (const auto& f : forbidden)
      if (x.find(f) != std::string::npos) return false;
    return true;
  };
  if (!clean(w)) return false;
  for (const auto& s : oracle::all_words("01", pad))
    for (const auto& u : oracle::all_words("01", pad))
      if (clean(s + w + u)) return true;
  return false;
}

}  // namespace

TEST_SUITE("spaces") {
  TEST_CASE("even shift membership and language") {
    auto even = even_shift();
    CHECK_FALSE(even->membership(Word::parse(even->alphabet_ptr(), "101")));
    CHECK(even->membership(Word::parse(even->alphabet_ptr(), "1001")));
    CHECK(even->membership(Word::parse(even->alphabet_ptr(), "0001")));
    check_against(even, oracle::even, 10);
  }

  TEST_CASE("golden mean shift of finite type") {
    auto g = golden_mean_sft();
    check_against(g, oracle::golden, 10);
    CHECK(g->exact_context_bound() == std::optional<std::size_t>{1});
  }

  TEST_CASE("shifts of finite type match a forbidden-word oracle") {
    std::mt19937 rng(7);
    auto alphabet = digit_alphabet(2);
    int built = 0;
    for (int trial = 0; trial < 40; ++trial) {
      std::vector<std::string> forbidden;
      std::vector<std::vector<Symbol>> symbols;
      const int count = 1 + static_cast<int>(rng() % 3);
      for (int i = 0; i < count; ++i) {
        const std::size_t len = 1 + rng() % 3;
        std::string f;
        std::vector<Symbol> s;
        for (std::size_t j = 0; j < len; ++j) {
          const Symbol a = static_cast<Symbol>(rng() % 2);
          f += static_cast<char>('0' + a);
          s.push_back(a);
        }
        forbidden.push_back(f);
        symbols.push_back(s);
      }
      CAPTURE(forbidden);
      SpacePtr x;
      try {
        x = sft({alphabet, symbols});
      } catch (const ConstructionError&) {
        // Nothing survives: the oracle must agree that no long word is clean.
        CHECK_FALSE(sft_oracle("", forbidden, 6));
        continue;
      }
      ++built;
      check_against(x, [&](const std::string& w) { return sft_oracle(w, forbidden, 5); }, 6);
    }
    CHECK(built > 10);
  }

  TEST_CASE("sofic presentations") {
    auto p = make_presentation(digit_alphabet(2), {"q0", "q1"}, {{"q0", "1", "q0"}, {"q0", "0", "q1"}, {"q1", "0", "q0"}});
    CHECK(p.essential());
    check_against(sofic(p), oracle::even, 8);
    auto dangling = make_presentation(digit_alphabet(2), {"a", "b", "c"}, {{"a", "0", "a"}, {"a", "1", "b"}, {"c", "1", "a"}});
    CHECK(dangling.trimmed().state_count() == 1);
    check_against(sofic(dangling), [](const std::string& w) { return w.find('1') == std::string::npos; }, 5);
    auto acyclic = make_presentation(digit_alphabet(2), {"a", "b"}, {{"a", "0", "b"}});
    CHECK_THROWS_AS(sofic(acyclic), ConstructionError);
    CHECK_THROWS_AS(make_presentation(digit_alphabet(2), {"a"}, {{"a", "2", "a"}}), ConstructionError);
  }

  TEST_CASE("beta expansions of 1") {
    const auto golden = beta_dstar_digits({{-1, -1, 1}}, 20);
    CHECK(golden.finite_expansion);
    CHECK(golden.dstar.period == std::vector<int>{1, 0});
    CHECK(golden.alphabet_size == 2);
    const auto two = beta_dstar_digits({{-2, 1}}, 20);
    CHECK(two.dstar.period == std::vector<int>{1});
    CHECK(two.alphabet_size == 2);
    const auto tribonacci = beta_dstar_digits({{-1, -1, -1, 1}}, 20);
    CHECK(tribonacci.dstar.period == std::vector<int>{1, 1, 0});
    const auto rational = beta_dstar_digits(parse_beta_number("3/2"), 16);
    CHECK(rational.alphabet_size == 2);
    CHECK(rational.dstar.at(0) == 1);
    CHECK(rational.dstar.at(1) == 0);
    CHECK(parse_beta_number("2.5").coefficients == std::vector<std::int64_t>{-25, 10});
    CHECK_THROWS_AS(parse_beta_number("x"), ContractError);
  }

  TEST_CASE("beta shifts match the lexicographic oracle") {
    check_against(golden_beta_shift(), [](const std::string& w) { return oracle::beta(w, {}, {1, 0}); }, 10);
    check_against(beta_shift({{{}, {1, 1, 0}, false}, 0}), [](const std::string& w) { return oracle::beta(w, {}, {1, 1, 0}); },
                  10);
    check_against(beta_shift({{{1}, {1, 0}, false}, 0}), [](const std::string& w) { return oracle::beta(w, {1}, {1, 0}); },
                  10);
    check_against(beta_shift({{{}, {2, 0}, false}, 0}), [](const std::string& w) { return oracle::beta(w, {}, {2, 0}); }, 6);
    // The golden beta-shift and the golden mean shift share a language.
    for (std::size_t n = 1; n <= 8; ++n) CHECK(words_of(*golden_beta_shift(), n) == words_of(*golden_mean_sft(), n));
  }

  TEST_CASE("sturmian rotation stand-in") {
    const double eta = (std::sqrt(5.0) - 1) / 2;
    const auto r = sturmian_rotation({std::vector<std::int64_t>(12, 1), 40});
    CHECK(r.q > 40);
    for (std::size_t n = 1; n <= 40; ++n) {
      CHECK(r.floor_multiple(n) == static_cast<std::int64_t>(std::floor(n * eta)));
      CHECK(r.ceil_multiple(n) == static_cast<std::int64_t>(std::ceil(n * eta)));
    }
  }

  TEST_CASE("sturmian language") {
    const double eta = (std::sqrt(5.0) - 1) / 2;
    auto x = sturmian({std::vector<std::int64_t>(12, 1), 40});
    for (std::size_t n = 1; n <= 12; ++n) {
      CAPTURE(n);
      const auto words = words_of(*x, n);
      CHECK(words.size() == n + 1);
      const auto truth = oracle::rotation_factors(eta, n);
      CHECK(words == std::vector<std::string>(truth.begin(), truth.end()));
      std::size_t lo = n, hi = 0;
      for (const auto& w : words) {
        const auto ones = static_cast<std::size_t>(std::count(w.begin(), w.end(), '1'));
        lo = std::min(lo, ones);
        hi = std::max(hi, ones);
      }
      CHECK(hi - lo == 1);
    }
    CHECK_THROWS_AS(x->words(41), PrecisionError);
  }

  TEST_CASE("context-free shift") {
    auto cf = context_free_shift();
    auto in = [&](const char* w) { return cf->membership(Word::parse(cf->alphabet_ptr(), w)); };
    CHECK(in("caabbc"));
    CHECK_FALSE(in("cabbc"));
    CHECK_FALSE(in("ba"));
    CHECK(in("aabbbc"));
    CHECK_FALSE(in("aaabbc"));
    CHECK(in("cab"));
    CHECK(in("cca"));
    check_against(cf, oracle::context_free, 8);
  }

  TEST_CASE("library spaces agree with their own membership oracle") {
    for (const auto& [name, space, depth] : testing_util::roster()) {
      if (!space->alphabet().single_char()) continue;
      CAPTURE(name);
      const auto truth = member_of(space);
      const std::string letters = testing_util::letters_of(*space);
      for (std::size_t n = 0; n <= std::min<std::size_t>(depth, 6); ++n)
        CHECK(words_of(*space, n) == oracle::language(letters, n, truth));
    }
  }
}
