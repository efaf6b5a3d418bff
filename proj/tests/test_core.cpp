#include "helpers.hpp"

#include "symdyn/error.hpp"
#include "symdyn/language.hpp"
#include "symdyn/sofic.hpp"

#include <doctest.h>

using namespace symdyn;
using testing_util::words_of;

TEST_SUITE("core") {
  TEST_CASE("alphabet rejects empty and duplicate token lists") {
    CHECK_THROWS_AS(make_alphabet({}), ContractError);
    CHECK_THROWS_AS(make_alphabet({"a", "a"}), ContractError);
    auto a = make_alphabet({"0", "1'", "*"});
    CHECK(a->size() == 3);
    CHECK(a->index("1'") == 1);
    CHECK_FALSE(a->find("2").has_value());
    CHECK_FALSE(a->single_char());
  }

  TEST_CASE("words parse by longest token match and round-trip") {
    auto a = make_alphabet({"0", "1", "1'"});
    const Word w = Word::parse(a, "01'1");
    CHECK(w.size() == 3);
    CHECK(w.tokens() == std::vector<std::string>{"0", "1'", "1"});
    CHECK(Word::parse(a, w.str()) == w);
    CHECK(w.reversed().tokens() == std::vector<std::string>{"1", "1'", "0"});
    CHECK(w.concat(Word(a)) == w);
    CHECK(w.sub(1, 2).tokens() == std::vector<std::string>{"1'", "1"});
    CHECK_THROWS_AS(Word::parse(a, "2"), ContractError);
  }

  TEST_CASE("membership examples") {
    auto even = even_shift();
    auto full = full_shift(digit_alphabet(2));
    CHECK_FALSE(even->membership(Word::parse(even->alphabet_ptr(), "101")));
    CHECK(even->membership(Word::parse(even->alphabet_ptr(), "1001")));
    CHECK(even->membership(Word(even->alphabet_ptr())));
    CHECK(full->membership(Word::parse(full->alphabet_ptr(), "0110")));
    CHECK_THROWS_AS(even->membership(Word::parse(make_alphabet({"a", "b"}), "ab")), ContractError);
  }

  TEST_CASE("enumeration and complexity sequences") {
    CHECK(complexity_sequence(*full_shift(digit_alphabet(2)), 3) == std::vector<std::uint64_t>{2, 4, 8});
    CHECK(complexity_sequence(*even_shift(), 3) == std::vector<std::uint64_t>{2, 4, 7});
    CHECK(words_of(*full_shift(digit_alphabet(1)), 3) == std::vector<std::string>{"000"});
    auto even3 = enumerate_language(*even_shift(), 3);
    CHECK(even3.size() == 7);
    for (const auto& w : even3) CHECK(w.str() != "101");
    CHECK(words_of(*even_shift(), 2) == std::vector<std::string>{"00", "01", "10", "11"});
    CHECK(full_shift(digit_alphabet(3))->words(5).size() == 243);
    CHECK(even_shift()->words(0).size() == 1);
  }

  TEST_CASE("enumeration cap raises a resource error") {
    const auto saved = enumeration_cap();
    set_enumeration_cap(100);
    CHECK_THROWS_AS(full_shift(digit_alphabet(2))->words(7), ResourceError);
    set_enumeration_cap(saved);
  }

  TEST_CASE("subword counts of digit words") {
    CHECK(subword_count({{}, {1, 0}, false}, 3) == 2);
    CHECK(subword_count({{}, {0}, false}, 5) == 1);
    CHECK(subword_count({{}, {1, 1, 0}, false}, 2) == 3);
    CHECK(subword_count({{1}, {1, 0}, false}, 2) == 3);
    CHECK_THROWS_AS(subword_count({{1, 0, 1}, {}, true}, 4), CertificationError);
  }

  TEST_CASE("count table validation") {
    CountTable t;
    CountRow r;
    r.n = 1;
    r.count_l = 4;
    r.count_f = 3;
    r.count_e = 2;
    t.rows.push_back(r);
    CHECK_THROWS_AS(t.validate(), DomainError);
    t.rows[0].count_e = 5;
    CHECK_THROWS_AS(t.validate(), DomainError);
    t.rows[0].count_e = 3;
    CHECK_NOTHROW(t.validate());
    CHECK_THROWS_AS(t.row(2), DomainError);
  }

  TEST_CASE("every space is factorial") {
    for (const auto& [name, space, depth] : testing_util::roster()) {
      CAPTURE(name);
      for (std::size_t n = 1; n <= depth; ++n) {
        const WordSet& level = space->words(n);
        for (std::size_t i = 0; i < level.size(); ++i) {
          const auto w = level[i];
          REQUIRE(space->contains(w.subspan(1)));
          REQUIRE(space->contains(w.first(n - 1)));
        }
        // L_n is exactly the legal one-letter right extensions of L_{n-1}.
        std::size_t extensions = 0;
        const WordSet& prev = space->words(n - 1);
        std::vector<Symbol> buf;
        for (std::size_t i = 0; i < prev.size(); ++i)
          for (std::size_t a = 0; a < space->alphabet().size(); ++a) {
            buf.assign(prev[i].begin(), prev[i].end());
            buf.push_back(static_cast<Symbol>(a));
            if (space->contains(buf)) ++extensions;
          }
        CHECK(extensions == level.size());
      }
    }
  }

  TEST_CASE("every space is extendable") {
    for (const auto& [name, space, depth] : testing_util::roster()) {
      CAPTURE(name);
      const std::size_t q = space->alphabet().size();
      for (std::size_t n = 0; n + 2 <= depth; ++n) {
        const WordSet& level = space->words(n);
        for (std::size_t i = 0; i < level.size(); ++i) {
          bool found = false;
          std::vector<Symbol> buf;
          for (std::size_t x = 0; x < q && !found; ++x)
            for (std::size_t y = 0; y < q && !found; ++y) {
              buf.assign(1, static_cast<Symbol>(x));
              buf.insert(buf.end(), level[i].begin(), level[i].end());
              buf.push_back(static_cast<Symbol>(y));
              found = space->contains(buf);
            }
          CAPTURE(format_word(space->alphabet(), level[i]));
          REQUIRE(found);
        }
      }
    }
  }

  TEST_CASE("complexity grows") {
    for (const auto& [name, space, depth] : testing_util::roster()) {
      CAPTURE(name);
      const auto c = complexity_sequence(*space, depth);
      for (std::size_t i = 1; i < c.size(); ++i) CHECK(c[i] >= c[i - 1]);
    }
  }

  TEST_CASE("automata agree with membership in both directions") {
    for (const auto& [name, space, depth] : testing_util::roster()) {
      CAPTURE(name);
      const std::size_t q = space->alphabet().size();
      LazyDfa forward(space->automaton(Direction::forward));
      LazyDfa backward(space->automaton(Direction::backward));
      const std::size_t n = std::min<std::size_t>(depth, 5);
      // Every word over the alphabet of length n-1 extended by one letter, legal or not.
      const WordSet& prev = space->words(n - 1);
      std::vector<Symbol> w, r;
      for (std::size_t i = 0; i < prev.size(); ++i)
        for (std::size_t a = 0; a < q; ++a)
          for (std::size_t side = 0; side < 2; ++side) {
            w.assign(prev[i].begin(), prev[i].end());
            if (side == 0) w.push_back(static_cast<Symbol>(a));
            else w.insert(w.begin(), static_cast<Symbol>(a));
            r.assign(w.rbegin(), w.rend());
            const bool in = space->contains(w);
            CHECK(forward.live(forward.run(forward.start(), w)) == in);
            CHECK(backward.live(backward.run(backward.start(), r)) == in);
          }
    }
  }
}
