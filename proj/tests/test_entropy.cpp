#include "helpers.hpp"

#include "symdyn/entropy.hpp"
#include "symdyn/error.hpp"
#include "symdyn/report.hpp"

#include <doctest.h>

#include <cmath>

using namespace symdyn;

namespace {

CountTable table_of(const SpacePtr& x, std::size_t max_n) {
  RunConfig config;
  config.max_n = max_n;
  return count_table(x, config);
}

}  // namespace

TEST_SUITE("entropy") {
  TEST_CASE("quantity names round-trip") {
    for (Quantity q : {Quantity::h, Quantity::h_e, Quantity::h_f, Quantity::h_p, Quantity::h_c})
      CHECK(parse_quantity(quantity_name(q)) == q);
    CHECK(quantity_name(Quantity::h_e) == "h_E");
    CHECK_THROWS_AS(parse_quantity("h_X"), ContractError);
  }

  TEST_CASE("full shift entropy is log of the alphabet size") {
    const auto est = estimate(table_of(full_shift(digit_alphabet(3)), 5), Quantity::h);
    REQUIRE(est.rows.size() == 5);
    for (const auto& r : est.rows) CHECK(r.value == doctest::Approx(std::log(3.0)).epsilon(1e-12));
    REQUIRE(est.certified_upper_bound);
    CHECK(*est.certified_upper_bound == doctest::Approx(std::log(3.0)).epsilon(1e-12));
    const auto hf = estimate(table_of(full_shift(digit_alphabet(3)), 5), Quantity::h_f);
    for (const auto& r : hf.rows) CHECK(r.value == 0);
    CHECK_FALSE(hf.certified_upper_bound);
  }

  TEST_CASE("golden mean bounds decrease toward log phi") {
    const double log_phi = std::log((1 + std::sqrt(5.0)) / 2);
    const auto est = estimate(table_of(golden_mean_sft(), 12), Quantity::h);
    double previous = INFINITY;
    for (const auto& r : est.rows) {
      CHECK(r.exact);
      REQUIRE(r.bound);
      CHECK(*r.bound <= previous);
      CHECK(*r.bound >= log_phi);
      previous = *r.bound;
    }
    CHECK(*est.certified_upper_bound - log_phi < 0.05);
  }

  TEST_CASE("even shift follower entropy values") {
    const auto est = estimate(table_of(even_shift(), 6), Quantity::h_f);
    CHECK(est.rows[0].value == doctest::Approx(std::log(2.0)));
    for (std::size_t i = 1; i < est.rows.size(); ++i)
      CHECK(est.rows[i].value == doctest::Approx(std::log(3.0) / static_cast<double>(i + 1)));
    const auto he = estimate(table_of(even_shift(), 6), Quantity::h_e);
    CHECK(he.rows[2].count == 5);
    CHECK(*he.certified_upper_bound == doctest::Approx(std::log(5.0) / 6));
  }

  TEST_CASE("counts are submultiplicative") {
    for (const auto& [name, space, depth] : testing_util::roster()) {
      CAPTURE(name);
      const std::size_t top = std::min<std::size_t>(depth, 6);
      RunConfig config;
      config.max_n = top;
      config.modes = {Mode::extender};
      config.k = 4;
      const auto t = count_table(space, config);
      for (std::size_t m = 1; m <= top; ++m)
        for (std::size_t n = 1; m + n <= top; ++n) {
          CHECK(t.row(m + n).count_l <= t.row(m).count_l * t.row(n).count_l);
        }
    }
    const auto t = table_of(even_shift(), 8);
    for (std::size_t m = 1; m <= 8; ++m)
      for (std::size_t n = 1; m + n <= 8; ++n) CHECK(*t.row(m + n).count_e <= *t.row(m).count_e * *t.row(n).count_e);
  }

  TEST_CASE("estimate rejects unusable tables") {
    CHECK_THROWS_AS(estimate(CountTable{}, Quantity::h), DomainError);
    CountTable zero;
    zero.rows.push_back(CountRow{});
    CHECK_THROWS_AS(estimate(zero, Quantity::h), DomainError);
    RunConfig config;
    config.max_n = 3;
    config.modes = {Mode::follower};
    const auto t = count_table(even_shift(), config);
    CHECK_NOTHROW(estimate(t, Quantity::h_f));
    CHECK_THROWS_AS(estimate(t, Quantity::h_e), DomainError);
    CHECK_THROWS_AS(estimate(t, Quantity::h_c), DomainError);
  }

  TEST_CASE("gap reports") {
    const auto cf = table_of(context_free_shift(), 4);
    const auto rcf = table_of(reverse(context_free_shift()), 4);
    for (const auto& row : gap_report(cf, rcf, {GapKind::reverse_swap, 0, 0, nullptr})) CHECK(row.pass);

    const auto g = table_of(golden_mean_sft(), 4);
    const auto e = table_of(even_shift(), 4);
    const auto ge = table_of(product(golden_mean_sft(), even_shift()), 4);
    for (const auto& row : gap_report(g, ge, {GapKind::product_equality, 0, 0, &e})) CHECK(row.pass);

    const auto u = table_of(disjoint_union(golden_mean_sft(), golden_mean_sft()), 4);
    for (const auto& row : gap_report(g, u, {GapKind::disjoint_doubling, 0, 0, nullptr})) CHECK(row.pass);
    // The golden shift doubled is no product of two copies.
    bool any_fail = false;
    for (const auto& row : gap_report(g, u, {GapKind::product_equality, 0, 0, nullptr})) any_fail = any_fail || !row.pass;
    CHECK(any_fail);

    const auto hb = table_of(higher_block(even_shift(), 3), 7);
    const auto base = table_of(even_shift(), 7);
    const auto rows = gap_report(base, hb, {GapKind::higher_block_sandwich, 2, 1, nullptr});
    for (const auto& row : rows) {
      CHECK(row.applicable == (row.n > 4));
      CHECK(row.pass);
    }
    CHECK_THROWS_AS(gap_report(g, base, {GapKind::reverse_swap, 0, 0, nullptr}), DomainError);
  }
}
