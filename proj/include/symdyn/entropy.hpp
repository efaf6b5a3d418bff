#pragma once

#include "symdyn/language.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace symdyn {

enum class Quantity { h, h_e, h_f, h_p, h_c };

/// "h", "h_E", "h_F", "h_P", "h_C".
std::string quantity_name(Quantity q);
Quantity parse_quantity(const std::string& text);

struct EntropyRow {
  std::size_t n = 0;
  std::uint64_t count = 0;
  double value = 0;  // log(count) / n, natural log; -inf for a zero count
  bool exact = false;
  std::optional<double> bound;  // min of value over exact rows up to n (h and h_E only)
};

struct EntropyEstimate {
  Quantity quantity = Quantity::h;
  std::vector<EntropyRow> rows;
  /// Min of value over exact rows; the true limit is at most this (h and h_E only, whose
  /// counts are submultiplicative).
  std::optional<double> certified_upper_bound;
};

/// Per-n values of one quantity. Throws DomainError on an empty table, a row with n = 0, or
/// a quantity whose counts the table does not carry.
EntropyEstimate estimate(const CountTable& table, Quantity quantity);

/// Inequalities relating the counts of a space X and a transformed space.
enum class GapKind {
  higher_block_sandwich,  // Z = higher_block(X, 2r+1): E_X <= E_Z <= E_X |A|^{4r}, n > 4r
  reverse_swap,           // Y = reverse(X): F_X = P_Y, P_X = F_Y, E_X = E_Y
  disjoint_doubling,      // Y = X u X': F_Y = 2 F_X
  product_equality,       // Y = X x W: E_Y = E_X E_W
};

struct GapSpec {
  GapKind kind = GapKind::reverse_swap;
  std::size_t alphabet_size = 0;      // |A| of X, for the sandwich
  std::size_t radius = 0;             // r, for the sandwich
  const CountTable* other = nullptr;  // W for the product; X itself when null
};

struct GapRow {
  std::size_t n = 0;
  std::string relation;  // e.g. "E_X <= E_Z <= 16 E_X"
  std::string observed;
  bool applicable = true;  // false when the inequality says nothing at this n
  bool pass = true;
};

/// One row per shared n. Throws DomainError when the n ranges differ or a needed count is
/// missing.
std::vector<GapRow> gap_report(const CountTable& x, const CountTable& y, const GapSpec& spec);

}  // namespace symdyn
