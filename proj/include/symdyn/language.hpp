#pragma once

#include "symdyn/shift_space.hpp"

#include <cstdint>
#include <optional>
#include <vector>

namespace symdyn {

/// L_n(X) as Word objects, in lexicographic order.
std::vector<Word> enumerate_language(const ShiftSpace& space, std::size_t n);

/// |L_1|, ..., |L_N|.
std::vector<std::uint64_t> complexity_sequence(const ShiftSpace& space, std::size_t max_n);

/// A one-sided digit sequence: preperiod followed by period repeated forever, or (with an
/// empty period) a finite word. `truncated` marks a finite prefix of an unknown infinite
/// sequence.
struct DigitWord {
  std::vector<int> preperiod;
  std::vector<int> period;
  bool truncated = false;

  bool periodic() const noexcept { return !period.empty(); }
  bool operator==(const DigitWord&) const = default;
  /// Digit i; throws CertificationError past the end of a finite or truncated word.
  int at(std::size_t i) const;
  /// Number of digits an index may reach (SIZE_MAX when periodic).
  std::size_t horizon() const noexcept;
};

/// Number of distinct length-n factors. Exact for periodic and finite words; a truncated
/// prefix cannot certify the count of its infinite continuation.
std::uint64_t subword_count(const DigitWord& x, std::size_t n);

struct CountRow {
  std::size_t n = 0;
  std::uint64_t count_l = 0;
  // Class counts are present for the requested modes only.
  std::optional<std::uint64_t> count_f;
  std::optional<std::uint64_t> count_p;
  std::optional<std::uint64_t> count_e;
  std::optional<std::uint64_t> count_c;  // left constraints
  long k_used = -1;                      // -1: exact sofic path, no context bound involved
  bool exact_f = false;
  bool exact_p = false;
  bool exact_e = false;
  bool exact_c = false;
};

struct CountTable {
  std::vector<CountRow> rows;

  const CountRow& row(std::size_t n) const;
  /// Throws DomainError when a row breaks |L| >= |E| >= max(|F|, |P|) among present counts.
  void validate() const;
};

}  // namespace symdyn
