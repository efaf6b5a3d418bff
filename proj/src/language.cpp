#include "symdyn/language.hpp"

#include "symdyn/error.hpp"

#include <algorithm>
#include <limits>
#include <set>

namespace symdyn {

std::vector<Word> enumerate_language(const ShiftSpace& space, std::size_t n) {
  const WordSet& set = space.words(n);
  std::vector<Word> out;
  out.reserve(set.size());
  for (std::size_t i = 0; i < set.size(); ++i) {
    auto w = set[i];
    out.emplace_back(space.alphabet_ptr(), std::vector<Symbol>(w.begin(), w.end()));
  }
  return out;
}

std::vector<std::uint64_t> complexity_sequence(const ShiftSpace& space, std::size_t max_n) {
  if (max_n == 0) throw ContractError("complexity sequence needs N >= 1");
  std::vector<std::uint64_t> out;
  for (std::size_t n = 1; n <= max_n; ++n) out.push_back(space.words(n).size());
  return out;
}

int DigitWord::at(std::size_t i) const {
  if (i < preperiod.size()) return preperiod[i];
  if (period.empty())
    throw CertificationError("digit index " + std::to_string(i) + " beyond the known " +
                             std::to_string(preperiod.size()) + " digits");
  return period[(i - preperiod.size()) % period.size()];
}

std::size_t DigitWord::horizon() const noexcept {
  return period.empty() ? preperiod.size() : std::numeric_limits<std::size_t>::max();
}

std::uint64_t subword_count(const DigitWord& x, std::size_t n) {
  if (x.truncated && !x.periodic())
    throw CertificationError("factor count of a truncated sequence cannot be certified from " +
                             std::to_string(x.preperiod.size()) + " digits");
  std::set<std::vector<int>> seen;
  // Every factor of an eventually periodic word starts within preperiod + one period.
  const std::size_t starts = x.periodic() ? x.preperiod.size() + x.period.size()
                                          : (x.preperiod.size() >= n ? x.preperiod.size() - n + 1 : 0);
  std::vector<int> window(n);
  for (std::size_t i = 0; i < starts; ++i) {
    for (std::size_t j = 0; j < n; ++j) window[j] = x.at(i + j);
    seen.insert(window);
  }
  return seen.size();
}

const CountRow& CountTable::row(std::size_t n) const {
  for (const auto& r : rows)
    if (r.n == n) return r;
  throw DomainError("count table has no row for n = " + std::to_string(n));
}

void CountTable::validate() const {
  for (const auto& r : rows) {
    const std::string where = "row n=" + std::to_string(r.n) + ": ";
    if (r.count_e && ((r.count_f && *r.count_e < *r.count_f) || (r.count_p && *r.count_e < *r.count_p)))
      throw DomainError(where + "extender count below follower/predecessor count");
    for (const auto& c : {r.count_f, r.count_p, r.count_e})
      if (c && r.count_l < *c) throw DomainError(where + "more classes than words");
  }
}

}  // namespace symdyn
