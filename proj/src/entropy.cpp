#include "symdyn/entropy.hpp"
#include "symdyn/error.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace symdyn {

std::string quantity_name(Quantity q) {
  switch (q) {
    case Quantity::h: return "h";
    case Quantity::h_e: return "h_E";
    case Quantity::h_f: return "h_F";
    case Quantity::h_p: return "h_P";
    case Quantity::h_c: return "h_C";
  }
  return "?";
}

Quantity parse_quantity(const std::string& text) {
  for (Quantity q : {Quantity::h, Quantity::h_e, Quantity::h_f, Quantity::h_p, Quantity::h_c})
    if (text == quantity_name(q)) return q;
  throw ContractError("unknown entropy quantity '" + text + "'");
}

namespace {

struct Cell {
  std::optional<std::uint64_t> count;
  bool exact = false;
};

Cell cell(const CountRow& r, Quantity q) {
  switch (q) {
    case Quantity::h: return {r.count_l, true};
    case Quantity::h_e: return {r.count_e, r.exact_e};
    case Quantity::h_f: return {r.count_f, r.exact_f};
    case Quantity::h_p: return {r.count_p, r.exact_p};
    case Quantity::h_c: return {r.count_c, r.exact_c};
  }
  return {};
}

std::uint64_t need(const std::optional<std::uint64_t>& c, const char* what, std::size_t n) {
  if (!c) throw DomainError(std::string("count table lacks ") + what + " at n = " + std::to_string(n));
  return *c;
}

}  // namespace

EntropyEstimate estimate(const CountTable& table, Quantity quantity) {
  if (table.rows.empty()) throw DomainError("entropy estimate of an empty count table");
  const bool certifiable = quantity == Quantity::h || quantity == Quantity::h_e;
  EntropyEstimate out;
  out.quantity = quantity;
  for (const auto& r : table.rows) {
    if (r.n == 0) throw DomainError("entropy rows need n >= 1");
    const Cell c = cell(r, quantity);
    if (!c.count) throw DomainError("count table lacks " + quantity_name(quantity) + " counts at n = " + std::to_string(r.n));
    EntropyRow row;
    row.n = r.n;
    row.count = *c.count;
    row.exact = c.exact;
    row.value = row.count == 0 ? -std::numeric_limits<double>::infinity()
                               : std::log(static_cast<double>(row.count)) / static_cast<double>(r.n);
    if (certifiable && row.exact)
      out.certified_upper_bound = out.certified_upper_bound ? std::min(*out.certified_upper_bound, row.value) : row.value;
    if (certifiable) row.bound = out.certified_upper_bound;
    out.rows.push_back(row);
  }
  return out;
}

std::vector<GapRow> gap_report(const CountTable& x, const CountTable& y, const GapSpec& spec) {
  const CountTable& w = spec.other ? *spec.other : x;
  auto ns = [](const CountTable& t) {
    std::vector<std::size_t> out;
    for (const auto& r : t.rows) out.push_back(r.n);
    return out;
  };
  if (ns(x) != ns(y) || ns(x) != ns(w)) throw DomainError("gap report needs matching n ranges");
  if (spec.kind == GapKind::higher_block_sandwich && spec.alphabet_size == 0)
    throw DomainError("higher-block sandwich needs the alphabet size");

  std::vector<GapRow> out;
  for (std::size_t i = 0; i < x.rows.size(); ++i) {
    const CountRow& a = x.rows[i];
    const CountRow& b = y.rows[i];
    const std::size_t n = a.n;
    GapRow row;
    row.n = n;
    switch (spec.kind) {
      case GapKind::higher_block_sandwich: {
        const auto ex = need(a.count_e, "E_X", n);
        const auto ez = need(b.count_e, "E_Z", n);
        std::uint64_t factor = 1;
        for (std::size_t j = 0; j < 4 * spec.radius; ++j) factor *= spec.alphabet_size;
        row.relation = "E_X <= E_Z <= " + std::to_string(factor) + " E_X";
        row.observed = std::to_string(ex) + " <= " + std::to_string(ez) + " <= " + std::to_string(factor * ex);
        row.applicable = n > 4 * spec.radius;
        row.pass = !row.applicable || (ex <= ez && ez <= factor * ex);
        break;
      }
      case GapKind::reverse_swap: {
        const auto fx = need(a.count_f, "F_X", n), px = need(a.count_p, "P_X", n), ex = need(a.count_e, "E_X", n);
        const auto fy = need(b.count_f, "F_Y", n), py = need(b.count_p, "P_Y", n), ey = need(b.count_e, "E_Y", n);
        row.relation = "F_X = P_Y, P_X = F_Y, E_X = E_Y";
        row.observed = std::to_string(fx) + "=" + std::to_string(py) + ", " + std::to_string(px) + "=" +
                       std::to_string(fy) + ", " + std::to_string(ex) + "=" + std::to_string(ey);
        row.pass = fx == py && px == fy && ex == ey;
        break;
      }
      case GapKind::disjoint_doubling: {
        const auto fx = need(a.count_f, "F_X", n), fy = need(b.count_f, "F_Y", n);
        row.relation = "F_Y = 2 F_X";
        row.observed = std::to_string(fy) + " = 2*" + std::to_string(fx);
        row.pass = fy == 2 * fx;
        break;
      }
      case GapKind::product_equality: {
        const auto ex = need(a.count_e, "E_X", n), ew = need(w.rows[i].count_e, "E_W", n);
        const auto ey = need(b.count_e, "E_Y", n);
        row.relation = "E_Y = E_X E_W";
        row.observed = std::to_string(ey) + " = " + std::to_string(ex) + "*" + std::to_string(ew);
        row.pass = ey == ex * ew;
        break;
      }
    }
    out.push_back(std::move(row));
  }
  return out;
}

}  // namespace symdyn
