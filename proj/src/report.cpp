#include "symdyn/report.hpp"
#include "symdyn/entropy.hpp"
#include "symdyn/error.hpp"
#include "symdyn/sofic.hpp"

#include <json.hpp>

#include <algorithm>
#include <cmath>
#include <iomanip>
#include <sstream>

namespace symdyn {

using nlohmann::json;

namespace {

bool wants(const RunConfig& config, Mode m) {
  return std::find(config.modes.begin(), config.modes.end(), m) != config.modes.end();
}

std::optional<std::uint64_t>& slot(CountRow& row, Mode m) {
  switch (m) {
    case Mode::follower: return row.count_f;
    case Mode::predecessor: return row.count_p;
    case Mode::extender: return row.count_e;
  }
  return row.count_e;
}

bool& flag(CountRow& row, Mode m) {
  switch (m) {
    case Mode::follower: return row.exact_f;
    case Mode::predecessor: return row.exact_p;
    case Mode::extender: return row.exact_e;
  }
  return row.exact_e;
}

std::optional<CountTable> sofic_table(const SpacePtr& space, const RunConfig& config, bool constraints) {
  const auto p = sofic_presentation(*space);
  if (!p) return std::nullopt;
  std::optional<SoficClassifier> classifier;
  try {
    classifier.emplace(*p);
  } catch (const ResourceError&) {
    return std::nullopt;
  }
  CountTable table;
  for (std::size_t n = 1; n <= config.max_n; ++n) {
    CountRow row;
    row.n = n;
    row.count_l = space->words(n).size();
    for (Mode m : config.modes) {
      slot(row, m) = classifier->count(n, m);
      flag(row, m) = true;
    }
    if (constraints && n >= 2) {
      row.count_c = classifier->left_constraints(n);
      row.exact_c = true;
    }
    table.rows.push_back(row);
  }
  return table;
}

CountTable bounded_table(const SpacePtr& space, const RunConfig& config, bool constraints) {
  ContextEngine engine(space);
  const auto bound = space->exact_context_bound();
  CountTable table;
  for (std::size_t n = 1; n <= config.max_n; ++n) {
    std::size_t k = 0;
    if (config.k) {
      k = *config.k;
    } else {
      SweepOptions options;
      options.k_max = config.k_max;
      options.stability_window = config.stability;
      for (Mode m : config.modes) k = std::max(k, k_sweep(engine, n, m, options).k_used);
    }
    const bool exact = bound && *bound <= k;
    CountRow row;
    row.n = n;
    row.count_l = space->words(n).size();
    row.k_used = static_cast<long>(k);
    for (Mode m : config.modes) {
      slot(row, m) = engine.classify(n, k, m).count;
      flag(row, m) = exact;
    }
    if (constraints && n >= 2) {
      row.count_c = engine.left_constraints(n, k);
      row.exact_c = exact;
    }
    table.rows.push_back(row);
  }
  return table;
}

std::string csv_count(const std::optional<std::uint64_t>& c) { return c ? std::to_string(*c) : ""; }
std::string csv_flag(const std::optional<std::uint64_t>& c, bool f) { return c ? (f ? "true" : "false") : ""; }
json json_count(const std::optional<std::uint64_t>& c) { return c ? json(*c) : json(nullptr); }
json json_flag(const std::optional<std::uint64_t>& c, bool f) { return c ? json(f) : json(nullptr); }

std::string csv_real(double v) {
  if (std::isinf(v)) return v < 0 ? "-inf" : "inf";
  std::ostringstream s;
  s << std::setprecision(12) << v;
  return s.str();
}

json json_real(double v) { return std::isfinite(v) ? json(v) : json(nullptr); }

void seed_line(const RunConfig& config, std::ostream& out) { out << "# seed=" << config.seed << "\n"; }

}  // namespace

CountTable count_table(const SpacePtr& space, const RunConfig& config, bool constraints) {
  if (config.max_n == 0) throw ContractError("max n must be at least 1");
  if (config.modes.empty()) throw ContractError("no classification mode requested");
  CountTable table;
  if (!config.k) {
    if (auto t = sofic_table(space, config, constraints)) table = std::move(*t);
  }
  if (table.rows.empty()) table = bounded_table(space, config, constraints);
  table.validate();
  return table;
}

void run_words(const SpacePtr& space, const RunConfig& config, std::ostream& out) {
  const WordSet& words = space->words(config.n);
  if (config.format == Format::csv) {
    seed_line(config, out);
    out << "word\n";
    for (std::size_t i = 0; i < words.size(); ++i) out << format_word(space->alphabet(), words[i]) << "\n";
    return;
  }
  json rows = json::array();
  for (std::size_t i = 0; i < words.size(); ++i) rows.push_back({{"word", format_word(space->alphabet(), words[i])}});
  out << rows.dump(2) << "\n";
}

void run_classes(const SpacePtr& space, const RunConfig& config, std::ostream& out) {
  const CountTable table = count_table(space, config);
  if (config.format == Format::csv) {
    seed_line(config, out);
    out << "n,count_L,count_F,count_P,count_E,k_used,exact_F,exact_P,exact_E\n";
    for (const auto& r : table.rows)
      out << r.n << "," << r.count_l << "," << csv_count(r.count_f) << "," << csv_count(r.count_p) << ","
          << csv_count(r.count_e) << "," << r.k_used << "," << csv_flag(r.count_f, r.exact_f) << ","
          << csv_flag(r.count_p, r.exact_p) << "," << csv_flag(r.count_e, r.exact_e) << "\n";
    return;
  }
  json rows = json::array();
  for (const auto& r : table.rows)
    rows.push_back({{"n", r.n},
                    {"count_L", r.count_l},
                    {"count_F", json_count(r.count_f)},
                    {"count_P", json_count(r.count_p)},
                    {"count_E", json_count(r.count_e)},
                    {"k_used", r.k_used},
                    {"exact_F", json_flag(r.count_f, r.exact_f)},
                    {"exact_P", json_flag(r.count_p, r.exact_p)},
                    {"exact_E", json_flag(r.count_e, r.exact_e)}});
  out << rows.dump(2) << "\n";
}

void run_entropy(const SpacePtr& space, const RunConfig& config, std::ostream& out) {
  const CountTable table = count_table(space, config);
  std::vector<EntropyEstimate> estimates{estimate(table, Quantity::h)};
  if (wants(config, Mode::extender)) estimates.push_back(estimate(table, Quantity::h_e));
  if (wants(config, Mode::follower)) estimates.push_back(estimate(table, Quantity::h_f));
  if (wants(config, Mode::predecessor)) estimates.push_back(estimate(table, Quantity::h_p));

  if (config.format == Format::csv) {
    seed_line(config, out);
    out << "quantity,n,count,value,exact,bound\n";
    for (const auto& e : estimates)
      for (const auto& r : e.rows)
        out << quantity_name(e.quantity) << "," << r.n << "," << r.count << "," << csv_real(r.value) << ","
            << (r.exact ? "true" : "false") << "," << (r.bound ? csv_real(*r.bound) : "") << "\n";
    return;
  }
  json rows = json::array();
  for (const auto& e : estimates)
    for (const auto& r : e.rows)
      rows.push_back({{"quantity", quantity_name(e.quantity)},
                      {"n", r.n},
                      {"count", r.count},
                      {"value", json_real(r.value)},
                      {"exact", r.exact},
                      {"bound", r.bound ? json_real(*r.bound) : json(nullptr)}});
  out << rows.dump(2) << "\n";
}

void run_constraints(const SpacePtr& space, const RunConfig& config, std::ostream& out) {
  RunConfig follower = config;
  follower.modes = {Mode::follower};
  CountTable table = count_table(space, follower, true);
  std::erase_if(table.rows, [](const CountRow& r) { return r.n < 2; });
  const EntropyEstimate h_c = table.rows.empty() ? EntropyEstimate{Quantity::h_c, {}, std::nullopt}
                                                 : estimate(table, Quantity::h_c);
  if (config.format == Format::csv) {
    seed_line(config, out);
    out << "n,count_L,count_C,value,k_used,exact_C\n";
    for (std::size_t i = 0; i < table.rows.size(); ++i) {
      const auto& r = table.rows[i];
      out << r.n << "," << r.count_l << "," << *r.count_c << "," << csv_real(h_c.rows[i].value) << "," << r.k_used
          << "," << (r.exact_c ? "true" : "false") << "\n";
    }
    return;
  }
  json rows = json::array();
  for (std::size_t i = 0; i < table.rows.size(); ++i) {
    const auto& r = table.rows[i];
    rows.push_back({{"n", r.n},
                    {"count_L", r.count_l},
                    {"count_C", *r.count_c},
                    {"value", json_real(h_c.rows[i].value)},
                    {"k_used", r.k_used},
                    {"exact_C", r.exact_c}});
  }
  out << rows.dump(2) << "\n";
}

}  // namespace symdyn
