#include "symdyn/spec_file.hpp"
#include "symdyn/error.hpp"
#include "symdyn/sofic.hpp"
#include "symdyn/spaces.hpp"
#include "symdyn/transforms.hpp"

#include <json.hpp>

#include <algorithm>
#include <fstream>
#include <limits>
#include <sstream>

namespace symdyn {

using nlohmann::json;

namespace {

struct KindInfo {
  std::string kind;
  std::vector<std::string> children;  // child field names, in operand order
  std::vector<std::string> required;
  std::vector<std::string> optional;
};

const std::vector<KindInfo>& kind_table() {
  static const std::vector<KindInfo> table = {
      {"full", {}, {"alphabet"}, {}},
      {"sft", {}, {"alphabet", "forbidden"}, {}},
      {"sofic", {}, {"alphabet", "states", "edges"}, {}},
      {"even", {}, {}, {}},
      {"beta", {}, {}, {"dstar", "polynomial", "value", "alphabet_size", "horizon", "precision"}},
      {"sturmian", {}, {"partial_quotients"}, {"horizon"}},
      {"context-free", {}, {}, {}},
      {"product", {"left", "right"}, {}, {}},
      {"reverse", {"base"}, {}, {}},
      {"higher-block", {"base"}, {"window"}, {}},
      {"block-image", {"domain"}, {"table"}, {"radius", "target"}},
      {"disjoint-union", {"left", "right"}, {}, {"suffix"}},
      {"selector", {"data"}, {}, {"markers"}},
      {"marker-interleave", {"letters"}, {}, {}},
      {"star-collapse", {"base"}, {}, {"collapse", "collapse_first", "star"}},
      {"sturmian-modulated", {"base"}, {"partial_quotients"}, {"horizon", "star"}},
  };
  return table;
}

const KindInfo& info_of(const std::string& kind, const std::string& where) {
  for (const auto& k : kind_table())
    if (k.kind == kind) return k;
  throw ParseError(where + "/kind", "unknown kind '" + kind + "'");
}

std::string key_path(const std::string& where, const std::string& key) {
  std::string escaped;
  for (char c : key) {
    if (c == '~') escaped += "~0";
    else if (c == '/') escaped += "~1";
    else escaped += c;
  }
  return where + "/" + escaped;
}

std::string text_of(const json& j, const std::string& where) {
  if (!j.is_string()) throw ParseError(where, "expected a string");
  return j.get<std::string>();
}

std::vector<std::string> strings_of(const json& j, const std::string& where) {
  if (!j.is_array()) throw ParseError(where, "expected an array of strings");
  std::vector<std::string> out;
  for (std::size_t i = 0; i < j.size(); ++i) out.push_back(text_of(j[i], where + "/" + std::to_string(i)));
  return out;
}

std::int64_t integer_of(const json& j, const std::string& where) {
  if (!j.is_number_integer()) throw ParseError(where, "expected an integer");
  return j.get<std::int64_t>();
}

std::size_t size_of(const json& j, const std::string& where) {
  const auto v = integer_of(j, where);
  if (v < 0) throw ParseError(where, "expected a nonnegative integer");
  return static_cast<std::size_t>(v);
}

std::vector<std::int64_t> integers_of(const json& j, const std::string& where) {
  if (!j.is_array()) throw ParseError(where, "expected an array of integers");
  std::vector<std::int64_t> out;
  for (std::size_t i = 0; i < j.size(); ++i) out.push_back(integer_of(j[i], where + "/" + std::to_string(i)));
  return out;
}

std::vector<int> digits_of(const json& j, const std::string& where) {
  std::vector<int> out;
  for (auto v : integers_of(j, where)) {
    if (v < 0 || v > std::numeric_limits<int>::max()) throw ParseError(where, "digit out of range");
    out.push_back(static_cast<int>(v));
  }
  return out;
}

DigitWord dstar_of(const json& j, const std::string& where) {
  if (!j.is_object()) throw ParseError(where, "expected an object with preperiod/period");
  DigitWord d;
  for (auto it = j.begin(); it != j.end(); ++it) {
    const std::string at = key_path(where, it.key());
    if (it.key() == "preperiod") d.preperiod = digits_of(*it, at);
    else if (it.key() == "period") d.period = digits_of(*it, at);
    else if (it.key() == "truncated") {
      if (!it->is_boolean()) throw ParseError(at, "expected a boolean");
      d.truncated = it->get<bool>();
    } else throw ParseError(at, "unknown field");
  }
  if (d.preperiod.empty() && d.period.empty()) throw ParseError(where, "d* needs digits");
  return d;
}

ShiftExpr parse_node(const json& j, const std::string& where) {
  if (!j.is_object()) throw ParseError(where, "expected an object");
  if (!j.contains("kind")) throw ParseError(where, "missing field 'kind'");
  ShiftExpr e;
  e.kind = text_of(j["kind"], where + "/kind");
  const KindInfo& info = info_of(e.kind, where);

  for (auto it = j.begin(); it != j.end(); ++it) {
    const auto& k = it.key();
    if (k == "kind") continue;
    const bool known = std::count(info.children.begin(), info.children.end(), k) ||
                       std::count(info.required.begin(), info.required.end(), k) ||
                       std::count(info.optional.begin(), info.optional.end(), k);
    if (!known) throw ParseError(key_path(where, k), "unknown field for kind '" + e.kind + "'");
  }
  for (const auto& k : info.children)
    if (!j.contains(k)) throw ParseError(where, "missing field '" + k + "'");
  for (const auto& k : info.required)
    if (!j.contains(k)) throw ParseError(where, "missing field '" + k + "'");

  for (const auto& k : info.children) e.children.push_back(parse_node(j[k], key_path(where, k)));

  auto field = [&](const char* k) -> const json* { return j.contains(k) ? &j[k] : nullptr; };
  auto at = [&](const char* k) { return key_path(where, k); };

  if (auto f = field("alphabet")) {
    e.alphabet = strings_of(*f, at("alphabet"));
    if (e.alphabet.empty()) throw ParseError(at("alphabet"), "alphabet must be nonempty");
  }
  if (auto f = field("forbidden")) e.forbidden = strings_of(*f, at("forbidden"));
  if (auto f = field("states")) e.states = strings_of(*f, at("states"));
  if (auto f = field("edges")) {
    if (!f->is_array()) throw ParseError(at("edges"), "expected an array of [from, label, to]");
    for (std::size_t i = 0; i < f->size(); ++i) {
      const std::string p = at("edges") + "/" + std::to_string(i);
      const auto triple = strings_of((*f)[i], p);
      if (triple.size() != 3) throw ParseError(p, "expected [from, label, to]");
      e.edges.push_back({triple[0], triple[1], triple[2]});
    }
  }
  if (auto f = field("dstar")) e.dstar = dstar_of(*f, at("dstar"));
  if (auto f = field("polynomial")) {
    e.polynomial = integers_of(*f, at("polynomial"));
    if (e.polynomial.size() < 2) throw ParseError(at("polynomial"), "expected at least two coefficients");
  }
  if (auto f = field("value")) {
    try {
      e.polynomial = parse_beta_number(text_of(*f, at("value"))).coefficients;
    } catch (const ParseError&) {
      throw;
    } catch (const Error& err) {
      throw ParseError(at("value"), err.what());
    }
  }
  if (e.kind == "beta") {
    const int given = (field("dstar") ? 1 : 0) + (field("polynomial") ? 1 : 0) + (field("value") ? 1 : 0);
    if (given != 1) throw ParseError(where, "beta needs exactly one of 'dstar', 'polynomial', 'value'");
  }
  if (auto f = field("alphabet_size")) e.alphabet_size = size_of(*f, at("alphabet_size"));
  if (auto f = field("horizon")) e.horizon = size_of(*f, at("horizon"));
  if (auto f = field("precision")) e.precision = size_of(*f, at("precision"));
  if (auto f = field("partial_quotients")) {
    e.partial_quotients = integers_of(*f, at("partial_quotients"));
    if (e.partial_quotients.empty()) throw ParseError(at("partial_quotients"), "expected at least one term");
  }
  if (auto f = field("window")) e.window = size_of(*f, at("window"));
  if (auto f = field("radius")) e.radius = size_of(*f, at("radius"));
  if (auto f = field("table")) {
    if (!f->is_array()) throw ParseError(at("table"), "expected an array of [word, token]");
    for (std::size_t i = 0; i < f->size(); ++i) {
      const std::string p = at("table") + "/" + std::to_string(i);
      const auto pair = strings_of((*f)[i], p);
      if (pair.size() != 2) throw ParseError(p, "expected [word, token]");
      e.table.push_back({pair[0], pair[1]});
    }
  }
  if (auto f = field("target")) e.target = strings_of(*f, at("target"));
  if (auto f = field("suffix")) e.suffix = text_of(*f, at("suffix"));
  if (auto f = field("markers")) {
    const auto m = strings_of(*f, at("markers"));
    if (m.size() != 3) throw ParseError(at("markers"), "expected three marker tokens");
    e.markers = {m[0], m[1], m[2]};
  }
  if (auto f = field("collapse")) e.collapse = strings_of(*f, at("collapse"));
  if (auto f = field("collapse_first")) e.collapse_first = strings_of(*f, at("collapse_first"));
  if (auto f = field("star")) e.star = text_of(*f, at("star"));
  return e;
}

json emit_node(const ShiftExpr& e) {
  const KindInfo& info = info_of(e.kind, "");
  json j = json::object();
  j["kind"] = e.kind;
  for (std::size_t i = 0; i < info.children.size(); ++i) j[info.children[i]] = emit_node(e.children.at(i));
  auto has = [&](const char* k) {
    return std::count(info.required.begin(), info.required.end(), k) ||
           std::count(info.optional.begin(), info.optional.end(), k);
  };
  if (has("alphabet")) j["alphabet"] = e.alphabet;
  if (has("forbidden")) j["forbidden"] = e.forbidden;
  if (has("states")) j["states"] = e.states;
  if (has("edges")) {
    json edges = json::array();
    for (const auto& t : e.edges) edges.push_back({t[0], t[1], t[2]});
    j["edges"] = edges;
  }
  if (e.kind == "beta") {
    if (e.dstar) j["dstar"] = {{"preperiod", e.dstar->preperiod}, {"period", e.dstar->period}, {"truncated", e.dstar->truncated}};
    else j["polynomial"] = e.polynomial;
    j["alphabet_size"] = e.alphabet_size;
    j["precision"] = e.precision;
  }
  if (has("horizon")) j["horizon"] = e.horizon;
  if (has("partial_quotients")) j["partial_quotients"] = e.partial_quotients;
  if (has("window")) j["window"] = e.window;
  if (has("radius")) j["radius"] = e.radius;
  if (has("table")) {
    json table = json::array();
    for (const auto& t : e.table) table.push_back({t[0], t[1]});
    j["table"] = table;
  }
  if (has("target")) j["target"] = e.target;
  if (has("suffix")) j["suffix"] = e.suffix;
  if (has("markers")) j["markers"] = e.markers;
  if (has("collapse")) j["collapse"] = e.collapse;
  if (has("collapse_first")) j["collapse_first"] = e.collapse_first;
  if (has("star")) j["star"] = e.star;
  return j;
}

std::vector<Symbol> symbols(const AlphabetPtr& alphabet, const std::string& text) {
  const Word w = Word::parse(alphabet, text);
  return {w.symbols().begin(), w.symbols().end()};
}

}  // namespace

const std::vector<std::string>& spec_kinds() {
  static const std::vector<std::string> kinds = [] {
    std::vector<std::string> out;
    for (const auto& k : kind_table()) out.push_back(k.kind);
    return out;
  }();
  return kinds;
}

ShiftExpr parse_spec(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& err) {
    throw ParseError("", std::string("invalid JSON: ") + err.what());
  }
  return parse_node(j, "");
}

ShiftExpr parse_spec_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("", "cannot open spec file '" + path + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse_spec(buffer.str());
}

std::string emit_spec(const ShiftExpr& expr) { return emit_node(expr).dump(2); }

SpacePtr build_space(const ShiftExpr& e) {
  auto child = [&](std::size_t i) { return build_space(e.children.at(i)); };
  const std::string& k = e.kind;
  if (k == "full") return full_shift(make_alphabet(e.alphabet));
  if (k == "sft") {
    SftSpec spec{make_alphabet(e.alphabet), {}};
    for (const auto& w : e.forbidden) spec.forbidden.push_back(symbols(spec.alphabet, w));
    return sft(std::move(spec));
  }
  if (k == "sofic") return sofic(make_presentation(make_alphabet(e.alphabet), e.states, e.edges));
  if (k == "even") return even_shift();
  if (k == "beta") {
    if (e.dstar) return beta_shift({*e.dstar, e.alphabet_size});
    const BetaDigits digits = beta_dstar_digits({e.polynomial}, e.horizon, e.precision);
    return beta_shift({digits.dstar, e.alphabet_size ? e.alphabet_size : digits.alphabet_size});
  }
  if (k == "sturmian") return sturmian({e.partial_quotients, e.horizon});
  if (k == "context-free") return context_free_shift();
  if (k == "product") return product(child(0), child(1));
  if (k == "reverse") return reverse(child(0));
  if (k == "higher-block") return higher_block(child(0), e.window);
  if (k == "block-image") {
    auto domain = child(0);
    BlockMap map;
    map.radius = e.radius;
    map.target_tokens = e.target;
    for (const auto& [w, t] : e.table) map.table.emplace_back(symbols(domain->alphabet_ptr(), w), t);
    return block_image(domain, map);
  }
  if (k == "disjoint-union") return disjoint_union(child(0), child(1), e.suffix);
  if (k == "selector") return selector_shift(child(0), e.markers);
  if (k == "marker-interleave") return marker_interleave(child(0));
  if (k == "star-collapse") return star_collapse(child(0), {e.collapse, e.collapse_first, e.star});
  if (k == "sturmian-modulated") return sturmian_modulated(child(0), {e.partial_quotients, e.horizon}, e.star);
  throw ParseError("/kind", "unknown kind '" + k + "'");
}

}  // namespace symdyn
