#include "symdyn/checks.hpp"
#include "symdyn/classify.hpp"
#include "symdyn/entropy.hpp"
#include "symdyn/error.hpp"
#include "symdyn/report.hpp"
#include "symdyn/transforms.hpp"

#include <chrono>
#include <optional>
#include <sstream>

namespace symdyn {

std::string verdict_name(Verdict v) {
  switch (v) {
    case Verdict::pass: return "PASS";
    case Verdict::fail: return "FAIL";
    case Verdict::error: return "ERROR";
  }
  return "?";
}

SoficPresentation random_presentation(std::mt19937_64& rng, std::size_t states, std::size_t letters, double density) {
  if (states == 0 || letters == 0) throw ContractError("random presentation needs states and letters");
  std::bernoulli_distribution coin(density);
  SoficPresentation p;
  p.alphabet = digit_alphabet(letters);
  for (std::size_t q = 0; q < states; ++q) p.states.push_back("q" + std::to_string(q));
  while (true) {
    p.edges.clear();
    for (std::size_t from = 0; from < states; ++from)
      for (std::size_t a = 0; a < letters; ++a)
        for (std::size_t to = 0; to < states; ++to)
          if (coin(rng)) p.edges.push_back({from, static_cast<Symbol>(a), to});
    if (p.essential()) return p;
  }
}

namespace {

template <typename T>
std::string seq(const std::vector<T>& v) {
  std::ostringstream s;
  s << "(";
  for (std::size_t i = 0; i < v.size(); ++i) s << (i ? "," : "") << v[i];
  s << ")";
  return s.str();
}

CheckResult result(bool ok, std::string parameters, std::string observed, std::string required) {
  CheckResult r;
  r.parameters = std::move(parameters);
  r.observed = std::move(observed);
  r.required = std::move(required);
  r.verdict = ok ? Verdict::pass : Verdict::fail;
  return r;
}

SoficClassifier exact_classifier(const SpacePtr& space) {
  auto p = sofic_presentation(*space);
  if (!p) throw ConstructionError("no sofic presentation for " + space->describe());
  return SoficClassifier(*p);
}

// 1
CheckResult even_sequences(std::uint64_t) {
  RunConfig config;
  config.max_n = 5;
  const CountTable t = count_table(even_shift(), config);
  std::vector<std::uint64_t> f, p, e;
  bool exact = true;
  for (const auto& r : t.rows) {
    f.push_back(*r.count_f);
    p.push_back(*r.count_p);
    e.push_back(*r.count_e);
    exact = exact && r.exact_f && r.exact_p && r.exact_e && r.k_used == -1;
  }
  const std::vector<std::uint64_t> want_fp{2, 3, 3, 3, 3}, want_e{2, 5, 6, 6, 6};
  return result(f == want_fp && p == want_fp && e == want_e && exact, "even shift, n=1..5, sofic path",
                "F=" + seq(f) + " P=" + seq(p) + " E=" + seq(e) + (exact ? " exact" : " inexact"),
                "F=P=(2,3,3,3,3) E=(2,5,6,6,6) exact");
}

// 2
CheckResult full_shift_counts(std::uint64_t) {
  RunConfig config;
  config.max_n = 6;
  const CountTable t = count_table(full_shift(digit_alphabet(2)), config);
  bool ones = true;
  for (const auto& r : t.rows) ones = ones && *r.count_f == 1 && *r.count_p == 1 && *r.count_e == 1 && r.exact_e;
  const auto h_e = estimate(t, Quantity::h_e);
  const bool bound = h_e.certified_upper_bound && *h_e.certified_upper_bound == 0.0;
  std::ostringstream obs;
  obs << (ones ? "F=P=E=1 at every n" : "some count differs from 1") << ", h_E bound "
      << (h_e.certified_upper_bound ? std::to_string(*h_e.certified_upper_bound) : "none");
  return result(ones && bound, "full shift {0,1}, n=1..6", obs.str(), "F=P=E=1, h_E certified bound 0");
}

// 3
CheckResult submultiplicativity(std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::vector<std::pair<std::string, SoficPresentation>> cases{{"even", even_presentation()}};
  for (int i = 0; i < 2; ++i) cases.emplace_back("random#" + std::to_string(i + 1), random_presentation(rng));
  std::ostringstream obs;
  bool ok = true;
  for (auto& [name, p] : cases) {
    SoficClassifier c(p);
    std::vector<std::uint64_t> e(9);
    for (std::size_t n = 1; n <= 8; ++n) e[n] = c.count(n, Mode::extender);
    std::size_t violations = 0;
    for (std::size_t n = 1; n < 8; ++n)
      for (std::size_t m = 1; n + m <= 8; ++m)
        if (e[n + m] > e[n] * e[m]) ++violations;
    ok = ok && violations == 0;
    obs << name << " E=" << seq(std::vector<std::uint64_t>(e.begin() + 1, e.end())) << " violations=" << violations
        << "; ";
  }
  return result(ok, "even + 2 random 4-state presentations, seed=" + std::to_string(seed) + ", n+m<=8",
                obs.str(), "E(n+m) <= E(n) E(m) for all n,m >= 1");
}

// 4
CheckResult product_extender(std::uint64_t) {
  auto even = even_shift();
  auto pair = product(even, even);
  SoficClassifier exact(even_presentation());
  std::vector<std::string> obs;
  bool ok = true;
  for (std::size_t n = 1; n <= 4; ++n) {
    const auto s = k_sweep(pair, n, Mode::extender);
    const auto e = exact.count(n, Mode::extender);
    ok = ok && s.count == e * e;
    obs.push_back(std::to_string(s.count) + "@k=" + std::to_string(s.k_used) + " vs " + std::to_string(e) + "^2");
  }
  return result(ok, "even x even, n=1..4, k_sweep on the product vs exact factors", seq(obs),
                "E_{XxX}(n) = E_X(n)^2");
}

// 5
CheckResult higher_block_sandwich(std::uint64_t) {
  auto even = even_shift();
  auto z = higher_block(even, 3);
  SoficClassifier x_exact(even_presentation());
  SoficClassifier z_exact = exact_classifier(z);
  CountTable tx, tz;
  for (std::size_t n = 5; n <= 8; ++n) {
    CountRow rx, rz;
    rx.n = rz.n = n;
    rx.count_e = x_exact.count(n, Mode::extender);
    rz.count_e = z_exact.count(n, Mode::extender);
    tx.rows.push_back(rx);
    tz.rows.push_back(rz);
  }
  const auto rows = gap_report(tx, tz, {GapKind::higher_block_sandwich, 2, 1, nullptr});
  std::vector<std::string> obs;
  bool ok = true;
  for (const auto& r : rows) {
    ok = ok && r.pass && r.applicable;
    obs.push_back(r.observed);
  }
  return result(ok, "even shift, window 3 (r=1), n=5..8, exact", seq(obs), "E_X <= E_Z <= 16 E_X");
}

// Counts of X (mode a) and its reversal (mode b), exact when both have presentations,
// otherwise at the k of X's sweep.
std::string reversal_pair(const SpacePtr& x, std::size_t n, Mode a, Mode b, bool& ok) {
  const SpacePtr y = reverse(x);
  auto px = sofic_presentation(*x);
  auto py = sofic_presentation(*y);
  std::uint64_t cx = 0, cy = 0;
  std::string how;
  if (px && py) {
    cx = SoficClassifier(*px).count(n, a);
    cy = SoficClassifier(*py).count(n, b);
    how = "exact";
  } else {
    const auto s = k_sweep(x, n, a);
    cx = s.count;
    cy = classify_bounded(y, n, s.k_used, b).count;
    how = "k=" + std::to_string(s.k_used);
  }
  ok = ok && cx == cy;
  return std::to_string(cx) + "/" + std::to_string(cy) + "@" + how;
}

// 6
CheckResult reversal_duality(std::uint64_t) {
  std::vector<std::pair<std::string, SpacePtr>> spaces{
      {"even", even_shift()}, {"golden-sft", golden_mean_sft()}, {"context-free", context_free_shift()}};
  std::ostringstream obs;
  bool ok = true;
  for (const auto& [name, x] : spaces) {
    obs << name << ":";
    for (std::size_t n = 1; n <= 6; ++n)
      obs << " F/P^=" << reversal_pair(x, n, Mode::follower, Mode::predecessor, ok)
          << " E/E^=" << reversal_pair(x, n, Mode::extender, Mode::extender, ok);
    obs << "; ";
  }
  return result(ok, "even, golden SFT, context-free; n=1..6", obs.str(), "F_X = P_rev(X), E_X = E_rev(X)");
}

// 7
CheckResult beta_facts(std::uint64_t) {
  auto beta = golden_beta_shift();
  SoficClassifier c = exact_classifier(beta);
  const DigitWord dstar{{}, {1, 0}, false};
  std::vector<std::uint64_t> f, p, sub;
  bool ok = true;
  for (std::size_t n = 1; n <= 8; ++n) {
    f.push_back(c.count(n, Mode::follower));
    p.push_back(c.count(n, Mode::predecessor));
    sub.push_back(subword_count(dstar, n));
    ok = ok && f.back() <= n + 1 && p.back() == sub.back() && sub.back() == 2;
  }
  return result(ok, "golden beta-shift d*=(10)^inf, n=1..8, exact",
                "F=" + seq(f) + " P=" + seq(p) + " subwords=" + seq(sub), "F(n) <= n+1, P(n) = subword_count = 2");
}

// 8
CheckResult context_free_bounds(std::uint64_t) {
  auto cf = context_free_shift();
  ContextEngine engine(cf);
  std::vector<std::string> obs;
  bool ok = true;
  for (std::size_t n = 2; n <= 6; ++n) {
    const auto f = k_sweep(engine, n, Mode::follower);
    const auto e = k_sweep(engine, n, Mode::extender);
    ok = ok && f.count < 3 * n * n && e.count < 9 * n * n * n * n;
    obs.push_back("F=" + std::to_string(f.count) + "@k=" + std::to_string(f.k_used) + " E=" + std::to_string(e.count) +
                  "@k=" + std::to_string(e.k_used));
  }
  return result(ok, "context-free shift, n=2..6, stabilized sweeps", seq(obs), "F(n) < 3n^2, E(n) < 9n^4");
}

// 9
CheckResult factor_blowup(std::uint64_t) {
  auto y = star_collapse(marker_interleave(context_free_shift()), {{"1", "2", "3"}, {}, "*"});
  ContextEngine engine(y);
  SweepOptions options;
  options.k_min = 12;
  options.k_max = 16;
  const auto f4 = k_sweep(engine, 4, Mode::follower, options);
  const auto f8 = k_sweep(engine, 8, Mode::follower, options);
  return result(f4.count >= 2 && f8.count >= 4, "Y = star-collapse of the marker interleave of the context-free shift, k=12..16",
                "F(4)=" + std::to_string(f4.count) + "@k=" + std::to_string(f4.k_used) + " F(8)=" +
                    std::to_string(f8.count) + "@k=" + std::to_string(f8.k_used),
                "F(4) >= 2, F(8) >= 4");
}

std::uint64_t follower_count(const SpacePtr& space, std::size_t n, std::string& how) {
  if (auto p = sofic_presentation(*space)) {
    how = "exact";
    return SoficClassifier(*p).count(n, Mode::follower);
  }
  SweepOptions options;
  options.k_max = 12;
  const auto s = k_sweep(space, n, Mode::follower, options);
  how = "k=" + std::to_string(s.k_used);
  return s.count;
}

// 10
CheckResult construction_chain(std::uint64_t) {
  auto x1 = reverse(golden_beta_shift());
  auto x2 = disjoint_union(x1, x1);
  auto x5 = star_collapse(higher_block(selector_shift(x2), 2), {{}, {"a", "b"}, "*"});
  std::vector<std::string> doubling, square;
  bool ok = true;
  std::string how1, how2;
  for (std::size_t n = 1; n <= 5; ++n) {
    const auto f1 = follower_count(x1, n, how1);
    const auto f2 = follower_count(x2, n, how2);
    ok = ok && f2 == 2 * f1;
    doubling.push_back(std::to_string(f2) + "=2*" + std::to_string(f1) + "@" + how2);
  }
  for (std::size_t n = 1; n <= 2; ++n) {
    const auto f1 = follower_count(x1, n, how1);
    const auto f5 = follower_count(x5, 2 * n, how2);
    ok = ok && f5 >= f1 * f1;
    square.push_back(std::to_string(f5) + ">=" + std::to_string(f1) + "^2@" + how2);
  }
  return result(ok, "X1 = reverse(golden beta), X2 = X1 u X1', X5 = star-collapse of the selector chain",
                "doubling " + seq(doubling) + " square " + seq(square),
                "F_X2(n) = 2 F_X1(n) for n=1..5, F_X5(2n) >= F_X1(n)^2 for n=1,2");
}

// 11
CheckResult realization_shift(std::uint64_t) {
  auto base = golden_beta_shift();
  SturmianSpec rotation{std::vector<std::int64_t>(40, 1), 64};
  auto z = sturmian_modulated(base, rotation);
  const SturmianRotation eta = sturmian_rotation(rotation);
  ContextEngine z_engine(z), base_engine(base);
  std::vector<std::string> obs;
  bool ok = true;
  for (std::size_t n = 2; n <= 8; ++n) {
    const auto lo = static_cast<std::size_t>(eta.floor_multiple(n));
    const auto hi = static_cast<std::size_t>(eta.ceil_multiple(n));
    const std::uint64_t lz = z->words(n).size();
    const std::uint64_t lower = (n + 1) * base->words(lo).size(), upper = (n + 1) * base->words(hi).size();
    const auto ez = k_sweep(z_engine, n, Mode::extender);
    const auto eb = base_engine.classify(lo, ez.k_used, Mode::extender).count;
    ok = ok && lower <= lz && lz <= upper && ez.count >= eb;
    obs.push_back(std::to_string(lower) + "<=" + std::to_string(lz) + "<=" + std::to_string(upper) + " E " +
                  std::to_string(ez.count) + ">=" + std::to_string(eb) + "@k=" + std::to_string(ez.k_used));
  }
  return result(ok, "Z = Sturmian modulation of golden beta, eta = [0;1,1,...] (40 terms), n=2..8", seq(obs),
                "(n+1)L_floor(n eta) <= L_n(Z) <= (n+1)L_ceil(n eta), E_Z(n) >= E_base(floor(n eta))");
}

// 12
CheckResult oracle_equivalence(std::uint64_t) {
  std::vector<std::pair<std::string, SpacePtr>> spaces{{"golden-sft", golden_mean_sft()}, {"even", even_shift()}};
  std::ostringstream obs;
  bool ok = true;
  for (const auto& [name, x] : spaces) {
    SoficClassifier exact = exact_classifier(x);
    ContextEngine engine(x);
    std::size_t mismatches = 0;
    for (Mode m : {Mode::follower, Mode::predecessor, Mode::extender})
      for (std::size_t n = 1; n <= 6; ++n)
        if (k_sweep(engine, n, m).count != exact.count(n, m)) ++mismatches;
    ok = ok && mismatches == 0;
    obs << name << " mismatches=" << mismatches << "; ";
  }
  return result(ok, "golden SFT and even, all modes, n=1..6", obs.str(), "k_sweep = sofic exact");
}

// Left constraints by direct comparison of follower sets over continuations of length <= depth.
std::uint64_t brute_left_constraints(const ShiftSpace& space, std::size_t n, std::size_t depth) {
  std::vector<std::vector<Symbol>> tails{{}};
  for (std::size_t j = 0, from = 0; j < depth; ++j) {
    const std::size_t to = tails.size();
    for (std::size_t i = from; i < to; ++i)
      for (std::size_t a = 0; a < space.alphabet().size(); ++a) {
        auto t = tails[i];
        t.push_back(static_cast<Symbol>(a));
        tails.push_back(std::move(t));
      }
    from = to;
  }
  auto member = [&](std::span<const Symbol> w, const std::vector<Symbol>& u) {
    std::vector<Symbol> x(w.begin(), w.end());
    x.insert(x.end(), u.begin(), u.end());
    return space.contains(x);
  };
  std::uint64_t count = 0;
  const WordSet& words = space.words(n);
  for (std::size_t i = 0; i < words.size(); ++i) {
    const auto w = words[i];
    for (const auto& u : tails)
      if (member(w, u) != member(w.subspan(1), u)) {
        ++count;
        break;
      }
  }
  return count;
}

// 13
CheckResult left_constraints(std::uint64_t) {
  auto full = full_shift(digit_alphabet(2));
  auto beta = golden_beta_shift();
  SoficClassifier full_exact = exact_classifier(full), beta_exact = exact_classifier(beta);
  std::vector<std::uint64_t> fc, bc, bb;
  bool ok = true;
  for (std::size_t n = 2; n <= 8; ++n) {
    fc.push_back(full_exact.left_constraints(n));
    bc.push_back(beta_exact.left_constraints(n));
    bb.push_back(brute_left_constraints(*beta, n, 8));
    ok = ok && fc.back() == 0 && left_constraint_count(full, n, n + 2) == 0 && bc.back() == bb.back();
  }
  return result(ok, "full shift and golden beta-shift, n=2..8",
                "full=" + seq(fc) + " beta=" + seq(bc) + " brute force=" + seq(bb),
                "full shift 0; beta counts equal the brute force");
}

}  // namespace

const std::vector<Check>& acceptance_checks() {
  static const std::vector<Check> checks = {
      {1, "even-sequences", "paper-examples", 5, even_sequences},
      {2, "full-shift", "paper-examples", 1, full_shift_counts},
      {3, "submultiplicativity", "inequalities", 30, submultiplicativity},
      {4, "product-extender", "constructions", 60, product_extender},
      {5, "higher-block-sandwich", "inequalities", 60, higher_block_sandwich},
      {6, "reversal-duality", "inequalities", 60, reversal_duality},
      {7, "beta-facts", "paper-examples", 30, beta_facts},
      {8, "context-free-bounds", "inequalities", 120, context_free_bounds},
      {9, "factor-blowup", "constructions", 600, factor_blowup},
      {10, "construction-chain", "constructions", 600, construction_chain},
      {11, "realization-shift", "constructions", 300, realization_shift},
      {12, "oracle-equivalence", "inequalities", 60, oracle_equivalence},
      {13, "left-constraints", "paper-examples", 30, left_constraints},
  };
  return checks;
}

namespace {

const char* anchor_of(int criterion) {
  switch (criterion) {
    case 1: return "even shift example: follower and extender set sequences";
    case 2: return "full shift example: a single follower, predecessor and extender set";
    case 3: return "extender set counts are submultiplicative";
    case 4: return "extender entropy is additive under products";
    case 5: return "higher-block presentation sandwich for extender counts";
    case 6: return "reversal swaps follower and predecessor sets";
    case 7: return "beta-shift follower bound and predecessor subword count";
    case 8: return "context-free shift follower and extender bounds";
    case 9: return "factor maps can increase follower counts (marker interleave)";
    case 10: return "disjoint union doubling and the selector chain squaring";
    case 11: return "realization shift word and extender counts";
    case 12: return "bounded contexts agree with the exact sofic classification";
    case 13: return "left constraint counts";
  }
  return "";
}

}  // namespace

CheckResult run_check(const Check& check, std::uint64_t seed) {
  const auto start = std::chrono::steady_clock::now();
  CheckResult r;
  try {
    r = check.run(seed);
  } catch (const Error& err) {
    r.verdict = Verdict::error;
    r.observed = err.what();
  }
  r.id = check.id;
  r.anchor = anchor_of(check.criterion);
  r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  if (r.verdict == Verdict::pass && r.seconds > check.time_limit) {
    r.verdict = Verdict::fail;
    r.observed += " [time limit exceeded]";
  }
  return r;
}

std::vector<CheckResult> run_suite(const std::string& suite, std::uint64_t seed) {
  if (suite != "all" && suite != "paper-examples" && suite != "inequalities" && suite != "constructions")
    throw ContractError("unknown verify suite '" + suite + "'");
  std::vector<CheckResult> out;
  for (const auto& c : acceptance_checks())
    if (suite == "all" || c.suite == suite) out.push_back(run_check(c, seed));
  return out;
}

}  // namespace symdyn
