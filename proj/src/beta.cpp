#include "symdyn/error.hpp"
#include "symdyn/spaces.hpp"

#include <boost/multiprecision/cpp_int.hpp>

#include <algorithm>
#include <cctype>

namespace symdyn {

namespace {

using boost::multiprecision::cpp_int;
using boost::multiprecision::cpp_rational;
using Poly = std::vector<cpp_rational>;  // coefficients from the constant term up

void trim(Poly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

Poly sub(Poly x, const Poly& y) {
  if (x.size() < y.size()) x.resize(y.size());
  for (std::size_t i = 0; i < y.size(); ++i) x[i] -= y[i];
  trim(x);
  return x;
}

/// Remainder of x modulo y (y nonzero).
Poly mod(Poly x, const Poly& y) {
  trim(x);
  while (x.size() >= y.size()) {
    const cpp_rational f = x.back() / y.back();
    const std::size_t shift = x.size() - y.size();
    for (std::size_t i = 0; i < y.size(); ++i) x[shift + i] -= f * y[i];
    x.pop_back();
    trim(x);
  }
  return x;
}

Poly quotient(Poly x, const Poly& y) {
  trim(x);
  if (x.size() < y.size()) return {};
  Poly q(x.size() - y.size() + 1);
  while (x.size() >= y.size()) {
    const cpp_rational f = x.back() / y.back();
    const std::size_t shift = x.size() - y.size();
    q[shift] = f;
    for (std::size_t i = 0; i < y.size(); ++i) x[shift + i] -= f * y[i];
    x.pop_back();
    trim(x);
  }
  trim(q);
  return q;
}

Poly derivative(const Poly& p) {
  Poly d;
  for (std::size_t i = 1; i < p.size(); ++i) d.push_back(p[i] * static_cast<long>(i));
  trim(d);
  return d;
}

Poly poly_gcd(Poly x, Poly y) {
  trim(x);
  trim(y);
  while (!y.empty()) {
    Poly r = mod(x, y);
    x = std::move(y);
    y = std::move(r);
  }
  if (!x.empty()) {
    const cpp_rational lead = x.back();
    for (auto& c : x) c /= lead;
  }
  return x;
}

cpp_rational eval(const Poly& p, const cpp_rational& x) {
  cpp_rational v = 0;
  for (std::size_t i = p.size(); i-- > 0;) v = v * x + p[i];
  return v;
}

int sign(const cpp_rational& v) { return v > 0 ? 1 : (v < 0 ? -1 : 0); }

cpp_int floor_of(const cpp_rational& v) {
  cpp_int n = boost::multiprecision::numerator(v), d = boost::multiprecision::denominator(v);
  cpp_int q = n / d;
  if (n < 0 && q * d != n) q -= 1;
  return q;
}

struct Sturm {
  std::vector<Poly> chain;

  explicit Sturm(const Poly& p) {
    chain.push_back(p);
    chain.push_back(derivative(p));
    while (!chain.back().empty()) {
      Poly r = mod(chain[chain.size() - 2], chain.back());
      for (auto& c : r) c = -c;
      if (r.empty()) break;
      chain.push_back(std::move(r));
    }
    if (chain.back().empty()) chain.pop_back();
  }

  int variations(const cpp_rational& x) const {
    int count = 0, last = 0;
    for (const auto& q : chain) {
      const int s = sign(eval(q, x));
      if (s == 0) continue;
      if (last != 0 && s != last) ++count;
      last = s;
    }
    return count;
  }

  /// Distinct roots in (a, b].
  int roots(const cpp_rational& a, const cpp_rational& b) const { return variations(a) - variations(b); }
};

/// beta as the largest real root of a squarefree polynomial, held as an isolating interval
/// (lo, hi] that can be narrowed on demand.
class RootInterval {
 public:
  explicit RootInterval(const Poly& p) : p_(p), sturm_(p) {
    cpp_rational bound = 1;
    for (std::size_t i = 0; i + 1 < p.size(); ++i) {
      cpp_rational r = p[i] / p.back();
      if (r < 0) r = -r;
      if (r + 1 > bound) bound = r + 1;
    }
    lo_ = 1;
    hi_ = bound;
    if (sturm_.roots(lo_, hi_) == 0) throw DomainError("beta must exceed 1");
    while (hi_ - lo_ > cpp_rational(1, 4) || sturm_.roots(lo_, hi_) > 1) narrow();
  }

  void narrow() {
    const cpp_rational mid = (lo_ + hi_) / 2;
    if (sturm_.roots(mid, hi_) > 0)
      lo_ = mid;
    else
      hi_ = mid;
  }

  const cpp_rational& lo() const noexcept { return lo_; }
  const cpp_rational& hi() const noexcept { return hi_; }

  /// True when beta is a root of q. The interval isolates beta among the roots of p, so
  /// it suffices that gcd(p, q) has a root there.
  bool root_of(const Poly& q) const {
    Poly g = poly_gcd(p_, q);
    if (g.size() < 2) return false;
    return Sturm(g).roots(lo_, hi_) > 0;
  }

  /// Enclosure of q(beta) from the current interval (beta > 0).
  std::pair<cpp_rational, cpp_rational> enclose(const Poly& q) const {
    Poly pos(q.size()), neg(q.size());
    for (std::size_t i = 0; i < q.size(); ++i) {
      if (q[i] > 0)
        pos[i] = q[i];
      else
        neg[i] = -q[i];
    }
    return {eval(pos, lo_) - eval(neg, hi_), eval(pos, hi_) - eval(neg, lo_)};
  }

 private:
  Poly p_;
  Sturm sturm_;
  cpp_rational lo_, hi_;
};

}  // namespace

BetaNumber parse_beta_number(const std::string& text) {
  std::string t;
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c))) t += c;
  auto digits = [&](const std::string& s) {
    if (s.empty() || !std::all_of(s.begin(), s.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); }))
      throw ContractError("malformed beta '" + text + "'");
    if (s.size() > 17) throw ContractError("beta '" + text + "' has too many digits");
    return std::stoll(s);
  };
  std::int64_t num = 0, den = 1;
  if (auto slash = t.find('/'); slash != std::string::npos) {
    num = digits(t.substr(0, slash));
    den = digits(t.substr(slash + 1));
    if (den == 0) throw ContractError("beta '" + text + "' has zero denominator");
  } else if (auto dot = t.find('.'); dot != std::string::npos) {
    const std::string frac = t.substr(dot + 1);
    num = digits(t.substr(0, dot) + frac);
    for (std::size_t i = 0; i < frac.size(); ++i) den *= 10;
  } else {
    num = digits(t);
  }
  return {{-num, den}};
}

BetaDigits beta_dstar_digits(const BetaNumber& beta, std::size_t horizon, std::size_t precision_bits) {
  Poly p;
  for (auto c : beta.coefficients) p.emplace_back(c);
  trim(p);
  if (p.size() < 2) throw DomainError("beta polynomial must have positive degree");
  // Work with the squarefree part so Sturm counts and exactness tests stay clean.
  if (auto g = poly_gcd(p, derivative(p)); g.size() > 1) p = quotient(p, g);

  RootInterval root(p);
  BetaDigits out;

  // Integer beta: the greedy recurrence stops at once, so use (beta-1)^infinity directly.
  const cpp_int candidate = floor_of(root.hi());
  if (candidate >= 2 && eval(p, cpp_rational(candidate)) == 0 && cpp_rational(candidate) > root.lo()) {
    const int b = static_cast<int>(candidate);
    out.dstar.period = {b - 1};
    out.finite_expansion = true;
    out.alphabet_size = static_cast<std::size_t>(b);
    return out;
  }

  const cpp_rational tolerance = cpp_rational(1, cpp_int(1) << precision_bits);
  Poly x{cpp_rational(1)};
  std::vector<int> digits;
  bool finite = false;
  for (std::size_t i = 0; i < horizon && !finite; ++i) {
    Poly shifted(x.size() + 1);
    for (std::size_t j = 0; j < x.size(); ++j) shifted[j + 1] = x[j];
    Poly r = mod(shifted, p);

    cpp_int digit;
    for (;;) {
      auto [a, b] = root.enclose(r);
      const cpp_int fa = floor_of(a), fb = floor_of(b);
      if (fa == fb && cpp_rational(fa) != a) {
        digit = fa;
        break;
      }
      // The enclosure touches an integer k: accept it when r(beta) equals k exactly.
      const cpp_int k = fa == fb ? fa : fb;
      if (root.root_of(sub(r, Poly{cpp_rational(k)}))) {
        digit = k;
        finite = true;
        break;
      }
      if (b - a < tolerance)
        throw PrecisionError("digit " + std::to_string(i + 1) + " of d_beta(1) is within 2^-" +
                             std::to_string(precision_bits) + " of an integer");
      root.narrow();
    }
    digits.push_back(static_cast<int>(digit));
    x = sub(r, Poly{cpp_rational(digit)});
    if (x.empty()) finite = true;
  }

  while (floor_of(root.lo()) != floor_of(root.hi())) root.narrow();
  out.alphabet_size = static_cast<std::size_t>(floor_of(root.lo())) + 1;
  if (finite) {
    digits.back() -= 1;
    out.dstar.period = digits;
    out.finite_expansion = true;
  } else {
    out.dstar.preperiod = digits;
    out.dstar.truncated = true;
  }
  return out;
}

namespace {

void validate(const BetaSpec& spec, std::size_t alphabet_size) {
  const auto& d = spec.dstar;
  if (!d.periodic() && !d.truncated) throw ConstructionError("d* must be eventually periodic or a truncated prefix");
  if (d.preperiod.empty() && d.period.empty()) throw ConstructionError("d* has no digits");
  auto check_digit = [&](int x) {
    if (x < 0 || static_cast<std::size_t>(x) >= alphabet_size)
      throw ConstructionError("d* digit " + std::to_string(x) + " outside the alphabet");
  };
  for (int x : d.preperiod) check_digit(x);
  for (int x : d.period) check_digit(x);
  if (d.at(0) == 0) throw ConstructionError("d* must start with a nonzero digit");
  // Parry's condition: no shift of d* exceeds d*. For eventually periodic words, comparing
  // preperiod + period digits decides it; truncated words are checked on what is known.
  const std::size_t span = d.periodic() ? d.preperiod.size() + d.period.size() : d.preperiod.size();
  for (std::size_t i = 1; i < span; ++i) {
    const std::size_t len = d.periodic() ? span : span - i;
    for (std::size_t j = 0; j < len; ++j) {
      const int x = d.at(i + j), y = d.at(j);
      if (x < y) break;
      if (x > y) throw ConstructionError("d* violates Parry's condition at shift " + std::to_string(i));
    }
  }
}

std::size_t default_alphabet_size(const DigitWord& d) {
  int top = 0;
  for (int x : d.preperiod) top = std::max(top, x);
  for (int x : d.period) top = std::max(top, x);
  return static_cast<std::size_t>(top) + 1;
}

/// Forward states: the set of suffix starts still tied with d*, keyed by how many digits
/// they have matched (folded into one period once past the preperiod).
class BetaForward final : public Automaton {
 public:
  BetaForward(const DigitWord& d, std::size_t alphabet_size) : Automaton(alphabet_size), d_(d) {}

 protected:
  void compute_start(std::vector<State>& out) override { out.push_back(intern({})); }

  void compute_next(State s, Symbol a, std::vector<State>& out) override {
    StateKey matched = key(s);
    matched.push_back(0);  // the suffix starting at the new letter
    StateKey next;
    for (auto j : matched) {
      const int digit = d_.at(static_cast<std::size_t>(j));
      if (a > digit) return;
      if (a < digit) continue;
      next.push_back(fold(j + 1));
    }
    std::sort(next.begin(), next.end());
    next.erase(std::unique(next.begin(), next.end()), next.end());
    out.push_back(intern(next));
  }

 private:
  std::int64_t fold(std::int64_t j) const {
    const auto pre = static_cast<std::int64_t>(d_.preperiod.size());
    const auto per = static_cast<std::int64_t>(d_.period.size());
    if (per > 0 && j >= pre + per) return j - per;
    return j;
  }

  DigitWord d_;
};

/// Backward states: for each offset j of d*, the sign of (word read so far) compared with
/// the digits of d* starting at j. Prepending x to w compares x first.
class BetaBackward final : public Automaton {
 public:
  BetaBackward(const DigitWord& d, std::size_t alphabet_size)
      : Automaton(alphabet_size), d_(d), offsets_(d.preperiod.size() + d.period.size()) {}

 protected:
  void compute_start(std::vector<State>& out) override { out.push_back(intern(StateKey(offsets_, 0))); }

  void compute_next(State s, Symbol a, std::vector<State>& out) override {
    const StateKey& cmp = key(s);
    StateKey next(offsets_);
    for (std::size_t j = 0; j < offsets_; ++j) {
      const int digit = d_.at(j);
      next[j] = a != digit ? (a > digit ? 1 : -1) : cmp[fold(j + 1)];
    }
    if (next[0] > 0) return;
    out.push_back(intern(next));
  }

 private:
  std::size_t fold(std::size_t j) const { return j >= offsets_ ? j - d_.period.size() : j; }

  DigitWord d_;
  std::size_t offsets_;
};

}  // namespace

BetaShift::BetaShift(BetaSpec spec)
    : ShiftSpace(digit_alphabet(spec.alphabet_size ? spec.alphabet_size : default_alphabet_size(spec.dstar))),
      spec_(std::move(spec)) {
  spec_.alphabet_size = alphabet().size();
  validate(spec_, spec_.alphabet_size);
}

bool BetaShift::contains(std::span<const Symbol> w) const {
  const auto& d = spec_.dstar;
  if (w.size() > d.horizon())
    throw CertificationError("word of length " + std::to_string(w.size()) + " exceeds the d* horizon " +
                             std::to_string(d.horizon()));
  for (std::size_t i = 0; i < w.size(); ++i) {
    for (std::size_t j = 0; i + j < w.size(); ++j) {
      const int x = w[i + j], y = d.at(j);
      if (x < y) break;
      if (x > y) return false;
    }
  }
  return true;
}

std::unique_ptr<Automaton> BetaShift::automaton(Direction dir) const {
  if (dir == Direction::forward) return std::make_unique<BetaForward>(spec_.dstar, alphabet().size());
  if (spec_.dstar.periodic()) return std::make_unique<BetaBackward>(spec_.dstar, alphabet().size());
  return ShiftSpace::automaton(dir);
}

SpacePtr beta_shift(BetaSpec spec) { return std::make_shared<BetaShift>(std::move(spec)); }

SpacePtr golden_beta_shift() {
  BetaSpec spec;
  spec.dstar.period = {1, 0};
  return beta_shift(std::move(spec));
}

}  // namespace symdyn
