#pragma once

#include "symdyn/language.hpp"
#include "symdyn/shift_space.hpp"
#include "symdyn/sofic.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace symdyn {

// ---------------------------------------------------------------------------------------
// Shifts of finite type

struct SftSpec {
  AlphabetPtr alphabet;
  std::vector<std::vector<Symbol>> forbidden;
};

/// Forbidden-word shift. Construction prunes redundant forbidden words, builds the
/// de Bruijn graph on allowed m-words (m = longest forbidden length - 1) and trims it to
/// its essential part.
class Sft final : public ShiftSpace {
 public:
  explicit Sft(SftSpec spec);

  bool contains(std::span<const Symbol> w) const override;
  std::optional<std::size_t> exact_context_bound() const override { return memory_; }
  std::unique_ptr<Automaton> automaton(Direction dir) const override;
  bool finite_automaton(Direction) const override { return true; }
  std::optional<SoficPresentation> explicit_presentation() const override { return graph_; }
  std::string describe() const override { return "sft(m=" + std::to_string(memory_) + ")"; }

  std::size_t memory() const noexcept { return memory_; }
  const std::vector<std::vector<Symbol>>& forbidden() const noexcept { return forbidden_; }

 private:
  bool locally_legal(std::span<const Symbol> w) const;
  std::uint64_t window_code(std::span<const Symbol> w) const;

  std::vector<std::vector<Symbol>> forbidden_;
  std::size_t memory_ = 0;
  std::vector<char> retained_;  // indexed by window_code of an m-word
  SoficPresentation graph_;
};

SpacePtr sft(SftSpec spec);

/// Forbids "11" on {0,1}.
SpacePtr golden_mean_sft();

// ---------------------------------------------------------------------------------------
// beta-shifts

/// Quasi-greedy expansion d*_beta(1) and the alphabet size ceil(beta).
struct BetaSpec {
  DigitWord dstar;
  std::size_t alphabet_size = 0;  // 0: one more than the largest digit of d*
};

/// beta given as the largest real root of an integer polynomial (coefficients from the
/// constant term up). A rational p/q is the polynomial q*x - p.
struct BetaNumber {
  std::vector<std::int64_t> coefficients;
};

struct BetaDigits {
  DigitWord dstar;
  bool finite_expansion = false;  // d_beta(1) terminated and d* was made periodic
  std::size_t alphabet_size = 0;  // ceil(beta)
};

/// Greedy expansion of 1 in base beta with certified floors. Throws PrecisionError when a
/// floor cannot be decided within 2^-precision_bits.
BetaDigits beta_dstar_digits(const BetaNumber& beta, std::size_t horizon, std::size_t precision_bits = 256);

BetaNumber parse_beta_number(const std::string& text);

class BetaShift final : public ShiftSpace {
 public:
  explicit BetaShift(BetaSpec spec);

  bool contains(std::span<const Symbol> w) const override;
  std::unique_ptr<Automaton> automaton(Direction dir) const override;
  bool finite_automaton(Direction) const override { return spec_.dstar.periodic(); }
  std::string describe() const override { return "beta"; }

  const DigitWord& dstar() const noexcept { return spec_.dstar; }

 private:
  BetaSpec spec_;
};

SpacePtr beta_shift(BetaSpec spec);
/// d* = (10)^infinity.
SpacePtr golden_beta_shift();

// ---------------------------------------------------------------------------------------
// Sturmian shifts

/// Rotation number eta = [0; a1, a2, ...] given by a prefix of its continued fraction.
struct SturmianSpec {
  std::vector<std::int64_t> partial_quotients;
  std::size_t horizon = 64;  // longest word the rational stand-in must certify
};

/// Rational stand-in P/Q for eta: the mediant inside the cylinder of eta's known partial
/// quotients, chosen with the smallest Q exceeding the horizon. Every comparison between
/// {j*eta} for j <= horizon has the same outcome for P/Q as for any eta in the cylinder.
struct SturmianRotation {
  std::int64_t p = 0;
  std::int64_t q = 1;
  std::size_t horizon = 0;

  /// floor(n*eta) and ceil(n*eta) for n <= horizon.
  std::int64_t floor_multiple(std::size_t n) const;
  std::int64_t ceil_multiple(std::size_t n) const;
};

SturmianRotation sturmian_rotation(const SturmianSpec& spec);

class SturmianShift final : public ShiftSpace {
 public:
  explicit SturmianShift(SturmianSpec spec);

  bool contains(std::span<const Symbol> w) const override;
  std::unique_ptr<Automaton> automaton(Direction dir) const override;
  std::string describe() const override { return "sturmian"; }

  const SturmianRotation& rotation() const noexcept { return rotation_; }
  const SturmianSpec& spec() const noexcept { return spec_; }

 private:
  SturmianSpec spec_;
  SturmianRotation rotation_;
};

SpacePtr sturmian(SturmianSpec spec);

// ---------------------------------------------------------------------------------------
// Context-free shift on {a, b, c}

class ContextFreeShift final : public ShiftSpace {
 public:
  ContextFreeShift();

  bool contains(std::span<const Symbol> w) const override;
  std::unique_ptr<Automaton> automaton(Direction dir) const override;
  std::string describe() const override { return "context-free"; }
};

SpacePtr context_free_shift();

}  // namespace symdyn
