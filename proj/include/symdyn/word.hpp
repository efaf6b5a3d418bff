#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace symdyn {

using Symbol = std::uint16_t;

/// Ordered set of distinct printable tokens. Token i has canonical index i.
class Alphabet {
 public:
  explicit Alphabet(std::vector<std::string> tokens);

  std::size_t size() const noexcept { return tokens_.size(); }
  const std::string& token(Symbol s) const { return tokens_.at(s); }
  const std::vector<std::string>& tokens() const noexcept { return tokens_; }

  std::optional<Symbol> find(std::string_view token) const;
  /// Throws ContractError when the token is unknown.
  Symbol index(std::string_view token) const;

  /// True when every token is exactly one character, so words print unambiguously.
  bool single_char() const noexcept { return single_char_; }

  bool operator==(const Alphabet& other) const { return tokens_ == other.tokens_; }

 private:
  std::vector<std::string> tokens_;
  std::unordered_map<std::string, Symbol> lookup_;
  bool single_char_ = true;
};

using AlphabetPtr = std::shared_ptr<const Alphabet>;

AlphabetPtr make_alphabet(std::vector<std::string> tokens);

/// Tokens "0", "1", ..., "size-1".
AlphabetPtr digit_alphabet(std::size_t size);

/// Finite word over an alphabet. The empty word is allowed.
class Word {
 public:
  explicit Word(AlphabetPtr alphabet, std::vector<Symbol> symbols = {});

  /// Splits `text` into tokens by greedy longest match. Whitespace separates tokens.
  static Word parse(AlphabetPtr alphabet, std::string_view text);
  static Word from_tokens(AlphabetPtr alphabet, const std::vector<std::string>& tokens);

  const AlphabetPtr& alphabet() const noexcept { return alphabet_; }
  std::span<const Symbol> symbols() const noexcept { return symbols_; }
  std::size_t size() const noexcept { return symbols_.size(); }
  bool empty() const noexcept { return symbols_.empty(); }
  Symbol operator[](std::size_t i) const { return symbols_[i]; }

  Word concat(const Word& other) const;
  Word reversed() const;
  Word sub(std::size_t pos, std::size_t len) const;

  std::vector<std::string> tokens() const;
  std::string str() const;

  bool operator==(const Word& other) const;
  bool operator<(const Word& other) const { return symbols_ < other.symbols_; }

 private:
  AlphabetPtr alphabet_;
  std::vector<Symbol> symbols_;
};

/// Formats a symbol sequence with the alphabet's tokens (joined by spaces if any token
/// is longer than one character).
std::string format_word(const Alphabet& alphabet, std::span<const Symbol> symbols);

}  // namespace symdyn
