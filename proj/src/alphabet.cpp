#include "symdyn/error.hpp"
#include "symdyn/word.hpp"

#include <algorithm>
#include <cctype>
#include <limits>

namespace symdyn {

Alphabet::Alphabet(std::vector<std::string> tokens) : tokens_(std::move(tokens)) {
  if (tokens_.empty()) throw ContractError("alphabet must be nonempty");
  if (tokens_.size() > std::numeric_limits<Symbol>::max())
    throw ContractError("alphabet too large");
  for (std::size_t i = 0; i < tokens_.size(); ++i) {
    const auto& t = tokens_[i];
    if (t.empty()) throw ContractError("alphabet tokens must be nonempty");
    for (char c : t)
      if (std::isspace(static_cast<unsigned char>(c)))
        throw ContractError("alphabet token '" + t + "' contains whitespace");
    if (!lookup_.emplace(t, static_cast<Symbol>(i)).second)
      throw ContractError("duplicate alphabet token '" + t + "'");
    if (t.size() != 1) single_char_ = false;
  }
}

std::optional<Symbol> Alphabet::find(std::string_view token) const {
  auto it = lookup_.find(std::string(token));
  if (it == lookup_.end()) return std::nullopt;
  return it->second;
}

Symbol Alphabet::index(std::string_view token) const {
  if (auto s = find(token)) return *s;
  throw ContractError("unknown token '" + std::string(token) + "'");
}

AlphabetPtr make_alphabet(std::vector<std::string> tokens) {
  return std::make_shared<const Alphabet>(std::move(tokens));
}

AlphabetPtr digit_alphabet(std::size_t size) {
  std::vector<std::string> tokens;
  tokens.reserve(size);
  for (std::size_t i = 0; i < size; ++i) tokens.push_back(std::to_string(i));
  return make_alphabet(std::move(tokens));
}

Word::Word(AlphabetPtr alphabet, std::vector<Symbol> symbols)
    : alphabet_(std::move(alphabet)), symbols_(std::move(symbols)) {
  if (!alphabet_) throw ContractError("word needs an alphabet");
  for (Symbol s : symbols_)
    if (s >= alphabet_->size()) throw ContractError("symbol index out of range");
}

Word Word::parse(AlphabetPtr alphabet, std::string_view text) {
  std::vector<Symbol> out;
  std::size_t longest = 0;
  for (const auto& t : alphabet->tokens()) longest = std::max(longest, t.size());
  std::size_t i = 0;
  while (i < text.size()) {
    if (std::isspace(static_cast<unsigned char>(text[i]))) {
      ++i;
      continue;
    }
    bool matched = false;
    for (std::size_t len = std::min(longest, text.size() - i); len > 0; --len) {
      if (auto s = alphabet->find(text.substr(i, len))) {
        out.push_back(*s);
        i += len;
        matched = true;
        break;
      }
    }
    if (!matched)
      throw ContractError("cannot tokenize '" + std::string(text) + "' at offset " +
                          std::to_string(i));
  }
  return Word(std::move(alphabet), std::move(out));
}

Word Word::from_tokens(AlphabetPtr alphabet, const std::vector<std::string>& tokens) {
  std::vector<Symbol> out;
  out.reserve(tokens.size());
  for (const auto& t : tokens) out.push_back(alphabet->index(t));
  return Word(std::move(alphabet), std::move(out));
}

Word Word::concat(const Word& other) const {
  if (!(*alphabet_ == *other.alphabet_)) throw ContractError("concatenating words over different alphabets");
  std::vector<Symbol> out = symbols_;
  out.insert(out.end(), other.symbols_.begin(), other.symbols_.end());
  return Word(alphabet_, std::move(out));
}

Word Word::reversed() const {
  return Word(alphabet_, std::vector<Symbol>(symbols_.rbegin(), symbols_.rend()));
}

Word Word::sub(std::size_t pos, std::size_t len) const {
  if (pos > symbols_.size() || len > symbols_.size() - pos) throw ContractError("subword out of range");
  return Word(alphabet_, std::vector<Symbol>(symbols_.begin() + pos, symbols_.begin() + pos + len));
}

std::vector<std::string> Word::tokens() const {
  std::vector<std::string> out;
  out.reserve(symbols_.size());
  for (Symbol s : symbols_) out.push_back(alphabet_->token(s));
  return out;
}

std::string Word::str() const { return format_word(*alphabet_, symbols_); }

bool Word::operator==(const Word& other) const {
  return symbols_ == other.symbols_ && *alphabet_ == *other.alphabet_;
}

std::string format_word(const Alphabet& alphabet, std::span<const Symbol> symbols) {
  std::string out;
  const bool spaced = !alphabet.single_char();
  for (std::size_t i = 0; i < symbols.size(); ++i) {
    if (spaced && i) out += ' ';
    out += alphabet.token(symbols[i]);
  }
  return out;
}

}  // namespace symdyn
