#pragma once

// Brute-force reference implementations, written from the definitions and sharing no code
// with the library's automata or classifiers. Words are strings of one-character tokens.

#include <cmath>
#include <cstdint>
#include <functional>
#include <set>
#include <string>
#include <vector>

namespace oracle {

using Member = std::function<bool(const std::string&)>;

inline std::vector<std::string> all_words(const std::string& letters, std::size_t n) {
  std::vector<std::string> out{""};
  for (std::size_t i = 0; i < n; ++i) {
    std::vector<std::string> next;
    for (const auto& w : out)
      for (char c : letters) next.push_back(w + c);
    out.swap(next);
  }
  return out;
}

inline std::vector<std::string> words_up_to(const std::string& letters, std::size_t k) {
  std::vector<std::string> out;
  for (std::size_t j = 0; j <= k; ++j)
    for (auto& w : all_words(letters, j)) out.push_back(w);
  return out;
}

inline std::vector<std::string> language(const std::string& letters, std::size_t n, const Member& member) {
  std::vector<std::string> out;
  for (auto& w : all_words(letters, n))
    if (member(w)) out.push_back(w);
  return out;
}

/// No factor 1 0^odd 1.
inline bool even(const std::string& w) {
  std::size_t last = std::string::npos;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (w[i] != '1') continue;
    if (last != std::string::npos && (i - last - 1) % 2 == 1) return false;
    last = i;
  }
  return true;
}

inline bool golden(const std::string& w) { return w.find("11") == std::string::npos; }

/// Segment rules of the context-free shift on {a,b,c}.
inline bool context_free(const std::string& w) {
  std::vector<std::string> segs{""};
  for (char ch : w) {
    if (ch == 'c') segs.emplace_back();
    else segs.back() += ch;
  }
  for (std::size_t i = 0; i < segs.size(); ++i) {
    const std::string& s = segs[i];
    const auto first_b = s.find('b');
    if (first_b != std::string::npos && s.find('a', first_b) != std::string::npos) return false;
    const std::size_t na = first_b == std::string::npos ? s.size() : first_b;
    const std::size_t nb = s.size() - na;
    const bool first = i == 0, last = i + 1 == segs.size();
    if (segs.size() == 1) continue;
    if (!first && !last && na != nb) return false;
    if (first && na != 0 && na > nb) return false;
    if (last && nb != 0 && nb > na) return false;
  }
  return true;
}

/// Two-sided beta-shift language for an eventually periodic d*: every suffix is
/// lexicographically at most the equally long prefix of d*.
inline bool beta(const std::string& w, const std::vector<int>& pre, const std::vector<int>& period) {
  auto digit = [&](std::size_t i) {
    return i < pre.size() ? pre[i] : period[(i - pre.size()) % period.size()];
  };
  for (std::size_t i = 0; i < w.size(); ++i) {
    for (std::size_t j = i; j < w.size(); ++j) {
      const int x = w[j] - '0', d = digit(j - i);
      if (x < d) break;
      if (x > d) return false;
    }
  }
  return true;
}

/// Factors of a long rotation coding (letter 1 on [1 - eta, 1)), collected in doubles.
inline std::set<std::string> rotation_factors(double eta, std::size_t n, std::size_t length = 200'000) {
  std::string x;
  double t = 0.1234567;
  for (std::size_t i = 0; i < length; ++i) {
    x += t >= 1 - eta ? '1' : '0';
    t += eta;
    t -= std::floor(t);
  }
  std::set<std::string> out;
  for (std::size_t i = 0; i + n <= x.size(); ++i) out.insert(x.substr(i, n));
  return out;
}

/// Number of distinct follower (f), predecessor (p) or extender (e) sets among the words
/// of length n, with contexts ranging over all words of length <= k.
inline std::size_t classes(const std::string& letters, std::size_t n, std::size_t k, char mode, const Member& member) {
  const auto contexts = words_up_to(letters, k);
  std::set<std::vector<bool>> sigs;
  for (const auto& w : language(letters, n, member)) {
    std::vector<bool> sig;
    if (mode == 'f')
      for (const auto& u : contexts) sig.push_back(member(w + u));
    else if (mode == 'p')
      for (const auto& s : contexts) sig.push_back(member(s + w));
    else
      for (const auto& s : contexts)
        for (const auto& u : contexts) sig.push_back(member(s + w + u));
    sigs.insert(sig);
  }
  return sigs.size();
}

/// Words av of length n whose follower sets (contexts of length <= k) differ from v's.
inline std::size_t left_constraints(const std::string& letters, std::size_t n, std::size_t k, const Member& member) {
  const auto contexts = words_up_to(letters, k);
  std::size_t count = 0;
  for (const auto& w : language(letters, n, member))
    for (const auto& u : contexts)
      if (member(w + u) != member(w.substr(1) + u)) {
        ++count;
        break;
      }
  return count;
}

}  // namespace oracle
