#include "symdyn/classify.hpp"
#include "symdyn/error.hpp"
#include "classify_internal.hpp"

#include <exception>

#include <unordered_map>

namespace symdyn {

std::string mode_name(Mode m) {
  switch (m) {
    case Mode::follower: return "follower";
    case Mode::predecessor: return "predecessor";
    case Mode::extender: return "extender";
  }
  return "?";
}

Mode parse_mode(const std::string& text) {
  if (text == "f" || text == "follower") return Mode::follower;
  if (text == "p" || text == "predecessor") return Mode::predecessor;
  if (text == "e" || text == "extender") return Mode::extender;
  throw ContractError("unknown mode '" + text + "'");
}

namespace {

/// L_{<=k} as spans into the space's memoized levels.
std::vector<std::span<const Symbol>> contexts_up_to(const ShiftSpace& space, std::size_t k) {
  std::vector<std::span<const Symbol>> out;
  for (std::size_t j = 0; j <= k; ++j) {
    const WordSet& level = space.words(j);
    for (std::size_t i = 0; i < level.size(); ++i) out.push_back(level[i]);
  }
  return out;
}

class Signer {
 public:
  Signer(const ShiftSpace& space, std::size_t k, Mode mode)
      : space_(space), k_(k), mode_(mode), contexts_(contexts_up_to(space, k)) {}

  ContextSignature sign(std::span<const Symbol> w) {
    if (!space_.contains(w)) throw DomainError("signature of a word outside the language");
    ContextSignature sig;
    sig.mode = mode_;
    sig.k = k_;
    const std::size_t c = contexts_.size();
    if (mode_ == Mode::extender) {
      std::vector<char> pre(c), fol(c);
      for (std::size_t i = 0; i < c; ++i) {
        pre[i] = member(contexts_[i], w, {});
        fol[i] = member({}, w, contexts_[i]);
      }
      sig.bits.assign((c * c + 63) / 64, 0);
      for (std::size_t s = 0; s < c; ++s) {
        if (!pre[s]) continue;
        for (std::size_t u = 0; u < c; ++u)
          if (fol[u] && member(contexts_[s], w, contexts_[u])) set(sig.bits, s * c + u);
      }
    } else {
      sig.bits.assign((c + 63) / 64, 0);
      for (std::size_t i = 0; i < c; ++i) {
        const bool in = mode_ == Mode::follower ? member({}, w, contexts_[i]) : member(contexts_[i], w, {});
        if (in) set(sig.bits, i);
      }
    }
    std::size_t h = static_cast<std::size_t>(mode_) * 0x9e3779b97f4a7c15ull + k_;
    for (auto b : sig.bits) h ^= std::hash<std::uint64_t>{}(b) + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
    sig.hash = h;
    return sig;
  }

 private:
  static void set(std::vector<std::uint64_t>& bits, std::size_t i) { bits[i / 64] |= std::uint64_t{1} << (i % 64); }

  bool member(std::span<const Symbol> s, std::span<const Symbol> w, std::span<const Symbol> u) {
    buffer_.assign(s.begin(), s.end());
    buffer_.insert(buffer_.end(), w.begin(), w.end());
    buffer_.insert(buffer_.end(), u.begin(), u.end());
    return space_.contains(buffer_);
  }

  const ShiftSpace& space_;
  std::size_t k_;
  Mode mode_;
  std::vector<std::span<const Symbol>> contexts_;
  std::vector<Symbol> buffer_;
};

Classification group(const std::vector<ContextSignature>& sigs) {
  Classification out;
  out.class_of.resize(sigs.size());
  std::unordered_map<std::size_t, std::vector<std::uint32_t>> by_hash;  // hash -> representative words
  std::vector<std::size_t> representative;
  for (std::size_t i = 0; i < sigs.size(); ++i) {
    auto& bucket = by_hash[sigs[i].hash];
    bool found = false;
    for (std::uint32_t cls : bucket) {
      if (sigs[representative[cls]] == sigs[i]) {
        out.class_of[i] = cls;
        found = true;
        break;
      }
    }
    if (found) continue;
    const auto cls = static_cast<std::uint32_t>(representative.size());
    representative.push_back(i);
    bucket.push_back(cls);
    out.class_of[i] = cls;
  }
  out.count = representative.size();
  return out;
}

}  // namespace

ContextSignature signature(const ShiftSpace& space, std::span<const Symbol> w, std::size_t k, Mode mode) {
  return Signer(space, k, mode).sign(w);
}

ContextSignature signature(const ShiftSpace& space, const Word& w, std::size_t k, Mode mode) {
  if (!(*w.alphabet() == space.alphabet())) throw ContractError("word alphabet does not match shift space alphabet");
  return signature(space, w.symbols(), k, mode);
}

Classification classify_literal(const ShiftSpace& space, std::size_t n, std::size_t k, Mode mode, bool parallel) {
  const WordSet& words = space.words(n);
  contexts_up_to(space, k);  // fill the memoized levels before threads read them
  std::vector<ContextSignature> sigs(words.size());
  const auto count = static_cast<std::int64_t>(words.size());
  if (parallel) {
    std::exception_ptr failure;
#pragma omp parallel
    {
      Signer signer(space, k, mode);
#pragma omp for schedule(dynamic, 16)
      for (std::int64_t i = 0; i < count; ++i) {
        try {
          sigs[i] = signer.sign(words[i]);
        } catch (...) {
#pragma omp critical(symdyn_signature_failure)
          if (!failure) failure = std::current_exception();
        }
      }
    }
    if (failure) std::rethrow_exception(failure);
  } else {
    Signer signer(space, k, mode);
    for (std::int64_t i = 0; i < count; ++i) sigs[i] = signer.sign(words[i]);
  }
  return group(sigs);
}

}  // namespace symdyn
