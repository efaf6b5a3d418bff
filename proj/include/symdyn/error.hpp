#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace symdyn {

/// Root of every error thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A caller broke a documented precondition (e.g. a word over the wrong alphabet).
class ContractError : public Error {
 public:
  using Error::Error;
};

/// An argument is outside the domain of an operation (e.g. a word not in the language).
class DomainError : public Error {
 public:
  using Error::Error;
};

/// Invalid parameters for building a shift space.
class ConstructionError : public Error {
 public:
  using Error::Error;
};

/// Finite digit/approximation horizon too short to decide a question.
class CertificationError : public Error {
 public:
  using Error::Error;
};

/// Numeric precision budget exhausted before a comparison could be decided.
class PrecisionError : public Error {
 public:
  using Error::Error;
};

/// A configurable resource cap was hit. Carries the cap that was exceeded.
class ResourceError : public Error {
 public:
  ResourceError(const std::string& what, std::size_t cap)
      : Error(what + " (cap " + std::to_string(cap) + ")"), cap_(cap) {}
  std::size_t cap() const noexcept { return cap_; }

 private:
  std::size_t cap_;
};

/// Malformed shift specification document; `where` is a JSON pointer into the document.
class ParseError : public Error {
 public:
  ParseError(const std::string& where, const std::string& what)
      : Error((where.empty() ? std::string("/") : where) + ": " + what), where_(where) {}
  const std::string& where() const noexcept { return where_; }

 private:
  std::string where_;
};

}  // namespace symdyn
