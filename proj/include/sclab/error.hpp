#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace sclab {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A caller violated an operation's precondition (bad state id, letter
/// outside the alphabet, non-injective renaming, ...).
class PreconditionError : public Error {
 public:
  using Error::Error;
};

/// Malformed external input: JSON documents, dialect strings, words.
class ParseError : public Error {
 public:
  using Error::Error;
};

/// A configured resource budget (subset count, semigroup size, tuple count)
/// was exceeded. Carries the budget and how far the computation got.
class ResourceError : public Error {
 public:
  ResourceError(const std::string& what, std::size_t budget, std::size_t reached)
      : Error(what + " (budget " + std::to_string(budget) + ", reached " +
              std::to_string(reached) + ")"),
        budget_(budget),
        reached_(reached) {}

  std::size_t budget() const noexcept { return budget_; }
  std::size_t reached() const noexcept { return reached_; }

 private:
  std::size_t budget_;
  std::size_t reached_;
};

/// An internal consistency check failed; indicates a construction bug.
class InvariantError : public Error {
 public:
  using Error::Error;
};

}  // namespace sclab
