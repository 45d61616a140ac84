#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace barbell {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed word, pattern or ring-expression text. `position` is the byte
// offset into the input where parsing stopped.
class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t position)
      : Error(what + " at position " + std::to_string(position)),
        position_(position) {}

  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

// A letter outside the alphabet, or two operands over different alphabets.
class AlphabetError : public Error {
 public:
  using Error::Error;
};

// An argument outside an operation's domain (k < 1, trivial word where a
// nontrivial one is required, wrong word shape, ...).
class DomainError : public Error {
 public:
  using Error::Error;
};

}  // namespace barbell
