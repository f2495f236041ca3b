#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace seqth {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed text input. `offset` is a 0-based byte offset into the input.
class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t offset)
      : Error(what + " at offset " + std::to_string(offset)), offset_(offset) {}

  std::size_t offset() const noexcept { return offset_; }

 private:
  std::size_t offset_;
};

/// An operation was called outside its domain (bad index, wrong shape, ...).
class DomainError : public Error {
 public:
  using Error::Error;
};

}  // namespace seqth
