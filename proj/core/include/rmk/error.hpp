#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace rmk {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Syntax error in formula, sequent or FOL text.
class ParseError : public Error {
 public:
  ParseError(std::size_t offset, std::vector<std::string> expected, const std::string& what)
      : Error(what), offset_(offset), expected_(std::move(expected)) {}

  std::size_t offset() const { return offset_; }
  const std::vector<std::string>& expected() const { return expected_; }

 private:
  std::size_t offset_;
  std::vector<std::string> expected_;
};

/// Model document violates the schema or references a world out of range.
class ModelError : public Error {
 public:
  using Error::Error;
};

/// Definable-set closure grew past its configured cap.
class CapExceeded : public Error {
 public:
  explicit CapExceeded(std::size_t cap)
      : Error("definable closure exceeded cap of " + std::to_string(cap) + " sets"), cap_(cap) {}
  std::size_t cap() const { return cap_; }

 private:
  std::size_t cap_;
};

/// FOL evaluation hit a free variable with no assigned world.
class UnassignedVariable : public Error {
 public:
  using Error::Error;
};

}  // namespace rmk
