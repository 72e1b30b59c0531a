#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace influence {

// Raised by the instance parser; carries the offending 1-based line number.
class ParseError : public std::runtime_error {
  public:
    ParseError(int line, const std::string& what)
        : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}

    int line() const { return line_; }

  private:
    int line_;
};

// Raised when an exhaustive search would examine more candidate sets than the
// configured exploration cap allows.
class CapExceededError : public std::runtime_error {
  public:
    CapExceededError(std::uint64_t required, std::uint64_t cap)
        : std::runtime_error("search too large: " + std::to_string(required) +
                             " candidate sets exceed exploration cap " + std::to_string(cap)),
          required_(required),
          cap_(cap) {}

    std::uint64_t required() const { return required_; }
    std::uint64_t cap() const { return cap_; }

  private:
    std::uint64_t required_;
    std::uint64_t cap_;
};

}  // namespace influence
