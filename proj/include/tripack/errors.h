#ifndef TRIPACK_ERRORS_H_
#define TRIPACK_ERRORS_H_

#include <cstddef>
#include <stdexcept>
#include <string>

namespace tripack {

// Invalid values supplied by the caller (out-of-range vertex, demand > 1, ...).
class InputError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// A documented precondition of an operation does not hold.
class UsageError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

// Malformed text input. `position` is a byte offset into the parsed text.
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& what, std::size_t position)
      : std::runtime_error(what + " (at byte " + std::to_string(position) + ")"),
        position_(position) {}
  std::size_t position() const { return position_; }

 private:
  std::size_t position_;
};

}  // namespace tripack

#endif  // TRIPACK_ERRORS_H_
