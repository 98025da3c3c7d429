#ifndef WRGEN_ERROR_HPP
#define WRGEN_ERROR_HPP

#include <cstddef>
#include <stdexcept>
#include <string>

namespace wrgen {

class error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed cycle notation or group spec text. position is a 0-based byte
// offset into the input.
class parse_error : public error {
 public:
  parse_error(const std::string& what, std::size_t position)
      : error(what + " at position " + std::to_string(position)),
        position_(position) {}

  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

class degree_mismatch : public error {
 public:
  degree_mismatch(std::size_t lhs, std::size_t rhs)
      : error("degree mismatch: " + std::to_string(lhs) + " vs " +
              std::to_string(rhs)) {}
};

class shape_mismatch : public error {
 public:
  using error::error;
};

// A caller-supplied argument violates a documented precondition.
class precondition_error : public error {
 public:
  using error::error;
};

// The requested degree lies in a range a generating-set construction
// explicitly excludes (as opposed to simply being out of range).
class excluded_degree : public precondition_error {
 public:
  using precondition_error::precondition_error;
};

// Enumeration would exceed the configured element budget.
class budget_exceeded : public error {
 public:
  explicit budget_exceeded(std::size_t budget)
      : error("element budget of " + std::to_string(budget) + " exceeded"),
        budget_(budget) {}

  std::size_t budget() const noexcept { return budget_; }

 private:
  std::size_t budget_;
};

}  // namespace wrgen

#endif
