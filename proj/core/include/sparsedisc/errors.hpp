#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace sparsedisc {

// Division by zero, violated formula precondition, and friends.
class ArithmeticError : public std::domain_error {
  public:
    using std::domain_error::domain_error;
};

// A closed form hit a vanishing internal divisor (e.g. 3a + n*t_{n-2} = 0 in
// the x^n+ax^3+bx+c formula). The dispatcher catches this and falls back to
// the resultant oracle.
class DegenerateFormulaError : public ArithmeticError {
  public:
    using ArithmeticError::ArithmeticError;
};

// Text-parsing failure with the 0-based offset of the offending character.
class ParseError : public std::runtime_error {
  public:
    ParseError(const std::string& what, std::size_t position)
        : std::runtime_error(what + " (at position " + std::to_string(position) + ")"),
          position_(position) {}

    std::size_t position() const { return position_; }

  private:
    std::size_t position_;
};

}  // namespace sparsedisc
