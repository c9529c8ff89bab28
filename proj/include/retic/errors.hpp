#ifndef RETIC_ERRORS_HPP_
#define RETIC_ERRORS_HPP_

#include <stdexcept>
#include <string>

namespace retic {

// Malformed algebra data: bad arity, label out of range, non-total table.
struct AlgebraError : std::runtime_error {
  explicit AlgebraError(const std::string& msg) : std::runtime_error(msg) {}
};

// Input violates lattice axioms.
struct LatticeError : std::runtime_error {
  explicit LatticeError(const std::string& msg) : std::runtime_error(msg) {}
};

// An operation was invoked on a structure that fails the laws it requires.
// The message names the failed law.
struct HypothesisError : std::runtime_error {
  explicit HypothesisError(const std::string& msg) : std::runtime_error(msg) {}
};

// Document syntax or consistency error, with position when known.
struct ParseError : std::runtime_error {
  int line = 0;
  int col = 0;
  ParseError(int line_, int col_, const std::string& msg)
      : std::runtime_error("line " + std::to_string(line_) + ", col " +
                           std::to_string(col_) + ": " + msg),
        line(line_), col(col_) {}
};

}  // namespace retic

#endif  // RETIC_ERRORS_HPP_
