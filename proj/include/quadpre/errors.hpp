// Error types shared across modules.
//
// std::invalid_argument / std::out_of_range signal caller mistakes (bad
// levels, malformed input). MathError signals that an exact mathematical
// check failed, which indicates a bug or a finding rather than bad input.

#pragma once

#include <stdexcept>
#include <string>

namespace quadpre {

class MathError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A requested computation needs P(N, a) to be nonsingular but it is not.
class SingularCurveError : public std::invalid_argument {
 public:
  SingularCurveError(const std::string& what, int level) : std::invalid_argument(what), level_(level) {}
  int level() const { return level_; }

 private:
  int level_;
};

}  // namespace quadpre
