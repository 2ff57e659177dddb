#ifndef FPMOM_ERROR_HPP_
#define FPMOM_ERROR_HPP_

#include <stdexcept>
#include <string>

namespace fpmom {

// Operands built over different free-group ranks.
class RankMismatch : public std::invalid_argument {
 public:
  RankMismatch(int lhs, int rhs)
      : std::invalid_argument("rank mismatch: " + std::to_string(lhs) +
                              " vs " + std::to_string(rhs)) {}
};

class ParseError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// A computation would exceed the configured support cap.
class ResourceLimitError : public std::length_error {
 public:
  using std::length_error::length_error;
};

// Amalgamation over the cyclic subgroup needs a nontrivial generator,
// which does not exist for rank 1.
class DegenerateSubgroupError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

}  // namespace fpmom

#endif  // FPMOM_ERROR_HPP_
