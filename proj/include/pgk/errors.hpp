#ifndef PGK_ERRORS_HPP
#define PGK_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace pgk {

// Malformed input: bad spec strings, violated preconditions.
class InvalidArgument : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

// Group or graph larger than the configured order cap.
class CapExceeded : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

// An exact search ran out of its node budget. Never converted into a guess.
class BudgetExhausted : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

// Something that the mathematics says cannot happen did happen.
class InternalError : public std::logic_error {
public:
  using std::logic_error::logic_error;
};

} // namespace pgk

#endif
