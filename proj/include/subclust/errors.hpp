#ifndef SUBCLUST_ERRORS_HPP
#define SUBCLUST_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace subclust {

// Parameter/precondition failures. The CLI maps these to exit code 2.
// Messages start with a stable tag (e.g. "InvalidPointRef: ...") so callers
// and tests can tell the failure kinds apart without a class per kind.
class ValidationError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Data-dependent failures at run time (I/O, empty sample under the error
// policy). The CLI maps these to exit code 3.
class RuntimeError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace subclust

#endif  // SUBCLUST_ERRORS_HPP
