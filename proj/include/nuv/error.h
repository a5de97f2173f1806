#ifndef NUV_ERROR_H_
#define NUV_ERROR_H_

#include <stdexcept>
#include <string>

namespace nuv {

// Malformed or invalid input: bad vertex index, nonpositive length,
// disconnected graph, unparseable file. The CLI maps these to exit code 2.
class InputError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// A computation was requested beyond a size threshold (exact cover number,
// exact TSP). The CLI maps these to exit code 1.
class ThresholdError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

}  // namespace nuv

#endif  // NUV_ERROR_H_
