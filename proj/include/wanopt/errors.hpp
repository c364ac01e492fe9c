#ifndef WANOPT_ERRORS_HPP
#define WANOPT_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace wanopt {

struct DegenerateLattice : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct ShapeMismatch : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct NonHermitianInput : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Thrown when the gap between the tracked eigenvalue and its neighbors
// falls below the model's gap tolerance at some node.
struct NearDegenerate : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct NotSolvable : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct AmbiguousWinding : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct ObstructedBranch : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct HermiticityViolation : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct ParseError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct UnknownModel : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct WindowTooLarge : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct IntegrabilityViolation : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace wanopt

#endif
