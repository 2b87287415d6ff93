#pragma once

#include <stdexcept>
#include <string>

namespace declab {

// Invalid parameters or experiment configuration. The CLI maps this to exit
// code 2.
struct ConfigError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// Non-finite value produced during a run; carries the iteration where it was
// detected. The CLI maps this to exit code 3.
struct DivergenceError : std::runtime_error {
  long iteration;
  DivergenceError(long it, const std::string& what)
      : std::runtime_error(what), iteration(it) {}
};

// A broken internal contract (e.g. All-Reduce workers drifting apart). The
// CLI maps this to exit code 4.
struct InvariantError : std::logic_error {
  using std::logic_error::logic_error;
};

}  // namespace declab
