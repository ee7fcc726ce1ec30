#pragma once

#include <stdexcept>
#include <string>

namespace spherepair {

// Raised when a Freudenthal/oracle computation would exceed the configured dimension cap.
struct OracleRefused : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// A selector (pair, example, engine, family) that is not registered.
struct UnknownSelector : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// Peeling went negative, an empty witness null space, and similar "cannot happen" states.
struct InternalInconsistency : std::logic_error {
  using std::logic_error::logic_error;
};

}  // namespace spherepair
