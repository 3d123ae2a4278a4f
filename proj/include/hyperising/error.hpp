#pragma once

#include <stdexcept>
#include <string>

namespace hyperising {

// Malformed or out-of-contract input (bad JSON, ids out of range, ...).
class InvalidInput : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A well-formed request the algorithms decline to run: |lambda| = 1,
// eps outside (0,1), a parameter outside its admissible range.
class Refusal : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A configured resource cap (vertex count, truncation order, frontier size)
// would be exceeded.
class CapExceeded : public Refusal {
 public:
  using Refusal::Refusal;
};

class NonConvergence : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace hyperising
