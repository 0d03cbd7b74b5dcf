#pragma once

#include <stdexcept>
#include <string>

namespace blades {

// Operands mix float/exact backends or real/complex fields.
class tag_mismatch_error : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

// Shapes or dimensions do not line up (also covers empty inputs).
class dimension_error : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

// Operation is not available on the requested backend (e.g. square roots
// on the exact backend).
class backend_error : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

// Two vector lists were claimed to span the same subspace but do not.
class subspace_error : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

// A basis was required but the vectors are linearly dependent.
class degenerate_error : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

// Malformed serialized input (JSON files, scalar strings).
class parse_error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

}  // namespace blades
