#pragma once

#include <stdexcept>
#include <string>

namespace edgebetti {

// Malformed arguments: out-of-range vertices, invalid family parameters, bad graph6.
class input_error : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// The request exceeds a fixed budget (vertex count, enumeration range, table size).
class capacity_error : public std::length_error {
 public:
  using std::length_error::length_error;
};

// A data structure handed to an operation violates its documented invariant.
class invariant_error : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

// Regularity of the zero ideal.
class undefined_regularity_error : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

}  // namespace edgebetti
