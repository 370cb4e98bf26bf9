#pragma once

#include <stdexcept>
#include <string>

namespace lgpot {

struct UnsupportedType : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct InvalidParameters : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct IndexOutOfRange : std::out_of_range {
  using std::out_of_range::out_of_range;
};

// A structural invariant failed; indicates a catalog or caller bug.
struct InconsistencyError : std::logic_error {
  using std::logic_error::logic_error;
};

struct NotMinuscule : std::domain_error {
  using std::domain_error::domain_error;
};

struct WeightNotInRep : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct ZeroVector : std::domain_error {
  using std::domain_error::domain_error;
};

struct SizeMismatch : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct ZeroCoordinate : std::domain_error {
  using std::domain_error::domain_error;
};

struct ZeroDenominator : std::domain_error {
  using std::domain_error::domain_error;
};

struct InvalidSubset : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

} // namespace lgpot
