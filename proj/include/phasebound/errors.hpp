#pragma once

#include <stdexcept>
#include <string>

namespace phasebound {

// Two fields (functions or spectra) were combined on different grids, or a
// grid could not be constructed.
class GridMismatch : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// A function/spectrum file or other structured input does not follow its
// schema.
class MalformedFile : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class NonFiniteSample : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// A pointwise estimate was asked to evaluate outside the region where it is
// claimed (Lemma-1 disk, first-term regime, zero direction vector).
class InadmissibleInput : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// A hypothesis of a bound does not hold for the given data (non-real
// spectrum for the band-limited bound, k <= (n+2)/2 for the tail bound).
class HypothesisViolation : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

}  // namespace phasebound
