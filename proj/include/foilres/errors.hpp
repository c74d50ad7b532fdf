#pragma once

#include <stdexcept>
#include <string>

namespace foilres {

// Base class for everything this library throws on bad input or an
// unsolvable problem. Subclasses are the machine-readable taxonomy the
// CLI maps to exit codes.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// --- file / value ingestion -------------------------------------------------

class MalformedRow : public Error {
 public:
  using Error::Error;
};

class DuplicateAlpha : public Error {
 public:
  using Error::Error;
};

class TooFewPoints : public Error {
 public:
  using Error::Error;
};

class TooFewSamples : public Error {
 public:
  using Error::Error;
};

class ConfigError : public Error {
 public:
  using Error::Error;
};

// Violated value-domain precondition (non-finite input, bad parameter range).
class InvalidInput : public Error {
 public:
  using Error::Error;
};

// --- evaluation ---------------------------------------------------------------

// Query outside the tabulated alpha range of a polar.
class OutOfRange : public Error {
 public:
  using Error::Error;
};

// Query outside the fitted (speed, displacement) box of a hull surface set.
class OutOfDomain : public Error {
 public:
  using Error::Error;
};

class NonPositiveAr : public Error {
 public:
  using Error::Error;
};

// --- fitting / extrapolation ---------------------------------------------------

class RankDeficient : public Error {
 public:
  using Error::Error;
};

class ZeroAsymptote : public Error {
 public:
  using Error::Error;
};

class NonMonotoneSequence : public Error {
 public:
  using Error::Error;
};

class ZeroDifference : public Error {
 public:
  using Error::Error;
};

// --- equilibrium ----------------------------------------------------------------

// Even full displacement cannot close the vertical force balance.
class NoVerticalBalance : public Error {
 public:
  using Error::Error;
};

class MismatchedSpeedGrids : public Error {
 public:
  using Error::Error;
};

}  // namespace foilres
