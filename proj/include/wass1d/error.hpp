#pragma once

#include <stdexcept>
#include <string>

namespace wass1d {

enum class ErrorCode {
  InvalidMeasure,
  NonPositiveWeight,
  WeightSumOutOfTolerance,
  LevelOutOfRange,
  DomainMismatch,
  InvalidIntervalIsometry,
  TooManyAtoms,
  NotDiscrete,
  InvalidP,
  NotMonotone,
  StepOutOfRange,
  ScopeMismatch,
  QOutOfRange,
  UnsortedPositions,
  PositionOutOfRange,
  AlphaOutOfRange,
  WeightError,
  EqualEndpoints,
  NotBisectable,
  InvalidArgument,
  ParseError,
  UnknownSuite,
};

const char* to_string(ErrorCode code) noexcept;

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string& what) { throw Error(code, what); }

}  // namespace wass1d
