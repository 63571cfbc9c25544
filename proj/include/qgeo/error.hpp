#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace qgeo {

enum class ErrorCode {
  InvalidArgument,
  ZeroField,
  StepTooCoarse,
  Unreachable,
  NeverReached,
  GridTooCoarse,
  DegenerateEvolution,
  ZeroHamiltonian,
  EigenstateSingularity,
  MissingFieldRate,
  ZeroDuration,
  PointTrajectory,
  MaximalComplexity,
  DegeneratePair,
  UnknownFixture,
  InvalidConfig,
};

/// Stable identifier used in CLI messages and by the C API.
std::string_view error_name(ErrorCode code) noexcept;

/// True for errors caused by bad user input (exit code 2 at the CLI), false
/// for failures of the numerical pipeline itself.
bool is_usage_error(ErrorCode code) noexcept;

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(std::string(error_name(code)) + ": " + message),
        code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace qgeo
