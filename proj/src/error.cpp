#include "qgeo/error.hpp"

namespace qgeo {

std::string_view error_name(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::InvalidArgument: return "InvalidArgument";
    case ErrorCode::ZeroField: return "ZeroField";
    case ErrorCode::StepTooCoarse: return "StepTooCoarse";
    case ErrorCode::Unreachable: return "Unreachable";
    case ErrorCode::NeverReached: return "NeverReached";
    case ErrorCode::GridTooCoarse: return "GridTooCoarse";
    case ErrorCode::DegenerateEvolution: return "DegenerateEvolution";
    case ErrorCode::ZeroHamiltonian: return "ZeroHamiltonian";
    case ErrorCode::EigenstateSingularity: return "EigenstateSingularity";
    case ErrorCode::MissingFieldRate: return "MissingFieldRate";
    case ErrorCode::ZeroDuration: return "ZeroDuration";
    case ErrorCode::PointTrajectory: return "PointTrajectory";
    case ErrorCode::MaximalComplexity: return "MaximalComplexity";
    case ErrorCode::DegeneratePair: return "DegeneratePair";
    case ErrorCode::UnknownFixture: return "UnknownFixture";
    case ErrorCode::InvalidConfig: return "InvalidConfig";
  }
  return "Unknown";
}

bool is_usage_error(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::InvalidArgument:
    case ErrorCode::DegeneratePair:
    case ErrorCode::UnknownFixture:
    case ErrorCode::InvalidConfig:
      return true;
    default:
      return false;
  }
}

}  // namespace qgeo
