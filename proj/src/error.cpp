#include "vlm/error.hpp"

namespace vlm {

const char* to_string(Err code) {
  switch (code) {
    case Err::RankDeficient: return "RankDeficient";
    case Err::NotHermitian: return "NotHermitian";
    case Err::NonFinite: return "NonFinite";
    case Err::AlphaTooSmall: return "AlphaTooSmall";
    case Err::DivergenceDetected: return "DivergenceDetected";
    case Err::DimensionMismatch: return "DimensionMismatch";
    case Err::UserTooClose: return "UserTooClose";
    case Err::NotPsd: return "NotPSD";
    case Err::SingularImpedanceSum: return "SingularImpedanceSum";
    case Err::DegenerateGeometry: return "DegenerateGeometry";
    case Err::SingularGram: return "SingularGram";
    case Err::SingularRegularizedGram: return "SingularRegularizedGram";
    case Err::OptimizerStall: return "OptimizerStall";
    case Err::VpRangeExceeded: return "VPRangeExceeded";
    case Err::UnknownRegime: return "UnknownRegime";
    case Err::NoInterferers: return "NoInterferers";
    case Err::OddBitCount: return "OddBitCount";
    case Err::TooLarge: return "TooLarge";
    case Err::BudgetExceeded: return "BudgetExceeded";
    case Err::UnknownTechnique: return "UnknownTechnique";
    case Err::MissingKey: return "MissingKey";
    case Err::TypeMismatch: return "TypeMismatch";
    case Err::RangeViolation: return "RangeViolation";
    case Err::UnknownKey: return "UnknownKey";
    case Err::IoFailure: return "IoFailure";
  }
  return "Unknown";
}

Error::Error(Err code, const std::string& what)
    : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

int Error::exit_code() const {
  switch (code_) {
    case Err::MissingKey:
    case Err::TypeMismatch:
    case Err::RangeViolation:
    case Err::UnknownKey:
      return 2;
    case Err::IoFailure:
      return 4;
    default:
      return 3;
  }
}

void fail(Err code, const std::string& what) { throw Error(code, what); }

}  // namespace vlm
