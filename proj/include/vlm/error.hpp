#pragma once

#include <stdexcept>
#include <string>

namespace vlm {

// Machine-readable failure categories. The CLI maps these to exit codes,
// tests match on them, and error messages carry the human-readable part.
enum class Err {
  RankDeficient,
  NotHermitian,
  NonFinite,
  AlphaTooSmall,
  DivergenceDetected,
  DimensionMismatch,
  UserTooClose,
  NotPsd,
  SingularImpedanceSum,
  DegenerateGeometry,
  SingularGram,
  SingularRegularizedGram,
  OptimizerStall,
  VpRangeExceeded,
  UnknownRegime,
  NoInterferers,
  OddBitCount,
  TooLarge,
  BudgetExceeded,
  UnknownTechnique,
  MissingKey,
  TypeMismatch,
  RangeViolation,
  UnknownKey,
  IoFailure,
};

const char* to_string(Err code);

class Error : public std::runtime_error {
 public:
  Error(Err code, const std::string& what);
  Err code() const { return code_; }
  // Exit-code category: 2 = configuration, 3 = domain/numeric, 4 = I/O.
  int exit_code() const;

 private:
  Err code_;
};

[[noreturn]] void fail(Err code, const std::string& what);

}  // namespace vlm
