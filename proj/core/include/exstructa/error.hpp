#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace exstructa {

enum class ErrorCode {
  KupischViolation,
  WindingUnsupported,
  InvalidInterval,
  ProjectiveHasNoTau,
  NotAnExtension,
  TooManyStructures,
  DimensionBound,
  DecompositionFailed,
  UnrecognizedModule,
  NotMonic,
  ExtNotMultiplicityFree,
  CapExceeded,
  NotJordanHolder,
  InvalidFixture,
  InvalidConfig,
};

std::string_view to_string(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what);
  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

[[noreturn]] void fail(ErrorCode code, const std::string& what);

}  // namespace exstructa
