#pragma once

#include <stdexcept>
#include <string>

namespace massey {

enum class ErrorCode {
  NotPrime,
  DegreeTooLarge,
  FieldTooLarge,
  ZeroPolynomial,
  FieldMismatch,
  SingularCurve,
  BadCharacteristic,
  UnsupportedLevel,
  ExtensionCapExceeded,
  NotInSpan,
  NotTorsion,
  ModulusMismatch,
  CaseMismatch,
  GroupMismatch,
  NotCongruentIdentity,
  NotInvertible,
  InvalidData,
  WrongPrime,
  NoMatch,
  InvalidArgument,
};

const char* error_name(ErrorCode c);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}
  ErrorCode code() const { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace massey
