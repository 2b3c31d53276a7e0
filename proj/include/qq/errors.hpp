#pragma once

#include <stdexcept>
#include <string>

namespace qq {

enum class Errc {
  NotPrime,
  ReducibleH,
  DivisionByZero,
  BothZero,
  ZeroArgument,
  ReducibleModulus,
  DegreeCapExceeded,
  SyntaxError,
  LabelCountError,
  OrientationError,
  BadParams,
  EmptyTwists,
  IoError,
  DimensionMismatch,
  OddRank,
  BadNullity,
  EnumerationCapExceeded,
  NotCoprime,
  BadRange,
  KTooLarge,
  Internal,
};

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what) : std::runtime_error(what), code_(code) {}
  Errc code() const { return code_; }

 private:
  Errc code_;
};

[[noreturn]] inline void fail(Errc code, const std::string& what) { throw Error(code, what); }

// Internal consistency check; throwing here always indicates a bug.
inline void check_internal(bool ok, const char* what) {
  if (!ok) throw Error(Errc::Internal, std::string("internal check failed: ") + what);
}

}  // namespace qq
