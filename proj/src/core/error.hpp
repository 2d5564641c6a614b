#pragma once

#include <stdexcept>
#include <string>

namespace veron {

// Error identities are part of the library surface: the C API maps them 1:1
// to status codes, and the CLI turns them into exit codes (parse -> 2,
// everything else -> 1).
enum class Err {
  Parse = 1,
  BadArgument,
  AmbientMismatch,
  LengthMismatch,
  NotComplementary,
  NotNilpotent,
  ZeroVector,
  ZeroMatrix,
  DegreeMismatch,
  NotSl2,
  NonIntegerSpectrum,
  NotDiagonalizable,
  NotInAlgebra,
  IrrationalSpectrum,
  NotInvertibleOnOverlap,
  BoundUnstable,
  InconsistentWindow,
  BadDegree,
  SpectrumSearchOverflow,
  Internal,
};

const char* err_name(Err e);

class VError : public std::runtime_error {
 public:
  VError(Err code, const std::string& what) : std::runtime_error(what), code_(code) {}
  Err code() const { return code_; }

 private:
  Err code_;
};

[[noreturn]] inline void raise(Err code, const std::string& msg) { throw VError(code, msg); }

inline void require(bool cond, Err code, const std::string& msg) {
  if (!cond) raise(code, msg);
}

}  // namespace veron
