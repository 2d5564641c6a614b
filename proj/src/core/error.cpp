#include "core/error.hpp"

namespace veron {

const char* err_name(Err e) {
  switch (e) {
    case Err::Parse: return "Parse";
    case Err::BadArgument: return "BadArgument";
    case Err::AmbientMismatch: return "AmbientMismatch";
    case Err::LengthMismatch: return "LengthMismatch";
    case Err::NotComplementary: return "NotComplementary";
    case Err::NotNilpotent: return "NotNilpotent";
    case Err::ZeroVector: return "ZeroVector";
    case Err::ZeroMatrix: return "ZeroMatrix";
    case Err::DegreeMismatch: return "DegreeMismatch";
    case Err::NotSl2: return "NotSl2";
    case Err::NonIntegerSpectrum: return "NonIntegerSpectrum";
    case Err::NotDiagonalizable: return "NotDiagonalizable";
    case Err::NotInAlgebra: return "NotInAlgebra";
    case Err::IrrationalSpectrum: return "IrrationalSpectrum";
    case Err::NotInvertibleOnOverlap: return "NotInvertibleOnOverlap";
    case Err::BoundUnstable: return "BoundUnstable";
    case Err::InconsistentWindow: return "InconsistentWindow";
    case Err::BadDegree: return "BadDegree";
    case Err::SpectrumSearchOverflow: return "SpectrumSearchOverflow";
    case Err::Internal: return "Internal";
  }
  return "Unknown";
}

}  // namespace veron
