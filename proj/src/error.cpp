#include "fullgroup/error.hpp"

namespace fullgroup {

std::string_view errc_name(Errc code) noexcept {
  switch (code) {
    case Errc::ParseError: return "ParseError";
    case Errc::InvalidGraph: return "InvalidGraph";
    case Errc::NotIrreducible: return "NotIrreducible";
    case Errc::IsPermutation: return "IsPermutation";
    case Errc::MatrixEdgeMismatch: return "MatrixEdgeMismatch";
    case Errc::InvalidWord: return "InvalidWord";
    case Errc::InvalidElement: return "InvalidElement";
    case Errc::InvalidPoint: return "InvalidPoint";
    case Errc::NotComposable: return "NotComposable";
    case Errc::LevelTooSmall: return "LevelTooSmall";
    case Errc::NotInKernel: return "NotInKernel";
    case Errc::NoSolution: return "NoSolution";
    case Errc::TorsionTooLarge: return "TorsionTooLarge";
    case Errc::AmbientMismatch: return "AmbientMismatch";
    case Errc::PointOutsideAmbient: return "PointOutsideAmbient";
    case Errc::EmptyInput: return "EmptyInput";
    case Errc::ClassesDiffer: return "ClassesDiffer";
    case Errc::NotDisjoint: return "NotDisjoint";
    case Errc::NotInAmbient: return "NotInAmbient";
    case Errc::NotPrimitive: return "NotPrimitive";
    case Errc::NotKernelVector: return "NotKernelVector";
    case Errc::CycleCheckFailed: return "CycleCheckFailed";
    case Errc::AmbientNotX: return "AmbientNotX";
    case Errc::StepBudgetExceeded: return "StepBudgetExceeded";
  }
  return "UnknownError";
}

bool is_validation_error(Errc code) noexcept {
  switch (code) {
    case Errc::ParseError:
    case Errc::InvalidGraph:
    case Errc::NotIrreducible:
    case Errc::IsPermutation:
    case Errc::MatrixEdgeMismatch:
    case Errc::InvalidWord:
    case Errc::InvalidElement:
    case Errc::InvalidPoint:
      return true;
    default:
      return false;
  }
}

Error::Error(Errc code, const std::string& detail)
    : std::runtime_error(std::string(errc_name(code)) + ": " + detail),
      code_(code),
      detail_(detail) {}

}  // namespace fullgroup
