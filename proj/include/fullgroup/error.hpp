#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace fullgroup {

/// Named failure conditions. The CLI prints the name verbatim.
enum class Errc {
  // input validation
  ParseError,
  InvalidGraph,
  NotIrreducible,
  IsPermutation,
  MatrixEdgeMismatch,
  InvalidWord,
  InvalidElement,
  InvalidPoint,
  // operation errors
  NotComposable,
  LevelTooSmall,
  NotInKernel,
  NoSolution,
  TorsionTooLarge,
  AmbientMismatch,
  PointOutsideAmbient,
  EmptyInput,
  ClassesDiffer,
  NotDisjoint,
  NotInAmbient,
  NotPrimitive,
  NotKernelVector,
  CycleCheckFailed,
  AmbientNotX,
  StepBudgetExceeded,
};

std::string_view errc_name(Errc code) noexcept;

/// True for errors caused by malformed input rather than a failed operation.
bool is_validation_error(Errc code) noexcept;

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& detail);

  Errc code() const noexcept { return code_; }
  std::string_view name() const noexcept { return errc_name(code_); }
  const std::string& detail() const noexcept { return detail_; }

 private:
  Errc code_;
  std::string detail_;
};

}  // namespace fullgroup
