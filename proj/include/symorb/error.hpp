#pragma once

#include <stdexcept>
#include <string>

namespace symorb {

enum class ErrorKind {
  Parse,
  ClosureOverflow,
  UnknownName,
  IncompatibleMasses,
  NotTypeR,
  IrrationalFrame,
  OmegaInteger,
  CollisionOnGrid,
  NotCoercive,
  RootNotBracketed,
  GeometryViolated,
  DegenerateFrequency,
  DomainError,
  ThetaOutOfRange,
  SeriesDiverges,
  ZeroSeparation,
  NonEquivariantDelta,
  GridTooCoarse,
  SchemaError,
  ChecksumMismatch,
};

const char* error_kind_name(ErrorKind k);

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(error_kind_name(kind)) + ": " + what), kind_(kind) {}
  ErrorKind kind() const { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace symorb
