#pragma once

#include <stdexcept>
#include <string>

namespace ellorder {

enum class ErrorKind {
  MismatchedTotal,
  BoundExceeded,
  CapExceeded,
  EmptyPartition,
  OddPart,
  EvenPart,
  InvalidPartition,
  IndexOutOfRange,
  RankMismatch,
  NotInGroup,
  UnsupportedFamily,
  ComponentMismatch,
  ContextMismatch,
  SumMismatch,
  FamilyMismatch,
  InvalidLabel,
  PosetViolation,
  Precondition,
  Parse,
};

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what) : std::runtime_error(what), kind_(kind) {}
  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace ellorder
