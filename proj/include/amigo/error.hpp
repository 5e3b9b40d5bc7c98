#pragma once

#include <stdexcept>
#include <string>

namespace amigo {

enum class ErrorKind {
  ParseError,
  NotClosed,
  NonManifold,
  DegenerateStar,
  NotConverged,
  SolverFailure,
  SliceDegenerate,
  NoPath,
  EmptyRow,
  EmptyJointRow,
  NotCoupled,
  StitchCountMismatch,
  Diverged,
  IoError,
  InvalidArgument,
};

const char* to_string(ErrorKind kind);

// Carries the pipeline stage name so the CLI can report where a run failed.
class Error : public std::runtime_error {
public:
  Error(ErrorKind kind, std::string stage, const std::string& message)
      : std::runtime_error(message), kind_(kind), stage_(std::move(stage)) {}

  ErrorKind kind() const { return kind_; }
  const std::string& stage() const { return stage_; }

  // Input problems exit with code 2, internal/solver failures with code 3.
  bool is_input_error() const {
    switch (kind_) {
      case ErrorKind::ParseError:
      case ErrorKind::NotClosed:
      case ErrorKind::NonManifold:
      case ErrorKind::InvalidArgument:
      case ErrorKind::StitchCountMismatch:
      case ErrorKind::IoError:
        return true;
      default:
        return false;
    }
  }

private:
  ErrorKind kind_;
  std::string stage_;
};

}  // namespace amigo
