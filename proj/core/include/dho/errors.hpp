#pragma once

#include <stdexcept>
#include <string>

namespace dho {

// Exit codes used by the command-line tool.
enum class ExitCode : int {
  Success = 0,
  InvalidInput = 1,
  OutOfTable = 2,
  NumericalFailure = 3,
  VerificationFailure = 4,
};

class Error : public std::runtime_error {
 public:
  Error(const std::string& what, ExitCode code)
      : std::runtime_error(what), code_(code) {}
  ExitCode code() const noexcept { return code_; }

 private:
  ExitCode code_;
};

class InvalidInput : public Error {
 public:
  explicit InvalidInput(const std::string& what)
      : Error(what, ExitCode::InvalidInput) {}
};

// A requested coefficient is not stored. Callers probing for the highest
// available series order catch this one specifically.
class OutOfTable : public Error {
 public:
  explicit OutOfTable(const std::string& what)
      : Error(what, ExitCode::OutOfTable) {}
};

class NumericalFailure : public Error {
 public:
  explicit NumericalFailure(const std::string& what)
      : Error(what, ExitCode::NumericalFailure) {}
};

class TruncationTooSmall : public NumericalFailure {
 public:
  explicit TruncationTooSmall(const std::string& what)
      : NumericalFailure(what) {}
};

class VerificationFailure : public Error {
 public:
  explicit VerificationFailure(const std::string& what)
      : Error(what, ExitCode::VerificationFailure) {}
};

// Order-by-order linear system had no solution or a free unknown.
class InconsistentSystem : public VerificationFailure {
 public:
  explicit InconsistentSystem(const std::string& what)
      : VerificationFailure(what) {}
};

}  // namespace dho
