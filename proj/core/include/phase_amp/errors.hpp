#pragma once

#include <stdexcept>
#include <string>

namespace phase_amp {

// Process exit codes used by the command-line tool.
enum class ExitCode : int {
  kSuccess = 0,
  kInvalidArgument = 2,
  kResourceLimit = 3,
  kImpossibleOutcome = 4,
};

class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& what) : std::runtime_error(what) {}
  virtual ExitCode exit_code() const noexcept = 0;
};

// Bad sizes, malformed graphs, out-of-range parameters.
class InvalidArgument : public Error {
 public:
  using Error::Error;
  ExitCode exit_code() const noexcept override { return ExitCode::kInvalidArgument; }
};

// Enumeration or simulation exceeds the desk-scale caps.
class ResourceLimit : public Error {
 public:
  using Error::Error;
  ExitCode exit_code() const noexcept override { return ExitCode::kResourceLimit; }
};

// A measurement branch with probability zero was requested.
class ImpossibleOutcome : public Error {
 public:
  using Error::Error;
  ExitCode exit_code() const noexcept override { return ExitCode::kImpossibleOutcome; }
};

}  // namespace phase_amp
