#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace sprad {

enum class Errc {
  InvalidMatrix,
  NonSquare,
  NotSymmetric,
  NoConvergence,
  NegativeEntry,
  Disconnected,
  NotStronglyConnected,
  ParseError,
  InvariantViolation,
  GenerationExhausted,
  NotReproducible,
  SizeTooLarge,
  MissingExactRadius,
  InvalidConfig,
  UnknownProperty,
  IoError,
};

constexpr std::string_view to_string(Errc code) {
  switch (code) {
    case Errc::InvalidMatrix: return "InvalidMatrix";
    case Errc::NonSquare: return "NonSquare";
    case Errc::NotSymmetric: return "NotSymmetric";
    case Errc::NoConvergence: return "NoConvergence";
    case Errc::NegativeEntry: return "NegativeEntry";
    case Errc::Disconnected: return "Disconnected";
    case Errc::NotStronglyConnected: return "NotStronglyConnected";
    case Errc::ParseError: return "ParseError";
    case Errc::InvariantViolation: return "InvariantViolation";
    case Errc::GenerationExhausted: return "GenerationExhausted";
    case Errc::NotReproducible: return "NotReproducible";
    case Errc::SizeTooLarge: return "SizeTooLarge";
    case Errc::MissingExactRadius: return "MissingExactRadius";
    case Errc::InvalidConfig: return "InvalidConfig";
    case Errc::UnknownProperty: return "UnknownProperty";
    case Errc::IoError: return "IoError";
  }
  return "Unknown";
}

/// Every failure raised by the library. `line()` is the 1-based input line for
/// parse and validation errors, 0 otherwise.
class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& message, int line = 0)
      : std::runtime_error(message), code_(code), line_(line) {}

  Errc code() const noexcept { return code_; }
  int line() const noexcept { return line_; }

 private:
  Errc code_;
  int line_;
};

}  // namespace sprad
