#pragma once

#include <string>
#include <vector>

#include "absynth/dsl/token.hpp"

namespace absynth::dsl {

/// The six static error categories plus the repair agent's generic bucket.
enum class DiagCode {
  UnexpectedToken,
  IllegalLogicalOp,
  UnknownMetadata,
  UndefinedId,
  ShapeMismatch,
  ReservedName,
  UnknownError,
};

std::string name_of(DiagCode code);

struct Diagnostic {
  DiagCode code = DiagCode::UnknownError;
  std::string message;
  Span span;

  bool operator==(const Diagnostic&) const = default;
  std::string to_string() const;
};

using Diagnostics = std::vector<Diagnostic>;

}  // namespace absynth::dsl
