#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace cocreate {

enum class ErrorCode {
  InvalidArgument,
  InvalidRoom,
  Io,
  SchemaError,
  UnknownAttribute,
  PageOutOfRange,
  DegenerateStroke,
  NoIntent,
  MissingDeixis,
  MissingTarget,
  BackendUnavailable,
  SchemaViolation,
  DecodeError,
  PlacementExhausted,
  NoCandidates,
  NoSpecForLabel,
  UnknownSession,
  UnknownWorkspace,
  UnknownInstance,
  UnknownWireframe,
  UnknownSuggestion,
  AlreadyResolved,
  SuggestionExpired,
  PasteBlocked,
  OutOfBounds,
};

std::string_view to_string(ErrorCode code) noexcept;

// All module failures surface as this exception; the C API maps `code()` onto
// its status enum one-to-one.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(message), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace cocreate
