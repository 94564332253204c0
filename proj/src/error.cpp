#include "cocreate/error.hpp"

namespace cocreate {

std::string_view to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::InvalidArgument: return "InvalidArgument";
    case ErrorCode::InvalidRoom: return "InvalidRoom";
    case ErrorCode::Io: return "Io";
    case ErrorCode::SchemaError: return "SchemaError";
    case ErrorCode::UnknownAttribute: return "UnknownAttribute";
    case ErrorCode::PageOutOfRange: return "PageOutOfRange";
    case ErrorCode::DegenerateStroke: return "DegenerateStroke";
    case ErrorCode::NoIntent: return "NoIntent";
    case ErrorCode::MissingDeixis: return "MissingDeixis";
    case ErrorCode::MissingTarget: return "MissingTarget";
    case ErrorCode::BackendUnavailable: return "BackendUnavailable";
    case ErrorCode::SchemaViolation: return "SchemaViolation";
    case ErrorCode::DecodeError: return "DecodeError";
    case ErrorCode::PlacementExhausted: return "PlacementExhausted";
    case ErrorCode::NoCandidates: return "NoCandidates";
    case ErrorCode::NoSpecForLabel: return "NoSpecForLabel";
    case ErrorCode::UnknownSession: return "UnknownSession";
    case ErrorCode::UnknownWorkspace: return "UnknownWorkspace";
    case ErrorCode::UnknownInstance: return "UnknownInstance";
    case ErrorCode::UnknownWireframe: return "UnknownWireframe";
    case ErrorCode::UnknownSuggestion: return "UnknownSuggestion";
    case ErrorCode::AlreadyResolved: return "AlreadyResolved";
    case ErrorCode::SuggestionExpired: return "SuggestionExpired";
    case ErrorCode::PasteBlocked: return "PasteBlocked";
    case ErrorCode::OutOfBounds: return "OutOfBounds";
  }
  return "Unknown";
}

}  // namespace cocreate
