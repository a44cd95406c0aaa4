#pragma once

#include <stdexcept>
#include <string>

namespace flagrec {

enum class ErrorCode {
  DuplicateLabel,
  DuplicateEdge,
  SelfLoop,
  UnknownEndpoint,
  UnknownVertex,
  Disconnected,
  NotAClique,
  OrderNotPermutation,
  EmptyBoundary,
  InconsistentMatrix,
  DanglingNeighbor,
  NotReconstructible,
  MaskNotSimplyConnected,
  BadLabel,
  ParseError,
};

constexpr const char* error_code_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::DuplicateLabel: return "DuplicateLabel";
    case ErrorCode::DuplicateEdge: return "DuplicateEdge";
    case ErrorCode::SelfLoop: return "SelfLoop";
    case ErrorCode::UnknownEndpoint: return "UnknownEndpoint";
    case ErrorCode::UnknownVertex: return "UnknownVertex";
    case ErrorCode::Disconnected: return "Disconnected";
    case ErrorCode::NotAClique: return "NotAClique";
    case ErrorCode::OrderNotPermutation: return "OrderNotPermutation";
    case ErrorCode::EmptyBoundary: return "EmptyBoundary";
    case ErrorCode::InconsistentMatrix: return "InconsistentMatrix";
    case ErrorCode::DanglingNeighbor: return "DanglingNeighbor";
    case ErrorCode::NotReconstructible: return "NotReconstructible";
    case ErrorCode::MaskNotSimplyConnected: return "MaskNotSimplyConnected";
    case ErrorCode::BadLabel: return "BadLabel";
    case ErrorCode::ParseError: return "ParseError";
  }
  return "UnknownError";
}

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(std::string(error_code_name(code)) + ": " + message),
        code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string& message) {
  throw Error(code, message);
}

}  // namespace flagrec
