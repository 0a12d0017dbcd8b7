#pragma once

#include <stdexcept>
#include <string>

namespace ucfam {

/// Typed failure conditions raised by the library. Every throwing operation
/// documents which kinds it can raise; anything else reaching the caller is a bug.
enum class ErrorKind {
  DuplicateMember,
  ElementOutOfRange,
  NotAMember,
  ElementNotInUnion,
  NotRedundant,
  SourceNotUnionClosed,
  NotUnionClosed,
  NotAHomomorphism,
  NotAnIsomorphism,
  NotPure,
  ImageNotInTarget,
  InvalidMap,
  InternalContradiction,
  NoUniqueBottom,
  NoNonemptyMember,
  GroundTooLarge,
  UnionTooLarge,
  ParseError,
};

inline const char* to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::DuplicateMember: return "DuplicateMember";
    case ErrorKind::ElementOutOfRange: return "ElementOutOfRange";
    case ErrorKind::NotAMember: return "NotAMember";
    case ErrorKind::ElementNotInUnion: return "ElementNotInUnion";
    case ErrorKind::NotRedundant: return "NotRedundant";
    case ErrorKind::SourceNotUnionClosed: return "SourceNotUnionClosed";
    case ErrorKind::NotUnionClosed: return "NotUnionClosed";
    case ErrorKind::NotAHomomorphism: return "NotAHomomorphism";
    case ErrorKind::NotAnIsomorphism: return "NotAnIsomorphism";
    case ErrorKind::NotPure: return "NotPure";
    case ErrorKind::ImageNotInTarget: return "ImageNotInTarget";
    case ErrorKind::InvalidMap: return "InvalidMap";
    case ErrorKind::InternalContradiction: return "InternalContradiction";
    case ErrorKind::NoUniqueBottom: return "NoUniqueBottom";
    case ErrorKind::NoNonemptyMember: return "NoNonemptyMember";
    case ErrorKind::GroundTooLarge: return "GroundTooLarge";
    case ErrorKind::UnionTooLarge: return "UnionTooLarge";
    case ErrorKind::ParseError: return "ParseError";
  }
  return "Error";
}

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message)
      : std::runtime_error(std::string(to_string(kind)) + ": " + message), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

[[noreturn]] inline void fail(ErrorKind kind, const std::string& message) {
  throw Error(kind, message);
}

}  // namespace ucfam
