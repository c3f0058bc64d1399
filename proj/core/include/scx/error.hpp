#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace scx {

enum class ErrorCode {
  kEmptyComplex,
  kMalformedFace,
  kNotAFace,
  kUnknownVertex,
  kLabelClash,
  kNoBoundary,
  kNotPure,
  kNotAClique,
  kUndefined,
  kNotPseudomanifold,
  kNotSubcomplex,
  kNotConnected,
  kBadSeed,
  kTimeout,
  kSameVertex,
  kTooSmall,
  kEmptyOutside,
  kNoEdges,
  kOutOfRange,
  kUnknownGenerator,
  kUnknownProperty,
  kParse,
  kIo,
};

std::string_view to_string(ErrorCode code);

// All library failures are reported through this type; `code()` is stable,
// the message is for humans.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(std::string(to_string(code)) + ": " + message),
        code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace scx
