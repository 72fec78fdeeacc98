#pragma once

#include <stdexcept>
#include <string>
#include <utility>

namespace qhforge {

// Every domain failure carries a stable machine-readable code alongside the
// human message; the CLI maps these to exit code 1 and serializes the code in
// JSON mode.
class Error : public std::runtime_error {
 public:
  Error(std::string code, const std::string& message)
      : std::runtime_error(message), code_(std::move(code)) {}

  const std::string& code() const noexcept { return code_; }

 private:
  std::string code_;
};

struct ZeroElementError : Error {
  explicit ZeroElementError(const std::string& message = "operation undefined on the zero element")
      : Error("ZeroElement", message) {}
};

struct NotHomogeneousError : Error {
  explicit NotHomogeneousError(const std::string& message)
      : Error("NotHomogeneous", message) {}
};

struct UnknownGeneratorError : Error {
  explicit UnknownGeneratorError(const std::string& message)
      : Error("UnknownGenerator", message) {}
};

struct RingMismatchError : Error {
  explicit RingMismatchError(const std::string& message = "elements belong to different rings")
      : Error("RingMismatch", message) {}
};

struct GroupMismatchError : Error {
  explicit GroupMismatchError(const std::string& message = "elements belong to different groups")
      : Error("GroupMismatch", message) {}
};

struct ModeMismatchError : Error {
  explicit ModeMismatchError(const std::string& message)
      : Error("ModeMismatch", message) {}
};

struct InvalidDimensionError : Error {
  explicit InvalidDimensionError(const std::string& message)
      : Error("InvalidDimension", message) {}
};

struct DegeneratePairingError : Error {
  explicit DegeneratePairingError(const std::string& message)
      : Error("DegeneratePairing", message) {}
};

struct NotAProductOfProjectiveSpacesError : Error {
  explicit NotAProductOfProjectiveSpacesError(const std::string& message)
      : Error("NotAProductOfProjectiveSpaces", message) {}
};

// Raised when an inverse exists over the Novikov field but has no finite-sum
// representation; completions are out of range for this library.
struct InexactInverseError : Error {
  explicit InexactInverseError(const std::string& message)
      : Error("InexactInverse", message) {}
};

struct ConstructionError : Error {
  explicit ConstructionError(const std::string& message)
      : Error("Construction", message) {}
};

struct ParseError : Error {
  ParseError(const std::string& message, std::size_t position)
      : Error("Parse", message + " (at position " + std::to_string(position) + ")"),
        position(position) {}

  std::size_t position;
};

}  // namespace qhforge
