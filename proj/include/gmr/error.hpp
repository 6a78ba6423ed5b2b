#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace gmr {

/// Outcome classes shared by the library, the C API and the CLI exit codes.
enum class ErrorKind : std::uint8_t {
  InvalidInput = 2,
  ResourceLimit = 3,
  Violation = 1,
};

/// Library error. `code` is a short stable diagnostic identifier
/// (e.g. "E_VERSION"), `what()` the human message.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, std::string code, const std::string& message)
      : std::runtime_error(message), kind_(kind), code_(std::move(code)) {}

  ErrorKind kind() const noexcept { return kind_; }
  const std::string& code() const noexcept { return code_; }

 private:
  ErrorKind kind_;
  std::string code_;
};

[[noreturn]] inline void invalid_input(const std::string& code, const std::string& message) {
  throw Error(ErrorKind::InvalidInput, code, message);
}

[[noreturn]] inline void resource_limit(const std::string& message) {
  throw Error(ErrorKind::ResourceLimit, "E_CAP", message);
}

[[noreturn]] inline void violation(const std::string& code, const std::string& message) {
  throw Error(ErrorKind::Violation, code, message);
}

/// Size limits. Element-set operations use max_order, m-step graph methods
/// max_radical, ideal-lattice methods max_lattice.
struct Caps {
  std::uint64_t max_order = 65536;
  std::uint64_t max_radical = 4096;
  std::uint64_t max_lattice = 256;
};

}  // namespace gmr
