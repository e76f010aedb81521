#pragma once

#include <stdexcept>
#include <string>

namespace sn {

/// Raised for mathematically invalid requests (rank mismatch, zero input,
/// unsupported descriptor class, ...). `code()` is a stable machine-readable
/// identifier; `what()` is the human message.
class DomainError : public std::runtime_error {
 public:
  DomainError(std::string code, const std::string& message)
      : std::runtime_error(message), code_(std::move(code)) {}

  const std::string& code() const noexcept { return code_; }

 private:
  std::string code_;
};

}  // namespace sn
