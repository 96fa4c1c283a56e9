#pragma once

#include <stdexcept>
#include <string>
#include <utility>

namespace ame {

/// Error with a stable machine-readable code alongside the human message.
/// Codes are part of the CLI contract: they surface in the exit-2 error
/// object as {"error":{"code":...,"message":...}}.
class Error : public std::runtime_error {
 public:
  Error(std::string code, const std::string& message)
      : std::runtime_error(message), code_(std::move(code)) {}

  const std::string& code() const noexcept { return code_; }

 private:
  std::string code_;
};

}  // namespace ame
