#pragma once

#include <stdexcept>
#include <string>
#include <utility>

namespace circode {

// Library errors carry a short machine-readable kind ("invalid-input",
// "not-a-cover", ...) next to the human-readable detail. The CLI prints
// both and maps every thrown error to exit code 2.
class error : public std::runtime_error {
 public:
  error(std::string kind, const std::string& detail)
      : std::runtime_error(kind + ": " + detail), kind_(std::move(kind)) {}

  const std::string& kind() const noexcept { return kind_; }

 private:
  std::string kind_;
};

[[noreturn]] inline void fail(const std::string& kind, const std::string& detail) {
  throw error(kind, detail);
}

}  // namespace circode
