#pragma once

#include <stdexcept>
#include <string>
#include <utility>

namespace positroid {

// Every domain failure carries a stable name (e.g. "ExchangeViolation") so
// callers and the CLI can react without parsing the human-readable text.
class Error : public std::runtime_error {
 public:
  Error(std::string name, const std::string& what)
      : std::runtime_error(name + ": " + what), name_(std::move(name)) {}

  [[nodiscard]] const std::string& name() const noexcept { return name_; }

 private:
  std::string name_;
};

}  // namespace positroid
