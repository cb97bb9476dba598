#pragma once

#include <stdexcept>
#include <string>

namespace kdisp {

// Enumeration-style operations refuse to start when the configured work
// budget cannot cover the instance.
struct BudgetExceeded : std::runtime_error {
  explicit BudgetExceeded(const std::string& what) : std::runtime_error(what) {}
};

struct IoError : std::runtime_error {
  explicit IoError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace kdisp
