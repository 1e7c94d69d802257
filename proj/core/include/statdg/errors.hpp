#pragma once

#include <optional>
#include <stdexcept>
#include <string>

namespace statdg {

// Error categories map onto process exit codes: config -> 1,
// numerical/state -> 2, io -> 3.
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

class ConfigError : public Error {
 public:
  explicit ConfigError(const std::string& msg) : Error(msg) {}
};

class NumericalError : public Error {
 public:
  explicit NumericalError(const std::string& msg) : Error(msg) {}
};

// Nonphysical state (negative density or pressure) detected during flux
// evaluation; annotated with the offending cell once known.
class StateError : public NumericalError {
 public:
  explicit StateError(const std::string& msg) : NumericalError(msg) {}
  StateError(const std::string& msg, int i, int j)
      : NumericalError(msg + " in cell (" + std::to_string(i) + "," +
                       std::to_string(j) + ")"),
        cell_i(i),
        cell_j(j) {}

  std::optional<int> cell_i;
  std::optional<int> cell_j;
};

class IoError : public Error {
 public:
  explicit IoError(const std::string& msg) : Error(msg) {}
};

}  // namespace statdg
