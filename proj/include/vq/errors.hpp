#pragma once

#include <stdexcept>
#include <string>

namespace vq {

/// Malformed or inconsistent input (bad descriptor, degenerate space, ...).
struct input_error : std::runtime_error {
  explicit input_error(const std::string& what) : std::runtime_error(what) {}
};

/// An enumeration would exceed the configured size cap.
struct cap_exceeded : std::runtime_error {
  explicit cap_exceeded(const std::string& what) : std::runtime_error(what) {}
};

/// A verified proposition failed on concrete data. Signals either an
/// implementation bug or a falsified claim; carries a minimal witness.
struct theorem_violation : std::runtime_error {
  explicit theorem_violation(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace vq
