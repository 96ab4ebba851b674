#pragma once

#include <stdexcept>
#include <string>

namespace gdm {

// Input that does not match the documented file formats or argument syntax.
struct malformed_input : std::runtime_error {
  explicit malformed_input(const std::string& what) : std::runtime_error(what) {}
};

// Well-formed input on which the requested operation is not defined:
// deletion with no surviving feasible set, enumeration above the cap,
// a packing instance whose component misses S, inverting zero, ...
struct undefined_operation : std::runtime_error {
  explicit undefined_operation(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace gdm
