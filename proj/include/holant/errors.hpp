#pragma once

#include <stdexcept>
#include <string>

namespace holant {

// Malformed instances, schema violations, bad CLI arguments.  CLI exit code 2.
struct input_error : std::runtime_error {
    explicit input_error(const std::string& what) : std::runtime_error(what) {}
};

// An evaluation exceeded a configured resource cap (edge count, tensor width).
struct cap_exceeded : std::runtime_error {
    explicit cap_exceeded(const std::string& what) : std::runtime_error(what) {}
};

// Violated internal invariant; indicates a bug, never bad user input.
struct internal_error : std::logic_error {
    explicit internal_error(const std::string& what) : std::logic_error(what) {}
};

}  // namespace holant
