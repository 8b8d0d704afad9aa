#pragma once

#include <stdexcept>
#include <string>

namespace ucg {

// Bad user input: malformed files, out-of-range parameters, inconsistent
// circuit descriptions. Maps to CLI exit code 3.
struct InputError : std::runtime_error {
    explicit InputError(const std::string& what) : std::runtime_error(what) {}
};

// Request exceeds what this build is willing to allocate (e.g. dense
// simulation of too many qubits). Maps to CLI exit code 4.
struct ResourceError : std::runtime_error {
    explicit ResourceError(const std::string& what) : std::runtime_error(what) {}
};

} // namespace ucg
