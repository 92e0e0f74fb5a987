#pragma once

#include <stdexcept>
#include <string>

namespace toricob {

// Raised when the caller hands us something malformed: bad JSON, a zero
// action vector, rays that span a line, and so on.  CLI exit code 2.
class input_error : public std::runtime_error {
public:
    explicit input_error(const std::string& msg) : std::runtime_error(msg) {}
};

// Raised when the input was well-formed but a semantic guarantee failed:
// a non-collapsible cobordism, a splitting certificate that does not exist,
// a projection that is not injective on a cone.  CLI exit code 3.
class check_error : public std::runtime_error {
public:
    explicit check_error(const std::string& msg) : std::runtime_error(msg) {}
};

} // namespace toricob
