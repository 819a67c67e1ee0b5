#pragma once

#include <stdexcept>
#include <string>

namespace dplane {

struct error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Malformed arguments: a point outside the image, an empty set where a
// nonempty one is required, a partial map table, and so on.
struct domain_error : error {
    using error::error;
};

// A documented operation precondition does not hold for the given input.
struct precondition_error : error {
    using error::error;
};

// Text input that cannot be decoded; carries the 1-based line number.
struct parse_error : error {
    parse_error(const std::string& what, int line_number)
        : error("line " + std::to_string(line_number) + ": " + what), line(line_number) {}
    int line;
};

// A consistency check that should be unreachable has failed.
struct internal_error : error {
    using error::error;
};

}  // namespace dplane
