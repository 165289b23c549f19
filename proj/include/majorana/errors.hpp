#pragma once

#include <stdexcept>
#include <string>

namespace majorana {

struct DomainError : std::domain_error {
    using std::domain_error::domain_error;
};

// (m, p) = (0, 0): the boost kernel has no limit there.
struct DegenerateInput : std::domain_error {
    using std::domain_error::domain_error;
};

struct NotPinElement : std::domain_error {
    using std::domain_error::domain_error;
};

struct ModeRangeError : std::out_of_range {
    using std::out_of_range::out_of_range;
};

struct GridMismatch : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

}  // namespace majorana
