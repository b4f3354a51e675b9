#pragma once

#include <stdexcept>
#include <string>

namespace crtube {

/// Shapes of operands do not fit together.
struct dimension_error : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// Input data violates the contract of the receiving type.
struct invalid_input : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// An operation was called outside its domain.
struct precondition_error : std::domain_error {
    using std::domain_error::domain_error;
};

/// A numeric search found nothing in its scan window.
struct out_of_range_error : std::range_error {
    using std::range_error::range_error;
};

} // namespace crtube
