#pragma once

#include <stdexcept>
#include <string>

namespace defw {

// invalid generator index/order, context mismatch, bad grading request
struct ValidationError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// delta (or K) pushed a generator past r in strict mode
struct OrderOverflowError : std::out_of_range {
    using std::out_of_range::out_of_range;
};

struct ParseError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// an operation needs a structure the chosen quotient does not carry
struct UnsupportedError : std::logic_error {
    using std::logic_error::logic_error;
};

}  // namespace defw
