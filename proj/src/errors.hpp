#ifndef BMP_ERRORS_HPP
#define BMP_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace bmp {

// Error taxonomy mirrored by the C API status codes (see include/bmp.h).

struct ParseError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct FormatError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct ValidationError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct IndexError : std::out_of_range {
    using std::out_of_range::out_of_range;
};

struct DisconnectedError : std::runtime_error {
    DisconnectedError() : std::runtime_error("graph is disconnected") {}
    using std::runtime_error::runtime_error;
};

struct CapExceededError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct PreconditionError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

} // namespace bmp

#endif
