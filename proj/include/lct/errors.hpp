#pragma once

#include <stdexcept>

namespace lct {

// Error taxonomy shared by the library and the CLI exit-code map:
// parse / integrity / domain errors exit with 2, numerical failures with 3.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct ParseError : Error {
    using Error::Error;
};

struct IntegrityError : Error {
    using Error::Error;
};

struct DomainError : Error {
    using Error::Error;
};

struct NumericalError : Error {
    using Error::Error;
};

}  // namespace lct
