#pragma once

#include <stdexcept>

namespace tempo {

// Base class of every error thrown by the library.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Malformed input text: graph files, edge lists, decimal literals.
struct ParseError : Error {
    using Error::Error;
};

// A vertex, edge or fixture name that does not exist.
struct LookupError : Error {
    using Error::Error;
};

// Enumeration refused: the instance has a zero-cost edge, so the efficient
// set would contain walks and no delay bound can be given. The Pareto-front
// queries remain available.
struct ZeroCostError : Error {
    using Error::Error;
};

// Brute-force helpers refuse instances above the configured size cap.
struct SizeGuardError : Error {
    using Error::Error;
};

}  // namespace tempo
