// errors.hpp — Exception types shared across the library

#pragma once

#include <stdexcept>
#include <string>

namespace gaudin {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Two operands live on different SpaceSpecs.
struct SpaceMismatch : Error {
    using Error::Error;
};

// The boson cutoff leaves no truncation-safe block for the requested guard.
struct GuardExhausted : Error {
    using Error::Error;
};

// A spectral parameter fell inside the exclusion radius of a pole.
struct PoleCollision : Error {
    using Error::Error;
};

// Inhomogeneity parameters must be pairwise distinct.
struct DuplicateEpsilon : Error {
    using Error::Error;
};

// The Laurent sample matrix is numerically rank-deficient.
struct IllConditioned : Error {
    using Error::Error;
};

// A Laurent fit failed held-out validation.
struct FitRejected : Error {
    FitRejected(const std::string& what, double held_out_residual)
        : Error(what), residual(held_out_residual) {}
    double residual;
};

// Matrix dimension exceeds the configured eigensolver cap.
struct DimensionCap : Error {
    using Error::Error;
};

// The eigensolver reported failure.
struct NoConvergence : Error {
    using Error::Error;
};

} // namespace gaudin
