#pragma once

#include <stdexcept>

namespace macir {

/// Input contains NaN or infinity where a finite value is required.
struct NonFiniteInput : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// Moving-average coefficients lie outside the closed invertible region.
struct NotInClosedRegion : std::domain_error {
    using std::domain_error::domain_error;
};

/// A prediction variance became non-positive, i.e. the autocovariance
/// sequence handed to the innovations recursion was not PSD.
struct DegenerateVariance : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// The innovation variance estimate collapsed to zero (constant-zero input).
struct ZeroSeries : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Dense covariance factorization failed.
struct NotPositiveDefinite : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Series too short for the requested model order (need n >= q + 1).
struct TooShortSeries : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// Every optimizer start failed to produce a finite likelihood.
struct AllStartsFailed : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct IndexOutOfRange : std::out_of_range {
    using std::out_of_range::out_of_range;
};

}  // namespace macir
