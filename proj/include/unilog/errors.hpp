#pragma once

#include <stdexcept>
#include <string>

namespace unilog {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct DimensionError : Error {
    using Error::Error;
};

struct InvalidArgumentError : Error {
    using Error::Error;
};

// Input matrix fails the unitarity precondition. Carries the measured defect
// ‖u†u − I‖∞ so callers can report it.
struct NotUnitaryError : Error {
    double defect;
    explicit NotUnitaryError(double d)
        : Error("matrix is not unitary: defect " + std::to_string(d)), defect(d) {}
};

struct NotHermitianError : Error {
    double defect;
    explicit NotHermitianError(double d)
        : Error("matrix is not hermitian: defect " + std::to_string(d)), defect(d) {}
};

// An eigenphase lies within tolerance of the branch point θ = 0; gap
// centering did not move the spectrum off the cut.
struct BranchCutError : Error {
    double nearest_phase;
    explicit BranchCutError(double p)
        : Error("eigenphase within tolerance of the branch cut: " + std::to_string(p)),
          nearest_phase(p) {}
};

// Measured spectral gap is below the feasibility threshold.
struct GapTooSmallError : Error {
    double gap;
    explicit GapTooSmallError(double g)
        : Error("spectral gap too small for a certified series: " + std::to_string(g)),
          gap(g) {}
};

// No truncation order within the coefficient table budget certifies the
// requested accuracy.
struct TailNotCertifiableError : Error {
    double best_tail;
    int k_table;
    TailNotCertifiableError(double t, int k)
        : Error("tail bound not certifiable at table size " + std::to_string(k) +
                ": best achievable " + std::to_string(t)),
          best_tail(t),
          k_table(k) {}
};

struct QuadratureError : Error {
    using Error::Error;
};

struct InvalidPartitionError : Error {
    using Error::Error;
};

struct ParseError : Error {
    using Error::Error;
};

}  // namespace unilog
