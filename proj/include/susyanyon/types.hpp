#pragma once

#include <complex>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace susyanyon {

using cplx = std::complex<double>;

// Entries smaller than this are dropped from sparse storage.
inline constexpr double kPruneTol = 1e-14;
// Scalar comparisons.
inline constexpr double kScalarTol = 1e-12;
// Operator-identity residuals (norm of the difference).
inline constexpr double kOperatorTol = 1e-9;
// Relative singular-value threshold for numerical nullity.
inline constexpr double kKernelRelTol = 1e-8;

struct CapacityError : std::runtime_error {
    explicit CapacityError(const std::string& what) : std::runtime_error(what) {}
};

struct DimensionError : std::runtime_error {
    explicit DimensionError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace susyanyon
