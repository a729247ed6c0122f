#pragma once

#include <Eigen/Dense>
#include <array>
#include <vector>

#include "susyanyon/anyon.hpp"
#include "susyanyon/sparse.hpp"

namespace susyanyon {

// Temperley-Lieb / Jones parameter set. Invariants: mu = -lambda^{-3},
// delta = -lambda^2 - lambda^{-2}, a = 1/delta, a^2 + b^2 = 1; at the
// golden-ratio point delta = phi and delta^2 b^4 = 1.
struct BraidParameters {
    cplx lambda;   // the Kauffman variable A
    cplx mu;       // -lambda^{-3}
    double delta;  // loop value
    double a;
    double b;
};

// The four unit-circle solutions of -lambda^2 - lambda^{-2} = phi, ordered
// e^{3 pi i/5}, e^{-3 pi i/5}, e^{2 pi i/5}, e^{-2 pi i/5}. Branches 1 and 2
// additionally satisfy the hexagon identity.
BraidParameters fibonacci_parameters(int branch = 1);

// Generic loop value: lambda on the unit circle with -lambda^2-lambda^{-2} =
// delta, a = 1/delta, b = +sqrt(1-a^2). Requires |delta| in (1, 2].
BraidParameters parameters_from_delta(double delta);
BraidParameters parameters_from_lambda(cplx lambda);

struct B3Result {
    Eigen::Matrix2cd sigma1;  // diag(lambda, mu)
    Eigen::Matrix2cd sigma2;  // F sigma1 F, F = [[a,b],[b,-a]]
    double braid_residual = 0;
    // Hexagon constraint system at (vacuum-channel, tau-channel) eigenvalues
    // (mu, lambda): a(mu^2-a)=b^2 lambda, a(1-lambda)=mu lambda,
    // -a lambda(lambda+a)=b^2.
    std::array<double, 3> constraint_residuals{};
};

B3Result b3_explicit(const BraidParameters& params);

// TL generators U_1..U_{N-1} on the Fibonacci fusion basis of n_strands
// anyons fusing to tau. Matrix elements: delta on the vacuum-diagonal states,
// (a, b; b, delta b^2) on the tau-1-tau / tau-tau-tau window pairs.
std::vector<SparseOperator> tl_generators(int n_strands, const BraidParameters& params);

struct BraidRepresentation {
    int n_strands = 2;
    BraidParameters params;
    std::vector<FusionSequence> basis;
    std::vector<SparseOperator> sigma;  // sigma_i = lambda I + lambda^{-1} U_i
    std::vector<SparseOperator> tl;

    std::int64_t dimension() const { return static_cast<std::int64_t>(basis.size()); }
};

BraidRepresentation braid_generators(int n_strands, const BraidParameters& params);

struct BraidRepReport {
    double braid = 0;        // |s_i s_{i+1} s_i - s_{i+1} s_i s_{i+1}|
    double far_comm = 0;     // |[s_i, s_j]|, |i-j| > 1
    double tl_square = 0;    // |U_i^2 - delta U_i|
    double tl_sandwich = 0;  // |U_i U_{i+-1} U_i - U_i|
    double tl_far = 0;
    double unitarity = 0;    // |s_i^dag s_i - 1|
    double inverse = 0;      // |s_i s_i^{-1} - 1|, inverse by dense solve

    bool pass(double tol = kOperatorTol) const {
        return braid <= tol && far_comm <= tol && tl_square <= tol &&
               tl_sandwich <= tol && tl_far <= tol && unitarity <= tol &&
               inverse <= tol;
    }
};

BraidRepReport verify_braid_rep(const BraidRepresentation& rep);

}  // namespace susyanyon
