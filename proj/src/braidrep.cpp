#include "susyanyon/braidrep.hpp"

#include <cmath>
#include <map>
#include <numbers>
#include <stdexcept>

namespace susyanyon {

namespace {

constexpr double kGoldenRatio = 1.6180339887498948482;

BraidParameters finish(cplx lambda) {
    BraidParameters p;
    p.lambda = lambda;
    p.mu = -1.0 / (lambda * lambda * lambda);
    const cplx delta = -lambda * lambda - 1.0 / (lambda * lambda);
    if (std::abs(delta.imag()) > kScalarTol)
        throw std::invalid_argument("braid parameters: loop value is not real");
    p.delta = delta.real();
    if (std::abs(p.delta) <= 1.0)
        throw std::invalid_argument("braid parameters: |delta| must exceed 1");
    p.a = 1.0 / p.delta;
    p.b = std::sqrt(1.0 - p.a * p.a);
    return p;
}

}  // namespace

BraidParameters fibonacci_parameters(int branch) {
    // Unit-circle roots of -lambda^2 - lambda^{-2} = phi. The first two are
    // the hexagon-compatible ones.
    static const double angles[4] = {3.0 / 5.0, -3.0 / 5.0, 2.0 / 5.0, -2.0 / 5.0};
    if (branch < 1 || branch > 4)
        throw std::invalid_argument("fibonacci parameters: branch must be 1..4");
    const double theta = angles[branch - 1] * std::numbers::pi;
    BraidParameters p = finish(cplx{std::cos(theta), std::sin(theta)});
    // Pin the algebraic values exactly.
    p.delta = kGoldenRatio;
    p.a = 1.0 / kGoldenRatio;
    p.b = std::sqrt(1.0 - p.a * p.a);
    return p;
}

BraidParameters parameters_from_lambda(cplx lambda) { return finish(lambda); }

BraidParameters parameters_from_delta(double delta) {
    if (std::abs(delta) <= 1.0 || std::abs(delta) > 2.0)
        throw std::invalid_argument("braid parameters: need 1 < |delta| <= 2");
    // -2 cos(2 theta) = delta
    const double theta = 0.5 * std::acos(-delta / 2.0);
    return finish(cplx{std::cos(theta), std::sin(theta)});
}

B3Result b3_explicit(const BraidParameters& params) {
    const cplx l = params.lambda, m = params.mu;
    const double a = params.a, b = params.b;

    B3Result result;
    result.sigma1 << l, 0, 0, m;
    Eigen::Matrix2cd f;
    f << a, b, b, -a;
    result.sigma2 = f * result.sigma1 * f;

    result.braid_residual = (result.sigma1 * result.sigma2 * result.sigma1 -
                             result.sigma2 * result.sigma1 * result.sigma2)
                                .norm();

    // Hexagon system with trivial vacuum braiding; the vacuum-channel
    // eigenvalue is mu and the tau-channel eigenvalue lambda under the Jones
    // identification sigma = lambda I + lambda^{-1} U.
    result.constraint_residuals[0] = std::abs(a * (m * m - a) - b * b * l);
    result.constraint_residuals[1] = std::abs(a * (cplx{1, 0} - l) - m * l);
    result.constraint_residuals[2] = std::abs(-a * l * (l + a) - cplx{b * b, 0});
    return result;
}

std::vector<SparseOperator> tl_generators(int n_strands, const BraidParameters& params) {
    if (n_strands < 2) throw std::invalid_argument("tl: need at least 2 strands");
    static const AnyonModel fib = builtin_model(3);
    const int tau = 1, one = 0;
    const std::vector<FusionSequence> basis = fusion_basis(fib, n_strands, tau);

    std::map<std::vector<int>, std::int64_t> index;
    for (std::size_t i = 0; i < basis.size(); ++i)
        index.emplace(basis[i].labels, static_cast<std::int64_t>(i));

    const std::int64_t dim = static_cast<std::int64_t>(basis.size());
    const double delta = params.delta, a = params.a, b = params.b;
    const int length = n_strands - 2;

    std::vector<SparseOperator> out;
    out.reserve(n_strands - 1);
    for (int gen = 1; gen <= n_strands - 1; ++gen) {
        SparseOperator u(dim, dim);
        for (std::int64_t col = 0; col < dim; ++col) {
            // Pad with the virtual labels: vacuum, bare anyon, ..., outcome.
            std::vector<int> padded;
            padded.reserve(length + 3);
            padded.push_back(one);
            padded.push_back(tau);
            for (int l : basis[col].labels) padded.push_back(l);
            padded.push_back(tau);

            const int x = padded[gen - 1], y = padded[gen], z = padded[gen + 1];
            const bool middle_real = gen >= 2 && gen <= length + 1;

            if (x == one && y == tau && z == one) {
                u.add_to(col, col, delta);
            } else if (x == tau && z == tau) {
                if (y == one) {
                    u.add_to(col, col, a);
                    if (middle_real) {
                        std::vector<int> flipped = basis[col].labels;
                        flipped[gen - 2] = tau;
                        u.add_to(index.at(flipped), col, b);
                    }
                } else {
                    u.add_to(col, col, delta * b * b);
                    if (middle_real) {
                        std::vector<int> flipped = basis[col].labels;
                        flipped[gen - 2] = one;
                        auto it = index.find(flipped);
                        if (it != index.end()) u.add_to(it->second, col, b);
                    }
                }
            }
            // (1,tau,tau) and (tau,tau,1) windows are annihilated.
        }
        out.push_back(std::move(u));
    }
    return out;
}

BraidRepresentation braid_generators(int n_strands, const BraidParameters& params) {
    static const AnyonModel fib = builtin_model(3);
    BraidRepresentation rep;
    rep.n_strands = n_strands;
    rep.params = params;
    rep.basis = fusion_basis(fib, n_strands, 1);
    rep.tl = tl_generators(n_strands, params);

    const std::int64_t dim = rep.dimension();
    const cplx inv = 1.0 / params.lambda;
    for (const auto& u : rep.tl) {
        SparseOperator sigma = SparseOperator::identity(dim).scaled(params.lambda);
        sigma = sigma + u.scaled(inv);
        rep.sigma.push_back(std::move(sigma));
    }
    return rep;
}

BraidRepReport verify_braid_rep(const BraidRepresentation& rep) {
    BraidRepReport report;
    const auto& s = rep.sigma;
    const auto& u = rep.tl;
    const int count = static_cast<int>(s.size());
    const std::int64_t dim = rep.dimension();
    const SparseOperator id = SparseOperator::identity(dim);

    for (int i = 0; i < count; ++i) {
        if (i + 1 < count) {
            report.braid = std::max(
                report.braid,
                (s[i] * s[i + 1] * s[i] - s[i + 1] * s[i] * s[i + 1]).frobenius_norm());
            report.tl_sandwich = std::max(
                report.tl_sandwich, (u[i] * u[i + 1] * u[i] - u[i]).frobenius_norm());
            report.tl_sandwich = std::max(
                report.tl_sandwich,
                (u[i + 1] * u[i] * u[i + 1] - u[i + 1]).frobenius_norm());
        }
        for (int j = i + 2; j < count; ++j) {
            report.far_comm =
                std::max(report.far_comm, commutator_norm(s[i], s[j]));
            report.tl_far = std::max(report.tl_far, commutator_norm(u[i], u[j]));
        }
        report.tl_square = std::max(
            report.tl_square,
            (u[i] * u[i] - u[i].scaled(rep.params.delta)).frobenius_norm());
        report.unitarity = std::max(
            report.unitarity, (s[i].adjoint() * s[i] - id).frobenius_norm());

        Eigen::MatrixXcd dense = s[i].to_dense();
        Eigen::MatrixXcd inv = dense.partialPivLu().solve(
            Eigen::MatrixXcd::Identity(dim, dim));
        report.inverse =
            std::max(report.inverse, (dense * inv - Eigen::MatrixXcd::Identity(dim, dim)).norm());
    }
    return report;
}

}  // namespace susyanyon
