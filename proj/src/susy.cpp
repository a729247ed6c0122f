#include "susyanyon/susy.hpp"

#include <Eigen/Eigenvalues>
#include <cmath>
#include <numbers>
#include <stdexcept>

#include "susyanyon/basis.hpp"
#include "susyanyon/zeromodes.hpp"

namespace susyanyon {

int SusyModel::local_dim() const {
    switch (kind) {
        case ModelKind::QubitFib:
        case ModelKind::Nicolai:
            return 2;
        case ModelKind::DoubledJK:
        case ModelKind::IsingVariant:
            return 2 * m;
        case ModelKind::Sis:
            return sis_n;
    }
    return 2;
}

std::string SusyModel::kind_name() const {
    switch (kind) {
        case ModelKind::QubitFib: return "qubit-fib";
        case ModelKind::DoubledJK: return "doubled-jk";
        case ModelKind::IsingVariant: return "ising-variant";
        case ModelKind::Nicolai: return "nicolai";
        case ModelKind::Sis: return "sis";
    }
    return "?";
}

void SusyModel::validate() const {
    if (n_sites < 1) throw std::invalid_argument("model: n_sites must be >= 1");
    if (kind == ModelKind::DoubledJK || kind == ModelKind::IsingVariant) {
        if (m < 1) throw std::invalid_argument("model: m must be >= 1");
    }
    if (kind == ModelKind::Sis) {
        if (sis_n < 2 || sis_r < 1 || sis_r >= sis_n)
            throw std::invalid_argument("model: Sis requires 1 <= r < n");
    }
}

namespace {

// Orthonormal in-block complements of the uniform vector, discrete-Fourier
// style: v_t(k) = w^{tk}/sqrt(s), w = e^{2 pi i/s}, t = 1..s-1.
std::vector<Eigen::VectorXcd> block_zero_modes(int dim, int offset, int block) {
    std::vector<Eigen::VectorXcd> out;
    const double s = static_cast<double>(block);
    for (int t = 1; t < block; ++t) {
        Eigen::VectorXcd v = Eigen::VectorXcd::Zero(dim);
        for (int k = 0; k < block; ++k) {
            double phase = 2.0 * std::numbers::pi * t * k / s;
            v(offset + k) = cplx{std::cos(phase), std::sin(phase)} / std::sqrt(s);
        }
        out.push_back(v);
    }
    return out;
}

}  // namespace

LocalChargeSet local_supercharge(const SusyModel& model) {
    model.validate();
    const int d = model.local_dim();
    LocalChargeSet set;
    set.q = Eigen::MatrixXcd::Zero(d, d);

    switch (model.kind) {
        case ModelKind::QubitFib:
        case ModelKind::Nicolai:
            set.q(0, 1) = 1.0;  // q|f> = |b>
            break;
        case ModelKind::DoubledJK:
        case ModelKind::IsingVariant: {
            // Basis order (b_1..b_m, f_1..f_m); q maps f_i -> b_i.
            for (int i = 0; i < model.m; ++i) set.q(i, model.m + i) = 1.0;
            break;
        }
        case ModelKind::Sis: {
            const int n = model.sis_n, r = model.sis_r;
            const double scale = 1.0 / std::sqrt(static_cast<double>(r) * (n - r));
            for (int k = 0; k < r; ++k)
                for (int j = r; j < n; ++j) set.q(k, j) = scale;
            break;
        }
    }

    set.q_dag = set.q.adjoint();
    set.b_proj = set.q * set.q_dag;
    set.f_proj = set.q_dag * set.q;
    set.string_factor = Eigen::MatrixXcd::Identity(d, d) - 2.0 * set.f_proj;

    if ((set.q * set.q_dag * set.q - set.q).norm() > kScalarTol)
        throw std::logic_error("local charge: q q^dag q != q");

    if (model.kind == ModelKind::Sis) {
        const int n = model.sis_n, r = model.sis_r;
        set.boson = Eigen::VectorXcd::Zero(n);
        set.fermion = Eigen::VectorXcd::Zero(n);
        for (int k = 0; k < r; ++k) set.boson(k) = 1.0 / std::sqrt(static_cast<double>(r));
        for (int j = r; j < n; ++j)
            set.fermion(j) = 1.0 / std::sqrt(static_cast<double>(n - r));
        // Fermion-block modes first, matching the listed order for S^5_2.
        set.zero_modes = block_zero_modes(n, r, n - r);
        auto b_modes = block_zero_modes(n, 0, r);
        set.zero_modes.insert(set.zero_modes.end(), b_modes.begin(), b_modes.end());
    } else {
        const int d2 = d / 2;
        set.boson = Eigen::VectorXcd::Zero(d);
        set.fermion = Eigen::VectorXcd::Zero(d);
        set.boson(0) = 1.0;
        set.fermion(d2) = 1.0;
    }
    return set;
}

SparseOperator string_theta(const SusyModel& model, int site) {
    model.validate();
    if (site < 0 || site >= model.n_sites)
        throw std::invalid_argument("theta: site out of range");
    const LocalChargeSet local = local_supercharge(model);
    SparseOperator op = embed_local(local.q, site, model.n_sites);
    for (int k = 0; k < site; ++k)
        op = embed_local(local.string_factor, k, model.n_sites) * op;
    return op;
}

GlobalChargeSet global_supercharge(const SusyModel& model) {
    model.validate();
    const int N = model.n_sites;
    if (N < 3) throw std::invalid_argument("supercharge: needs at least 3 sites");
    if (model.kind == ModelKind::Nicolai && N % 2 == 0)
        throw std::invalid_argument("supercharge: Nicolai chain needs odd N");

    const LocalChargeSet local = local_supercharge(model);
    const std::int64_t dim =
        static_cast<std::int64_t>(basis_dimension(model.local_dim(), N));

    std::vector<SparseOperator> theta(N), theta_dag(N);
    for (int j = 0; j < N; ++j) {
        theta[j] = string_theta(model, j);
        theta_dag[j] = theta[j].adjoint();
    }

    GlobalChargeSet set;
    set.Q = SparseOperator::zero(dim, dim);

    switch (model.kind) {
        case ModelKind::QubitFib:
        case ModelKind::DoubledJK:
        case ModelKind::Sis:
            for (int j = 0; j + 2 < N; ++j)
                set.Q = set.Q + theta[j] * theta[j + 1] * theta[j + 2];
            break;
        case ModelKind::Nicolai:
            // Consecutive three-site terms skipping two sites each.
            for (int j = 0; j + 2 < N; j += 2)
                set.Q = set.Q + theta[j] * theta_dag[j + 1] * theta[j + 2];
            break;
        case ModelKind::IsingVariant: {
            for (int j = 0; j + 2 < N; ++j) {
                SparseOperator fj = embed_local(local.f_proj, j, N);
                SparseOperator fj2 = embed_local(local.f_proj, j + 2, N);
                SparseOperator bj = embed_local(local.b_proj, j, N);
                SparseOperator bj2 = embed_local(local.b_proj, j + 2, N);
                set.Q = set.Q + fj * theta[j + 1] * fj2 + bj * theta_dag[j + 1] * bj2;
            }
            break;
        }
    }

    set.Q_dag = set.Q.adjoint();
    set.H = set.Q * set.Q_dag + set.Q_dag * set.Q;

    set.P = SparseOperator::identity(dim);
    for (int j = 0; j < N; ++j) set.P = set.P * (theta[j] + theta_dag[j]);

    set.W = SparseOperator::identity(dim);
    for (int j = 0; j < N; ++j)
        set.W = set.W * embed_local(local.string_factor, j, N);

    return set;
}

SusyReport verify_susy(const SusyModel& model, std::int64_t max_dense_dim) {
    const GlobalChargeSet g = global_supercharge(model);
    const int N = model.n_sites;

    SusyReport report;
    report.q_squared = (g.Q * g.Q).frobenius_norm();
    report.h_q_commutator = commutator_norm(g.H, g.Q);
    report.h_p_commutator = commutator_norm(g.H, g.P);
    report.w_squared =
        (g.W * g.W - SparseOperator::identity(g.W.rows())).frobenius_norm();

    for (int i = 0; i < N; ++i) {
        SparseOperator ti = string_theta(model, i);
        report.theta_anticomm =
            std::max(report.theta_anticomm, (ti * ti).frobenius_norm());
        for (int j = i + 1; j < N; ++j) {
            SparseOperator tj = string_theta(model, j);
            report.theta_anticomm =
                std::max(report.theta_anticomm, anticommutator_norm(ti, tj));
        }
    }

    if (g.H.rows() <= max_dense_dim) {
        Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(g.H.to_dense(),
                                                               Eigen::EigenvaluesOnly);
        report.min_eigenvalue = solver.eigenvalues().minCoeff();
        report.min_eig_computed = true;
    }
    return report;
}

WittenIndex witten_index(const SusyModel& model) {
    const GlobalChargeSet g = global_supercharge(model);
    WittenIndex result;

    Eigen::VectorXd w_diag(g.W.rows());
    for (std::int64_t i = 0; i < g.W.rows(); ++i) w_diag(i) = g.W.entry(i, i).real();
    result.full_trace = std::llround(w_diag.sum());

    if (model.kind == ModelKind::QubitFib) {
        // H preserves the boson count; trace sector by sector.
        const CountReport census = kernel_census(model, model.n_sites);
        double trace = 0;
        int dim = 0;
        const std::uint64_t full = basis_dimension(2, model.n_sites);
        for (const auto& sector : census.sectors) {
            std::vector<std::int64_t> idx;
            for (std::uint64_t r = 0; r < full; ++r) {
                int bosons = model.n_sites - __builtin_popcountll(r);
                if (bosons == sector.n_bosons) idx.push_back(static_cast<std::int64_t>(r));
            }
            Eigen::MatrixXcd h(idx.size(), idx.size());
            for (std::size_t a = 0; a < idx.size(); ++a)
                for (std::size_t b = 0; b < idx.size(); ++b)
                    h(a, b) = g.H.entry(idx[a], idx[b]);
            KernelBasis kb = kernel_basis(h);
            dim += kb.nullity();
            for (const auto& v : kb.vectors) {
                double t = 0;
                for (std::size_t a = 0; a < idx.size(); ++a)
                    t += std::norm(v(a)) * w_diag(idx[a]);
                trace += t;
            }
        }
        result.kernel_trace_raw = trace;
        result.kernel_trace = std::llround(trace);
        result.kernel_dim = dim;
        return result;
    }

    KernelBasis kb = kernel_basis(g.H);
    double trace = 0;
    for (const auto& v : kb.vectors) {
        Eigen::VectorXcd wv = g.W.apply(v);
        trace += (v.adjoint() * wv)(0).real();
    }
    result.kernel_trace_raw = trace;
    result.kernel_trace = std::llround(trace);
    result.kernel_dim = kb.nullity();
    return result;
}

}  // namespace susyanyon
