#pragma once

#include <Eigen/Dense>
#include <optional>
#include <string>
#include <vector>

#include "susyanyon/sparse.hpp"

namespace susyanyon {

enum class ModelKind { QubitFib, DoubledJK, IsingVariant, Nicolai, Sis };

// Chain model descriptor. local_dim is derived: 2, 2m, 2m, 2, n.
struct SusyModel {
    ModelKind kind = ModelKind::QubitFib;
    int n_sites = 3;
    int m = 2;      // DoubledJK / IsingVariant copies
    int sis_n = 3;  // Sis: local dimension
    int sis_r = 1;  // Sis: boson block size, 1 <= r < n

    int local_dim() const;
    std::string kind_name() const;
    void validate() const;  // throws std::invalid_argument

    static SusyModel qubit_fib(int n_sites) { return {ModelKind::QubitFib, n_sites}; }
    static SusyModel doubled_jk(int n_sites, int m = 2) {
        return {ModelKind::DoubledJK, n_sites, m};
    }
    static SusyModel ising_variant(int n_sites, int m = 2) {
        return {ModelKind::IsingVariant, n_sites, m};
    }
    static SusyModel nicolai(int n_sites) { return {ModelKind::Nicolai, n_sites}; }
    static SusyModel sis(int n_sites, int n, int r) {
        return {ModelKind::Sis, n_sites, 2, n, r};
    }
};

// Single-site charges. q is normalized so that q q^dag q = q, which makes
// B = q q^dag and F = q^dag q projectors.
struct LocalChargeSet {
    Eigen::MatrixXcd q;
    Eigen::MatrixXcd q_dag;
    Eigen::MatrixXcd b_proj;         // B = q q^dag
    Eigen::MatrixXcd f_proj;         // F = q^dag q
    Eigen::MatrixXcd string_factor;  // S = 1 - 2F
    std::vector<Eigen::VectorXcd> zero_modes;  // ker q  ∩  ker q^dag
    Eigen::VectorXcd boson;                    // image of q (unit vector), when rank 1
    Eigen::VectorXcd fermion;                  // image of q^dag (unit vector), when rank 1
};

LocalChargeSet local_supercharge(const SusyModel& model);

// theta_j = prod_{k<j} (1 - 2 F_k) q_j   (0-based sites)
SparseOperator string_theta(const SusyModel& model, int site);

struct GlobalChargeSet {
    SparseOperator Q;
    SparseOperator Q_dag;
    SparseOperator H;  // Q Q^dag + Q^dag Q
    SparseOperator P;  // particle-hole: prod_j (theta_j + theta_j^dag)
    SparseOperator W;  // (-1)^F = prod_j (1 - 2 F_j)
};

GlobalChargeSet global_supercharge(const SusyModel& model);

struct SusyReport {
    double q_squared = 0;       // |Q^2|
    double h_q_commutator = 0;  // |[H, Q]|
    double h_p_commutator = 0;  // |[H, P]|
    double w_squared = 0;       // |W^2 - 1|
    double theta_anticomm = 0;  // max_{i != j} |{theta_i, theta_j}|
    double min_eigenvalue = 0;  // of H; only meaningful if computed
    bool min_eig_computed = false;

    bool pass(double tol = kOperatorTol) const {
        return q_squared <= tol && h_q_commutator <= tol && h_p_commutator <= tol &&
               w_squared <= tol && theta_anticomm <= tol &&
               (!min_eig_computed || min_eigenvalue >= -tol);
    }
};

// Dense eigen-decomposition of H is attempted only up to max_dense_dim.
SusyReport verify_susy(const SusyModel& model, std::int64_t max_dense_dim = 2048);

struct WittenIndex {
    long long kernel_trace = 0;   // tr W restricted to ker H, rounded
    double kernel_trace_raw = 0;  // before rounding
    long long full_trace = 0;     // tr W on the whole space
    int kernel_dim = 0;
};

WittenIndex witten_index(const SusyModel& model);

}  // namespace susyanyon
