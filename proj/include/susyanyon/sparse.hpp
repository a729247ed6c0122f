#pragma once

#include <Eigen/Dense>
#include <cstdint>
#include <unordered_map>
#include <vector>

#include "susyanyon/types.hpp"

namespace susyanyon {

// Complex sparse matrix with explicit dimensions. Stored entries always have
// modulus >= kPruneTol; arithmetic prunes on the fly.
class SparseOperator {
   public:
    SparseOperator() = default;
    SparseOperator(std::int64_t rows, std::int64_t cols);

    static SparseOperator identity(std::int64_t n);
    static SparseOperator zero(std::int64_t rows, std::int64_t cols);
    static SparseOperator from_dense(const Eigen::MatrixXcd& m);

    std::int64_t rows() const { return rows_; }
    std::int64_t cols() const { return cols_; }
    bool is_square() const { return rows_ == cols_; }
    std::size_t nnz() const { return entries_.size(); }

    cplx entry(std::int64_t r, std::int64_t c) const;
    void add_to(std::int64_t r, std::int64_t c, cplx v);
    void set_entry(std::int64_t r, std::int64_t c, cplx v);

    SparseOperator adjoint() const;
    SparseOperator scaled(cplx s) const;

    Eigen::VectorXcd apply(const Eigen::VectorXcd& v) const;
    Eigen::VectorXcd apply_adjoint(const Eigen::VectorXcd& v) const;
    Eigen::MatrixXcd to_dense() const;  // guarded: rows*cols <= 2^24

    double frobenius_norm() const;
    double max_abs_entry() const;
    // Euclidean norm of every column (norm of op|e_c> for each basis state c).
    std::vector<double> column_norms() const;
    std::vector<double> row_norms() const;

    // Iteration support: (row, col, value) triplets in unspecified order.
    template <typename Fn>
    void for_each(Fn&& fn) const {
        for (const auto& [key, v] : entries_) {
            fn(static_cast<std::int64_t>(key / static_cast<std::uint64_t>(cols_)),
               static_cast<std::int64_t>(key % static_cast<std::uint64_t>(cols_)), v);
        }
    }

    friend SparseOperator operator*(const SparseOperator& a, const SparseOperator& b);
    friend SparseOperator operator+(const SparseOperator& a, const SparseOperator& b);
    friend SparseOperator operator-(const SparseOperator& a, const SparseOperator& b);

   private:
    std::int64_t rows_ = 0, cols_ = 0;
    std::unordered_map<std::uint64_t, cplx> entries_;

    std::uint64_t key(std::int64_t r, std::int64_t c) const {
        return static_cast<std::uint64_t>(r) * static_cast<std::uint64_t>(cols_) +
               static_cast<std::uint64_t>(c);
    }
};

// I^{site} (x) M (x) I^{n_sites-site-1} on the d^n_sites chain, d = M.rows().
SparseOperator embed_local(const Eigen::MatrixXcd& local, int site, int n_sites);

// Frobenius norm of AB - BA.
double commutator_norm(const SparseOperator& a, const SparseOperator& b);
double anticommutator_norm(const SparseOperator& a, const SparseOperator& b);

// Orthonormal basis of the numerical null space {v : |op v| <= tol |op|}.
struct KernelBasis {
    std::int64_t dimension = 0;          // ambient dimension
    std::vector<Eigen::VectorXcd> vectors;
    double tol = kKernelRelTol;

    int nullity() const { return static_cast<int>(vectors.size()); }
};

KernelBasis kernel_basis(const SparseOperator& op, double tol = kKernelRelTol);
KernelBasis kernel_basis(const Eigen::MatrixXcd& m, double tol = kKernelRelTol);

}  // namespace susyanyon
