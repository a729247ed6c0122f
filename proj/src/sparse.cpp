#include "susyanyon/sparse.hpp"

#include <Eigen/SVD>
#include <cmath>
#include <stdexcept>

namespace susyanyon {

SparseOperator::SparseOperator(std::int64_t rows, std::int64_t cols)
    : rows_(rows), cols_(cols) {
    if (rows < 0 || cols < 0) throw DimensionError("sparse: negative dimension");
}

SparseOperator SparseOperator::identity(std::int64_t n) {
    SparseOperator op(n, n);
    for (std::int64_t i = 0; i < n; ++i) op.entries_.emplace(op.key(i, i), cplx{1, 0});
    return op;
}

SparseOperator SparseOperator::zero(std::int64_t rows, std::int64_t cols) {
    return SparseOperator(rows, cols);
}

SparseOperator SparseOperator::from_dense(const Eigen::MatrixXcd& m) {
    SparseOperator op(m.rows(), m.cols());
    for (std::int64_t r = 0; r < m.rows(); ++r)
        for (std::int64_t c = 0; c < m.cols(); ++c)
            if (std::abs(m(r, c)) >= kPruneTol) op.entries_.emplace(op.key(r, c), m(r, c));
    return op;
}

cplx SparseOperator::entry(std::int64_t r, std::int64_t c) const {
    auto it = entries_.find(key(r, c));
    return it == entries_.end() ? cplx{0, 0} : it->second;
}

void SparseOperator::add_to(std::int64_t r, std::int64_t c, cplx v) {
    if (r < 0 || r >= rows_ || c < 0 || c >= cols_)
        throw DimensionError("sparse: index out of range");
    auto k = key(r, c);
    auto it = entries_.find(k);
    if (it == entries_.end()) {
        if (std::abs(v) >= kPruneTol) entries_.emplace(k, v);
        return;
    }
    it->second += v;
    if (std::abs(it->second) < kPruneTol) entries_.erase(it);
}

void SparseOperator::set_entry(std::int64_t r, std::int64_t c, cplx v) {
    if (r < 0 || r >= rows_ || c < 0 || c >= cols_)
        throw DimensionError("sparse: index out of range");
    auto k = key(r, c);
    if (std::abs(v) < kPruneTol) {
        entries_.erase(k);
    } else {
        entries_[k] = v;
    }
}

SparseOperator SparseOperator::adjoint() const {
    SparseOperator out(cols_, rows_);
    for (const auto& [k, v] : entries_) {
        std::int64_t r = static_cast<std::int64_t>(k / static_cast<std::uint64_t>(cols_));
        std::int64_t c = static_cast<std::int64_t>(k % static_cast<std::uint64_t>(cols_));
        out.entries_.emplace(out.key(c, r), std::conj(v));
    }
    return out;
}

SparseOperator SparseOperator::scaled(cplx s) const {
    SparseOperator out(rows_, cols_);
    if (std::abs(s) < kPruneTol) return out;
    for (const auto& [k, v] : entries_) {
        cplx w = v * s;
        if (std::abs(w) >= kPruneTol) out.entries_.emplace(k, w);
    }
    return out;
}

Eigen::VectorXcd SparseOperator::apply(const Eigen::VectorXcd& v) const {
    if (v.size() != cols_) throw DimensionError("sparse: apply dimension mismatch");
    Eigen::VectorXcd out = Eigen::VectorXcd::Zero(rows_);
    for (const auto& [k, val] : entries_) {
        std::int64_t r = static_cast<std::int64_t>(k / static_cast<std::uint64_t>(cols_));
        std::int64_t c = static_cast<std::int64_t>(k % static_cast<std::uint64_t>(cols_));
        out(r) += val * v(c);
    }
    return out;
}

Eigen::VectorXcd SparseOperator::apply_adjoint(const Eigen::VectorXcd& v) const {
    if (v.size() != rows_) throw DimensionError("sparse: apply_adjoint dimension mismatch");
    Eigen::VectorXcd out = Eigen::VectorXcd::Zero(cols_);
    for (const auto& [k, val] : entries_) {
        std::int64_t r = static_cast<std::int64_t>(k / static_cast<std::uint64_t>(cols_));
        std::int64_t c = static_cast<std::int64_t>(k % static_cast<std::uint64_t>(cols_));
        out(c) += std::conj(val) * v(r);
    }
    return out;
}

Eigen::MatrixXcd SparseOperator::to_dense() const {
    if (rows_ * cols_ > (std::int64_t{1} << 24))
        throw CapacityError("sparse: dense conversion above 2^24 entries");
    Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(rows_, cols_);
    for (const auto& [k, v] : entries_) {
        std::int64_t r = static_cast<std::int64_t>(k / static_cast<std::uint64_t>(cols_));
        std::int64_t c = static_cast<std::int64_t>(k % static_cast<std::uint64_t>(cols_));
        m(r, c) = v;
    }
    return m;
}

double SparseOperator::frobenius_norm() const {
    double s = 0;
    for (const auto& [k, v] : entries_) s += std::norm(v);
    return std::sqrt(s);
}

double SparseOperator::max_abs_entry() const {
    double s = 0;
    for (const auto& [k, v] : entries_) s = std::max(s, std::abs(v));
    return s;
}

std::vector<double> SparseOperator::column_norms() const {
    std::vector<double> s(static_cast<std::size_t>(cols_), 0.0);
    for (const auto& [k, v] : entries_)
        s[static_cast<std::size_t>(k % static_cast<std::uint64_t>(cols_))] += std::norm(v);
    for (double& x : s) x = std::sqrt(x);
    return s;
}

std::vector<double> SparseOperator::row_norms() const {
    std::vector<double> s(static_cast<std::size_t>(rows_), 0.0);
    for (const auto& [k, v] : entries_)
        s[static_cast<std::size_t>(k / static_cast<std::uint64_t>(cols_))] += std::norm(v);
    for (double& x : s) x = std::sqrt(x);
    return s;
}

SparseOperator operator*(const SparseOperator& a, const SparseOperator& b) {
    if (a.cols_ != b.rows_) throw DimensionError("sparse: compose dimension mismatch");
    // Bucket b by row for the inner loop.
    std::unordered_map<std::int64_t, std::vector<std::pair<std::int64_t, cplx>>> b_rows;
    b_rows.reserve(b.entries_.size());
    for (const auto& [k, v] : b.entries_) {
        std::int64_t r = static_cast<std::int64_t>(k / static_cast<std::uint64_t>(b.cols_));
        std::int64_t c = static_cast<std::int64_t>(k % static_cast<std::uint64_t>(b.cols_));
        b_rows[r].emplace_back(c, v);
    }
    SparseOperator out(a.rows_, b.cols_);
    for (const auto& [k, v] : a.entries_) {
        std::int64_t r = static_cast<std::int64_t>(k / static_cast<std::uint64_t>(a.cols_));
        std::int64_t m = static_cast<std::int64_t>(k % static_cast<std::uint64_t>(a.cols_));
        auto it = b_rows.find(m);
        if (it == b_rows.end()) continue;
        for (const auto& [c, w] : it->second) out.add_to(r, c, v * w);
    }
    return out;
}

SparseOperator operator+(const SparseOperator& a, const SparseOperator& b) {
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_)
        throw DimensionError("sparse: add dimension mismatch");
    SparseOperator out = a;
    for (const auto& [k, v] : b.entries_) {
        std::int64_t r = static_cast<std::int64_t>(k / static_cast<std::uint64_t>(b.cols_));
        std::int64_t c = static_cast<std::int64_t>(k % static_cast<std::uint64_t>(b.cols_));
        out.add_to(r, c, v);
    }
    return out;
}

SparseOperator operator-(const SparseOperator& a, const SparseOperator& b) {
    return a + b.scaled(cplx{-1, 0});
}

SparseOperator embed_local(const Eigen::MatrixXcd& local, int site, int n_sites) {
    if (local.rows() != local.cols()) throw DimensionError("embed: local matrix not square");
    const int d = static_cast<int>(local.rows());
    if (site < 0 || site >= n_sites) throw std::invalid_argument("embed: site out of range");

    std::uint64_t dim = 1;
    for (int i = 0; i < n_sites; ++i) {
        dim *= static_cast<std::uint64_t>(d);
        if (dim > (std::uint64_t{1} << 26))
            throw CapacityError("embed: d^N exceeds the 2^26 capacity limit");
    }
    std::uint64_t suffix = 1;
    for (int i = site + 1; i < n_sites; ++i) suffix *= static_cast<std::uint64_t>(d);
    const std::uint64_t prefix = dim / (suffix * static_cast<std::uint64_t>(d));

    SparseOperator out(static_cast<std::int64_t>(dim), static_cast<std::int64_t>(dim));
    for (int r = 0; r < d; ++r) {
        for (int c = 0; c < d; ++c) {
            const cplx v = local(r, c);
            if (std::abs(v) < kPruneTol) continue;
            for (std::uint64_t p = 0; p < prefix; ++p) {
                const std::uint64_t base_r = (p * d + r) * suffix;
                const std::uint64_t base_c = (p * d + c) * suffix;
                for (std::uint64_t s = 0; s < suffix; ++s) {
                    out.set_entry(static_cast<std::int64_t>(base_r + s),
                                  static_cast<std::int64_t>(base_c + s), v);
                }
            }
        }
    }
    return out;
}

double commutator_norm(const SparseOperator& a, const SparseOperator& b) {
    return (a * b - b * a).frobenius_norm();
}

double anticommutator_norm(const SparseOperator& a, const SparseOperator& b) {
    return (a * b + b * a).frobenius_norm();
}

KernelBasis kernel_basis(const Eigen::MatrixXcd& m, double tol) {
    if (m.rows() != m.cols()) throw DimensionError("kernel: operator not square");
    KernelBasis out;
    out.dimension = m.rows();
    out.tol = tol;
    if (m.rows() == 0) return out;

    Eigen::BDCSVD<Eigen::MatrixXcd> svd(m, Eigen::ComputeFullV);
    const auto& sv = svd.singularValues();
    const double smax = sv.size() > 0 ? sv(0) : 0.0;
    for (Eigen::Index i = 0; i < sv.size(); ++i) {
        if (sv(i) <= tol * smax) out.vectors.push_back(svd.matrixV().col(i));
    }
    return out;
}

KernelBasis kernel_basis(const SparseOperator& op, double tol) {
    if (!op.is_square()) throw DimensionError("kernel: operator not square");
    return kernel_basis(op.to_dense(), tol);
}

}  // namespace susyanyon
