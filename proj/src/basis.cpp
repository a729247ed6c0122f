#include "susyanyon/basis.hpp"

#include <stdexcept>

namespace susyanyon {

std::uint64_t basis_dimension(int local_dim, int n_sites) {
    if (local_dim < 2) throw std::invalid_argument("basis: local_dim must be >= 2");
    if (n_sites < 1) throw std::invalid_argument("basis: n_sites must be >= 1");
    constexpr std::uint64_t cap = std::uint64_t{1} << 26;
    std::uint64_t dim = 1;
    for (int i = 0; i < n_sites; ++i) {
        dim *= static_cast<std::uint64_t>(local_dim);
        if (dim > cap)
            throw CapacityError("basis: d^N exceeds the 2^26 capacity limit");
    }
    return dim;
}

std::uint64_t rank_of(const ChainBasisState& state) {
    std::uint64_t r = 0;
    for (int s : state.word) {
        r = r * static_cast<std::uint64_t>(state.local_dim) + static_cast<std::uint64_t>(s);
    }
    return r;
}

ChainBasisState unrank(int local_dim, int n_sites, std::uint64_t rank) {
    ChainBasisState state;
    state.local_dim = local_dim;
    state.word.assign(n_sites, 0);
    for (int i = n_sites - 1; i >= 0; --i) {
        state.word[i] = static_cast<int>(rank % static_cast<std::uint64_t>(local_dim));
        rank /= static_cast<std::uint64_t>(local_dim);
    }
    return state;
}

std::vector<ChainBasisState> enumerate_basis(int local_dim, int n_sites) {
    const std::uint64_t dim = basis_dimension(local_dim, n_sites);
    std::vector<ChainBasisState> out;
    out.reserve(dim);
    for (std::uint64_t r = 0; r < dim; ++r) out.push_back(unrank(local_dim, n_sites, r));
    return out;
}

}  // namespace susyanyon
