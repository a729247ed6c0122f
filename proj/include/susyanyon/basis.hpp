#pragma once

#include <cstdint>
#include <vector>

#include "susyanyon/types.hpp"

namespace susyanyon {

// A computational basis state of the chain: a length-N word over {0,...,d-1}.
// Site 0 is the most significant digit; this fixes all matrix layouts.
struct ChainBasisState {
    std::vector<int> word;
    int local_dim = 2;

    int n_sites() const { return static_cast<int>(word.size()); }
    bool operator==(const ChainBasisState& o) const {
        return local_dim == o.local_dim && word == o.word;
    }
    bool operator<(const ChainBasisState& o) const { return word < o.word; }
};

// d^N with an overflow/capacity guard (d^N must stay below 2^26).
std::uint64_t basis_dimension(int local_dim, int n_sites);

std::uint64_t rank_of(const ChainBasisState& state);
ChainBasisState unrank(int local_dim, int n_sites, std::uint64_t rank);

// All d^N states in lexicographic order.
std::vector<ChainBasisState> enumerate_basis(int local_dim, int n_sites);

}  // namespace susyanyon
