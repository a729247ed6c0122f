#pragma once

#include <vector>

#include "susyanyon/anyon.hpp"
#include "susyanyon/braidrep.hpp"
#include "susyanyon/zeromodes.hpp"

namespace susyanyon {

// Fusion-label <-> site-pair transition rules. An internal label a_i occupies
// chain sites (i, i+1); adjacent labels share a site.
struct CorrespondenceMap {
    SusyModel chain;
    AnyonModel anyon;

    // Symbols admissible at the next site when the current site holds
    // `symbol` and the connecting label is `label`.
    std::vector<int> next_symbols(int label, int symbol) const;
    // Label read from an adjacent site pair.
    int label_of(int symbol_a, int symbol_b) const;
    std::vector<int> seeds() const;  // every local symbol
};

// QubitFib -> Fibonacci, DoubledJK -> JK, IsingVariant -> Ising.
CorrespondenceMap make_correspondence(const SusyModel& chain_model);

// Forward map: one chain state per branch (one for Fibonacci; 2^{#tau}-style
// sets for JK/Ising, where class flips leave the index free). Lexicographic.
std::vector<ChainBasisState> fusion_to_chain(const CorrespondenceMap& map,
                                             const FusionSequence& seq, int seed);

// Inverse map, total on product zero modes; throws std::invalid_argument on a
// forbidden word.
FusionSequence chain_to_fusion(const CorrespondenceMap& map,
                               const ChainBasisState& state);

struct CorrespondenceReport {
    int n_sites = 0;
    BigInt image_size = 0;
    BigInt zero_mode_count = 0;
    bool image_matches = false;     // forward image == product zero-mode set
    bool count_identity = false;    // model-specific closed-form count
    bool roundtrip_ok = false;      // chain_to_fusion . fusion_to_chain = id
};

CorrespondenceReport verify_correspondence(const CorrespondenceMap& map, int n_sites);

// Braid generator sigma_i (1 <= i <= N-1) lifted to the 2^N qubit chain: the
// Fibonacci fusion representation of N+1 anyons transported onto the product
// zero modes (both particle-hole seed blocks), zero on their complement.
SparseOperator lifted_braid_generator(int i, int n_sites,
                                      const BraidParameters& params);

struct LiftedReport {
    int n_sites = 0;
    double braid = 0;
    double far_comm = 0;
    double q_commutator = 0;
    double h_commutator = 0;
    double annihilation = 0;   // max |sigma_i v| over the zero-mode complement
    double block_equiv = 0;    // restriction vs fusion representation

    bool pass(double tol) const {
        return braid <= tol && far_comm <= tol && q_commutator <= tol &&
               h_commutator <= tol && annihilation <= tol && block_equiv <= tol;
    }
};

LiftedReport verify_lifted(int n_sites, const BraidParameters& params);

}  // namespace susyanyon
