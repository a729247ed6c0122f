#include "susyanyon/bridge.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>

namespace susyanyon {

namespace {

bool same_class(const SusyModel& chain, int s1, int s2) {
    return site_class(chain, s1) == site_class(chain, s2);
}

int class_index(const SusyModel& chain, int symbol) {
    // b_i and f_i with the same i share an index.
    if (chain.kind == ModelKind::QubitFib) return 0;
    return symbol % chain.m;
}

}  // namespace

std::vector<int> CorrespondenceMap::seeds() const {
    std::vector<int> out;
    for (int s = 0; s < chain.local_dim(); ++s) out.push_back(s);
    return out;
}

std::vector<int> CorrespondenceMap::next_symbols(int label, int symbol) const {
    const int d = chain.local_dim();
    const SiteClass cls = site_class(chain, symbol);
    const int idx = class_index(chain, symbol);
    std::vector<int> out;

    const std::string& name = anyon.species[label];
    for (int s = 0; s < d; ++s) {
        const bool flip = site_class(chain, s) != cls;
        const bool same_idx = class_index(chain, s) == idx;
        if (name == "1") {
            if (!flip && same_idx) out.push_back(s);
        } else if (name == "m" || name == "p") {
            if (!flip && !same_idx) out.push_back(s);
        } else {  // generating species: t / s
            if (flip) out.push_back(s);
        }
    }
    return out;
}

int CorrespondenceMap::label_of(int symbol_a, int symbol_b) const {
    if (!same_class(chain, symbol_a, symbol_b)) return anyon.generator;
    if (class_index(chain, symbol_a) == class_index(chain, symbol_b)) return 0;
    // same class, different copy index
    if (anyon.name == "jones-kauffman") return anyon.species_id("m");
    if (anyon.name == "ising") return anyon.species_id("p");
    throw std::invalid_argument("correspondence: pair has no label");
}

CorrespondenceMap make_correspondence(const SusyModel& chain_model) {
    chain_model.validate();
    CorrespondenceMap map;
    map.chain = chain_model;
    switch (chain_model.kind) {
        case ModelKind::QubitFib:
            map.anyon = builtin_model(3);
            break;
        case ModelKind::DoubledJK:
            map.anyon = builtin_model(4);
            break;
        case ModelKind::IsingVariant:
            map.anyon = builtin_model(2);
            break;
        default:
            throw std::invalid_argument(
                "correspondence: defined for qubit-fib, doubled-jk, ising-variant");
    }
    return map;
}

std::vector<ChainBasisState> fusion_to_chain(const CorrespondenceMap& map,
                                             const FusionSequence& seq, int seed) {
    const int d = map.chain.local_dim();
    if (seed < 0 || seed >= d)
        throw std::invalid_argument("correspondence: seed not in the site alphabet");

    std::vector<ChainBasisState> out;
    std::vector<int> word{seed};
    auto dfs = [&](auto&& self, std::size_t pos) -> void {
        if (pos == seq.labels.size()) {
            out.push_back(ChainBasisState{word, d});
            return;
        }
        for (int s : map.next_symbols(seq.labels[pos], word.back())) {
            word.push_back(s);
            self(self, pos + 1);
            word.pop_back();
        }
    };
    dfs(dfs, 0);
    std::sort(out.begin(), out.end());
    return out;
}

FusionSequence chain_to_fusion(const CorrespondenceMap& map,
                               const ChainBasisState& state) {
    if (!is_zero_mode_word(map.chain, state.word))
        throw std::invalid_argument("correspondence: state contains a forbidden substring");
    FusionSequence seq;
    for (std::size_t i = 0; i + 1 < state.word.size(); ++i)
        seq.labels.push_back(map.label_of(state.word[i], state.word[i + 1]));
    return seq;
}

namespace {

// The label sequences feeding the correspondence for an N-site chain: the
// fusion basis of N+1 generating anyons. For the Ising model the outcome is
// forced by parity and the label set is outcome-independent in the even case.
std::vector<FusionSequence> correspondence_sequences(const CorrespondenceMap& map,
                                                     int n_sites) {
    const int n_anyons = n_sites + 1;
    if (map.chain.kind == ModelKind::IsingVariant) {
        const int outcome = n_anyons % 2 == 1 ? map.anyon.generator : 0;
        return fusion_basis(map.anyon, n_anyons, outcome);
    }
    return fusion_basis(map.anyon, n_anyons, map.anyon.generator);
}

}  // namespace

CorrespondenceReport verify_correspondence(const CorrespondenceMap& map, int n_sites) {
    CorrespondenceReport report;
    report.n_sites = n_sites;

    const auto sequences = correspondence_sequences(map, n_sites);
    std::set<std::vector<int>> image;
    bool roundtrip = true;
    for (const auto& seq : sequences) {
        for (int seed : map.seeds()) {
            for (const auto& state : fusion_to_chain(map, seq, seed)) {
                image.insert(state.word);
                if (!(chain_to_fusion(map, state) == seq)) roundtrip = false;
            }
        }
    }
    report.roundtrip_ok = roundtrip;
    report.image_size = static_cast<long>(image.size());

    std::set<std::vector<int>> zero_modes;
    for (const auto& state : product_zero_modes(map.chain, n_sites))
        zero_modes.insert(state.word);
    report.zero_mode_count = static_cast<long>(zero_modes.size());
    report.image_matches = image == zero_modes;

    switch (map.chain.kind) {
        case ModelKind::QubitFib:
            report.count_identity =
                count_product(map.chain, n_sites) ==
                2 * fusion_dim(map.anyon, n_sites + 1, map.anyon.generator);
            break;
        default:
            report.count_identity =
                report.image_size == count_product(map.chain, n_sites);
            break;
    }
    return report;
}

SparseOperator lifted_braid_generator(int i, int n_sites,
                                      const BraidParameters& params) {
    if (n_sites < 3) throw std::invalid_argument("lifted: n_sites must be >= 3");
    if (i < 1 || i > n_sites - 1)
        throw std::invalid_argument("lifted: generator index out of range");

    const CorrespondenceMap map = make_correspondence(SusyModel::qubit_fib(n_sites));
    const BraidRepresentation rep = braid_generators(n_sites + 1, params);

    // chain rank of (sequence, seed) for both particle-hole seed blocks
    const std::int64_t dim = 1LL << n_sites;
    std::vector<std::array<std::int64_t, 2>> chain_rank(rep.basis.size());
    for (std::size_t s = 0; s < rep.basis.size(); ++s) {
        for (int seed = 0; seed < 2; ++seed) {
            const auto states = fusion_to_chain(map, rep.basis[s], seed);
            chain_rank[s][seed] = static_cast<std::int64_t>(rank_of(states.at(0)));
        }
    }

    SparseOperator lifted(dim, dim);
    rep.sigma[i - 1].for_each([&](std::int64_t r, std::int64_t c, cplx v) {
        for (int seed = 0; seed < 2; ++seed)
            lifted.add_to(chain_rank[r][seed], chain_rank[c][seed], v);
    });
    return lifted;
}

LiftedReport verify_lifted(int n_sites, const BraidParameters& params) {
    LiftedReport report;
    report.n_sites = n_sites;

    std::vector<SparseOperator> sigma;
    for (int i = 1; i <= n_sites - 1; ++i)
        sigma.push_back(lifted_braid_generator(i, n_sites, params));

    for (std::size_t i = 0; i < sigma.size(); ++i) {
        if (i + 1 < sigma.size())
            report.braid = std::max(report.braid,
                                    (sigma[i] * sigma[i + 1] * sigma[i] -
                                     sigma[i + 1] * sigma[i] * sigma[i + 1])
                                        .frobenius_norm());
        for (std::size_t j = i + 2; j < sigma.size(); ++j)
            report.far_comm =
                std::max(report.far_comm, commutator_norm(sigma[i], sigma[j]));
    }

    const SusyModel model = SusyModel::qubit_fib(n_sites);
    const GlobalChargeSet g = global_supercharge(model);
    for (const auto& s : sigma) {
        report.q_commutator = std::max(report.q_commutator, commutator_norm(s, g.Q));
        report.h_commutator = std::max(report.h_commutator, commutator_norm(s, g.H));
    }

    // Annihilation of the orthogonal complement of the product zero modes:
    // computational basis states outside the zero-mode set, plus the
    // entangled kernel directions from the sector census.
    std::set<std::int64_t> pz_ranks;
    for (const auto& state : product_zero_modes(model, n_sites))
        pz_ranks.insert(static_cast<std::int64_t>(rank_of(state)));
    for (const auto& s : sigma) {
        const auto norms = s.column_norms();
        for (std::int64_t c = 0; c < s.cols(); ++c)
            if (!pz_ranks.count(c))
                report.annihilation = std::max(report.annihilation, norms[c]);
    }
    const KernelBasis kernel = kernel_basis(g.H, kKernelRelTol);
    for (const auto& v : kernel.vectors) {
        // Project out the product zero-mode coordinates.
        Eigen::VectorXcd w = v;
        for (std::int64_t r : pz_ranks) w(r) = 0;
        if (w.norm() < kScalarTol) continue;  // inside the product span
        w.normalize();
        for (const auto& s : sigma)
            report.annihilation = std::max(report.annihilation, s.apply(w).norm());
    }

    // Restriction to the zero-mode basis against two seed blocks of the
    // fusion representation.
    const CorrespondenceMap map = make_correspondence(model);
    const BraidRepresentation rep = braid_generators(n_sites + 1, params);
    const std::int64_t fusion_dim_count = rep.dimension();
    std::vector<std::int64_t> block_rank;  // seed-b block then seed-f block
    for (int seed = 0; seed < 2; ++seed)
        for (const auto& seq : rep.basis)
            block_rank.push_back(
                static_cast<std::int64_t>(rank_of(fusion_to_chain(map, seq, seed).at(0))));

    for (std::size_t gi = 0; gi < sigma.size(); ++gi) {
        const Eigen::MatrixXcd fusion_block = rep.sigma[gi].to_dense();
        Eigen::MatrixXcd restricted(2 * fusion_dim_count, 2 * fusion_dim_count);
        for (std::size_t r = 0; r < block_rank.size(); ++r)
            for (std::size_t c = 0; c < block_rank.size(); ++c)
                restricted(r, c) = sigma[gi].entry(block_rank[r], block_rank[c]);
        Eigen::MatrixXcd expected =
            Eigen::MatrixXcd::Zero(2 * fusion_dim_count, 2 * fusion_dim_count);
        expected.topLeftCorner(fusion_dim_count, fusion_dim_count) = fusion_block;
        expected.bottomRightCorner(fusion_dim_count, fusion_dim_count) = fusion_block;
        report.block_equiv =
            std::max(report.block_equiv, (restricted - expected).norm());
    }
    return report;
}

}  // namespace susyanyon
