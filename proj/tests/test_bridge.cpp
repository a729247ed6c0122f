#include <set>

#include "doctest.h"
#include "susyanyon/bridge.hpp"

using namespace susyanyon;

namespace {

FusionSequence seq_of(const AnyonModel& model, const std::string& labels) {
    FusionSequence seq;
    for (char c : labels) seq.labels.push_back(model.species_id(std::string(1, c)));
    return seq;
}

std::string chain_str(const CorrespondenceMap& map, const ChainBasisState& s) {
    return word_string(map.chain, s);
}

}  // namespace

TEST_CASE("fibonacci correspondence") {
    const CorrespondenceMap map = make_correspondence(SusyModel::qubit_fib(4));

    SUBCASE("table rows for five anyons") {
        auto states = fusion_to_chain(map, seq_of(map.anyon, "1tt"), 0);
        REQUIRE(states.size() == 1);
        CHECK(chain_str(map, states[0]) == "bbfb");
        states = fusion_to_chain(map, seq_of(map.anyon, "1tt"), 1);
        REQUIRE(states.size() == 1);
        CHECK(chain_str(map, states[0]) == "ffbf");
        states = fusion_to_chain(map, seq_of(map.anyon, "t1t"), 0);
        CHECK(chain_str(map, states.at(0)) == "bffb");
    }

    SUBCASE("inverse direction") {
        ChainBasisState bfbf{{0, 1, 0, 1}, 2};
        CHECK(sequence_string(map.anyon, chain_to_fusion(map, bfbf)) == "ttt");
        ChainBasisState ffbb{{1, 1, 0, 0}, 2};
        CHECK(sequence_string(map.anyon, chain_to_fusion(map, ffbb)) == "1t1");
        ChainBasisState bbb{{0, 0, 0, 1}, 2};
        CHECK_THROWS_AS(chain_to_fusion(map, bbb), std::invalid_argument);
    }

    SUBCASE("forward image is exactly the zero-mode set") {
        for (int n = 3; n <= 10; ++n) {
            const CorrespondenceReport report = verify_correspondence(map, n);
            CAPTURE(n);
            CHECK(report.image_matches);
            CHECK(report.count_identity);
            CHECK(report.roundtrip_ok);
        }
    }

    SUBCASE("count identity f_P(N) = 2 F_{N+1}") {
        for (int n = 1; n <= 30; ++n)
            CHECK(fibonacci_product_count(n) == 2 * fibonacci_number(n + 1));
    }

    CHECK_THROWS_AS(fusion_to_chain(map, seq_of(map.anyon, "tt"), 7),
                    std::invalid_argument);
}

TEST_CASE("jones-kauffman correspondence") {
    const CorrespondenceMap map = make_correspondence(SusyModel::doubled_jk(3));

    SUBCASE("tau is one-to-many") {
        // single label tau, seed b_1: both fermion copies appear
        FusionSequence tau = seq_of(map.anyon, "t");
        const auto states = fusion_to_chain(map, tau, 0);
        std::set<std::string> words;
        for (const auto& s : states) words.insert(chain_str(map, s));
        CHECK(words == std::set<std::string>{"b1f1", "b1f2"});
    }

    SUBCASE("one and mu are deterministic") {
        const auto ones = fusion_to_chain(map, seq_of(map.anyon, "1"), 0);
        REQUIRE(ones.size() == 1);
        CHECK(chain_str(map, ones[0]) == "b1b1");
        const auto mus = fusion_to_chain(map, seq_of(map.anyon, "m"), 1);
        REQUIRE(mus.size() == 1);
        CHECK(chain_str(map, mus[0]) == "b2b1");
    }

    SUBCASE("image size equals the product count") {
        for (int n = 2; n <= 6; ++n) {
            const CorrespondenceReport report = verify_correspondence(map, n);
            CAPTURE(n);
            CHECK(report.image_matches);
            CHECK(report.image_size == count_product(map.chain, n));
            CHECK(report.roundtrip_ok);
        }
    }
}

TEST_CASE("ising correspondence") {
    const CorrespondenceMap map = make_correspondence(SusyModel::ising_variant(4));
    for (int n = 2; n <= 7; ++n) {
        const CorrespondenceReport report = verify_correspondence(map, n);
        CAPTURE(n);
        CHECK(report.image_matches);
        CHECK(report.image_size == count_product(map.chain, n));
        CHECK(report.roundtrip_ok);
    }

    // even anyon count: the outcome label does not change the sequence set
    const AnyonModel& ising = map.anyon;
    for (int anyons : {4, 6, 8}) {
        std::set<std::vector<int>> to_vacuum, to_psi;
        for (const auto& s : fusion_basis(ising, anyons, 0)) to_vacuum.insert(s.labels);
        for (const auto& s : fusion_basis(ising, anyons, 2)) to_psi.insert(s.labels);
        CHECK(to_vacuum == to_psi);
    }
}

TEST_CASE("lifted braid generators") {
    const BraidParameters params = fibonacci_parameters(1);

    SUBCASE("sigma_1 acts with the vacuum-channel twist on |bbfb>") {
        const SparseOperator sigma1 = lifted_braid_generator(1, 4, params);
        ChainBasisState bbfb{{0, 0, 1, 0}, 2};
        const auto r = rank_of(bbfb);
        Eigen::VectorXcd v = Eigen::VectorXcd::Zero(16);
        v(r) = 1.0;
        const Eigen::VectorXcd image = sigma1.apply(v);
        CHECK(std::abs(image(r) - params.mu) < 1e-12);
        Eigen::VectorXcd rest = image;
        rest(r) = 0;
        CHECK(rest.norm() < 1e-12);
    }

    SUBCASE("forbidden words are annihilated") {
        const SparseOperator sigma2 = lifted_braid_generator(2, 5, params);
        for (std::uint64_t r = 0; r < 32; ++r) {
            const ChainBasisState state = unrank(2, 5, r);
            if (is_zero_mode_word(SusyModel::qubit_fib(5), state.word)) continue;
            Eigen::VectorXcd v = Eigen::VectorXcd::Zero(32);
            v(r) = 1.0;
            CHECK(sigma2.apply(v).norm() == 0.0);
        }
    }

    SUBCASE("index bounds") {
        CHECK_THROWS_AS(lifted_braid_generator(0, 4, params), std::invalid_argument);
        CHECK_THROWS_AS(lifted_braid_generator(4, 4, params), std::invalid_argument);
        CHECK_THROWS_AS(lifted_braid_generator(1, 2, params), std::invalid_argument);
    }

    SUBCASE("full verification at N = 3, 5") {
        for (int n : {3, 5}) {
            const LiftedReport report = verify_lifted(n, params);
            CAPTURE(n);
            CHECK(report.braid <= 1e-8);
            CHECK(report.far_comm <= 1e-8);
            CHECK(report.q_commutator <= 1e-8);
            CHECK(report.h_commutator <= 1e-8);
            CHECK(report.annihilation <= 1e-8);
            CHECK(report.block_equiv <= 1e-8);
        }
    }

    SUBCASE("entangled kernel states of the 4-site chain are annihilated") {
        const GlobalChargeSet g = global_supercharge(SusyModel::qubit_fib(4));
        const KernelBasis kernel = kernel_basis(g.H);
        REQUIRE(kernel.nullity() == 12);
        std::set<std::int64_t> pz;
        for (const auto& s : product_zero_modes(SusyModel::qubit_fib(4), 4))
            pz.insert(static_cast<std::int64_t>(rank_of(s)));
        int entangled_seen = 0;
        for (const auto& v : kernel.vectors) {
            Eigen::VectorXcd w = v;
            for (std::int64_t r : pz) w(r) = 0;
            if (w.norm() < 1e-8) continue;
            w.normalize();
            ++entangled_seen;
            for (int i = 1; i <= 3; ++i) {
                const SparseOperator sigma = lifted_braid_generator(i, 4, params);
                CHECK(sigma.apply(w).norm() <= 1e-10);
            }
        }
        CHECK(entangled_seen >= 2);
    }

    SUBCASE("particle-hole flip structure") {
        // P preserves the product zero-mode span and swaps the seed blocks up
        // to string signs; the signless class flip commutes with every
        // generator exactly.
        const int n = 4;
        const SusyModel model = SusyModel::qubit_fib(n);
        const GlobalChargeSet g = global_supercharge(model);
        std::set<std::int64_t> pz;
        for (const auto& s : product_zero_modes(model, n))
            pz.insert(static_cast<std::int64_t>(rank_of(s)));

        // [P, Pi] = 0 for the coordinate projector Pi onto the zero modes
        SparseOperator proj(1 << n, 1 << n);
        for (std::int64_t r : pz) proj.set_entry(r, r, 1.0);
        CHECK(commutator_norm(g.P, proj) <= 1e-12);
        // P maps each zero-mode coordinate to the flipped coordinate
        g.P.for_each([&](std::int64_t r, std::int64_t c, cplx) {
            if (pz.count(c)) CHECK(r == ((1 << n) - 1 - c));
        });

        Eigen::MatrixXcd x(2, 2);
        x << 0, 1, 1, 0;
        SparseOperator flip = SparseOperator::identity(1 << n);
        for (int j = 0; j < n; ++j)
            flip = flip * embed_local(x, j, n);
        for (int i = 1; i <= n - 1; ++i) {
            const SparseOperator sigma = lifted_braid_generator(i, n, params);
            CHECK(commutator_norm(flip, sigma) <= 1e-12);
        }
    }
}
