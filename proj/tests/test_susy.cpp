#include <Eigen/SVD>

#include "doctest.h"
#include "susyanyon/susy.hpp"
#include "susyanyon/zeromodes.hpp"

using namespace susyanyon;

TEST_CASE("local charges") {
    SUBCASE("qubit") {
        const LocalChargeSet local = local_supercharge(SusyModel::qubit_fib(3));
        Eigen::MatrixXcd expected = Eigen::MatrixXcd::Zero(2, 2);
        expected(0, 1) = 1.0;
        CHECK((local.q - expected).norm() == 0.0);
        CHECK((local.b_proj + local.f_proj -
               Eigen::MatrixXcd::Identity(2, 2)).norm() < kScalarTol);
        CHECK(local.zero_modes.empty());
    }

    SUBCASE("sis 3,1") {
        const LocalChargeSet local = local_supercharge(SusyModel::sis(3, 3, 1));
        const double s = 1.0 / std::sqrt(2.0);
        CHECK(std::abs(local.q(0, 1) - cplx{s, 0}) < kScalarTol);
        CHECK(std::abs(local.q(0, 2) - cplx{s, 0}) < kScalarTol);
        CHECK(local.q.norm() == doctest::Approx(1.0));
        REQUIRE(local.zero_modes.size() == 1);
        // |z> is proportional to (0, 1, -1)/sqrt(2)
        const Eigen::VectorXcd& z = local.zero_modes[0];
        CHECK((local.q * z).norm() < kScalarTol);
        CHECK((local.q_dag * z).norm() < kScalarTol);
        CHECK(std::abs(z(0)) < kScalarTol);
        CHECK(std::abs(std::abs(z(1)) - s) < kScalarTol);
        CHECK(std::abs(std::abs(z(2)) - s) < kScalarTol);
        // q|f> = |b>
        CHECK((local.q * local.fermion - local.boson).norm() < kScalarTol);
    }

    SUBCASE("sis 5,2 has three zero modes plus one boson-fermion pair") {
        const LocalChargeSet local = local_supercharge(SusyModel::sis(3, 5, 2));
        CHECK(local.zero_modes.size() == 3);
        for (const auto& z : local.zero_modes) {
            CHECK((local.q * z).norm() < kScalarTol);
            CHECK((local.q_dag * z).norm() < kScalarTol);
        }
        // numerical recovery: local kernel of qq^dag + q^dag q
        Eigen::MatrixXcd h = local.q * local.q_dag + local.q_dag * local.q;
        CHECK(kernel_basis(h).nullity() == 3);
        Eigen::BDCSVD<Eigen::MatrixXcd> svd_b(local.b_proj);
        Eigen::BDCSVD<Eigen::MatrixXcd> svd_f(local.f_proj);
        auto rank = [](const Eigen::BDCSVD<Eigen::MatrixXcd>& svd) {
            int r = 0;
            for (int i = 0; i < svd.singularValues().size(); ++i)
                if (svd.singularValues()(i) > 1e-10) ++r;
            return r;
        };
        CHECK(rank(svd_b) == 1);
        CHECK(rank(svd_f) == 1);
        CHECK((local.q * local.q_dag * local.q - local.q).norm() < kScalarTol);
    }

    SUBCASE("invalid sis parameters") {
        CHECK_THROWS_AS(local_supercharge(SusyModel::sis(3, 3, 3)),
                        std::invalid_argument);
        CHECK_THROWS_AS(local_supercharge(SusyModel::sis(3, 2, 0)),
                        std::invalid_argument);
    }
}

TEST_CASE("string thetas") {
    const SusyModel model = SusyModel::qubit_fib(4);
    const LocalChargeSet local = local_supercharge(model);

    // theta_0 has an empty string prefix
    CHECK((string_theta(model, 0) - embed_local(local.q, 0, 4)).frobenius_norm() ==
          0.0);

    // {theta_1, theta_2} = 0 and theta_j^2 = 0
    SparseOperator t1 = string_theta(model, 1);
    SparseOperator t2 = string_theta(model, 2);
    CHECK(anticommutator_norm(t1, t2) == 0.0);

    const SusyModel m5 = SusyModel::qubit_fib(5);
    for (int j = 0; j < 5; ++j) {
        SparseOperator t = string_theta(m5, j);
        CHECK((t * t).frobenius_norm() == 0.0);
    }
    CHECK_THROWS_AS(string_theta(m5, 5), std::invalid_argument);
}

TEST_CASE("theta anticommutation across models") {
    for (const SusyModel& model :
         {SusyModel::qubit_fib(6), SusyModel::doubled_jk(4), SusyModel::ising_variant(4),
          SusyModel::sis(4, 3, 1), SusyModel::sis(3, 5, 2)}) {
        std::vector<SparseOperator> thetas;
        for (int j = 0; j < model.n_sites; ++j) thetas.push_back(string_theta(model, j));
        for (std::size_t i = 0; i < thetas.size(); ++i)
            for (std::size_t j = i + 1; j < thetas.size(); ++j)
                CHECK(anticommutator_norm(thetas[i], thetas[j]) <= 1e-12);
    }
}

TEST_CASE("global supercharge for the 3-site qubit chain") {
    const GlobalChargeSet g = global_supercharge(SusyModel::qubit_fib(3));
    // Q = theta_0 theta_1 theta_2 maps |fff> to -|bbb> and kills the rest
    Eigen::MatrixXcd dense = g.Q.to_dense();
    Eigen::BDCSVD<Eigen::MatrixXcd> svd(dense);
    int rank = 0;
    for (int i = 0; i < svd.singularValues().size(); ++i)
        if (svd.singularValues()(i) > 1e-12) ++rank;
    CHECK(rank == 1);
    CHECK(std::abs(dense(0, 7) - cplx{-1, 0}) < kScalarTol);
    CHECK(std::abs(dense.norm() - 1.0) < kScalarTol);
}

TEST_CASE("supersymmetry algebra residuals") {
    for (const SusyModel& model :
         {SusyModel::qubit_fib(6), SusyModel::qubit_fib(8), SusyModel::doubled_jk(4),
          SusyModel::ising_variant(4), SusyModel::nicolai(5), SusyModel::nicolai(7),
          SusyModel::sis(5, 3, 1), SusyModel::sis(4, 5, 2)}) {
        CAPTURE(model.kind_name());
        CAPTURE(model.n_sites);
        const SusyReport report = verify_susy(model);
        CHECK(report.q_squared <= 1e-10);
        CHECK(report.h_q_commutator <= 1e-9);
        CHECK(report.h_p_commutator <= 1e-9);
        CHECK(report.w_squared <= 1e-9);
        CHECK(report.theta_anticomm <= 1e-12);
        REQUIRE(report.min_eig_computed);
        CHECK(report.min_eigenvalue >= -1e-9);
        CHECK(report.pass());
    }
}

TEST_CASE("supercharge preconditions") {
    CHECK_THROWS_AS(global_supercharge(SusyModel::qubit_fib(2)), std::invalid_argument);
    CHECK_THROWS_AS(global_supercharge(SusyModel::nicolai(4)), std::invalid_argument);
}

TEST_CASE("qubit Hamiltonian preserves the boson number") {
    const GlobalChargeSet g = global_supercharge(SusyModel::qubit_fib(5));
    // number operator: sum of local boson projectors
    Eigen::MatrixXcd nb = Eigen::MatrixXcd::Zero(2, 2);
    nb(0, 0) = 1.0;
    SparseOperator total = SparseOperator::zero(g.H.rows(), g.H.cols());
    for (int j = 0; j < 5; ++j) total = total + embed_local(nb, j, 5);
    CHECK(commutator_norm(g.H, total) <= 1e-12);
}

TEST_CASE("particle-hole operator maps zero modes to zero modes") {
    const SusyModel model = SusyModel::qubit_fib(5);
    const GlobalChargeSet g = global_supercharge(model);
    for (const auto& state : product_zero_modes(model, 5)) {
        Eigen::VectorXcd v = Eigen::VectorXcd::Zero(32);
        v(rank_of(state)) = 1.0;
        Eigen::VectorXcd image = g.P.apply(v);
        CHECK(std::abs(image.norm() - 1.0) < kScalarTol);
        CHECK(g.H.apply(image).norm() < 1e-10);
        // the image is the global b<->f flip of the input, up to sign
        ChainBasisState flipped = state;
        for (int& s : flipped.word) s = 1 - s;
        CHECK(std::abs(std::abs(image(rank_of(flipped))) - 1.0) < kScalarTol);
    }
}

TEST_CASE("witten index") {
    SUBCASE("qubit chain") {
        const WittenIndex w3 = witten_index(SusyModel::qubit_fib(3));
        CHECK(w3.kernel_dim == 6);
        CHECK(w3.full_trace == 0);
        CHECK(std::abs(w3.kernel_trace_raw - w3.kernel_trace) < 1e-8);
        // grading from total fermion parity over the six product modes:
        // bbf, bfb, fbb carry -1; bff, fbf, ffb carry +1
        CHECK(w3.kernel_trace == 0);

        for (int n = 3; n <= 6; ++n)
            CHECK(witten_index(SusyModel::qubit_fib(n)).full_trace == 0);
    }

    SUBCASE("ising variant") {
        const WittenIndex w = witten_index(SusyModel::ising_variant(4));
        CHECK(std::abs(w.kernel_trace) <= w.kernel_dim);
        CHECK(std::abs(w.kernel_trace_raw - w.kernel_trace) < 1e-6);
    }
}
