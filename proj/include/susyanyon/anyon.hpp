#pragma once

#include <Eigen/Dense>
#include <boost/multiprecision/cpp_int.hpp>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "susyanyon/types.hpp"

namespace susyanyon {

using BigInt = boost::multiprecision::cpp_int;

// Multiplicity-free fusion model: N^c_{ab} in {0,1}, species 0 is the vacuum.
struct AnyonModel {
    std::string name;
    std::vector<std::string> species;      // species[0] = "1"
    int generator = 1;                     // the species whose powers we fuse
    std::vector<std::vector<std::vector<int>>> fusion;  // fusion[a][b][c] = N^c_{ab}

    int n_species() const { return static_cast<int>(species.size()); }
    bool n(int a, int b, int c) const { return fusion[a][b][c] != 0; }
    std::vector<int> fuse(int a, int b) const;
    int species_id(const std::string& name) const;  // throws if unknown
};

// level k = 2 (Ising: 1, sigma, psi), 3 (Fibonacci: 1, tau), 4 (JK: 1, tau, mu)
AnyonModel builtin_model(int level_k);

struct FusionAxiomReport {
    bool vacuum_ok = true;
    bool commutative_ok = true;
    bool associative_ok = true;
    std::vector<std::string> violations;

    bool pass() const { return vacuum_ok && commutative_ok && associative_ok; }
};

FusionAxiomReport verify_fusion_axioms(const AnyonModel& model);

// Internal-label word of a left-to-right fusion tree; label t is the fusion
// product of the first t+2 anyons. Length = n_anyons - 2 for a fixed outcome.
struct FusionSequence {
    std::vector<int> labels;

    bool operator==(const FusionSequence& o) const { return labels == o.labels; }
    bool operator<(const FusionSequence& o) const { return labels < o.labels; }
};

std::string sequence_string(const AnyonModel& model, const FusionSequence& seq);

// All internal-label words for n_anyons copies of the generator fusing to
// `outcome`, in lexicographic label order. Unreachable outcome -> empty list.
std::vector<FusionSequence> fusion_basis(const AnyonModel& model, int n_anyons,
                                         int outcome);

// Transfer-matrix recursion; equals |fusion_basis| whenever both are computed.
BigInt fusion_dim(const AnyonModel& model, int n_anyons, int outcome);

// F/R data. (F^{abc}_d)_{ij}: row i labels the (a,b) channel, column j the
// (b,c) channel. F is trivial (identity on the single admissible channel)
// whenever a, b or c is the vacuum; R^{ab}_c = 1 when a or b is the vacuum.
class FRData {
   public:
    explicit FRData(const AnyonModel& model) : model_(&model) {}

    void set_f(int a, int b, int c, int d, const Eigen::MatrixXcd& entries);
    void set_r(int a, int b, int c, cplx value);

    std::vector<int> f_rows(int a, int b, int c, int d) const;
    std::vector<int> f_cols(int a, int b, int c, int d) const;
    // 0 for inadmissible index pairs; throws MissingFRData for an absent
    // non-trivial block.
    cplx f_entry(int a, int b, int c, int d, int i, int j) const;
    cplx r(int a, int b, int c) const;

    const AnyonModel& model() const { return *model_; }

   private:
    const AnyonModel* model_;
    std::map<std::array<int, 4>, Eigen::MatrixXcd> f_;
    std::map<std::array<int, 3>, cplx> r_;
};

struct MissingFRData : std::runtime_error {
    explicit MissingFRData(const std::string& what) : std::runtime_error(what) {}
};

// Golden-ratio Fibonacci data: F^{ttt}_t = [[a, b], [b, -a]], F^{ttt}_1 = [1],
// R^{tt}_1 = mu, R^{tt}_t = lambda.
FRData fibonacci_fr_data(double a, double b, cplx r_vacuum_channel, cplx r_tau_channel);

// Max |residual| of the pentagon identity over all admissible label tuples.
double pentagon_check(const AnyonModel& model, const FRData& data);

enum class BraidOrientation { Over, Under };

// Max |residual| of the (R or R^{-1}) hexagon identity.
double hexagon_check(const AnyonModel& model, const FRData& data,
                     BraidOrientation orientation);

}  // namespace susyanyon
