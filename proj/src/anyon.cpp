#include "susyanyon/anyon.hpp"

#include <algorithm>
#include <array>
#include <stdexcept>

namespace susyanyon {

std::vector<int> AnyonModel::fuse(int a, int b) const {
    std::vector<int> out;
    for (int c = 0; c < n_species(); ++c)
        if (n(a, b, c)) out.push_back(c);
    return out;
}

int AnyonModel::species_id(const std::string& name) const {
    for (int i = 0; i < n_species(); ++i)
        if (species[i] == name) return i;
    throw std::invalid_argument("anyon: unknown species " + name);
}

namespace {

AnyonModel empty_model(std::string name, std::vector<std::string> species) {
    AnyonModel m;
    m.name = std::move(name);
    m.species = std::move(species);
    const int s = m.n_species();
    m.fusion.assign(s, std::vector<std::vector<int>>(s, std::vector<int>(s, 0)));
    for (int a = 0; a < s; ++a) {
        m.fusion[0][a][a] = 1;
        m.fusion[a][0][a] = 1;
    }
    return m;
}

void set_rule(AnyonModel& m, int a, int b, std::vector<int> products) {
    for (int c = 0; c < m.n_species(); ++c) m.fusion[a][b][c] = 0;
    for (int c : products) m.fusion[a][b][c] = 1;
    if (a != b) {
        for (int c = 0; c < m.n_species(); ++c) m.fusion[b][a][c] = m.fusion[a][b][c];
    }
}

}  // namespace

AnyonModel builtin_model(int level_k) {
    switch (level_k) {
        case 2: {
            AnyonModel m = empty_model("ising", {"1", "s", "p"});
            m.generator = 1;  // sigma
            set_rule(m, 1, 1, {0, 2});  // s x s = 1 + p
            set_rule(m, 1, 2, {1});     // s x p = s
            set_rule(m, 2, 2, {0});     // p x p = 1
            return m;
        }
        case 3: {
            AnyonModel m = empty_model("fibonacci", {"1", "t"});
            m.generator = 1;  // tau
            set_rule(m, 1, 1, {0, 1});  // t x t = 1 + t
            return m;
        }
        case 4: {
            AnyonModel m = empty_model("jones-kauffman", {"1", "t", "m"});
            m.generator = 1;  // tau
            set_rule(m, 1, 1, {0, 1, 2});  // t x t = 1 + t + m
            set_rule(m, 1, 2, {1});        // t x m = t
            set_rule(m, 2, 2, {0});        // m x m = 1
            return m;
        }
        default:
            throw std::invalid_argument("anyon: unsupported level k");
    }
}

FusionAxiomReport verify_fusion_axioms(const AnyonModel& model) {
    FusionAxiomReport report;
    const int s = model.n_species();
    for (int a = 0; a < s; ++a) {
        for (int c = 0; c < s; ++c) {
            const int expected = a == c ? 1 : 0;
            if (model.fusion[0][a][c] != expected || model.fusion[a][0][c] != expected) {
                report.vacuum_ok = false;
                report.violations.push_back("vacuum neutrality at (" + model.species[a] +
                                            ", " + model.species[c] + ")");
            }
        }
    }
    for (int a = 0; a < s; ++a)
        for (int b = 0; b < s; ++b)
            for (int c = 0; c < s; ++c)
                if (model.fusion[a][b][c] != model.fusion[b][a][c]) {
                    report.commutative_ok = false;
                    report.violations.push_back("commutativity at (" + model.species[a] +
                                                ", " + model.species[b] + ")");
                }
    for (int a = 0; a < s; ++a)
        for (int b = 0; b < s; ++b)
            for (int c = 0; c < s; ++c)
                for (int f = 0; f < s; ++f) {
                    int lhs = 0, rhs = 0;
                    for (int e = 0; e < s; ++e) {
                        lhs += model.fusion[a][b][e] * model.fusion[e][c][f];
                        rhs += model.fusion[b][c][e] * model.fusion[a][e][f];
                    }
                    if (lhs != rhs) {
                        report.associative_ok = false;
                        report.violations.push_back(
                            "associativity at (" + model.species[a] + ", " +
                            model.species[b] + ", " + model.species[c] + ") -> " +
                            model.species[f]);
                    }
                }
    return report;
}

std::string sequence_string(const AnyonModel& model, const FusionSequence& seq) {
    std::string out;
    for (int l : seq.labels) out += model.species[l];
    return out;
}

std::vector<FusionSequence> fusion_basis(const AnyonModel& model, int n_anyons,
                                         int outcome) {
    if (n_anyons < 2) throw std::invalid_argument("fusion basis: need at least 2 anyons");
    if (outcome < 0 || outcome >= model.n_species())
        throw std::invalid_argument("fusion basis: bad outcome");
    const int g = model.generator;
    const int length = n_anyons - 2;

    std::vector<FusionSequence> out;
    std::vector<int> labels;
    auto dfs = [&](auto&& self, int depth) -> void {
        if (depth == length) {
            const int last = depth == 0 ? g : labels.back();
            if (model.n(last, g, outcome)) out.push_back(FusionSequence{labels});
            return;
        }
        const int prev = depth == 0 ? g : labels.back();
        for (int c = 0; c < model.n_species(); ++c) {
            if (!model.n(prev, g, c)) continue;
            labels.push_back(c);
            self(self, depth + 1);
            labels.pop_back();
        }
    };
    dfs(dfs, 0);
    return out;
}

BigInt fusion_dim(const AnyonModel& model, int n_anyons, int outcome) {
    if (n_anyons < 2) throw std::invalid_argument("fusion dim: need at least 2 anyons");
    const int g = model.generator;
    const int s = model.n_species();
    // counts[c] = number of partial words whose running label is c
    std::vector<BigInt> counts(s, 0);
    counts[g] = 1;
    for (int step = 0; step < n_anyons - 2; ++step) {
        std::vector<BigInt> next(s, 0);
        for (int c = 0; c < s; ++c) {
            if (counts[c] == 0) continue;
            for (int c2 = 0; c2 < s; ++c2)
                if (model.n(c, g, c2)) next[c2] += counts[c];
        }
        counts = std::move(next);
    }
    BigInt total = 0;
    for (int c = 0; c < s; ++c)
        if (model.n(c, g, outcome)) total += counts[c];
    return total;
}

void FRData::set_f(int a, int b, int c, int d, const Eigen::MatrixXcd& entries) {
    const auto rows = f_rows(a, b, c, d);
    const auto cols = f_cols(a, b, c, d);
    if (entries.rows() != static_cast<Eigen::Index>(rows.size()) ||
        entries.cols() != static_cast<Eigen::Index>(cols.size()))
        throw DimensionError("fr data: F block has the wrong shape");
    f_[{a, b, c, d}] = entries;
}

void FRData::set_r(int a, int b, int c, cplx value) { r_[{a, b, c}] = value; }

std::vector<int> FRData::f_rows(int a, int b, int c, int d) const {
    std::vector<int> rows;
    for (int i = 0; i < model_->n_species(); ++i)
        if (model_->n(a, b, i) && model_->n(i, c, d)) rows.push_back(i);
    return rows;
}

std::vector<int> FRData::f_cols(int a, int b, int c, int d) const {
    std::vector<int> cols;
    for (int j = 0; j < model_->n_species(); ++j)
        if (model_->n(b, c, j) && model_->n(a, j, d)) cols.push_back(j);
    return cols;
}

cplx FRData::f_entry(int a, int b, int c, int d, int i, int j) const {
    const auto rows = f_rows(a, b, c, d);
    const auto cols = f_cols(a, b, c, d);
    auto ri = std::find(rows.begin(), rows.end(), i);
    auto cj = std::find(cols.begin(), cols.end(), j);
    if (ri == rows.end() || cj == cols.end()) return {0, 0};

    auto it = f_.find({a, b, c, d});
    if (it != f_.end())
        return it->second(ri - rows.begin(), cj - cols.begin());

    // Vacuum-involving moves are trivial; the admissible channel is unique.
    if (a == 0 || b == 0 || c == 0) return {1, 0};
    throw MissingFRData("fr data: missing F^{" + model_->species[a] +
                        model_->species[b] + model_->species[c] + "}_" +
                        model_->species[d]);
}

cplx FRData::r(int a, int b, int c) const {
    auto it = r_.find({a, b, c});
    if (it != r_.end()) return it->second;
    if (a == 0 || b == 0) return {1, 0};
    throw MissingFRData("fr data: missing R^{" + model_->species[a] +
                        model_->species[b] + "}_" + model_->species[c]);
}

FRData fibonacci_fr_data(double a, double b, cplx r_vacuum_channel, cplx r_tau_channel) {
    static const AnyonModel model = builtin_model(3);
    FRData data(model);
    Eigen::MatrixXcd f_tau(2, 2);
    f_tau << a, b, b, -a;
    data.set_f(1, 1, 1, 1, f_tau);  // rows/cols {1, t}
    Eigen::MatrixXcd f_one(1, 1);
    f_one << 1.0;
    data.set_f(1, 1, 1, 0, f_one);  // rows/cols {t}
    data.set_r(1, 1, 0, r_vacuum_channel);
    data.set_r(1, 1, 1, r_tau_channel);
    return data;
}

double pentagon_check(const AnyonModel& model, const FRData& data) {
    const int s = model.n_species();
    double residual = 0;
    for (int a = 0; a < s; ++a)
        for (int b = 0; b < s; ++b)
            for (int c = 0; c < s; ++c)
                for (int d = 0; d < s; ++d)
                    for (int e = 0; e < s; ++e)
                        for (int f = 0; f < s; ++f)
                            for (int g = 0; g < s; ++g)
                                for (int k = 0; k < s; ++k)
                                    for (int l = 0; l < s; ++l) {
                                        const cplx lhs =
                                            data.f_entry(f, c, d, e, g, l) *
                                            data.f_entry(a, b, l, e, f, k);
                                        cplx rhs = 0;
                                        for (int h = 0; h < s; ++h) {
                                            rhs += data.f_entry(a, b, c, g, f, h) *
                                                   data.f_entry(a, h, d, e, g, k) *
                                                   data.f_entry(b, c, d, k, h, l);
                                        }
                                        residual = std::max(residual, std::abs(lhs - rhs));
                                    }
    return residual;
}

double hexagon_check(const AnyonModel& model, const FRData& data,
                     BraidOrientation orientation) {
    const int s = model.n_species();
    auto braid = [&](int a, int b, int c) {
        const cplx v = data.r(a, b, c);
        return orientation == BraidOrientation::Over ? v : cplx{1, 0} / v;
    };
    double residual = 0;
    for (int a = 0; a < s; ++a)
        for (int b = 0; b < s; ++b)
            for (int c = 0; c < s; ++c)
                for (int d = 0; d < s; ++d)
                    for (int e = 0; e < s; ++e)
                        for (int g = 0; g < s; ++g) {
                            // R^{ac}_e (F^{acb}_d)_{eg} R^{bc}_g
                            //   = sum_f (F^{cab}_d)_{ef} R^{cf}_d (F^{abc}_d)_{fg}
                            cplx lhs = 0;
                            const cplx fe = data.f_entry(a, c, b, d, e, g);
                            if (fe != cplx{0, 0})
                                lhs = braid(a, c, e) * fe * braid(b, c, g);
                            cplx rhs = 0;
                            for (int f = 0; f < s; ++f) {
                                const cplx f1 = data.f_entry(c, a, b, d, e, f);
                                if (f1 == cplx{0, 0}) continue;
                                const cplx f2 = data.f_entry(a, b, c, d, f, g);
                                if (f2 == cplx{0, 0}) continue;
                                rhs += f1 * braid(c, f, d) * f2;
                            }
                            residual = std::max(residual, std::abs(lhs - rhs));
                        }
    return residual;
}

}  // namespace susyanyon
