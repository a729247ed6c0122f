#include "susyanyon/io.hpp"

#include <nlohmann/json.hpp>
#include <sstream>

namespace susyanyon {

using ordered_json = nlohmann::ordered_json;

std::string model_to_json(const SusyModel& model) {
    ordered_json j;
    j["kind"] = model.kind_name();
    j["N"] = model.n_sites;
    if (model.kind == ModelKind::DoubledJK || model.kind == ModelKind::IsingVariant)
        j["m"] = model.m;
    if (model.kind == ModelKind::Sis) {
        j["n"] = model.sis_n;
        j["r"] = model.sis_r;
    }
    return j.dump();
}

SusyModel model_from_json(const std::string& text) {
    const auto j = ordered_json::parse(text);
    const std::string kind = j.at("kind").get<std::string>();
    SusyModel model;
    model.n_sites = j.at("N").get<int>();
    if (kind == "qubit-fib") {
        model.kind = ModelKind::QubitFib;
    } else if (kind == "doubled-jk") {
        model.kind = ModelKind::DoubledJK;
        model.m = j.value("m", 2);
    } else if (kind == "ising-variant") {
        model.kind = ModelKind::IsingVariant;
        model.m = j.value("m", 2);
    } else if (kind == "nicolai") {
        model.kind = ModelKind::Nicolai;
    } else if (kind == "sis") {
        model.kind = ModelKind::Sis;
        model.sis_n = j.at("n").get<int>();
        model.sis_r = j.at("r").get<int>();
    } else {
        throw std::invalid_argument("model json: unknown kind " + kind);
    }
    model.validate();
    return model;
}

std::string counts_table_csv(const std::vector<CountReport>& reports) {
    std::ostringstream out;
    out << "N,f_E,f_P,f_G\n";
    for (const auto& r : reports)
        out << r.n_sites << ',' << r.entangled << ',' << r.product << ','
            << r.total_kernel << '\n';
    return out.str();
}

std::string sector_table_csv(const std::vector<CountReport>& reports) {
    std::ostringstream out;
    out << "N,sector,kernel_dim,product,entangled\n";
    for (const auto& r : reports)
        for (const auto& s : r.sectors)
            out << r.n_sites << ',' << s.n_bosons << ',' << s.kernel_dim << ','
                << s.product << ',' << s.entangled << '\n';
    return out.str();
}

std::string correspondence_csv(const CorrespondenceMap& map, int n_sites) {
    std::ostringstream out;
    out << "fusion_sequence,seed,chain_state\n";
    const int n_anyons = n_sites + 1;
    const int outcome = map.chain.kind == ModelKind::IsingVariant
                            ? (n_anyons % 2 == 1 ? map.anyon.generator : 0)
                            : map.anyon.generator;
    for (const auto& seq : fusion_basis(map.anyon, n_anyons, outcome)) {
        for (int seed : map.seeds()) {
            for (const auto& state : fusion_to_chain(map, seq, seed)) {
                ChainBasisState seed_state{{seed}, map.chain.local_dim()};
                out << sequence_string(map.anyon, seq) << ','
                    << word_string(map.chain, seed_state) << ','
                    << word_string(map.chain, state) << '\n';
            }
        }
    }
    return out.str();
}

std::string zero_modes_csv(const SusyModel& model, int n_sites) {
    std::ostringstream out;
    out << "chain_state\n";
    for (const auto& state : product_zero_modes(model, n_sites))
        out << word_string(model, state) << '\n';
    return out.str();
}

std::string fusion_basis_json(const AnyonModel& model, int n_anyons, int outcome) {
    ordered_json j = ordered_json::array();
    for (const auto& seq : fusion_basis(model, n_anyons, outcome))
        j.push_back(sequence_string(model, seq));
    ordered_json root;
    root["model"] = model.name;
    root["n_anyons"] = n_anyons;
    root["outcome"] = model.species[outcome];
    root["basis"] = j;
    return root.dump(2);
}

std::string generators_json(const BraidRepresentation& rep) {
    ordered_json root;
    root["n_strands"] = rep.n_strands;
    root["dimension"] = rep.dimension();
    root["lambda"] = {rep.params.lambda.real(), rep.params.lambda.imag()};
    root["mu"] = {rep.params.mu.real(), rep.params.mu.imag()};
    root["delta"] = rep.params.delta;

    auto matrix_json = [&](const SparseOperator& op) {
        const Eigen::MatrixXcd m = op.to_dense();
        ordered_json rows = ordered_json::array();
        for (Eigen::Index r = 0; r < m.rows(); ++r) {
            ordered_json row = ordered_json::array();
            for (Eigen::Index c = 0; c < m.cols(); ++c)
                row.push_back({m(r, c).real(), m(r, c).imag()});
            rows.push_back(row);
        }
        return rows;
    };

    ordered_json sigmas = ordered_json::array();
    for (const auto& s : rep.sigma) sigmas.push_back(matrix_json(s));
    root["sigma"] = sigmas;
    ordered_json tls = ordered_json::array();
    for (const auto& u : rep.tl) tls.push_back(matrix_json(u));
    root["tl"] = tls;
    return root.dump(2);
}

}  // namespace susyanyon
