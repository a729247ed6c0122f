#include <pybind11/complex.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "susyanyon/bridge.hpp"
#include "susyanyon/io.hpp"

namespace py = pybind11;
using namespace susyanyon;

namespace {

SusyModel model_from_name(const std::string& name, int n_sites, int m, int sis_n,
                          int sis_r) {
    if (name == "qubit-fib") return SusyModel::qubit_fib(n_sites);
    if (name == "jk-chain" || name == "doubled-jk") return SusyModel::doubled_jk(n_sites, m);
    if (name == "ising-chain" || name == "ising-variant")
        return SusyModel::ising_variant(n_sites, m);
    if (name == "nicolai") return SusyModel::nicolai(n_sites);
    if (name == "sis") return SusyModel::sis(n_sites, sis_n, sis_r);
    throw std::invalid_argument("unknown model " + name);
}

std::vector<std::string> zero_mode_words(const std::string& model_name, int n_sites,
                                         int m, int sis_n, int sis_r) {
    const SusyModel model = model_from_name(model_name, n_sites, m, sis_n, sis_r);
    std::vector<std::string> out;
    for (const auto& state : product_zero_modes(model, n_sites))
        out.push_back(word_string(model, state));
    return out;
}

std::string count_product_str(const std::string& model_name, int n_sites, int m,
                              int sis_n, int sis_r) {
    return count_product(model_from_name(model_name, n_sites, m, sis_n, sis_r),
                         n_sites)
        .str();
}

std::vector<std::string> series_coeff_strs(const std::string& id, int k) {
    std::vector<std::string> out;
    for (const auto& c : series_coefficients(builtin_series(id), k))
        out.push_back(c.str());
    return out;
}

py::dict census_dict(int n_sites) {
    const CountReport report = kernel_census(SusyModel::qubit_fib(n_sites), n_sites);
    py::dict d;
    d["N"] = report.n_sites;
    d["f_P"] = report.product.convert_to<long long>();
    d["f_E"] = report.entangled;
    d["f_G"] = report.total_kernel;
    d["recursion_ok"] = report.recursion_ok;
    py::list sectors;
    for (const auto& s : report.sectors) {
        py::dict sd;
        sd["bosons"] = s.n_bosons;
        sd["dim"] = s.dim;
        sd["kernel_dim"] = s.kernel_dim;
        sd["product"] = s.product;
        sd["entangled"] = s.entangled;
        sectors.append(sd);
    }
    d["sectors"] = sectors;
    return d;
}

std::string fusion_dim_str(int level, int n_anyons, const std::string& outcome) {
    const AnyonModel model = builtin_model(level);
    return fusion_dim(model, n_anyons, model.species_id(outcome)).str();
}

std::vector<std::string> fusion_basis_words(int level, int n_anyons,
                                            const std::string& outcome) {
    const AnyonModel model = builtin_model(level);
    std::vector<std::string> out;
    for (const auto& seq : fusion_basis(model, n_anyons, model.species_id(outcome)))
        out.push_back(sequence_string(model, seq));
    return out;
}

py::dict susy_report_dict(const std::string& model_name, int n_sites, int m,
                          int sis_n, int sis_r) {
    const SusyReport r =
        verify_susy(model_from_name(model_name, n_sites, m, sis_n, sis_r));
    py::dict d;
    d["q_squared"] = r.q_squared;
    d["h_q_commutator"] = r.h_q_commutator;
    d["h_p_commutator"] = r.h_p_commutator;
    d["w_squared"] = r.w_squared;
    d["theta_anticomm"] = r.theta_anticomm;
    d["min_eigenvalue"] = r.min_eigenvalue;
    d["min_eig_computed"] = r.min_eig_computed;
    d["pass"] = r.pass();
    return d;
}

py::dict braid_report_dict(int n_strands, int branch) {
    const BraidRepReport r =
        verify_braid_rep(braid_generators(n_strands, fibonacci_parameters(branch)));
    py::dict d;
    d["braid"] = r.braid;
    d["far_comm"] = r.far_comm;
    d["tl_square"] = r.tl_square;
    d["tl_sandwich"] = r.tl_sandwich;
    d["tl_far"] = r.tl_far;
    d["unitarity"] = r.unitarity;
    d["inverse"] = r.inverse;
    return d;
}

py::dict lifted_report_dict(int n_sites, int branch) {
    const LiftedReport r = verify_lifted(n_sites, fibonacci_parameters(branch));
    py::dict d;
    d["braid"] = r.braid;
    d["far_comm"] = r.far_comm;
    d["q_commutator"] = r.q_commutator;
    d["h_commutator"] = r.h_commutator;
    d["annihilation"] = r.annihilation;
    d["block_equiv"] = r.block_equiv;
    return d;
}

py::dict correspondence_dict(const std::string& model_name, int n_sites, int m) {
    const CorrespondenceMap map =
        make_correspondence(model_from_name(model_name, n_sites, m, 3, 1));
    const CorrespondenceReport r = verify_correspondence(map, n_sites);
    py::dict d;
    d["image_size"] = r.image_size.convert_to<long long>();
    d["zero_mode_count"] = r.zero_mode_count.convert_to<long long>();
    d["image_matches"] = r.image_matches;
    d["count_identity"] = r.count_identity;
    d["roundtrip_ok"] = r.roundtrip_ok;
    return d;
}

py::dict pentagon_hexagon_dict(int branch) {
    const BraidParameters p = fibonacci_parameters(branch);
    const FRData data = fibonacci_fr_data(p.a, p.b, p.mu, p.lambda);
    const AnyonModel fib = builtin_model(3);
    py::dict d;
    d["pentagon"] = pentagon_check(fib, data);
    d["hexagon_over"] = hexagon_check(fib, data, BraidOrientation::Over);
    d["hexagon_under"] = hexagon_check(fib, data, BraidOrientation::Under);
    return d;
}

py::dict witten_dict(const std::string& model_name, int n_sites, int m, int sis_n,
                     int sis_r) {
    const WittenIndex w =
        witten_index(model_from_name(model_name, n_sites, m, sis_n, sis_r));
    py::dict d;
    d["kernel_trace"] = w.kernel_trace;
    d["full_trace"] = w.full_trace;
    d["kernel_dim"] = w.kernel_dim;
    return d;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "supersymmetric spin chains, anyon fusion spaces, and braid groups";

    m.def("product_zero_modes", &zero_mode_words, py::arg("model"), py::arg("n_sites"),
          py::arg("m") = 2, py::arg("sis_n") = 3, py::arg("sis_r") = 1,
          "Product zero-mode words of a chain model, lexicographic.");
    m.def("count_product", &count_product_str, py::arg("model"), py::arg("n_sites"),
          py::arg("m") = 2, py::arg("sis_n") = 3, py::arg("sis_r") = 1,
          "Exact product zero-mode count (decimal string).");
    m.def("series_coefficients", &series_coeff_strs, py::arg("series_id"),
          py::arg("k"),
          "First k coefficients of a builtin generating function (decimal strings).");
    m.def("kernel_census", &census_dict, py::arg("n_sites"),
          "Sector-wise ground-state census of the qubit chain.");
    m.def("fusion_dim", &fusion_dim_str, py::arg("level"), py::arg("n_anyons"),
          py::arg("outcome"), "Fusion-space dimension (decimal string).");
    m.def("fusion_basis", &fusion_basis_words, py::arg("level"), py::arg("n_anyons"),
          py::arg("outcome"), "Internal-label words of the fusion basis.");
    m.def("verify_susy", &susy_report_dict, py::arg("model"), py::arg("n_sites"),
          py::arg("m") = 2, py::arg("sis_n") = 3, py::arg("sis_r") = 1,
          "Supersymmetry algebra residuals.");
    m.def("verify_braid_rep", &braid_report_dict, py::arg("n_strands"),
          py::arg("branch") = 1, "Braid/TL relation residuals.");
    m.def("verify_lifted", &lifted_report_dict, py::arg("n_sites"),
          py::arg("branch") = 1, "Residuals of the chain-lifted braid generators.");
    m.def("verify_correspondence", &correspondence_dict, py::arg("model"),
          py::arg("n_sites"), py::arg("m") = 2,
          "Fusion-basis / zero-mode correspondence checks.");
    m.def("pentagon_hexagon", &pentagon_hexagon_dict, py::arg("branch") = 1,
          "Pentagon and hexagon residuals for the golden-ratio data.");
    m.def("witten_index", &witten_dict, py::arg("model"), py::arg("n_sites"),
          py::arg("m") = 2, py::arg("sis_n") = 3, py::arg("sis_r") = 1,
          "Witten index on the kernel and the full space.");
}
