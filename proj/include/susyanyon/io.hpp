#pragma once

#include <string>
#include <vector>

#include "susyanyon/bridge.hpp"
#include "susyanyon/zeromodes.hpp"

namespace susyanyon {

// Model descriptors as JSON objects {kind, N, m?, n?, r?}.
std::string model_to_json(const SusyModel& model);
SusyModel model_from_json(const std::string& text);

// CSV emitters: comma-separated, LF line ends, header row first.

// (N, f_E, f_P, f_G) rows.
std::string counts_table_csv(const std::vector<CountReport>& reports);
// Long form (N, sector, kernel_dim, product, entangled); the entangled column
// carries the per-sector entangled dimensions of the published table.
std::string sector_table_csv(const std::vector<CountReport>& reports);
// (fusion_sequence, seed, chain_state) rows over all sequences and seeds.
std::string correspondence_csv(const CorrespondenceMap& map, int n_sites);
// One chain word per line after the header.
std::string zero_modes_csv(const SusyModel& model, int n_sites);

// JSON emitters (UTF-8, stable key order).
std::string fusion_basis_json(const AnyonModel& model, int n_anyons, int outcome);
// Dense complex matrices, row-major [re, im] pairs.
std::string generators_json(const BraidRepresentation& rep);

}  // namespace susyanyon
