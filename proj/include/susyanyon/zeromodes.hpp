#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <map>
#include <string>
#include <vector>

#include "susyanyon/basis.hpp"
#include "susyanyon/susy.hpp"

namespace susyanyon {

using BigInt = boost::multiprecision::cpp_int;

enum class SiteClass { Boson, Fermion, Zero };

// Per-model classifier from a site symbol to its class. For Sis models the
// symbols index the rotated local basis (0 = b, 1 = f, 2.. = local zero modes),
// not the computational basis.
SiteClass site_class(const SusyModel& model, int symbol);
char site_letter(const SusyModel& model, int symbol);  // 'b','f','z' (+index for d>2)
std::string word_string(const SusyModel& model, const ChainBasisState& state);

// True iff the class word of `word` is an allowed product-zero-mode pattern:
// no three consecutive all-boson or all-fermion sites; IsingVariant further
// requires class-aligned site pairs (sites 2k, 2k+1 share a class).
bool is_zero_mode_word(const SusyModel& model, const std::vector<int>& word);

// Exact enumeration (lexicographic). Throws CapacityError when the count
// exceeds 2^22 states.
std::vector<ChainBasisState> product_zero_modes(const SusyModel& model, int n_sites);

// f_P(N) for the qubit chain: 2, 4, 6, 10, ... with f_P(0) := 1 (empty segment).
BigInt fibonacci_product_count(int n_sites);
// N-th Fibonacci number, F_1 = F_2 = 1.
BigInt fibonacci_number(int n);

// Recursion evaluation, no enumeration: f_P(N), m^N f_P(N), 2 m^N, or the Sis
// transfer count.
BigInt count_product(const SusyModel& model, int n_sites);

// Rational generating function; coefficients are exact integers and the
// denominator has constant term 1.
struct SeriesSpec {
    std::string id;
    std::vector<BigInt> numerator;    // index = power of t
    std::vector<BigInt> denominator;  // denominator[0] must be 1
};

// ids: g_F, a_F, g_JK, a_JK, g_total, e_entangled
SeriesSpec builtin_series(const std::string& id);
std::vector<std::string> builtin_series_ids();

// First k coefficients c_1..c_k (the t^1..t^k coefficients).
std::vector<BigInt> series_coefficients(const SeriesSpec& spec, int k);

struct SectorCensus {
    int n_bosons = 0;
    int dim = 0;         // sector dimension C(N, #b)
    int kernel_dim = 0;  // numerical nullity of H restricted to the sector
    int product = 0;     // product zero modes inside the sector
    int entangled = 0;   // kernel_dim - product
};

struct CountReport {
    int n_sites = 0;
    BigInt product = 0;   // f_P(N)
    int total_kernel = 0; // f_G(N)
    int entangled = 0;    // f_E(N)
    std::vector<SectorCensus> sectors;
    bool recursion_ok = true;  // f_E / f_G recursions against computed values
    std::vector<std::string> flags;
};

// Sector-wise kernel census for the qubit chain (H preserves the boson count).
CountReport kernel_census(const SusyModel& model, int n_sites);

struct SisGroup {
    std::vector<int> z_sites;   // positions carrying a local zero mode
    BigInt segment_formula = 0; // (#z-choices)^{#z} * prod f_P(segment)
    BigInt enumerated = 0;
};

struct SisCensus {
    int n_sites = 0;
    int n = 3, r = 1;
    std::vector<SisGroup> groups;  // keyed by z-position pattern
    BigInt total = 0;
    bool formula_ok = true;
};

SisCensus sis_zero_census(int n, int r, int n_sites);

}  // namespace susyanyon
