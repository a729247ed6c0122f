#include "susyanyon/zeromodes.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace susyanyon {

SiteClass site_class(const SusyModel& model, int symbol) {
    const int d = model.local_dim();
    if (symbol < 0 || symbol >= d) throw std::invalid_argument("site_class: bad symbol");
    switch (model.kind) {
        case ModelKind::QubitFib:
        case ModelKind::Nicolai:
            return symbol == 0 ? SiteClass::Boson : SiteClass::Fermion;
        case ModelKind::DoubledJK:
        case ModelKind::IsingVariant:
            return symbol < model.m ? SiteClass::Boson : SiteClass::Fermion;
        case ModelKind::Sis:
            if (symbol == 0) return SiteClass::Boson;
            if (symbol == 1) return SiteClass::Fermion;
            return SiteClass::Zero;
    }
    return SiteClass::Boson;
}

char site_letter(const SusyModel& model, int symbol) {
    switch (site_class(model, symbol)) {
        case SiteClass::Boson: return 'b';
        case SiteClass::Fermion: return 'f';
        case SiteClass::Zero: return 'z';
    }
    return '?';
}

std::string word_string(const SusyModel& model, const ChainBasisState& state) {
    std::string out;
    const bool indexed = model.local_dim() > 2;
    for (int s : state.word) {
        out.push_back(site_letter(model, s));
        if (indexed) {
            int idx = 0;
            switch (model.kind) {
                case ModelKind::DoubledJK:
                case ModelKind::IsingVariant:
                    idx = (s % model.m) + 1;
                    break;
                case ModelKind::Sis:
                    idx = s < 2 ? 0 : s - 1;  // z modes are numbered, b/f are not
                    break;
                default:
                    break;
            }
            if (idx > 0) out += std::to_string(idx);
        }
    }
    return out;
}

bool is_zero_mode_word(const SusyModel& model, const std::vector<int>& word) {
    const int N = static_cast<int>(word.size());
    std::vector<SiteClass> cls(N);
    for (int i = 0; i < N; ++i) cls[i] = site_class(model, word[i]);

    for (int i = 0; i + 2 < N; ++i) {
        if (cls[i] == cls[i + 1] && cls[i + 1] == cls[i + 2] &&
            cls[i] != SiteClass::Zero)
            return false;
    }
    if (model.kind == ModelKind::IsingVariant) {
        // Classes come in aligned pairs: sites (0,1), (2,3), ... share a class
        // and consecutive pairs alternate.
        for (int i = 0; i + 1 < N; ++i) {
            const bool same = cls[i] == cls[i + 1];
            if (i % 2 == 0 && !same) return false;
            if (i % 2 == 1 && same) return false;
        }
    }
    return true;
}

namespace {

void enumerate_words(const SusyModel& model, int n_sites, std::vector<int>& word,
                     std::vector<ChainBasisState>& out) {
    const int d = model.local_dim();
    const int pos = static_cast<int>(word.size());
    if (pos == n_sites) {
        out.push_back(ChainBasisState{word, d});
        return;
    }
    for (int s = 0; s < d; ++s) {
        const SiteClass c = site_class(model, s);
        if (pos >= 2 && c != SiteClass::Zero) {
            if (site_class(model, word[pos - 1]) == c &&
                site_class(model, word[pos - 2]) == c)
                continue;
        }
        if (model.kind == ModelKind::IsingVariant && pos >= 1) {
            const bool same = site_class(model, word[pos - 1]) == c;
            if (pos % 2 == 1 && !same) continue;
            if (pos % 2 == 0 && same) continue;
        }
        word.push_back(s);
        enumerate_words(model, n_sites, word, out);
        word.pop_back();
    }
}

}  // namespace

std::vector<ChainBasisState> product_zero_modes(const SusyModel& model, int n_sites) {
    model.validate();
    if (n_sites < 1) throw std::invalid_argument("zero modes: n_sites must be >= 1");
    if (model.kind == ModelKind::Nicolai)
        throw std::invalid_argument("zero modes: no product enumeration for the Nicolai variant");
    if (count_product(model, n_sites) > BigInt(1) << 22)
        throw CapacityError("zero modes: enumeration above 2^22 states");

    std::vector<ChainBasisState> out;
    std::vector<int> word;
    word.reserve(n_sites);
    enumerate_words(model, n_sites, word, out);
    return out;
}

BigInt fibonacci_product_count(int n_sites) {
    if (n_sites < 0) throw std::invalid_argument("f_P: negative N");
    if (n_sites == 0) return 1;  // empty segment
    BigInt a = 2, b = 4;  // f_P(1), f_P(2)
    if (n_sites == 1) return a;
    for (int i = 3; i <= n_sites; ++i) {
        BigInt c = a + b;
        a = b;
        b = c;
    }
    return b;
}

BigInt fibonacci_number(int n) {
    if (n < 1) throw std::invalid_argument("fibonacci: n must be >= 1");
    BigInt a = 1, b = 1;
    for (int i = 3; i <= n; ++i) {
        BigInt c = a + b;
        a = b;
        b = c;
    }
    return n == 1 ? a : b;
}

namespace {

BigInt ipow(BigInt base, int e) {
    BigInt out = 1;
    for (int i = 0; i < e; ++i) out *= base;
    return out;
}

// Weighted transfer count over site classes {B, F, Z} with z-multiplicity w,
// forbidding BBB and FFF windows.
BigInt sis_transfer_count(int z_weight, int n_sites) {
    if (n_sites == 1) return BigInt(2) + z_weight;
    struct Key {
        SiteClass c1, c2;
        bool operator<(const Key& o) const {
            return std::tie(c1, c2) < std::tie(o.c1, o.c2);
        }
    };
    const SiteClass classes[3] = {SiteClass::Boson, SiteClass::Fermion, SiteClass::Zero};
    auto weight = [&](SiteClass c) { return c == SiteClass::Zero ? BigInt(z_weight) : BigInt(1); };

    std::map<Key, BigInt> dp;
    for (SiteClass c1 : classes)
        for (SiteClass c2 : classes) dp[Key{c1, c2}] = weight(c1) * weight(c2);

    for (int pos = 2; pos < n_sites; ++pos) {
        std::map<Key, BigInt> next;
        for (const auto& [key, count] : dp) {
            for (SiteClass c : classes) {
                if (c != SiteClass::Zero && key.c1 == c && key.c2 == c) continue;
                next[Key{key.c2, c}] += count * weight(c);
            }
        }
        dp = std::move(next);
    }
    BigInt total = 0;
    for (const auto& [key, count] : dp) total += count;
    return total;
}

}  // namespace

BigInt count_product(const SusyModel& model, int n_sites) {
    model.validate();
    switch (model.kind) {
        case ModelKind::QubitFib:
            return fibonacci_product_count(n_sites);
        case ModelKind::DoubledJK:
            return ipow(model.m, n_sites) * fibonacci_product_count(n_sites);
        case ModelKind::IsingVariant:
            return 2 * ipow(model.m, n_sites);
        case ModelKind::Sis:
            return sis_transfer_count(model.sis_n - 2, n_sites);
        case ModelKind::Nicolai:
            throw std::invalid_argument("count: no product count for the Nicolai variant");
    }
    return 0;
}

SeriesSpec builtin_series(const std::string& id) {
    auto mk = [&](std::vector<long> num, std::vector<long> den) {
        SeriesSpec s;
        s.id = id;
        for (long x : num) s.numerator.emplace_back(x);
        for (long x : den) s.denominator.emplace_back(x);
        return s;
    };
    if (id == "g_F") return mk({0, 2, 2}, {1, -1, -1});
    if (id == "a_F") return mk({0, 1}, {1, -1, -1});
    if (id == "g_JK") return mk({0, 4, 8}, {1, -2, -4});
    if (id == "a_JK") return mk({0, 1}, {1, -1, -2});
    if (id == "g_total") return mk({0, 2, 4, 2}, {1, 0, -2, -2});
    if (id == "e_entangled") return mk({0, 0, 0, 0, 2, 2}, {1, -1, -3, 0, 4, 2});
    throw std::invalid_argument("series: unknown id " + id);
}

std::vector<std::string> builtin_series_ids() {
    return {"g_F", "a_F", "g_JK", "a_JK", "g_total", "e_entangled"};
}

std::vector<BigInt> series_coefficients(const SeriesSpec& spec, int k) {
    if (k < 1) throw std::invalid_argument("series: k must be >= 1");
    if (spec.denominator.empty() || spec.denominator[0] != 1)
        throw std::invalid_argument("series: denominator constant term must be 1");

    // c_n = num_n - sum_{i>=1} den_i c_{n-i}
    std::vector<BigInt> c(static_cast<std::size_t>(k) + 1, 0);
    for (int n = 0; n <= k; ++n) {
        BigInt v = n < static_cast<int>(spec.numerator.size()) ? spec.numerator[n] : 0;
        for (int i = 1; i < static_cast<int>(spec.denominator.size()) && i <= n; ++i)
            v -= spec.denominator[i] * c[n - i];
        c[n] = v;
    }
    return std::vector<BigInt>(c.begin() + 1, c.end());
}

namespace {

// Totals-only census used for the recursion cross-checks.
struct CensusTotals {
    BigInt product;
    int kernel = 0;
    int entangled = 0;
};

CensusTotals census_totals(const SusyModel& model, int n_sites,
                           std::vector<SectorCensus>* sectors_out) {
    const std::uint64_t dim = basis_dimension(2, n_sites);
    SparseOperator h = n_sites >= 3 ? global_supercharge(SusyModel::qubit_fib(n_sites)).H
                                    : SparseOperator::zero(dim, dim);

    // Product zero modes per boson count.
    std::vector<int> product_per_sector(n_sites + 1, 0);
    for (const auto& state : product_zero_modes(SusyModel::qubit_fib(n_sites), n_sites)) {
        int bosons = 0;
        for (int s : state.word) bosons += (s == 0);
        ++product_per_sector[bosons];
    }

    CensusTotals totals;
    totals.product = 0;
    for (int k = 0; k <= n_sites; ++k) {
        std::vector<std::int64_t> idx;
        for (std::uint64_t r = 0; r < dim; ++r) {
            if (n_sites - __builtin_popcountll(r) == k)
                idx.push_back(static_cast<std::int64_t>(r));
        }
        Eigen::MatrixXcd sector(idx.size(), idx.size());
        for (std::size_t a = 0; a < idx.size(); ++a)
            for (std::size_t b = 0; b < idx.size(); ++b)
                sector(a, b) = h.entry(idx[a], idx[b]);
        const int nullity = kernel_basis(sector, kKernelRelTol).nullity();

        SectorCensus sc;
        sc.n_bosons = k;
        sc.dim = static_cast<int>(idx.size());
        sc.kernel_dim = nullity;
        sc.product = product_per_sector[k];
        sc.entangled = nullity - sc.product;
        if (sectors_out) sectors_out->push_back(sc);

        totals.kernel += nullity;
        totals.entangled += sc.entangled;
        totals.product += sc.product;
    }
    return totals;
}

}  // namespace

CountReport kernel_census(const SusyModel& model, int n_sites) {
    model.validate();
    if (model.kind != ModelKind::QubitFib)
        throw std::invalid_argument("census: sector decomposition is defined for the qubit chain");
    if (n_sites < 1) throw std::invalid_argument("census: n_sites must be >= 1");
    if (n_sites > 16) throw CapacityError("census: n_sites above 16");

    CountReport report;
    report.n_sites = n_sites;
    CensusTotals totals = census_totals(model, n_sites, &report.sectors);
    report.product = totals.product;
    report.total_kernel = totals.kernel;
    report.entangled = totals.entangled;

    if (totals.product != count_product(model, n_sites)) {
        report.recursion_ok = false;
        report.flags.push_back("product enumeration disagrees with the recursion");
    }

    // f_E(N) = 2(f_E(N-2) + f_E(N-3)) + f_P(N-3)
    // f_G(N) = 2(f_G(N-2) + f_G(N-3))
    if (n_sites >= 4) {
        CensusTotals t2 = census_totals(model, n_sites - 2, nullptr);
        CensusTotals t3 = n_sites - 3 >= 1 ? census_totals(model, n_sites - 3, nullptr)
                                           : CensusTotals{BigInt(1), 1, 0};
        const BigInt fp3 = n_sites - 3 >= 1 ? fibonacci_product_count(n_sites - 3) : 1;
        const BigInt expected_e = 2 * (t2.entangled + t3.entangled) + fp3;
        const BigInt expected_g = 2 * (t2.kernel + t3.kernel);
        if (expected_e != report.entangled) {
            report.recursion_ok = false;
            report.flags.push_back("entangled count disagrees with its recursion");
        }
        if (expected_g != report.total_kernel) {
            report.recursion_ok = false;
            report.flags.push_back("total count disagrees with its recursion");
        }
    }
    return report;
}

SisCensus sis_zero_census(int n, int r, int n_sites) {
    SusyModel model = SusyModel::sis(n_sites, n, r);
    model.validate();
    if (n - 2 < 1)
        throw std::invalid_argument("sis census: model has no local zero modes");

    SisCensus census;
    census.n_sites = n_sites;
    census.n = n;
    census.r = r;

    std::map<std::vector<int>, BigInt> groups;
    for (const auto& state : product_zero_modes(model, n_sites)) {
        std::vector<int> mask;
        for (int i = 0; i < n_sites; ++i)
            if (state.word[i] >= 2) mask.push_back(i);
        groups[mask] += 1;
    }

    census.total = 0;
    for (const auto& [mask, enumerated] : groups) {
        SisGroup group;
        group.z_sites = mask;
        group.enumerated = enumerated;

        // (#z-choices)^{#z} * prod_segments f_P(segment length), f_P(0) = 1.
        BigInt expected = ipow(n - 2, static_cast<int>(mask.size()));
        int prev = -1;
        for (int z : mask) {
            expected *= fibonacci_product_count(z - prev - 1);
            prev = z;
        }
        expected *= fibonacci_product_count(n_sites - prev - 1);
        group.segment_formula = expected;

        if (expected != enumerated) census.formula_ok = false;
        census.total += enumerated;
        census.groups.push_back(std::move(group));
    }

    if (census.total != count_product(model, n_sites)) census.formula_ok = false;
    return census;
}

}  // namespace susyanyon
