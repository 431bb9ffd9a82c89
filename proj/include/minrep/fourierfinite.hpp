#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "minrep/spherical.hpp"

namespace minrep {

/// Residue table f_{pi^l} on (O/pi^l O)^{n+1} with values in Z[zeta_{p^l}],
/// stored as packed int64 coefficient blocks of width phi(p^l) plus a global
/// power-of-p scale (value = p^{scale} * coefficients).
struct ResidueTable {
    Group g{};
    long p = 0;
    int l = 0;
    int ncoord = 0;  // n+1
    long pl = 0;
    int phi = 0;
    int scale = 0;
    std::size_t entries = 0;  // pl^ncoord
    std::vector<std::int64_t> coef;  // entries * phi

    std::size_t index(const std::vector<long>& x) const;
};

/// Default memory budget for tables (bytes).
inline constexpr std::size_t kTableBudget = std::size_t(1) << 31;

ResidueTable build_f_table(const GroupData& gd, long p, int l, std::size_t budget = kTableBudget);

/// Normalized finite Fourier transform, computed as n+1 one-dimensional
/// passes (coordinate 0 first); exact, in place up to the scale field.
void dft(ResidueTable& t);

bool tables_equal(const ResidueTable& a, const ResidueTable& b);

/// F(f_{pi^l}) == f_{pi^l}, exact.
bool selfdual_check(const GroupData& gd, long p, int l, std::string* diag = nullptr,
                    std::size_t budget = kTableBudget);

/// Cross-table characterization f_{pi^l}(u pi^k, x) =
/// psi(-I(x)/(u pi^{k+l})) f_{pi^k}(0, x) for 0 <= k < l.
bool cross_table_check(const GroupData& gd, long p, int l, std::string* diag = nullptr);

struct CharSumReport {
    bool pass = true;
    Int sum_plain;      // sum psi(-I(x)/(x0 pi))
    Int sum_shifted;    // sum psi(-I(x)/(x0 pi) + x0/pi)
    Int card1_brute, card1_closed;
    Int card2_brute, card2_closed;
    Rat a_recovered;    // solved from the Fourier equation
    std::string detail;
};

/// E_k: brute character sums, card1/card2, and a = -q^s from the
/// self-duality equations.
CharSumReport char_sum_identities(const GroupData& gd, long p);

/// D_k (k >= 5): the quadric reduction and a = -q^{k-4}.
CharSumReport dk_identity_check(const GroupData& gd, long p);

/// Binary cache: header (magic, version, group, p, l, scale) + raw coefficients
/// + FNV checksum.
void save_table(const ResidueTable& t, const std::string& path);
std::optional<ResidueTable> load_table(const std::string& path);

}  // namespace minrep
