#pragma once

#include <cstdint>
#include <optional>
#include <unordered_set>

#include "minrep/cone.hpp"
#include "minrep/finitefield.hpp"

namespace minrep {

struct CountReport {
    std::string label;
    std::string params;
    Int closed = 0;
    std::optional<Int> brute;
    bool match = false;
    double millis = 0;
};

/// Enumeration guard; counts above the budget raise std::length_error.
inline constexpr std::uint64_t kEnumBudget = std::uint64_t(1) << 31;

/// card1: #{x in F_q^n : I(x) != 0} vs q^{3s}(q^{2s+1}-1)(q^{s+1}-1)(q-1).
CountReport count_I_nonzero(const GroupData& gd, const FiniteField& F,
                            std::uint64_t budget = kEnumBudget);

/// card2: #{x != 0 : grad I(x) = 0} vs (q^{2s+1}-1)(q^{2s}+q^s+1).
CountReport count_singular(const GroupData& gd, const FiniteField& F,
                           std::uint64_t budget = kEnumBudget);

/// Orbit of e_{beta0} in F_q^{2n+2} under the Levi generators e_{+-alpha}(t)
/// and scalar torus scalings; prime q.
struct OrbitResult {
    CountReport report;
    std::vector<std::uint64_t> points;  // canonical base-q encodings
};
OrbitResult cone_orbit_count(const GroupData& gd, long q, std::uint64_t budget = kEnumBudget);

/// Lines in P(V) contained in PC, by pair enumeration over the orbit set,
/// vs card2 * cardC / ((q-1)(q^2-1)).
CountReport lines_in_cone(const GroupData& gd, long q, const OrbitResult& orbit,
                          std::uint64_t budget = kEnumBudget);

/// Degree-1 sections of P^1: #{x in H^0(O(1))^n \ 0 : I'(x) = 0 as a section}.
CountReport sections_singular_count(const GroupData& gd, long q, std::uint64_t budget = kEnumBudget);

/// Degree-2-divisor count: #{x : I(x) = 0 as O(3)-section, deg div(I'(x)) = 2}.
CountReport sections_divisor2_count(const GroupData& gd, long q, std::uint64_t budget = kEnumBudget);

/// Closed forms used above (E-series).
Int card1_closed(Group g, const Int& q);
Int card2_closed(Group g, const Int& q);
Int cardC_closed(Group g, const Int& q);
Int lines_closed(Group g, const Int& q);
Int sections1_closed(Group g, const Int& q);
Int sections2_closed(Group g, const Int& q);

/// Partitioned re-count of I != 0 (serial chunked accumulation); used by the
/// partition-invariance property test.
Int count_I_nonzero_partitioned(const GroupData& gd, const FiniteField& F, int parts);

/// Bit-sliced F_2 kernel: 64 points per machine word. Bit-identical to the
/// scalar path (tested against it); selected for q = 2 when `packed` is set.
struct F2PackedCounts {
    Int card1;  // I(x) != 0
    Int card2;  // x != 0, grad I(x) = 0
};
F2PackedCounts f2_packed_counts(const GroupData& gd);

}  // namespace minrep
