#pragma once

#include <cstdint>

#include "minrep/cone.hpp"
#include "minrep/padic.hpp"

namespace minrep {

struct SphericalPoint {
    Rat y;
    Rat x0;
    std::vector<Rat> x;  // size n
};

/// Spherical vector f_0(y, x0, x) at a rational point, exact.
/// Branches: |y| <= |x0| with x0 != 0 gives the closed formula; |y| > |x0|
/// reduces through the Weyl operator A; x0 = 0 evaluates the boundary value
/// fbar_0(y, x) (the A-reduction composed with the y->0 limit, phases cancel).
SphericalValue spherical_eval(const GroupData& gd, long p, const SphericalPoint& pt);

/// Boundary value fbar_0(x0, x) (x0 != 0): the phase-free magnitude
/// c(x) * (geometric series in the full 2n+2-component lift valuation).
SphericalValue fbar_closed(const GroupData& gd, long p, const Rat& x0, const std::vector<Rat>& x);

struct SampleVerdict {
    bool pass = true;
    long samples = 0;
    std::string detail;
};

/// Exact A-invariance f0 = psi(-I/(x0 y)) f0(-x0, y, x) plus the A^2 =
/// beta0vee(-1) consistency f0(y,x0,x) = f0(-y,-x0,x) on seeded rational points.
SampleVerdict check_A_invariance(const GroupData& gd, long p, long samples, std::uint64_t seed);

/// Unit-scaling invariance f0(c^2 y, c x0, c x) = f0(y,x0,x) for |c|_p = 1,
/// and for c = p^m agreement with the phase-composed manual A-reduction of the
/// scaled point.
SampleVerdict check_torus_covariance(const GroupData& gd, long p, long samples, std::uint64_t seed);

/// psi(I/(x0 y)) f0(y,x0,x) stabilizes to fbar_closed once |y| <= |x0|;
/// checked at two consecutive levels per point.
SampleVerdict check_fbar_limit(const GroupData& gd, long p, long samples, std::uint64_t seed);

/// D4 quadric-cone spherical vector phi_0(x) for x on u1 v1 + u2 v2 + u3 v3 = 0.
Rat d4_phi0_eval(long p, const std::vector<Rat>& x);

/// Truncated-integral oracle S phi_0 for D4; must equal spherical_eval exactly.
/// truncation < 0 picks the automatic level; the level is validated by
/// re-summing at m+1 (throws on disagreement).
CycNumber d4_intertwiner_eval(const GroupData& gd, long p, const SphericalPoint& pt, int truncation = -1);

/// Packed integer kernel for residue-table entries at y = p^l with canonical
/// representatives in [0, p^l); bit-identical to spherical_eval (tested).
struct TableValue {
    std::int64_t mag = 0;  // nonnegative integer magnitude
    std::int64_t expo = 0; // phase = zeta_{p^mm}^{expo}
    int mm = 0;
};
TableValue table_entry(const GroupData& gd, long p, int l, std::int64_t x0, const std::int64_t* x);

}  // namespace minrep
