#pragma once

#include <optional>
#include <vector>

#include "minrep/rational.hpp"

namespace minrep {

/// Exact rational viewed inside Q_p.
struct PadicRational {
    long p = 2;
    Rat value;
    std::optional<long> valuation() const { return vp(value, p); }
    Rat norm() const { return padic_norm(value, p); }
};

/// Max of component p-adic norms; 0-norm sentinel for the zero vector.
Rat norm_of_vector(const std::vector<Rat>& xs, long p);

/// Exact element of Q(zeta_{p^m}), coefficients over Q modulo Phi_{p^m}.
/// m = 0 means a plain rational. Conductor exponents above the configurable
/// cap are an error, not a silent reduction.
class CycNumber {
public:
    CycNumber() : p_(0), m_(0), c_(1, Rat(0)) {}
    CycNumber(long p, int m);
    static CycNumber rational(const Rat& r);
    static CycNumber root(long p, int m, const Int& expo, const Rat& coef = Rat(1));

    long p() const { return p_; }
    int m() const { return m_; }
    int phi() const { return static_cast<int>(c_.size()); }
    const std::vector<Rat>& coeffs() const { return c_; }

    void add_root(const Int& expo, const Rat& coef);

    CycNumber promoted(long p, int m2) const;

    CycNumber operator+(const CycNumber& o) const;
    CycNumber operator-(const CycNumber& o) const;
    CycNumber operator*(const CycNumber& o) const;
    CycNumber operator*(const Rat& r) const;
    bool operator==(const CycNumber& o) const;
    bool is_zero() const;
    bool is_rational(Rat* out = nullptr) const;

    static int conductor_cap;  // max m, default 8; raise explicitly when needed

private:
    long p_;
    int m_;
    std::vector<Rat> c_;  // size phi(p^m) = (p-1)p^{m-1} for m >= 1, else 1
};

/// RAII helper for tests/ops that need deeper conductors.
struct ConductorCapGuard {
    int saved;
    explicit ConductorCapGuard(int cap) : saved(CycNumber::conductor_cap) { CycNumber::conductor_cap = cap; }
    ~ConductorCapGuard() { CycNumber::conductor_cap = saved; }
};

/// Additive character of order 0: psi(Z_p) = 1, psi(x) = zeta_{p^m}^u for
/// x = u/p^m mod Z_p.
CycNumber psi_order0(long p, const Rat& x);

/// Phase of psi_order0 as (m, expo) with expo reduced mod p^m and the
/// conductor minimized. m = 0 encodes phase 1.
std::pair<int, Int> psi_phase(long p, const Rat& x);

/// Value r * zeta_{p^m}^{expo} with rational magnitude r >= 0.
struct SphericalValue {
    Rat mag;
    long p = 0;
    int m = 0;
    Int expo = 0;

    static SphericalValue zero() { return {Rat(0), 0, 0, 0}; }
    static SphericalValue from_mag(const Rat& r) { return {r, 0, 0, 0}; }

    bool is_zero() const { return mag == 0; }
    void normalize();
    SphericalValue& mul_phase(long p, int m, const Int& expo);
    SphericalValue operator*(const SphericalValue& o) const;  // same p (or phase-free)
    bool operator==(const SphericalValue& o) const;
    CycNumber to_cyc(long p_hint = 0, int m_target = -1) const;
};

}  // namespace minrep
