#pragma once

#include <array>
#include <map>

#include "minrep/cone.hpp"
#include "minrep/finitefield.hpp"
#include "minrep/padic.hpp"

namespace minrep {

/// Effective divisor on a curve as a multiset of (place, degree, multiplicity),
/// with the "divisor of zero" sentinel absorbing minima.
struct Divisor {
    bool is_zero_divisor = false;  // div(0), infinitely large
    std::map<std::pair<std::string, int>, long> parts;  // (label, deg place) -> mult

    static Divisor zero_divisor() {
        Divisor d;
        d.is_zero_divisor = true;
        return d;
    }
    static Divisor of(std::initializer_list<std::tuple<std::string, int, long>> ps);
    bool effective() const;
    long degree() const;
};

Divisor divisor_min(const Divisor& a, const Divisor& b);

/// phi(D) = prod_v (q_v^{(n_v+1)s} - 1)/(q_v^s - 1) = sum_{0<=D'<=D} q^{s deg D'};
/// 0 if D has a negative part, 1 for D = div(0) handled by the caller's min.
Int phi_of_divisor(const Divisor& d, int s, const Int& q);

/// Independent oracle: the literal sum over 0 <= D' <= D (test support).
Int phi_of_divisor_sum(const Divisor& d, int s, const Int& q);

/// mu_s(a) = sum_{d | a} d^s (a != 0).
Int mu_s_int(int s, Int a);

/// Rational magnitude and per-prime root-of-unity phases; the exact value of a
/// product of local spherical values.
struct GlobalValue {
    Rat mag = 0;
    std::map<long, std::pair<int, Int>> phases;  // p -> (m, expo mod p^m), normalized
    void mul_phase(long p, int m, const Int& expo);
    bool operator==(const GlobalValue& o) const;
};

/// The K = Q weight: prod_{p : |y|_p <= |x0|_p} psi_p(-I(x)/(y x0)) *
/// |gcd(y,x0)|^{s+1} * mu_s(gcd(y, x0), x, I'(x)/g, I(x)/g^2); zero when the
/// divisibility fails. Must equal the product of local spherical values.
GlobalValue mu_weight(const GroupData& gd, int s, const Int& y, const Int& x0,
                      const std::vector<Int>& x);

/// P^1 constants: closed forms, re-derived independently from the degree-1
/// divisor equation together with the torus-reduction identity for alpha_1;
/// both routes must agree.
std::pair<Rat, Rat> p1_constants(int s, const Int& q);

struct EllipticCurveData {
    long q = 0;
    std::array<long, 5> a{};  // a1, a2, a3, a4, a6
    Int N = 0;                // #X(F_q)
};

/// Affine enumeration plus the point at infinity; throws for singular curves.
Int ec_count_points(const FiniteField& F, const std::array<long, 5>& a);
bool ec_nonsingular(const FiniteField& F, const std::array<long, 5>& a);
EllipticCurveData ec_make(const FiniteField& F, const std::array<long, 5>& a);

/// Elliptic-curve constants in (q, s, N).
std::pair<Rat, Rat> elliptic_constants(int s, const EllipticCurveData& ec);

/// alpha1 = q^{(2g-2)(s+1)} L(X, q^s) with L(X,t) = (1 - a t + q t^2)/((1-t)(1-qt)).
bool elliptic_L_identity(int s, const EllipticCurveData& ec);

/// Exact substitution of the closed-form constants into the degree-1
/// divisor equation.
bool elliptic_deg1_check(int s, const EllipticCurveData& ec);

/// Exact substitution into the divisor equation at deg D = 2 with all eight
/// degree-2 contribution terms.
bool elliptic_deg2_check(int s, const EllipticCurveData& ec);

/// theta-side closed forms (exposed for the CLI/tests).
Rat elliptic_theta1_deg1(int s, const Int& q, const Int& N);
Rat elliptic_theta2_deg1(int s, const Int& q, const Int& N);
Rat elliptic_theta1_deg2(int s, const Int& q, const Int& N);
Rat elliptic_theta2_deg2(int s, const Int& q, const Int& N);

}  // namespace minrep
