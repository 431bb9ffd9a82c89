#include "minrep/padic.hpp"

#include <algorithm>
#include <stdexcept>

namespace minrep {

int CycNumber::conductor_cap = 8;

Rat norm_of_vector(const std::vector<Rat>& xs, long p) {
    Rat best(0);
    for (const auto& x : xs) {
        Rat n = padic_norm(x, p);
        if (n > best) best = n;
    }
    return best;
}

static long phi_pm(long p, int m) { return m == 0 ? 1 : (p - 1) * static_cast<long>(ipow(Int(p), m - 1)); }

CycNumber::CycNumber(long p, int m) : p_(p), m_(m) {
    if (m > conductor_cap) throw std::domain_error("cyclotomic conductor cap exceeded");
    c_.assign(static_cast<size_t>(phi_pm(p, m)), Rat(0));
    if (m == 0) p_ = 0;
}

CycNumber CycNumber::rational(const Rat& r) {
    CycNumber z;
    z.c_[0] = r;
    return z;
}

CycNumber CycNumber::root(long p, int m, const Int& expo, const Rat& coef) {
    CycNumber z(p, m);
    if (m == 0) {
        z.c_[0] = coef;
        return z;
    }
    z.add_root(expo, coef);
    return z;
}

void CycNumber::add_root(const Int& expo, const Rat& coef) {
    if (m_ == 0) {
        c_[0] += coef;  // zeta^anything in conductor 1 is 1
        return;
    }
    Int pm = ipow(Int(p_), m_);
    Int e = expo % pm;
    if (e < 0) e += pm;
    long phi = phi_pm(p_, m_);
    long el = static_cast<long>(e);
    if (el < phi) {
        c_[el] += coef;
    } else {
        // zeta^{(p-1)p^{m-1}+r} = -sum_{i<p-1} zeta^{i p^{m-1}+r}
        long pm1 = static_cast<long>(ipow(Int(p_), m_ - 1));
        long r = el - (p_ - 1) * pm1;
        for (long i = 0; i + 1 < p_; ++i) c_[i * pm1 + r] -= coef;
    }
}

CycNumber CycNumber::promoted(long p, int m2) const {
    if (m_ == 0) {
        CycNumber z(p, m2);
        if (m2 == 0) {
            z.c_[0] = c_[0];
            return z;
        }
        z.add_root(0, c_[0]);
        return z;
    }
    if (p != p_) throw std::domain_error("CycNumber: mixed primes");
    if (m2 < m_) throw std::domain_error("CycNumber: cannot demote");
    CycNumber z(p, m2);
    Int scale = ipow(Int(p), m2 - m_);
    for (long e = 0; e < phi(); ++e)
        if (c_[e] != 0) z.add_root(Int(e) * scale, c_[e]);
    return z;
}

static std::pair<CycNumber, CycNumber> aligned(const CycNumber& a, const CycNumber& b) {
    long p = a.m() ? a.p() : b.p();
    int m = std::max(a.m(), b.m());
    return {a.promoted(p, m), b.promoted(p, m)};
}

CycNumber CycNumber::operator+(const CycNumber& o) const {
    auto [a, b] = aligned(*this, o);
    for (long e = 0; e < b.phi(); ++e) a.c_[e] += b.c_[e];
    return a;
}

CycNumber CycNumber::operator-(const CycNumber& o) const {
    auto [a, b] = aligned(*this, o);
    for (long e = 0; e < b.phi(); ++e) a.c_[e] -= b.c_[e];
    return a;
}

CycNumber CycNumber::operator*(const CycNumber& o) const {
    auto [a, b] = aligned(*this, o);
    CycNumber z(a.p_ ? a.p_ : 2, a.m_);
    z.p_ = a.p_;
    if (a.m_ == 0) {
        z.c_[0] = a.c_[0] * b.c_[0];
        return z;
    }
    for (long e1 = 0; e1 < a.phi(); ++e1) {
        if (a.c_[e1] == 0) continue;
        for (long e2 = 0; e2 < b.phi(); ++e2) {
            if (b.c_[e2] == 0) continue;
            z.add_root(Int(e1) + Int(e2), a.c_[e1] * b.c_[e2]);
        }
    }
    return z;
}

CycNumber CycNumber::operator*(const Rat& r) const {
    CycNumber z = *this;
    for (auto& x : z.c_) x *= r;
    return z;
}

bool CycNumber::operator==(const CycNumber& o) const {
    auto [a, b] = aligned(*this, o);
    return a.c_ == b.c_;
}

bool CycNumber::is_zero() const {
    return std::all_of(c_.begin(), c_.end(), [](const Rat& x) { return x == 0; });
}

bool CycNumber::is_rational(Rat* out) const {
    for (size_t e = 1; e < c_.size(); ++e)
        if (c_[e] != 0) return false;
    if (out) *out = c_[0];
    return true;
}

std::pair<int, Int> psi_phase(long p, const Rat& x) {
    auto v = vp(x, p);
    if (!v || *v >= 0) return {0, 0};
    int m = static_cast<int>(-*v);
    if (m > CycNumber::conductor_cap) throw std::domain_error("psi_order0: conductor cap exceeded");
    Int pm = ipow(Int(p), m);
    Int num = int_num(x), den = int_den(x);
    Int d2 = den / pm;  // den = p^m * d2 with p not dividing d2
    if (d2 * pm != den) throw std::logic_error("psi_phase: valuation bookkeeping");
    // u = num * d2^{-1} mod p^m
    Int d2m = d2 % pm;
    if (d2m < 0) d2m += pm;
    Int inv = 1, base = d2m, e = pm - pm / p - 1;  // d2^{phi(p^m)-1}
    while (e > 0) {
        if (e % 2 == 1) inv = inv * base % pm;
        base = base * base % pm;
        e /= 2;
    }
    Int u = num % pm * inv % pm;
    if (u < 0) u += pm;
    // minimize the conductor
    while (m > 0 && u % p == 0) {
        u /= p;
        pm /= p;
        --m;
        u %= pm;
    }
    if (m == 0) return {0, 0};
    return {m, u};
}

CycNumber psi_order0(long p, const Rat& x) {
    auto [m, u] = psi_phase(p, x);
    if (m == 0) return CycNumber::rational(Rat(1));
    return CycNumber::root(p, m, u);
}

void SphericalValue::normalize() {
    if (mag == 0) {
        p = 0;
        m = 0;
        expo = 0;
        return;
    }
    if (m == 0) {
        expo = 0;
        return;
    }
    Int pm = ipow(Int(p), m);
    expo %= pm;
    if (expo < 0) expo += pm;
    while (m > 0 && expo % p == 0) {
        expo /= p;
        --m;
        pm /= p;
        expo %= pm;
    }
    if (m == 0) {
        p = 0;
        expo = 0;
    }
}

SphericalValue& SphericalValue::mul_phase(long pp, int mm, const Int& e) {
    if (mag == 0 || mm == 0) return *this;
    if (m == 0) {
        p = pp;
        m = mm;
        expo = e;
    } else {
        if (p != pp) throw std::domain_error("SphericalValue: mixed primes");
        int mt = std::max(m, mm);
        expo = expo * ipow(Int(p), mt - m) + e * ipow(Int(p), mt - mm);
        m = mt;
    }
    normalize();
    return *this;
}

SphericalValue SphericalValue::operator*(const SphericalValue& o) const {
    SphericalValue r = *this;
    r.mag *= o.mag;
    if (r.mag == 0) return SphericalValue::zero();
    r.mul_phase(o.p, o.m, o.expo);
    r.normalize();
    return r;
}

bool SphericalValue::operator==(const SphericalValue& o) const {
    SphericalValue a = *this, b = o;
    a.normalize();
    b.normalize();
    if (a.mag != b.mag) return false;
    if (a.mag == 0) return true;
    return a.m == b.m && (a.m == 0 || (a.p == b.p && a.expo == b.expo));
}

CycNumber SphericalValue::to_cyc(long p_hint, int m_target) const {
    SphericalValue v = *this;
    v.normalize();
    long pp = v.m ? v.p : p_hint;
    int mt = std::max(v.m, m_target < 0 ? 0 : m_target);
    if (v.mag == 0) return mt ? CycNumber(pp, mt) : CycNumber::rational(Rat(0));
    if (v.m == 0 && mt == 0) return CycNumber::rational(v.mag);
    return CycNumber::root(pp, mt, v.expo * ipow(Int(pp), mt - v.m), v.mag);
}

}  // namespace minrep
