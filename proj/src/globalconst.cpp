#include "minrep/globalconst.hpp"

#include <stdexcept>

#include "minrep/spherical.hpp"

namespace minrep {

Divisor Divisor::of(std::initializer_list<std::tuple<std::string, int, long>> ps) {
    Divisor d;
    for (const auto& [label, deg, mult] : ps) d.parts[{label, deg}] += mult;
    return d;
}

bool Divisor::effective() const {
    if (is_zero_divisor) return true;
    for (const auto& [pl, m] : parts)
        if (m < 0) return false;
    return true;
}

long Divisor::degree() const {
    if (is_zero_divisor) throw std::domain_error("degree of div(0)");
    long d = 0;
    for (const auto& [pl, m] : parts) d += pl.second * m;
    return d;
}

Divisor divisor_min(const Divisor& a, const Divisor& b) {
    if (a.is_zero_divisor) return b;  // min(D, div(0)) = D
    if (b.is_zero_divisor) return a;
    Divisor r;
    for (const auto& [pl, m] : a.parts) {
        auto it = b.parts.find(pl);
        long mb = it == b.parts.end() ? 0 : it->second;
        long mm = std::min(m, mb);
        if (mm != 0) r.parts[pl] = mm;
    }
    for (const auto& [pl, m] : b.parts)
        if (!a.parts.count(pl) && m < 0) r.parts[pl] = m;
    return r;
}

Int phi_of_divisor(const Divisor& d, int s, const Int& q) {
    if (d.is_zero_divisor) return 1;  // single D' = 0 term
    if (!d.effective()) return 0;
    Int r = 1;
    for (const auto& [pl, m] : d.parts) {
        Int qv = ipow(q, pl.second);
        r *= (ipow(qv, (m + 1) * s) - 1) / (ipow(qv, s) - 1);
    }
    return r;
}

Int phi_of_divisor_sum(const Divisor& d, int s, const Int& q) {
    if (d.is_zero_divisor) return 1;
    if (!d.effective()) return 0;
    std::vector<std::pair<int, long>> ps;  // (deg, mult)
    for (const auto& [pl, m] : d.parts) ps.emplace_back(pl.second, m);
    Int total = 0;
    std::vector<long> cur(ps.size(), 0);
    for (;;) {
        long deg = 0;
        for (size_t i = 0; i < ps.size(); ++i) deg += ps[i].first * cur[i];
        total += ipow(q, s * deg);
        size_t i = 0;
        while (i < ps.size() && ++cur[i] > ps[i].second) cur[i++] = 0;
        if (i == ps.size()) break;
    }
    return total;
}

Int mu_s_int(int s, Int a) {
    if (a == 0) throw std::domain_error("mu_s of 0");
    if (a < 0) a = -a;
    Int r = 1;
    for (long p : prime_factors(a)) {
        long v = *vp(a, p);
        r *= (ipow(Int(p), s * (v + 1)) - 1) / (ipow(Int(p), s) - 1);
    }
    return r;
}

void GlobalValue::mul_phase(long p, int m, const Int& expo) {
    if (m == 0) return;
    auto& [mm, e] = phases[p];
    if (mm == 0) {
        mm = m;
        e = expo;
    } else {
        int mt = std::max(mm, m);
        e = e * ipow(Int(p), mt - mm) + expo * ipow(Int(p), mt - m);
        mm = mt;
    }
    Int pm = ipow(Int(p), mm);
    e %= pm;
    if (e < 0) e += pm;
    while (mm > 0 && e % p == 0) {
        e /= p;
        pm /= p;
        --mm;
        e %= pm;
    }
    if (mm == 0) phases.erase(p);
}

bool GlobalValue::operator==(const GlobalValue& o) const {
    if (mag != o.mag) return false;
    if (mag == 0) return true;
    return phases == o.phases;
}

GlobalValue mu_weight(const GroupData& gd, int s, const Int& y, const Int& x0,
                      const std::vector<Int>& x) {
    if (y == 0) throw std::domain_error("mu_weight: y = 0");
    GlobalValue out;
    const int n = gd.n();
    std::vector<Int> xi(x.begin(), x.end());
    Int I = eval_cubic(gd.cubic, xi);
    auto grad = grad_cubic(gd.cubic, xi);
    Int g = boost::multiprecision::gcd(y < 0 ? Int(-y) : y, x0 < 0 ? Int(-x0) : Int(x0));
    if (x0 == 0) g = y < 0 ? -y : y;  // gcd(y, 0) = |y|

    auto primes = prime_factors(y * (x0 == 0 ? Int(1) : x0));
    Rat mag = 1;
    for (long p : primes) {
        long vg = *vp(g, p);
        // D_p = min(v(g), v(x_i), v(I') - v(g), v(I) - 2 v(g)); v(0) absorbs
        long D = vg;
        auto upd = [&](std::optional<long> v, long shift) {
            if (v) D = std::min(D, *v - shift);
        };
        for (int i = 0; i < n; ++i) upd(vp(x[i], p), 0);
        for (int i = 0; i < n; ++i) upd(vp(grad[i], p), vg);
        upd(vp(I, p), 2 * vg);
        if (D < 0) {
            out.mag = 0;
            out.phases.clear();
            return out;
        }
        mag *= qpow(p, (s + 1) * vg);
        mag *= Rat((ipow(Int(p), s * (D + 1)) - 1) / (ipow(Int(p), s) - 1));
        // phase for p with |y|_p <= |x0|_p
        auto vy = vp(Rat(y), p);
        auto vx0 = x0 == 0 ? std::optional<long>() : vp(Rat(x0), p);
        bool cond = !vx0 || (*vy >= *vx0);
        if (cond && x0 != 0) {
            auto [m, e] = psi_phase(p, Rat(-I) / (Rat(y) * Rat(x0)));
            out.mul_phase(p, m, e);
        }
    }
    out.mag = mag;
    return out;
}

std::pair<Rat, Rat> p1_constants(int s, const Int& q) {
    // published closed forms
    Rat a1 = Rat(1) / Rat(ipow(q, 2 * s + 2) * (ipow(q, s + 1) - 1) * (ipow(q, s) - 1));
    Rat a2 = -Rat(ipow(q, 2 * s + 1) + 1) /
             Rat(ipow(q, 3 * s + 2) * (ipow(q, s + 2) - 1) * (ipow(q, s) - 1));
    // independent re-derivation from the equation system
    Rat qr(q);
    auto qp = [&](long e) { return e >= 0 ? Rat(ipow(q, e)) : Rat(1) / Rat(ipow(q, -e)); };
    // torus-reduction identity: (q^s - 1)(1 - q^{-s-1}) A1 = q^{-3s-3}
    Rat A1 = qp(-3 * s - 3) / ((qp(s) - 1) * (Rat(1) - qp(-s - 1)));
    // degree-1 equation: q^{-3s-3}(q-1) + q^{-2s-2} A1 + q^{-s-2} A2 = q^{2s+2} A1 + q^{s+2} A2
    Rat A2 = (qp(-3 * s - 3) * (qr - 1) + qp(-2 * s - 2) * A1 - qp(2 * s + 2) * A1) /
             (qp(s + 2) - qp(-s - 2));
    if (A1 != a1 || A2 != a2) throw std::logic_error("p1_constants: system and closed forms disagree");
    return {a1, a2};
}

bool ec_nonsingular(const FiniteField& F, const std::array<long, 5>& a) {
    auto [a1, a2, a3, a4, a6] = a;
    auto fi = [&](long n) { return F.from_int(n); };
    long b2 = F.add(F.mul(a1, a1), F.mul(fi(4), a2));
    long b4 = F.add(F.mul(fi(2), a4), F.mul(a1, a3));
    long b6 = F.add(F.mul(a3, a3), F.mul(fi(4), a6));
    long b8 = F.add(F.sub(F.add(F.mul(F.mul(a1, a1), a6), F.mul(fi(4), F.mul(a2, a6))),
                          F.mul(F.mul(a1, a3), a4)),
                    F.sub(F.mul(a2, F.mul(a3, a3)), F.mul(a4, a4)));
    long d = F.sub(F.sub(F.neg(F.mul(F.mul(b2, b2), b8)), F.mul(fi(8), F.mul(b4, F.mul(b4, b4)))),
                   F.mul(fi(27), F.mul(b6, b6)));
    d = F.add(d, F.mul(fi(9), F.mul(b2, F.mul(b4, b6))));
    return d != 0;
}

Int ec_count_points(const FiniteField& F, const std::array<long, 5>& a) {
    if (!ec_nonsingular(F, a)) throw std::domain_error("ec_count_points: singular curve");
    auto [a1, a2, a3, a4, a6] = a;
    Int N = 1;  // point at infinity
    for (long x = 0; x < F.q(); ++x)
        for (long y = 0; y < F.q(); ++y) {
            long lhs = F.add(F.add(F.mul(y, y), F.mul(a1, F.mul(x, y))), F.mul(a3, y));
            long rhs = F.add(F.add(F.mul(F.mul(x, x), x), F.mul(a2, F.mul(x, x))),
                             F.add(F.mul(a4, x), a6));
            if (lhs == rhs) ++N;
        }
    return N;
}

EllipticCurveData ec_make(const FiniteField& F, const std::array<long, 5>& a) {
    EllipticCurveData ec;
    ec.q = F.q();
    ec.a = a;
    ec.N = ec_count_points(F, a);
    // Hasse bound |q + 1 - N|^2 <= 4q
    Int t = Int(ec.q) + 1 - ec.N;
    if (t * t > 4 * ec.q) throw std::logic_error("Hasse bound violated");
    return ec;
}

std::pair<Rat, Rat> elliptic_constants(int s, const EllipticCurveData& ec) {
    Int q(ec.q);
    const Int& N = ec.N;
    Rat a1 = Rat(1) + Rat(ipow(q, s) * N) / Rat((ipow(q, s + 1) - 1) * (ipow(q, s) - 1));
    Rat a2 = Rat(ipow(q, 2 * s + 1) + 1) + Rat(q * (ipow(q, 4 * s + 2) - 1) * (ipow(q, s) + 1)) / Rat(ipow(q, s + 2) - 1) -
             Rat((ipow(q, 2 * s + 1) + 1) * N) / Rat((ipow(q, s + 2) - 1) * (ipow(q, s) - 1));
    return {a1, a2};
}

bool elliptic_L_identity(int s, const EllipticCurveData& ec) {
    Int q(ec.q);
    Int a = q + 1 - ec.N;
    Rat qs(ipow(q, s));
    Rat L = (Rat(1) - Rat(a) * qs + Rat(q) * qs * qs) / ((Rat(1) - qs) * (Rat(1) - Rat(q) * qs));
    // g = 1: q^{(2g-2)(s+1)} = 1
    return elliptic_constants(s, ec).first == L;
}

Rat elliptic_theta2_deg1(int s, const Int& q, const Int& N) {
    (void)N;
    return Rat((ipow(q, s) + 1) * (ipow(q, 3 * s + 2) - 1) * (ipow(q, 2 * s + 1) + 1) *
               (ipow(q, s + 1) + 1));
}

Rat elliptic_theta1_deg1(int s, const Int& q, const Int& N) {
    Int bracket = ipow(q, 4 * s + 2) * (q - 1) + ipow(q, 5 * s + 2) * (q - 1) * (ipow(q, s) + 1) +
                  (ipow(q, 2 * s + 1) - 1) * (ipow(q, 2 * s + 1) + q + 1) *
                      (ipow(q, 2 * s) + ipow(q, s) + 1) +
                  (ipow(q, 2 * s) + 1) * (q + 1) + ipow(q, s) * N;
    return Rat(ipow(q, 2 * s + 2) * (q - 1) * bracket);
}

Rat elliptic_theta2_deg2(int s, const Int& q, const Int& N) {
    Int cardC = (ipow(q, 3 * s + 2) - 1) * (ipow(q, 2 * s + 1) + 1) * (ipow(q, s + 1) + 1);
    Int bracket = ipow(q, 4 * s + 2) + ipow(q, 3 * s + 2) + ipow(q, 2 * s + 2) + ipow(q, 2 * s) -
                  ipow(q, s + 1) + 1 + ipow(q, s) * N;
    return Rat(cardC * bracket);
}

Rat elliptic_theta1_deg2(int s, const Int& q, const Int& N) {
    Int c2 = (ipow(q, 2 * s + 1) - 1) * (ipow(q, 2 * s) + ipow(q, s) + 1);
    Int ci = ipow(q, 9 * s + 6) * (q - 1) * (q - 1) *
             (q * (q + 1) * (ipow(q, 3 * s + 1) + ipow(q, 2 * s + 1) + ipow(q, s + 1) - 1) +
              (1 - ipow(q, s + 1) - ipow(q, 2 * s + 1)) * N);
    Int cii = ipow(q, 9 * s + 6) * (q - 1) * (q - 1) *
              (ipow(q, 2 * s + 1) + ipow(q, s + 1) + q - 1) * N;
    Int ciii = ipow(q, 9 * s + 5) * (q * q - 1) * (q - 1) *
               ((q + 1) * (ipow(q, 3 * s + 1) + ipow(q, 2 * s + 1) + ipow(q, s + 1) - 1) + N);
    Int iva = ipow(q, 6 * s + 5) * (q - 1) * c2 * (ipow(q, s + 1) - 1) *
              (ipow(q, s + 1) + ipow(q, s) + ipow(q, s - 1) + 1);
    Int ivb = ipow(q, 4 * s + 5) * (ipow(q, 4) - 1) * c2 * (ipow(q, 2 * s) - 1) *
              (ipow(q, s - 1) + 1);
    Int ivc = ipow(q, 4 * s + 4) * c2 *
              ((q * q - 1) * (q + 1) * (ipow(q, 2 * s) + q * q + 1) + ipow(q, s) * (ipow(q, 3) - 1) * N);
    Int ivd = ipow(q, 4 * s + 4) * (ipow(q, 4) - 1) * (ipow(q, 4 * s) + 1) +
              ipow(q, 5 * s + 4) *
                  ((ipow(q, 3) - 1) * (ipow(q, 2 * s) + 1) + ipow(q, s) * (q * q - 1) * (q + 1)) * N;
    return Rat(ci + cii + ciii + iva + ivb + ivc + ivd);
}

bool elliptic_deg1_check(int s, const EllipticCurveData& ec) {
    Int q(ec.q);
    auto [a1, a2] = elliptic_constants(s, ec);
    auto qp = [&](long e) { return e >= 0 ? Rat(ipow(q, e)) : Rat(1) / Rat(ipow(q, -e)); };
    Rat lhs = (qp(2 * s + 2) - qp(-2 * s - 2)) * a1 + (qp(s + 2) - qp(-s - 2)) * a2;
    Rat rhs = qp(-s - 1) / Rat(ipow(q, 2 * s + 2)) * elliptic_theta1_deg1(s, q, ec.N) +
              qp(-2 * s - 2) * elliptic_theta2_deg1(s, q, ec.N);
    return lhs == rhs;
}

bool elliptic_deg2_check(int s, const EllipticCurveData& ec) {
    Int q(ec.q);
    auto [a1, a2] = elliptic_constants(s, ec);
    auto qp = [&](long e) { return e >= 0 ? Rat(ipow(q, e)) : Rat(1) / Rat(ipow(q, -e)); };
    // divisor equation at deg D = 2, g = 1
    Rat lhs = qp(-6 * s - 6) * elliptic_theta1_deg2(s, q, ec.N) +
              qp(-4 * s - 4) * elliptic_theta2_deg2(s, q, ec.N) + qp(-4 * s - 4) * a1 +
              qp(-2 * s - 4) * a2;
    Rat rhs = qp(4 * s + 4) * a1 + qp(2 * s + 4) * a2;
    return lhs == rhs;
}

}  // namespace minrep
