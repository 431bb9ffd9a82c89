#include "minrep/finitefield.hpp"

#include <stdexcept>

namespace minrep {

namespace {

// digits low..high of n in base p, length f
std::vector<long> digits(long n, long p, int f) {
    std::vector<long> d(f, 0);
    for (int i = 0; i < f; ++i) {
        d[i] = n % p;
        n /= p;
    }
    return d;
}

long undigits(const std::vector<long>& d, long p) {
    long n = 0;
    for (int i = static_cast<int>(d.size()) - 1; i >= 0; --i) n = n * p + d[i];
    return n;
}

// poly mult mod (modulus, p); inputs length f, modulus monic length f+1
std::vector<long> polmulmod(const std::vector<long>& a, const std::vector<long>& b,
                            const std::vector<long>& mod, long p) {
    int f = static_cast<int>(mod.size()) - 1;
    std::vector<long> c(2 * f - 1, 0);
    for (int i = 0; i < f; ++i) {
        if (!a[i]) continue;
        for (int j = 0; j < f; ++j) c[i + j] = (c[i + j] + a[i] * b[j]) % p;
    }
    for (int d = 2 * f - 2; d >= f; --d) {
        long lead = c[d];
        if (!lead) continue;
        c[d] = 0;
        for (int j = 0; j < f; ++j) c[d - f + j] = ((c[d - f + j] - lead * mod[j]) % p + p) % p;
    }
    c.resize(f);
    return c;
}

bool is_primitive_modulus(const std::vector<long>& mod, long p) {
    int f = static_cast<int>(mod.size()) - 1;
    long q = 1;
    for (int i = 0; i < f; ++i) q *= p;
    // x must have multiplicative order q-1 in F_p[x]/mod (implies irreducible)
    std::vector<long> x(f, 0);
    if (f == 1) return false;  // handled separately
    x[1] = 1;
    auto polpow = [&](std::vector<long> base, long e) {
        std::vector<long> r(f, 0);
        r[0] = 1;
        while (e) {
            if (e & 1) r = polmulmod(r, base, mod, p);
            base = polmulmod(base, base, mod, p);
            e >>= 1;
        }
        return r;
    };
    std::vector<long> one(f, 0);
    one[0] = 1;
    if (polpow(x, q - 1) != one) return false;
    long m = q - 1;
    for (long d = 2; d * d <= m; ++d) {
        if (m % d) continue;
        if (polpow(x, (q - 1) / d) == one) return false;
        while (m % d == 0) m /= d;
    }
    if (m > 1 && polpow(x, (q - 1) / m) == one) return false;
    return true;
}

std::vector<long> find_modulus(long p, int f) {
    if (f == 1) return {0, 1};  // placeholder, unused in prime fields
    int total = 1;
    std::vector<long> mod(f + 1, 0);
    mod[f] = 1;
    for (int i = 0; i < f; ++i) total *= static_cast<int>(p);
    for (long code = 0; code < total; ++code) {
        auto low = digits(code, p, f);
        for (int i = 0; i < f; ++i) mod[i] = low[i];
        if (is_primitive_modulus(mod, p)) return mod;
    }
    throw std::logic_error("no primitive modulus found");
}

}  // namespace

FiniteField::FiniteField(long p, int f) : p_(p), f_(f) {
    if (!is_prime(p)) throw std::invalid_argument("FiniteField: p not prime");
    if (f < 1 || f > 4) throw std::invalid_argument("FiniteField: need 1 <= f <= 4");
    Int qq = ipow(Int(p), f);
    if (qq > (1 << 20)) throw std::invalid_argument("FiniteField: size bound p^f <= 2^20 exceeded");
    q_ = static_cast<long>(qq);
    mod_ = find_modulus(p, f);
    if (q_ <= 1024) {
        tables_ = true;
        mul_table_.assign(static_cast<size_t>(q_) * q_, 0);
        for (long a = 0; a < q_; ++a)
            for (long b = 0; b < q_; ++b) mul_table_[a * q_ + b] = mul_slow(a, b);
        inv_table_.assign(q_, 0);
        for (long a = 1; a < q_; ++a)
            for (long b = 1; b < q_; ++b)
                if (mul_table_[a * q_ + b] == 1) {
                    inv_table_[a] = b;
                    break;
                }
    }
    trace_table_.assign(q_, 0);
    for (long a = 0; a < q_; ++a) {
        long s = 0, x = a;
        for (int i = 0; i < f_; ++i) {
            // add the constant-free sum of conjugates digit-wise: trace = sum Frobenius powers
            s = add(s, x);
            x = pow(x, Int(p_));
        }
        // s lies in the prime field: all digits above the constant must vanish
        auto d = digits(s, p_, f_);
        for (int i = 1; i < f_; ++i)
            if (d[i]) throw std::logic_error("trace not in prime field");
        trace_table_[a] = d[0];
    }
}

long FiniteField::add(long a, long b) const {
    auto da = digits(a, p_, f_), db = digits(b, p_, f_);
    for (int i = 0; i < f_; ++i) da[i] = (da[i] + db[i]) % p_;
    return undigits(da, p_);
}

long FiniteField::sub(long a, long b) const { return add(a, neg(b)); }

long FiniteField::neg(long a) const {
    auto d = digits(a, p_, f_);
    for (auto& x : d) x = (p_ - x) % p_;
    return undigits(d, p_);
}

long FiniteField::mul_slow(long a, long b) const {
    if (f_ == 1) return a * b % p_;
    auto c = polmulmod(digits(a, p_, f_), digits(b, p_, f_), mod_, p_);
    return undigits(c, p_);
}

long FiniteField::mul(long a, long b) const {
    if (tables_) return mul_table_[a * q_ + b];
    return mul_slow(a, b);
}

long FiniteField::pow(long a, Int e) const {
    if (a == 0) {
        if (e < 0) throw std::domain_error("FiniteField: 0^negative");
        return e == 0 ? 1 : 0;
    }
    e %= q_ - 1;
    if (e < 0) e += q_ - 1;
    long r = 1, base = a;
    long el = static_cast<long>(e);
    while (el) {
        if (el & 1) r = mul(r, base);
        base = mul(base, base);
        el >>= 1;
    }
    return r;
}

long FiniteField::inv(long a) const {
    if (a == 0) throw std::domain_error("FiniteField: inverse of 0");
    if (tables_) return inv_table_[a];
    return pow(a, Int(q_ - 2));
}

long FiniteField::from_int(long n) const {
    long r = n % p_;
    if (r < 0) r += p_;
    return r;
}

long FiniteField::trace(long a) const { return trace_table_[a]; }

CycNumber additive_character(const FiniteField& F, long x) {
    return CycNumber::root(F.p(), 1, Int(F.trace(x)));
}

}  // namespace minrep
