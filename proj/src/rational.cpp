#include "minrep/rational.hpp"

namespace minrep {

std::optional<long> vp(const Int& x, long p) {
    if (x == 0) return std::nullopt;
    Int a = x;
    long v = 0;
    while (a % p == 0) {
        a /= p;
        ++v;
    }
    return v;
}

std::optional<long> vp(const Rat& x, long p) {
    if (x == 0) return std::nullopt;
    return *vp(int_num(x), p) - *vp(int_den(x), p);
}

long vp_nonzero(const Rat& x, long p) {
    auto v = vp(x, p);
    if (!v) throw std::domain_error("vp_nonzero: zero argument");
    return *v;
}

std::optional<long> vmin(const std::vector<Rat>& xs, long p) {
    std::optional<long> m;
    for (const auto& x : xs) {
        auto v = vp(x, p);
        if (v && (!m || *v < *m)) m = v;
    }
    return m;
}

Rat padic_norm(const Rat& x, long p) {
    auto v = vp(x, p);
    if (!v) return Rat(0);
    return qpow(p, -*v);
}

std::vector<long> prime_factors(Int x) {
    std::vector<long> ps;
    if (x < 0) x = -x;
    for (long d = 2; Int(d) * d <= x; d == 2 ? d = 3 : d += 2) {
        if (x % d == 0) {
            ps.push_back(d);
            while (x % d == 0) x /= d;
        }
    }
    if (x > 1) ps.push_back(static_cast<long>(x));
    return ps;
}

bool is_prime(long p) {
    if (p < 2) return false;
    for (long d = 2; d * d <= p; ++d)
        if (p % d == 0) return false;
    return true;
}

std::uint64_t fnv1a(const void* data, std::size_t len, std::uint64_t seed) {
    const auto* b = static_cast<const unsigned char*>(data);
    std::uint64_t h = seed;
    for (std::size_t i = 0; i < len; ++i) {
        h ^= b[i];
        h *= 1099511628211ull;
    }
    return h;
}

std::uint64_t fnv1a(const std::string& s, std::uint64_t seed) { return fnv1a(s.data(), s.size(), seed); }

}  // namespace minrep
