#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace minrep {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

inline Int int_num(const Rat& r) { return boost::multiprecision::numerator(r); }
inline Int int_den(const Rat& r) { return boost::multiprecision::denominator(r); }

inline Int ipow(Int base, long e) {
    if (e < 0) throw std::domain_error("ipow: negative exponent");
    Int r = 1;
    while (e) {
        if (e & 1) r *= base;
        base *= base;
        e >>= 1;
    }
    return r;
}

/// p^e as an exact rational, e may be negative.
inline Rat qpow(long p, long e) {
    if (e >= 0) return Rat(ipow(Int(p), e));
    return Rat(Int(1), ipow(Int(p), -e));
}

/// p-adic valuation; nullopt encodes v(0) = +infinity.
std::optional<long> vp(const Int& x, long p);
std::optional<long> vp(const Rat& x, long p);

/// Valuation of a known-nonzero rational.
long vp_nonzero(const Rat& x, long p);

/// min over component valuations; nullopt for the all-zero vector.
std::optional<long> vmin(const std::vector<Rat>& xs, long p);

/// |x|_p = p^{-v}; the zero vector gets the 0-norm sentinel.
Rat padic_norm(const Rat& x, long p);

/// Trial-division prime factorization (inputs here are small).
std::vector<long> prime_factors(Int x);

bool is_prime(long p);

/// FNV-1a, used for cache keys and table-file checksums.
std::uint64_t fnv1a(const void* data, std::size_t len, std::uint64_t seed = 1469598103934665603ull);
std::uint64_t fnv1a(const std::string& s, std::uint64_t seed = 1469598103934665603ull);

}  // namespace minrep
