#pragma once

#include <vector>

#include "minrep/padic.hpp"
#include "minrep/rational.hpp"

namespace minrep {

/// F_{p^f} with elements encoded as indices 0..p^f-1 (base-p digits of the
/// polynomial representative, low degree first). The modulus is the
/// lexicographically least primitive polynomial, a fixed Conway-style choice
/// computed deterministically; f <= 4 and p^f <= 2^20.
class FiniteField {
public:
    FiniteField(long p, int f);

    long p() const { return p_; }
    int f() const { return f_; }
    long q() const { return q_; }
    /// Monic modulus, coefficients low..high (size f+1).
    const std::vector<long>& modulus() const { return mod_; }

    long add(long a, long b) const;
    long sub(long a, long b) const;
    long neg(long a) const;
    long mul(long a, long b) const;
    long inv(long a) const;
    long pow(long a, Int e) const;
    long from_int(long n) const;  // n mod p, embedded in the prime field
    /// Trace to F_p, returned as 0..p-1.
    long trace(long a) const;

private:
    long p_, q_;
    int f_;
    std::vector<long> mod_;
    std::vector<long> mul_table_;  // only for small q
    std::vector<long> inv_table_;
    std::vector<long> trace_table_;
    bool tables_ = false;
    long mul_slow(long a, long b) const;
};

/// zeta_p^{Tr(x)} as an exact cyclotomic number.
CycNumber additive_character(const FiniteField& F, long x);

}  // namespace minrep
