#include <random>

#include "doctest.h"
#include "minrep/padic.hpp"

using namespace minrep;

TEST_CASE("valuations and norms") {
    CHECK(*vp(Rat(12), 2) == 2);
    CHECK(*vp(Rat(1, 8), 2) == -3);
    CHECK(!vp(Rat(0), 5).has_value());
    CHECK(padic_norm(Rat(1, 2), 2) == 2);
    CHECK(padic_norm(Rat(0), 3) == 0);

    // (1, 1/p, p) -> max norm p
    long p = 3;
    CHECK(norm_of_vector({Rat(1), Rat(1, p), Rat(p)}, p) == p);
    CHECK(norm_of_vector({Rat(0), Rat(0)}, p) == 0);  // zero-vector sentinel
    CHECK(norm_of_vector({Rat(9), Rat(27)}, 3) == Rat(1, 9));
    CHECK(*vmin({Rat(9), Rat(27)}, 3) == 2);

    // ultrametric and multiplicativity on random rationals
    std::mt19937_64 rng(1);
    for (int t = 0; t < 300; ++t) {
        long n1 = static_cast<long>(rng() % 50) + 1, n2 = static_cast<long>(rng() % 50) + 1;
        Rat a(n1, 1 + static_cast<long>(rng() % 40));
        Rat b(n2, 1 + static_cast<long>(rng() % 40));
        CHECK(padic_norm(a * b, 3) == padic_norm(a, 3) * padic_norm(b, 3));
        Rat s = padic_norm(a + b, 3);
        CHECK(s <= std::max(padic_norm(a, 3), padic_norm(b, 3)));
        if (padic_norm(a, 3) != padic_norm(b, 3))
            CHECK(s == std::max(padic_norm(a, 3), padic_norm(b, 3)));
    }
}

TEST_CASE("psi of order zero") {
    CHECK(psi_order0(3, Rat(7)) == CycNumber::rational(Rat(1)));
    CHECK(psi_order0(2, Rat(1, 2)) == CycNumber::rational(Rat(-1)));  // zeta_2 = -1
    // x = 1/9, p = 3: a primitive 9th root; psi(x) psi(-x) = 1
    CycNumber z = psi_order0(3, Rat(1, 9));
    CHECK(z.m() == 2);
    CHECK(z * psi_order0(3, Rat(-1, 9)) == CycNumber::rational(Rat(1)));

    // additivity on random rationals
    std::mt19937_64 rng(2);
    ConductorCapGuard guard(12);
    for (int t = 0; t < 200; ++t) {
        long p = (t % 2) ? 2 : 5;
        Rat a(static_cast<long>(rng() % 61) - 30, 1 + static_cast<long>(rng() % 24));
        Rat b(static_cast<long>(rng() % 61) - 30, 1 + static_cast<long>(rng() % 24));
        CHECK(psi_order0(p, a + b) == psi_order0(p, a) * psi_order0(p, b));
    }
}

TEST_CASE("cyclotomic ring sanity") {
    // zeta_9^9 = 1
    CycNumber z = CycNumber::root(3, 2, 1);
    CycNumber pow = CycNumber::rational(Rat(1));
    for (int i = 0; i < 9; ++i) pow = pow * z;
    CHECK(pow == CycNumber::rational(Rat(1)));
    // 1 + zeta_3 + zeta_3^2 = 0
    CycNumber s(3, 1);
    for (int e = 0; e < 3; ++e) s.add_root(e, Rat(1));
    CHECK(s.is_zero());
    // conductor cap honored
    ConductorCapGuard guard(2);
    CHECK_THROWS(psi_order0(2, Rat(1, 16)));
}

TEST_CASE("spherical values") {
    SphericalValue a{Rat(3, 2), 3, 2, 4};
    SphericalValue b{Rat(2), 3, 1, 1};
    SphericalValue c = a * b;
    CHECK(c.mag == 3);
    // zeta_9^4 * zeta_3^1 = zeta_9^7
    CHECK(c.m == 2);
    CHECK(c.expo == 7);
    // conductor reduction: zeta_9^3 = zeta_3
    SphericalValue d{Rat(1), 3, 2, 3};
    d.normalize();
    CHECK(d.m == 1);
    CHECK(d.expo == 1);
    CHECK(d.to_cyc() == CycNumber::root(3, 1, 1));
    SphericalValue z = SphericalValue::zero();
    CHECK(z.is_zero());
    CHECK((z * a).is_zero());
}
