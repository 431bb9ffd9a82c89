#include <random>

#include "doctest.h"
#include "minrep/spherical.hpp"

using namespace minrep;

TEST_CASE("normalization and plug-ins") {
    auto e6 = make_group_data(parse_group("E6"));
    std::vector<Rat> zero(9, Rat(0));
    // f0(1, 0, ..., 0) = 1
    for (long p : {2L, 3L, 5L}) {
        SphericalValue v = spherical_eval(*e6, p, {Rat(1), Rat(0), zero});
        CHECK(v == SphericalValue::from_mag(Rat(1)));
    }
    // E6, p = 2, (y,x0,x) = (4,2,0) -> 12
    SphericalValue v = spherical_eval(*e6, 2, {Rat(4), Rat(2), zero});
    CHECK(v == SphericalValue::from_mag(Rat(12)));

    // D4, p = 3, (3,1,1,1,1) -> psi(-1/3) * 1 * (1 + 0) = zeta_3^2
    auto d4 = make_group_data(parse_group("D4"));
    SphericalValue w = spherical_eval(*d4, 3, {Rat(3), Rat(1), {Rat(1), Rat(1), Rat(1)}});
    CHECK(w.mag == 1);
    CHECK(w.m == 1);
    int c = d4->cubic.monos[0].coef;  // phase is psi(-c/3)
    CHECK(w.expo == (c == 1 ? 2 : 1));

    CHECK_THROWS(spherical_eval(*e6, 2, {Rat(0), Rat(1), zero}));
}

TEST_CASE("fbar closed values") {
    auto e6 = make_group_data(parse_group("E6"));
    std::vector<Rat> zero(9, Rat(0));
    CHECK(fbar_closed(*e6, 2, Rat(1), zero) == SphericalValue::from_mag(Rat(1)));
    // (x0, x) = (p, 0) -> p^{s+1}(p^{2s}-1)/(p^s-1) = 12 at p=2, s=1
    CHECK(fbar_closed(*e6, 2, Rat(2), zero) == SphericalValue::from_mag(Rat(12)));
    // non-integral lift -> 0
    std::vector<Rat> x = zero;
    x[0] = Rat(1, 2);
    CHECK(fbar_closed(*e6, 2, Rat(1), x).is_zero());
    CHECK_THROWS(fbar_closed(*e6, 2, Rat(0), zero));
}

TEST_CASE("support vanishes off O-points at unit levels") {
    auto d5 = make_group_data(parse_group("D5"));
    std::vector<Rat> x(5, Rat(0));
    x[2] = Rat(1, 3);
    CHECK(spherical_eval(*d5, 3, {Rat(1), Rat(1), x}).is_zero());
}

TEST_CASE("A-invariance seeded") {
    for (const char* tag : {"E6", "D5"}) {
        auto gd = make_group_data(parse_group(tag));
        for (long p : {2L, 3L}) {
            auto v = check_A_invariance(*gd, p, 300, 1234);
            INFO(tag, " p=", p, " ", v.detail);
            CHECK(v.pass);
            CHECK(v.samples == 300);
        }
    }
}

TEST_CASE("torus covariance") {
    auto e7 = make_group_data(parse_group("E7"));
    auto v = check_torus_covariance(*e7, 2, 200, 77);
    INFO(v.detail);
    CHECK(v.pass);
    auto d4 = make_group_data(parse_group("D4"));
    auto w = check_torus_covariance(*d4, 5, 200, 78);
    INFO(w.detail);
    CHECK(w.pass);
}

TEST_CASE("fbar is the stabilized limit") {
    for (const char* tag : {"E6", "D4", "D6"}) {
        auto gd = make_group_data(parse_group(tag));
        auto v = check_fbar_limit(*gd, 3, 100, 99);
        INFO(v.detail);
        CHECK(v.pass);
    }
}

TEST_CASE("d4 phi0") {
    // |x| = 1 -> 1
    std::vector<Rat> x{Rat(1), Rat(0), Rat(0), Rat(0), Rat(0), Rat(0)};
    CHECK(d4_phi0_eval(2, x) == 1);
    // non-integral coordinate -> 0
    std::vector<Rat> y{Rat(1, 2), Rat(0), Rat(0), Rat(0), Rat(0), Rat(0)};
    CHECK(d4_phi0_eval(2, y) == 0);
    // |x| = q^{-1} -> (q - q^{-1})/(1 - q^{-1})
    std::vector<Rat> z{Rat(3), Rat(0), Rat(3), Rat(0), Rat(0), Rat(0)};
    CHECK(d4_phi0_eval(3, z) == Rat(3 - Rat(1, 3)) / (Rat(1) - Rat(1, 3)));
    // off-cone rejected
    std::vector<Rat> w{Rat(1), Rat(1), Rat(0), Rat(0), Rat(0), Rat(0)};
    CHECK_THROWS(d4_phi0_eval(3, w));
}

TEST_CASE("d4 intertwiner oracle equals the closed formula") {
    auto d4 = make_group_data(parse_group("D4"));
    ConductorCapGuard guard(16);
    {
        CycNumber v = d4_intertwiner_eval(*d4, 2, {Rat(1), Rat(0), {Rat(0), Rat(0), Rat(0)}});
        CHECK(v == CycNumber::rational(Rat(1)));
    }
    {
        SphericalPoint pt{Rat(1), Rat(1), {Rat(1), Rat(1), Rat(1)}};
        CHECK(d4_intertwiner_eval(*d4, 2, pt) == spherical_eval(*d4, 2, pt).to_cyc(2));
    }
    {
        SphericalPoint pt{Rat(3), Rat(1), {Rat(1), Rat(1), Rat(0)}};
        CycNumber v = d4_intertwiner_eval(*d4, 3, pt);
        Rat r;
        CHECK(v.is_rational(&r));  // x3 = 0: no zeta_3 phase
        CHECK(v == spherical_eval(*d4, 3, pt).to_cyc(3));
    }
    {
        // insufficient explicit truncation is detected, not silently wrong
        SphericalPoint pt{Rat(4), Rat(4), {Rat(2), Rat(2), Rat(1)}};
        CHECK_THROWS_AS(d4_intertwiner_eval(*d4, 2, pt, 0), std::runtime_error);
        CHECK(d4_intertwiner_eval(*d4, 2, pt) == spherical_eval(*d4, 2, pt).to_cyc(2));
    }
    // seeded agreement, all three primes
    std::mt19937_64 rng(4242);
    for (long p : {2L, 3L, 5L}) {
        for (int t = 0; t < 25; ++t) {
            SphericalPoint pt;
            pt.y = qpow(p, static_cast<long>(rng() % 2)) * Rat(1 + static_cast<long>(rng() % 4));
            pt.x0 = Rat(static_cast<long>(rng() % 5) - 2);
            pt.x.resize(3);
            for (auto& xi : pt.x) xi = Rat(static_cast<long>(rng() % 7) - 3);
            if (pt.x0 == 0) pt.x0 = Rat(1);
            // occasional fractional x3
            if (t % 5 == 0) pt.x[2] /= p;
            CHECK(d4_intertwiner_eval(*d4, p, pt) ==
                  spherical_eval(*d4, p, pt).to_cyc(p));
        }
    }
}

TEST_CASE("table kernel is bit-identical to the generic evaluator") {
    std::mt19937_64 rng(321);
    for (const char* tag : {"D4", "D5", "E6"}) {
        auto gd = make_group_data(parse_group(tag));
        for (long p : {2L, 3L}) {
            for (int l = 1; l <= 2; ++l) {
                std::int64_t pl = 1;
                for (int i = 0; i < l; ++i) pl *= p;
                for (int t = 0; t < 200; ++t) {
                    std::int64_t x0 = static_cast<std::int64_t>(rng() % pl);
                    std::vector<std::int64_t> x(gd->n());
                    for (auto& xi : x) xi = static_cast<std::int64_t>(rng() % pl);
                    TableValue tv = table_entry(*gd, p, l, x0, x.data());
                    SphericalPoint pt;
                    pt.y = qpow(p, l);
                    pt.x0 = Rat(x0);
                    pt.x.assign(x.begin(), x.end());
                    SphericalValue sv = spherical_eval(*gd, p, pt);
                    CHECK(sv.mag == Rat(tv.mag));
                    if (tv.mag != 0) {
                        CHECK(sv.m == tv.mm);
                        if (tv.mm) CHECK(sv.expo == tv.expo);
                    }
                }
            }
        }
    }
}
