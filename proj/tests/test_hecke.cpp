#include <algorithm>
#include <map>

#include "doctest.h"
#include "minrep/heckemod.hpp"

using namespace minrep;

namespace {
const std::vector<Group> kAll = {{'D', 4}, {'D', 5}, {'D', 6}, {'D', 7},
                                 {'E', 6}, {'E', 7}, {'E', 8}};

LaurentMatrix qid(int n, long e) {
    return LaurentMatrix::identity(n).scaled(LaurentPoly::q_power(e));
}
}  // namespace

TEST_CASE("laurent arithmetic") {
    LaurentPoly v(Int(1), 1), q = LaurentPoly::q_power(1);
    CHECK(v * v == q);
    CHECK((q - q).is_zero());
    CHECK(q.is_q_polynomial());
    CHECK(!v.is_q_polynomial());
    CHECK(!LaurentPoly(Int(1), -2).is_q_polynomial());
    CHECK((q * q + v).str() == "v + v^4");
}

TEST_CASE("quadratic and braid relations") {
    for (Group g : kAll) {
        RootSystem rs(g);
        auto Ts = lusztig_generators(rs);
        const int K = rs.rank() + 1;
        LaurentMatrix one = LaurentMatrix::identity(K);
        LaurentPoly q = LaurentPoly::q_power(1);
        for (const auto& T : Ts) {
            // (T - q)(T + 1) = 0
            CHECK(((T - one.scaled(q)) * (T + one)).is_zero());
        }
        int pairs = 0;
        for (int a = 0; a < K; ++a)
            for (int b = a + 1; b < K; ++b) {
                if (affine_pairing(rs, a, b) == -1) {
                    CHECK(Ts[a] * Ts[b] * Ts[a] == Ts[b] * Ts[a] * Ts[b]);
                } else {
                    CHECK(Ts[a] * Ts[b] == Ts[b] * Ts[a]);
                }
                ++pairs;
            }
        CHECK(pairs == K * (K - 1) / 2);  // 21 for E6
    }
}

TEST_CASE("translation word basics") {
    RootSystem e8(parse_group("E8"));
    std::vector<Rat> zero(8, Rat(0));
    auto w0 = translation_word(e8, zero);
    CHECK(w0.letters.empty());
    CHECK(w0.trivial_automorphism());

    // omega-vee_{beta0}: length 2(n+2) = 58, trivial automorphism
    std::vector<Rat> lam(8);
    for (int i = 0; i < 8; ++i) lam[i] = e8.omega()[i];
    auto w = translation_word(e8, lam);
    CHECK(w.letters.size() == 58);
    CHECK(w.trivial_automorphism());

    RootSystem e6(parse_group("E6"));
    std::vector<Rat> lam6(6);
    for (int i = 0; i < 6; ++i) lam6[i] = e6.omega()[i];
    auto w6 = translation_word(e6, lam6);
    CHECK(w6.letters.size() == 22);
    // omega-vee_{beta0} lies in the coroot lattice (integral coordinates)
    CHECK(w6.trivial_automorphism());

    // a coweight outside the coroot lattice gives a nontrivial automorphism:
    // E6 fundamental coweight of vertex 1 (third-integral coordinates)
    auto fw = e6.fundamental_coweights()[0];
    auto wf = translation_word(e6, fw);
    CHECK(!wf.trivial_automorphism());
    // its automorphism permutes the affine diagram: adjacency preserved
    for (int a = 0; a <= 6; ++a)
        for (int b = 0; b <= 6; ++b)
            CHECK(affine_pairing(e6, a, b) ==
                  affine_pairing(e6, wf.automorphism[a], wf.automorphism[b]));

    CHECK_THROWS(translation_word(e6, std::vector<Rat>(6, Rat(-1))));  // not dominant
}

TEST_CASE("bernstein matrices and eigenvalues") {
    for (Group g : kAll) {
        RootSystem rs(g);
        auto res = bernstein_matrix(rs);
        const int K = rs.rank() + 1;
        auto [e1, e2] = res.eigen_q_exponents;
        LaurentMatrix A1 = res.T - qid(K, e1), A2 = res.T - qid(K, e2);
        if (g.series == 'D' && g.k == 4) {
            CHECK(e1 == e2);
            CHECK(e1 == 8);
            CHECK((A1 * A1).is_zero());
            CHECK(!A1.is_zero());  // not semisimple
            CHECK(!res.semisimple);
        } else {
            CHECK(e1 != e2);
            CHECK((A1 * A2).is_zero());
            CHECK(!A1.is_zero());
            CHECK(!A2.is_zero());
            CHECK(res.semisimple);  // squarefree minimal polynomial
        }
        // commutation with every finite generator except beta0
        auto Ts = lusztig_generators(rs);
        for (int a = 1; a <= rs.rank(); ++a) {
            if (a - 1 == rs.beta0()) continue;
            CHECK((res.T * Ts[a] - Ts[a] * res.T).is_zero());
        }
    }

    // spec examples
    {
        auto r = bernstein_matrix(RootSystem(parse_group("E6")));
        CHECK(r.eigen_q_exponents == std::pair<long, long>{19, 18});
    }
    {
        auto r = bernstein_matrix(RootSystem(parse_group("D4")));
        CHECK(r.eigen_q_exponents == std::pair<long, long>{8, 8});
    }
}

TEST_CASE("lambda exponents match the bernstein eigenstructure") {
    // multiset from the rule == eigen multiplicities of the matrix, checked by
    // rank computation: dim ker(T - q^e) equals the multiplicity (semisimple),
    // here verified through annihilator degrees and the trace.
    for (Group g : kAll) {
        RootSystem rs(g);
        auto lam = lambda_exponents(rs, rs.beta0());
        CHECK(lam.exponents.size() == static_cast<size_t>(rs.rank() + 1));
        auto res = bernstein_matrix(rs);
        auto [e1, e2] = res.eigen_q_exponents;
        // the value set matches the published eigen pair
        std::vector<long> uniq = lam.exponents;
        uniq.erase(std::unique(uniq.begin(), uniq.end()), uniq.end());
        std::vector<long> expect{e1, e2};
        std::sort(expect.begin(), expect.end());
        expect.erase(std::unique(expect.begin(), expect.end()), expect.end());
        CHECK(uniq == expect);
        // multiplicities: trace(T) = sum over multiset q^{e}
        LaurentPoly tr;
        for (int i = 0; i < res.T.dim(); ++i) tr = tr + res.T.at(i, i);
        LaurentPoly want;
        for (long e : lam.exponents) want = want + LaurentPoly::q_power(e);
        CHECK(tr == want);
    }
    // frozen examples (multisets computed from the matrices)
    {
        auto lam = lambda_exponents(RootSystem(parse_group("E6")), RootSystem(parse_group("E6")).beta0());
        CHECK(lam.exponents == std::vector<long>{18, 19, 19, 19, 19, 19, 19});
    }
    {
        RootSystem d4(parse_group("D4"));
        auto lam = lambda_exponents(d4, d4.beta0());
        CHECK(lam.exponents == std::vector<long>(5, 8));
        CHECK(lam.beta_is_branch);  // D4: beta0 is the branch vertex
    }
    {
        RootSystem e8(parse_group("E8"));
        auto lam = lambda_exponents(e8, e8.beta0());
        std::vector<long> want{48};
        want.insert(want.end(), 8, 52);
        CHECK(lam.exponents == want);
    }
}

TEST_CASE("fbar scaling exponents") {
    Group e6 = parse_group("E6");
    CHECK(fbar_scaling_exponent(e6, 1) == 19);
    CHECK(fbar_scaling_exponent(e6, 0) == 18);
    Group e8 = parse_group("E8");
    CHECK(fbar_scaling_exponent(e8, 0) == 48);
    CHECK(fbar_scaling_exponent(e8, 4) == 52);
    // set coincidence with the eigen pair / lambda exponents for every group
    for (Group g : {parse_group("D5"), parse_group("D7"), parse_group("E7")}) {
        long uhi = g.series == 'E' ? group_s(g) : g.k - 4;
        auto [e1, e2] = bernstein_eigen_exponents(g);
        std::vector<long> got{fbar_scaling_exponent(g, 0), fbar_scaling_exponent(g, uhi)};
        std::sort(got.begin(), got.end());
        std::vector<long> want{e1, e2};
        std::sort(want.begin(), want.end());
        CHECK(got == want);
    }
}
