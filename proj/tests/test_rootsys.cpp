#include "doctest.h"
#include "minrep/rootsys.hpp"

using namespace minrep;

namespace {
const std::vector<Group> kAll = {{'D', 4}, {'D', 5}, {'D', 6}, {'D', 7},
                                 {'E', 6}, {'E', 7}, {'E', 8}};
}

TEST_CASE("root counts and omega") {
    RootSystem e6(parse_group("E6"));
    CHECK(e6.positive().size() == 36);
    CHECK(e6.rank() == 6);

    RootSystem d4(parse_group("D4"));
    CHECK(d4.positive().size() == 12);
    // omega = alpha1 + 2 alpha2 + alpha3 + alpha4 in Bourbaki numbering
    CHECK(d4.omega() == RootVec{1, 2, 1, 1});

    RootSystem e8(parse_group("E8"));
    CHECK(e8.positive().size() == 120);
    // rho(omega-vee_{beta0}) = n + 2 = 29
    CHECK(RootSystem::height(e8.omega()) + 1 == 30);
    CHECK(RootSystem::height(e8.omega()) == 29);

    for (Group g : kAll) {
        RootSystem rs(g);
        size_t expect = g.series == 'D' ? static_cast<size_t>(g.k) * (g.k - 1)
                                        : (g.k == 6 ? 36 : g.k == 7 ? 63 : 120);
        CHECK(rs.positive().size() == expect);
        for (const auto& r : rs.roots()) CHECK(rs.pairing(r, r) == 2);
        // fundamental weight of beta0 equals omega
        for (int i = 0; i < rs.rank(); ++i)
            CHECK(rs.pairing(rs.omega(), rs.simple(i)) == (i == rs.beta0() ? 1 : 0));
        CHECK(RootSystem::height(rs.omega()) == rs.n_heisenberg() + 2);
    }
    CHECK_THROWS(parse_group("E9"));
    CHECK_THROWS(parse_group("D3"));
    CHECK_THROWS(parse_group("A2"));
}

TEST_CASE("sign table properties exhaustively") {
    for (Group g : kAll) {
        RootSystem rs(g);
        SignTable st(rs);
        const auto& roots = rs.roots();
        for (const auto& a : roots) {
            CHECK(st.c(a, a) == -1);
            RootVec na = rs.negative(a);
            for (const auto& b : roots) {
                int lr = st.c(a, b) * st.c(b, a);
                CHECK(lr == ((rs.pairing(a, b) % 2 + 2) % 2 ? -1 : 1));
                CHECK(st.c(na, b) == st.c(a, b));
            }
        }
    }
}

TEST_CASE("bimultiplicativity over root triples (E6 exhaustive)") {
    RootSystem rs(parse_group("E6"));
    SignTable st(rs);
    const auto& roots = rs.roots();
    long checked = 0;
    for (const auto& a : roots)
        for (const auto& b : roots)
            for (const auto& c : roots) {
                RootVec bc(rs.rank());
                for (int i = 0; i < rs.rank(); ++i) bc[i] = b[i] + c[i];
                if (!rs.is_root(bc)) continue;
                CHECK(st.c(a, bc) == st.c(a, b) * st.c(a, c));
                ++checked;
            }
    CHECK(checked > 0);
}

TEST_CASE("frame sizes and identities") {
    {
        RootSystem rs(parse_group("E7"));
        SignTable st(rs);
        auto f = build_frame(rs, st);
        CHECK(f.n == 15);
        CHECK(f.sigma.size() == 32);
    }
    {
        RootSystem rs(parse_group("D5"));
        SignTable st(rs);
        auto f = build_frame(rs, st);
        CHECK(f.n == 5);
        // beta1 = beta0 + alpha1
        RootVec b1 = f.beta[0];
        b1[f.alpha1] += 1;
        CHECK(f.beta[1] == b1);
    }
    for (Group g : kAll) {
        RootSystem rs(g);
        SignTable st(rs);
        auto f = build_frame(rs, st);
        // involution: *(*(beta_i)) = beta_i
        for (int i = 0; i <= f.n; ++i) {
            RootVec gg(rs.rank());
            for (int t = 0; t < rs.rank(); ++t) gg[t] = rs.omega()[t] - f.gamma[i][t];
            CHECK(gg == f.beta[i]);
            CHECK(rs.pairing(rs.omega(), f.beta[i]) == 1);
        }
        // delta = omega + sum gamma_i in closed form
        RootVec want(rs.rank());
        if (g.series == 'E') {
            int s = group_s(g);
            for (int t = 0; t < rs.rank(); ++t)
                want[t] = 2 * (s + 1) * (rs.omega()[t] + f.gamma[0][t]);
        } else {
            for (int t = 0; t < rs.rank(); ++t) {
                want[t] = (g.k - 2) * rs.omega()[t] + 2 * f.gamma[0][t];
                if (g.k >= 5 && t == f.alpha1) want[t] += g.k - 4;
            }
        }
        if (!(g.series == 'D' && g.k == 4)) CHECK(f.delta == want);
        // gamma0 pairing with simple roots: 1 on neighbors of beta0, else 0
        for (int i = 0; i < rs.rank(); ++i) {
            if (i == rs.beta0()) continue;
            int expect = rs.adjacent(i, rs.beta0()) ? 1 : 0;
            CHECK(rs.pairing(f.gamma[0], rs.simple(i)) == expect);
        }
        // delta vanishes on the torus of G0 (simples not attached to beta0)
        for (int i = 0; i < rs.rank(); ++i) {
            if (i == rs.beta0() || rs.adjacent(i, rs.beta0())) continue;
            CHECK(rs.pairing(f.delta, rs.simple(i)) == 0);
        }
    }
}

TEST_CASE("D4 delta identity at k = 4") {
    // delta = 2 omega + 2 gamma0 for D4 (the alpha1 term drops out)
    RootSystem rs(parse_group("D4"));
    SignTable st(rs);
    auto f = build_frame(rs, st);
    for (int t = 0; t < 4; ++t) CHECK(f.delta[t] == 2 * rs.omega()[t] + 2 * f.gamma[0][t]);
}
