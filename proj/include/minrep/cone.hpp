#pragma once

#include <memory>
#include <random>
#include <tuple>

#include "minrep/rootsys.hpp"

namespace minrep {

/// Cubic form I_G: monomials x_i x_j x_k (1-based, i<j<k) with +-1 coefficients.
struct CubicMono {
    int i, j, k;
    int coef;
};

struct CubicForm {
    int n = 0;
    std::vector<CubicMono> monos;
};

CubicForm cubic_form(const HeisenbergFrame& f);

/// x has size n and holds (x_1..x_n).
template <class R>
R eval_cubic(const CubicForm& cf, const std::vector<R>& x) {
    R s(0);
    for (const auto& m : cf.monos) {
        R t = x[m.i - 1] * x[m.j - 1] * x[m.k - 1];
        if (m.coef < 0)
            s -= t;
        else
            s += t;
    }
    return s;
}

template <class R>
std::vector<R> grad_cubic(const CubicForm& cf, const std::vector<R>& x) {
    std::vector<R> g(cf.n, R(0));
    for (const auto& m : cf.monos) {
        R cij = x[m.i - 1] * x[m.j - 1];
        R cik = x[m.i - 1] * x[m.k - 1];
        R cjk = x[m.j - 1] * x[m.k - 1];
        if (m.coef < 0) {
            g[m.i - 1] -= cjk;
            g[m.j - 1] -= cik;
            g[m.k - 1] -= cij;
        } else {
            g[m.i - 1] += cjk;
            g[m.j - 1] += cik;
            g[m.k - 1] += cij;
        }
    }
    return g;
}

/// For D_k, I = x_1 Q(x_2..x_n): the monomial list of Q ((j,k) pairs, 1-based
/// in the original indexing, so entries range over 2..n).
std::vector<std::tuple<int, int, int>> dk_quadric(const CubicForm& cf);

/// Everything downstream needs the same four tables; built once per group.
struct GroupData {
    RootSystem rs;
    SignTable st;
    HeisenbergFrame frame;
    CubicForm cubic;

    explicit GroupData(Group g) : rs(g), st(rs), frame(build_frame(rs, st)), cubic(cubic_form(frame)) {}
    GroupData(const GroupData&) = delete;
    Group group() const { return rs.group(); }
    int n() const { return frame.n; }
};

std::shared_ptr<const GroupData> make_group_data(Group g);

/// Symplectic form on V = F^{2n+2} in the basis (e_{beta_0..beta_n}, e_{gamma_0..gamma_n}):
/// E(e_{beta_i}, e_{gamma_i}) = eps_i, other basis pairings 0.
template <class R>
R symplectic_form(const HeisenbergFrame& f, const std::vector<R>& v, const std::vector<R>& w) {
    R s(0);
    for (int i = 0; i <= f.n; ++i) {
        R t = v[i] * w[f.n + 1 + i] - v[f.n + 1 + i] * w[i];
        if (f.eps[i] < 0)
            s -= t;
        else
            s += t;
    }
    return s;
}

/// Lift of (x0, x) to the graph point in V: gamma-slot signs fixed by the
/// identification lambda' -> E(., lambda'), i.e. x'_0 = eps_0(-I/x0^2),
/// x'_i = eps_i I'_i(x)/x0.
std::vector<Rat> cone_lift(const GroupData& gd, const Rat& x0, const std::vector<Rat>& x);

/// exp(t e_alpha) on V for a Levi root alpha (<omega, alpha> = 0), as the
/// sparse move list (to, from, sign); the exponential is 1 + tN exactly.
struct UnipotentGen {
    RootVec alpha;
    std::vector<std::tuple<int, int, int>> moves;
};

UnipotentGen unipotent_gen(const HeisenbergFrame& f, const RootVec& alpha);

template <class R>
std::vector<R> apply_unipotent(const UnipotentGen& g, const R& t, const std::vector<R>& v) {
    std::vector<R> w = v;
    for (auto [to, from, sign] : g.moves) {
        R d = t * v[from];
        if (sign < 0)
            w[to] -= d;
        else
            w[to] += d;
    }
    return w;
}

/// spec op: unipotent_action(alpha, t, v).
std::vector<Rat> unipotent_action(const GroupData& gd, const RootVec& alpha, const Rat& t,
                                  const std::vector<Rat>& v);

struct TrialVerdict {
    bool pass = true;
    long trials = 0;
    std::string detail;
};

/// I(gamma_1(t)x_1,...,gamma_n(t)x_n) = gamma_0(t) omega(t) I(x) for random
/// cocharacter specializations over Q and over F_p (p = 0 means Q).
TrialVerdict torus_scaling_check(const GroupData& gd, long trials, std::uint64_t seed, long p = 0);

}  // namespace minrep
