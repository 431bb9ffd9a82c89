#include "minrep/rootsys.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace minrep {

Group parse_group(const std::string& tag) {
    if (tag.size() < 2 || (tag[0] != 'D' && tag[0] != 'E'))
        throw std::invalid_argument("unsupported group tag: " + tag);
    Group g;
    g.series = tag[0];
    g.k = std::stoi(tag.substr(1));
    if (g.series == 'D' && g.k < 4) throw std::invalid_argument("D_k needs k >= 4");
    if (g.series == 'E' && (g.k < 6 || g.k > 8)) throw std::invalid_argument("E_k needs k in {6,7,8}");
    return g;
}

std::string to_string(Group g) { return std::string(1, g.series) + std::to_string(g.k); }

int group_s(Group g) {
    if (g.series != 'E') throw std::domain_error("group_s: only defined for E-series");
    return g.k == 6 ? 1 : g.k == 7 ? 2 : 4;
}

static std::vector<std::pair<int, int>> dynkin_edges(Group g) {
    std::vector<std::pair<int, int>> e;
    if (g.series == 'D') {
        for (int i = 1; i < g.k - 2; ++i) e.emplace_back(i, i + 1);
        e.emplace_back(g.k - 2, g.k - 1);
        e.emplace_back(g.k - 2, g.k);
    } else {
        e = {{1, 3}, {3, 4}, {4, 5}, {5, 6}, {2, 4}};
        if (g.k >= 7) e.emplace_back(6, 7);
        if (g.k == 8) e.emplace_back(7, 8);
    }
    return e;
}

RootSystem::RootSystem(Group g) : g_(g), k_(g.k) {
    cartan_.assign(k_, std::vector<int>(k_, 0));
    for (int i = 0; i < k_; ++i) cartan_[i][i] = 2;
    for (auto [a, b] : dynkin_edges(g)) cartan_[a - 1][b - 1] = cartan_[b - 1][a - 1] = -1;

    // Closure of the simple roots under simple reflections.
    std::set<RootVec> all;
    std::vector<RootVec> frontier;
    for (int i = 0; i < k_; ++i) {
        RootVec s(k_, 0);
        s[i] = 1;
        all.insert(s);
        frontier.push_back(s);
    }
    while (!frontier.empty()) {
        std::vector<RootVec> next;
        for (const auto& r : frontier) {
            for (int i = 0; i < k_; ++i) {
                long m = 0;
                for (int j = 0; j < k_; ++j) m += cartan_[i][j] * r[j];
                RootVec s = r;
                s[i] -= static_cast<int>(m);
                if (all.insert(s).second) next.push_back(s);
            }
        }
        frontier = std::move(next);
    }
    roots_.assign(all.begin(), all.end());
    for (int i = 0; i < static_cast<int>(roots_.size()); ++i) {
        index_[roots_[i]] = i;
        if (std::all_of(roots_[i].begin(), roots_[i].end(), [](int c) { return c >= 0; }))
            positive_.push_back(i);
    }

    int best = positive_[0];
    for (int idx : positive_)
        if (height(roots_[idx]) > height(roots_[best])) best = idx;
    omega_ = roots_[best];

    // beta0: the unique simple root with <omega, alpha_i-coroot> = 1.
    for (int i = 0; i < k_; ++i) {
        long m = 0;
        for (int j = 0; j < k_; ++j) m += cartan_[i][j] * omega_[j];
        if (m == 1) {
            if (beta0_ >= 0) throw std::logic_error("ambiguous beta0");
            beta0_ = i;
        } else if (m != 0) {
            throw std::logic_error("unexpected pairing of omega with a simple root");
        }
    }
    for (int i = 0; i < k_; ++i) {
        int deg = 0;
        for (int j = 0; j < k_; ++j) deg += (i != j && cartan_[i][j] == -1);
        if (deg == 3) branch_ = i;
    }
    if (beta0_ < 0 || branch_ < 0) throw std::logic_error("root system bootstrap failed");

    // C^{-1} by exact Gaussian elimination.
    std::vector<std::vector<Rat>> A(k_, std::vector<Rat>(2 * k_, Rat(0)));
    for (int i = 0; i < k_; ++i) {
        for (int j = 0; j < k_; ++j) A[i][j] = cartan_[i][j];
        A[i][k_ + i] = 1;
    }
    for (int col = 0; col < k_; ++col) {
        int piv = col;
        while (A[piv][col] == 0) ++piv;
        std::swap(A[piv], A[col]);
        Rat d = A[col][col];
        for (auto& x : A[col]) x /= d;
        for (int r = 0; r < k_; ++r) {
            if (r == col || A[r][col] == 0) continue;
            Rat f = A[r][col];
            for (int j = 0; j < 2 * k_; ++j) A[r][j] -= f * A[col][j];
        }
    }
    fw_.assign(k_, std::vector<Rat>(k_));
    for (int j = 0; j < k_; ++j)
        for (int i = 0; i < k_; ++i) fw_[j][i] = A[i][k_ + j];  // fw_[j] = j-th column of C^{-1}

    rho_vee_.assign(k_, Rat(0));
    for (int j = 0; j < k_; ++j)
        for (int i = 0; i < k_; ++i) rho_vee_[i] += fw_[j][i];

    size_t expect = g.series == 'D' ? static_cast<size_t>(k_) * (k_ - 1)
                                    : (k_ == 6 ? 36u : k_ == 7 ? 63u : 120u);
    if (positive_.size() != expect) throw std::logic_error("unexpected positive-root count");
    for (const auto& r : roots_)
        if (pairing(r, r) != 2) throw std::logic_error("root of norm != 2");
}

int RootSystem::root_index(const RootVec& r) const {
    auto it = index_.find(r);
    return it == index_.end() ? -1 : it->second;
}

int RootSystem::pairing(const RootVec& a, const RootVec& b) const {
    long s = 0;
    for (int i = 0; i < k_; ++i) {
        if (a[i] == 0) continue;
        long row = 0;
        for (int j = 0; j < k_; ++j) row += cartan_[i][j] * b[j];
        s += a[i] * row;
    }
    return static_cast<int>(s);
}

int RootSystem::height(const RootVec& r) {
    int h = 0;
    for (int c : r) h += c;
    return h;
}

RootVec RootSystem::simple(int i) const {
    RootVec s(k_, 0);
    s[i] = 1;
    return s;
}

RootVec RootSystem::negative(const RootVec& r) const {
    RootVec s(k_);
    for (int i = 0; i < k_; ++i) s[i] = -r[i];
    return s;
}

Int RootSystem::rho_of_coweight(const std::vector<Int>& lam) {
    Int s = 0;
    for (const auto& c : lam) s += c;
    return s;
}

int RootSystem::n_heisenberg() const {
    return g_.series == 'E' ? 6 * group_s(g_) + 3 : 2 * g_.k - 5;
}

std::vector<std::vector<int>> RootSystem::euclidean_simple_roots() const {
    std::vector<std::vector<int>> out;
    if (g_.series == 'D') {
        for (int i = 0; i < k_ - 1; ++i) {
            std::vector<int> v(k_, 0);
            v[i] = 1;
            v[i + 1] = -1;
            out.push_back(v);
        }
        std::vector<int> v(k_, 0);
        v[k_ - 2] = 1;
        v[k_ - 1] = 1;
        out.push_back(v);
    } else {
        // Doubled Bourbaki coordinates in Z^8 (restricted to the E_k subsystem).
        auto e = [&](int i, int sign) {
            std::vector<int> v(8, 0);
            v[i] = 2 * sign;
            return v;
        };
        std::vector<std::vector<int>> full(8);
        full[0] = {1, -1, -1, -1, -1, -1, -1, 1};  // (e1+e8-(e2..e7))/2, doubled
        full[1] = e(0, 1);
        for (int j = 0; j < 8; ++j) full[1][j] += e(1, 1)[j];  // e1+e2
        for (int i = 2; i < 8; ++i) {
            full[i] = e(i - 1, 1);
            for (int j = 0; j < 8; ++j) full[i][j] += e(i - 2, -1)[j];  // e_{i-1} - e_{i-2}
        }
        for (int i = 0; i < k_; ++i) out.push_back(full[i]);
    }
    return out;
}

SignTable::SignTable(const RootSystem& rs) : rs_(&rs) {
    for (const auto& a : rs.roots()) {
        if (c(a, a) != -1) throw std::logic_error("sign table: c(a,a) != -1");
        RootVec na = rs.negative(a);
        for (const auto& b : rs.roots()) {
            if (c(a, b) * c(b, a) != (rs.pairing(a, b) % 2 ? -1 : 1))
                throw std::logic_error("sign table: product rule violated");
            if (c(na, b) != c(a, b)) throw std::logic_error("sign table: c(-a,b) != c(a,b)");
        }
    }
}

long SignTable::B(const RootVec& a, const RootVec& b) const {
    const auto& rs = *rs_;
    long s = 0;
    for (int i = 0; i < rs.rank(); ++i) {
        if (a[i] == 0) continue;
        for (int j = 0; j < rs.rank(); ++j) {
            if (b[j] == 0) continue;
            long Bij = i < j ? rs.cartan(i, j) : (i == j ? 1 : 0);
            s += static_cast<long>(a[i]) * b[j] * Bij;
        }
    }
    return s;
}

HeisenbergFrame build_frame(const RootSystem& rs, const SignTable& st) {
    HeisenbergFrame f;
    f.rs = &rs;
    f.st = &st;
    const int k = rs.rank();
    const RootVec& om = rs.omega();
    RootVec b0 = rs.simple(rs.beta0());

    for (const auto& r : rs.roots())
        if (rs.pairing(om, r) == 1) f.sigma.push_back(r);

    std::vector<RootVec> pi1;
    for (const auto& b : f.sigma)
        if (b != b0 && rs.pairing(b0, b) == 1) pi1.push_back(b);
    std::sort(pi1.begin(), pi1.end(), [](const RootVec& a, const RootVec& b) {
        int ha = RootSystem::height(a), hb = RootSystem::height(b);
        return ha != hb ? ha < hb : a < b;
    });
    if (rs.group().series == 'D' && rs.group().k >= 5) {
        f.alpha1 = 0;  // Bourbaki alpha_1 is the A1 node left after removing beta0 = alpha_2
        RootVec b1 = b0;
        b1[f.alpha1] += 1;
        auto it = std::find(pi1.begin(), pi1.end(), b1);
        if (it == pi1.end()) throw std::logic_error("beta1 = beta0 + alpha1 not found");
        pi1.erase(it);
        pi1.insert(pi1.begin(), b1);
    }

    f.beta.push_back(b0);
    f.beta.insert(f.beta.end(), pi1.begin(), pi1.end());
    f.n = static_cast<int>(f.beta.size()) - 1;
    if (f.n != rs.n_heisenberg()) throw std::logic_error("unexpected frame size");

    for (const auto& b : f.beta) {
        RootVec g(k);
        for (int i = 0; i < k; ++i) g[i] = om[i] - b[i];
        if (!rs.is_root(g)) throw std::logic_error("omega - beta_i is not a root");
        f.gamma.push_back(g);
    }
    for (int i = 0; i <= f.n; ++i) {
        int e = st.c(f.beta[i], f.gamma[i]);
        if (e != -st.c(f.beta[i], om) || e != st.c(f.gamma[i], om))
            throw std::logic_error("eps identities violated");
        f.eps.push_back(e);
    }
    if (static_cast<int>(f.sigma.size()) != 2 * f.n + 2) throw std::logic_error("|Sigma| != 2n+2");

    f.delta = om;
    for (const auto& g : f.gamma)
        for (int i = 0; i < k; ++i) f.delta[i] += g[i];
    return f;
}

}  // namespace minrep
