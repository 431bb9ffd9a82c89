#include "minrep/cone.hpp"

#include <map>
#include <mutex>
#include <stdexcept>

namespace minrep {

CubicForm cubic_form(const HeisenbergFrame& f) {
    const RootSystem& rs = *f.rs;
    const SignTable& st = *f.st;
    const int k = rs.rank();
    CubicForm cf;
    cf.n = f.n;
    RootVec target = f.beta[0];
    for (int t = 0; t < k; ++t) target[t] += rs.omega()[t];
    for (int i = 1; i <= f.n; ++i)
        for (int j = i + 1; j <= f.n; ++j)
            for (int l = j + 1; l <= f.n; ++l) {
                bool hit = true;
                for (int t = 0; t < k && hit; ++t)
                    hit = f.beta[i][t] + f.beta[j][t] + f.beta[l][t] == target[t];
                if (!hit) continue;
                int coef = st.c(f.beta[i], f.beta[j]) * st.c(f.beta[i], f.beta[l]) *
                           st.c(f.beta[j], f.beta[l]) * st.c(f.beta[0], rs.omega());
                cf.monos.push_back({i, j, l, coef});
            }
    return cf;
}

std::vector<std::tuple<int, int, int>> dk_quadric(const CubicForm& cf) {
    std::vector<std::tuple<int, int, int>> q;
    for (const auto& m : cf.monos) {
        if (m.i != 1) throw std::domain_error("dk_quadric: monomial without x_1");
        q.emplace_back(m.j, m.k, m.coef);
    }
    return q;
}

std::shared_ptr<const GroupData> make_group_data(Group g) {
    static std::map<Group, std::shared_ptr<const GroupData>> cache;
    static std::mutex mu;
    std::lock_guard<std::mutex> lk(mu);
    auto it = cache.find(g);
    if (it != cache.end()) return it->second;
    auto gd = std::make_shared<const GroupData>(g);
    cache[g] = gd;
    return gd;
}

std::vector<Rat> cone_lift(const GroupData& gd, const Rat& x0, const std::vector<Rat>& x) {
    if (x0 == 0) throw std::domain_error("cone_lift: x0 = 0");
    const auto& f = gd.frame;
    const int n = f.n;
    std::vector<Rat> v(2 * n + 2, Rat(0));
    v[0] = x0;
    for (int i = 0; i < n; ++i) v[1 + i] = x[i];
    Rat I = eval_cubic(gd.cubic, x);
    auto g = grad_cubic(gd.cubic, x);
    v[n + 1] = Rat(f.eps[0]) * (-I) / (x0 * x0);
    for (int i = 1; i <= n; ++i) v[n + 1 + i] = Rat(f.eps[i]) * g[i - 1] / x0;
    return v;
}

UnipotentGen unipotent_gen(const HeisenbergFrame& f, const RootVec& alpha) {
    const RootSystem& rs = *f.rs;
    if (!rs.is_root(alpha) || rs.pairing(rs.omega(), alpha) != 0)
        throw std::domain_error("unipotent_gen: not a Levi root");
    UnipotentGen g;
    g.alpha = alpha;
    const int k = rs.rank();
    std::map<RootVec, int> slot;
    for (int i = 0; i <= f.n; ++i) {
        slot[f.beta[i]] = i;
        slot[f.gamma[i]] = f.n + 1 + i;
    }
    for (const auto& [root, from] : slot) {
        RootVec tgt(k);
        for (int t = 0; t < k; ++t) tgt[t] = root[t] + alpha[t];
        auto it = slot.find(tgt);
        if (it != slot.end()) g.moves.emplace_back(it->second, from, f.st->c(alpha, root));
    }
    return g;
}

std::vector<Rat> unipotent_action(const GroupData& gd, const RootVec& alpha, const Rat& t,
                                  const std::vector<Rat>& v) {
    return apply_unipotent(unipotent_gen(gd.frame, alpha), t, v);
}

TrialVerdict torus_scaling_check(const GroupData& gd, long trials, std::uint64_t seed, long p) {
    std::mt19937_64 rng(seed);
    const auto& f = gd.frame;
    const RootSystem& rs = gd.rs;
    const int k = rs.rank();
    TrialVerdict out;
    auto char_value = [&](const RootVec& chi, const std::vector<Rat>& c) {
        Rat v(1);
        for (int j = 0; j < k; ++j) {
            long e = 0;
            for (int i = 0; i < k; ++i) e += chi[i] * rs.cartan(i, j);
            // <chi, alpha_j-coroot> as exponent of c_j
            Rat base = c[j];
            Rat term(1);
            long ae = e < 0 ? -e : e;
            for (long t = 0; t < ae; ++t) term *= base;
            if (e < 0) term = Rat(1) / term;
            v *= term;
        }
        return v;
    };
    for (long t = 0; t < trials; ++t) {
        std::vector<Rat> c(k);
        for (int j = 0; j < k; ++j) {
            if (p == 0) {
                long num = static_cast<long>(rng() % 9) + 1;
                long den = static_cast<long>(rng() % 5) + 1;
                c[j] = Rat(rng() % 2 ? num : -num, den);
            } else {
                c[j] = Rat(1 + static_cast<long>(rng() % (p - 1)));
            }
        }
        std::vector<Rat> x(f.n);
        for (auto& xi : x) {
            long range = p == 0 ? 19 : p;
            long v = static_cast<long>(rng() % range);
            xi = Rat(p == 0 ? v - 9 : v);
        }
        std::vector<Rat> sx(f.n);
        for (int i = 1; i <= f.n; ++i) sx[i - 1] = char_value(f.gamma[i], c) * x[i - 1];
        Rat lhs = eval_cubic(gd.cubic, sx);
        Rat rhs = char_value(f.gamma[0], c) * char_value(rs.omega(), c) * eval_cubic(gd.cubic, x);
        if (p != 0) {
            // compare in F_p: denominators only involve the c_j, all coprime to p
            Rat d = lhs - rhs;
            if (int_den(d) % p == 0) throw std::logic_error("torus check: denominator not coprime to p");
            if (int_num(d) % p != 0) {
                out.pass = false;
                out.detail = "torus scaling mismatch mod p at trial " + std::to_string(t);
                return out;
            }
        } else if (lhs != rhs) {
            out.pass = false;
            out.detail = "torus scaling mismatch at trial " + std::to_string(t);
            return out;
        }
        ++out.trials;
    }
    return out;
}

}  // namespace minrep
