#include "minrep/counting.hpp"

#include <algorithm>
#include <chrono>
#include <stdexcept>

namespace minrep {

namespace {

using Clock = std::chrono::steady_clock;

double ms_since(Clock::time_point t0) {
    return std::chrono::duration<double, std::milli>(Clock::now() - t0).count();
}

std::uint64_t upow(std::uint64_t b, int e) {
    std::uint64_t r = 1;
    while (e-- > 0) r *= b;
    return r;
}

}  // namespace

Int card1_closed(Group g, const Int& q) {
    int s = group_s(g);
    return ipow(q, 3 * s) * (ipow(q, 2 * s + 1) - 1) * (ipow(q, s + 1) - 1) * (q - 1);
}

Int card2_closed(Group g, const Int& q) {
    int s = group_s(g);
    return (ipow(q, 2 * s + 1) - 1) * (ipow(q, 2 * s) + ipow(q, s) + 1);
}

Int cardC_closed(Group g, const Int& q) {
    int s = group_s(g);
    return (ipow(q, 3 * s + 2) - 1) * (ipow(q, 2 * s + 1) + 1) * (ipow(q, s + 1) + 1);
}

Int lines_closed(Group g, const Int& q) {
    Int num = card2_closed(g, q) * cardC_closed(g, q);
    Int den = (q - 1) * (q * q - 1);
    if (num % den != 0) throw std::logic_error("lines_closed: not integral");
    return num / den;
}

Int sections1_closed(Group g, const Int& q) {
    int s = group_s(g);
    return card2_closed(g, q) * (ipow(q, 3 * s) + ipow(q, 2 * s + 1) - ipow(q, s) + 1);
}

Int sections2_closed(Group g, const Int& q) {
    int s = group_s(g);
    if (s < 1) throw std::domain_error("sections2_closed: s >= 1");
    return ipow(q, 2 * s + 1) * card2_closed(g, q) * (ipow(q, s + 1) - 1) *
           (ipow(q, s + 1) + ipow(q, s) + ipow(q, s - 1) + 1);
}

namespace {

/// Enumerate F_q^n through the field's index encoding; calls fn(x) per point.
template <class Fn>
void enumerate(const FiniteField& F, int n, std::uint64_t budget, Fn&& fn) {
    std::uint64_t total = 1;
    for (int i = 0; i < n; ++i) {
        if (total > budget / static_cast<std::uint64_t>(F.q())) throw std::length_error("enumeration budget exceeded");
        total *= static_cast<std::uint64_t>(F.q());
    }
    std::vector<long> x(n, 0);
    for (std::uint64_t it = 0;; ++it) {
        fn(x);
        int i = 0;
        while (i < n && ++x[i] == F.q()) x[i++] = 0;
        if (i == n) break;
    }
}

}  // namespace

CountReport count_I_nonzero(const GroupData& gd, const FiniteField& F, std::uint64_t budget) {
    auto t0 = Clock::now();
    CountReport rep;
    rep.label = "card1";
    rep.params = to_string(gd.group()) + " q=" + std::to_string(F.q());
    rep.closed = card1_closed(gd.group(), Int(F.q()));
    Int count = 0;
    enumerate(F, gd.n(), budget, [&](const std::vector<long>& x) {
        long I = 0;
        for (const auto& m : gd.cubic.monos) {
            long t = F.mul(F.mul(x[m.i - 1], x[m.j - 1]), x[m.k - 1]);
            I = m.coef < 0 ? F.sub(I, t) : F.add(I, t);
        }
        if (I != 0) ++count;
    });
    rep.brute = count;
    rep.match = *rep.brute == rep.closed;
    rep.millis = ms_since(t0);
    return rep;
}

Int count_I_nonzero_partitioned(const GroupData& gd, const FiniteField& F, int parts) {
    // chunked accumulation over the same enumeration order
    std::vector<Int> partial(parts, 0);
    std::uint64_t total = upow(static_cast<std::uint64_t>(F.q()), gd.n());
    std::uint64_t idx = 0;
    enumerate(F, gd.n(), kEnumBudget, [&](const std::vector<long>& x) {
        long I = 0;
        for (const auto& m : gd.cubic.monos) {
            long t = F.mul(F.mul(x[m.i - 1], x[m.j - 1]), x[m.k - 1]);
            I = m.coef < 0 ? F.sub(I, t) : F.add(I, t);
        }
        if (I != 0) ++partial[idx * parts / total];
        ++idx;
    });
    Int sum = 0;
    for (const auto& c : partial) sum += c;
    return sum;
}

CountReport count_singular(const GroupData& gd, const FiniteField& F, std::uint64_t budget) {
    auto t0 = Clock::now();
    CountReport rep;
    rep.label = "card2";
    rep.params = to_string(gd.group()) + " q=" + std::to_string(F.q());
    rep.closed = card2_closed(gd.group(), Int(F.q()));
    const int n = gd.n();
    Int count = 0;
    std::vector<long> grad(n);
    enumerate(F, n, budget, [&](const std::vector<long>& x) {
        bool zero = true;
        for (int i = 0; i < n; ++i) {
            grad[i] = 0;
            if (x[i] != 0) zero = false;
        }
        if (zero) return;
        for (const auto& m : gd.cubic.monos) {
            long jk = F.mul(x[m.j - 1], x[m.k - 1]);
            long ik = F.mul(x[m.i - 1], x[m.k - 1]);
            long ij = F.mul(x[m.i - 1], x[m.j - 1]);
            if (m.coef < 0) {
                grad[m.i - 1] = F.sub(grad[m.i - 1], jk);
                grad[m.j - 1] = F.sub(grad[m.j - 1], ik);
                grad[m.k - 1] = F.sub(grad[m.k - 1], ij);
            } else {
                grad[m.i - 1] = F.add(grad[m.i - 1], jk);
                grad[m.j - 1] = F.add(grad[m.j - 1], ik);
                grad[m.k - 1] = F.add(grad[m.k - 1], ij);
            }
        }
        for (int i = 0; i < n; ++i)
            if (grad[i] != 0) return;
        ++count;
    });
    rep.brute = count;
    rep.match = *rep.brute == rep.closed;
    rep.millis = ms_since(t0);
    return rep;
}

F2PackedCounts f2_packed_counts(const GroupData& gd) {
    const int n = gd.n();
    if (n > 40) throw std::length_error("f2_packed_counts: rank bound");
    const std::uint64_t total = std::uint64_t(1) << n;
    // lane patterns for the six in-word coordinates
    std::uint64_t pat[6];
    pat[0] = 0xaaaaaaaaaaaaaaaaULL;
    pat[1] = 0xccccccccccccccccULL;
    pat[2] = 0xf0f0f0f0f0f0f0f0ULL;
    pat[3] = 0xff00ff00ff00ff00ULL;
    pat[4] = 0xffff0000ffff0000ULL;
    pat[5] = 0xffffffff00000000ULL;
    const std::uint64_t mask = n >= 6 ? ~0ULL : (1ULL << total) - 1;
    std::uint64_t c1 = 0, c2 = 0;
    std::vector<std::uint64_t> lane(n), grad(n);
    for (std::uint64_t base = 0; base < total; base += 64) {
        for (int i = 0; i < n; ++i)
            lane[i] = i < 6 ? pat[i] : ((base >> i) & 1 ? ~0ULL : 0ULL);
        std::uint64_t I = 0;
        std::fill(grad.begin(), grad.end(), 0ULL);
        for (const auto& m : gd.cubic.monos) {
            std::uint64_t a = lane[m.i - 1], b = lane[m.j - 1], c = lane[m.k - 1];
            I ^= a & b & c;
            grad[m.i - 1] ^= b & c;
            grad[m.j - 1] ^= a & c;
            grad[m.k - 1] ^= a & b;
        }
        c1 += static_cast<std::uint64_t>(__builtin_popcountll(I & mask));
        std::uint64_t nonzero_x = 0, grad_nonzero = 0;
        for (int i = 0; i < n; ++i) {
            nonzero_x |= lane[i];
            grad_nonzero |= grad[i];
        }
        c2 += static_cast<std::uint64_t>(__builtin_popcountll(nonzero_x & ~grad_nonzero & mask));
    }
    return {Int(c1), Int(c2)};
}

OrbitResult cone_orbit_count(const GroupData& gd, long q, std::uint64_t budget) {
    auto t0 = Clock::now();
    if (!is_prime(q)) throw std::invalid_argument("cone_orbit_count: prime q only");
    const int n = gd.n();
    const int dim = 2 * n + 2;
    if (upow(static_cast<std::uint64_t>(q), dim) == 0) throw std::length_error("orbit encoding overflow");

    OrbitResult out;
    out.report.label = "conenum";
    out.report.params = to_string(gd.group()) + " q=" + std::to_string(q);
    if (gd.group().series == 'E') out.report.closed = cardC_closed(gd.group(), Int(q));

    // generators: e_{+-alpha_i}(t) for Levi simple roots, plus scalars
    std::vector<UnipotentGen> gens;
    for (int i = 0; i < gd.rs.rank(); ++i) {
        if (i == gd.rs.beta0()) continue;
        gens.push_back(unipotent_gen(gd.frame, gd.rs.simple(i)));
        gens.push_back(unipotent_gen(gd.frame, gd.rs.negative(gd.rs.simple(i))));
    }
    std::vector<std::uint64_t> pw(dim);
    pw[0] = 1;
    for (int i = 1; i < dim; ++i) pw[i] = pw[i - 1] * static_cast<std::uint64_t>(q);

    auto encode = [&](const std::vector<long>& v) {
        std::uint64_t e = 0;
        for (int i = 0; i < dim; ++i) e += pw[i] * static_cast<std::uint64_t>(v[i]);
        return e;
    };
    auto decode = [&](std::uint64_t e, std::vector<long>& v) {
        for (int i = 0; i < dim; ++i) {
            v[i] = static_cast<long>(e % static_cast<std::uint64_t>(q));
            e /= static_cast<std::uint64_t>(q);
        }
    };

    std::vector<long> start(dim, 0), v(dim), w(dim);
    start[0] = 1;  // e_{beta0}
    std::unordered_set<std::uint64_t> seen;
    seen.reserve(1 << 16);
    std::vector<std::uint64_t> frontier{encode(start)};
    seen.insert(frontier[0]);
    while (!frontier.empty()) {
        std::vector<std::uint64_t> next;
        for (std::uint64_t code : frontier) {
            decode(code, v);
            for (const auto& g : gens) {
                for (long t = 1; t < q; ++t) {
                    w = v;
                    for (auto [to, from, sign] : g.moves) {
                        long d = sign < 0 ? (q - t) * v[from] : t * v[from];
                        w[to] = (w[to] + d) % q;
                    }
                    std::uint64_t e = encode(w);
                    if (seen.insert(e).second) next.push_back(e);
                }
            }
            for (long c = 2; c < q; ++c) {
                for (int i = 0; i < dim; ++i) w[i] = v[i] * c % q;
                std::uint64_t e = encode(w);
                if (seen.insert(e).second) next.push_back(e);
            }
            if (seen.size() > budget) throw std::length_error("orbit budget exceeded");
        }
        frontier = std::move(next);
    }
    out.points.assign(seen.begin(), seen.end());
    std::sort(out.points.begin(), out.points.end());
    out.report.brute = Int(out.points.size());
    if (gd.group().series == 'E')
        out.report.match = *out.report.brute == out.report.closed;
    else {
        out.report.closed = *out.report.brute;
        out.report.match = true;
    }
    out.report.millis = ms_since(t0);
    return out;
}

CountReport lines_in_cone(const GroupData& gd, long q, const OrbitResult& orbit, std::uint64_t budget) {
    auto t0 = Clock::now();
    CountReport rep;
    rep.label = "lines";
    rep.params = to_string(gd.group()) + " q=" + std::to_string(q);
    rep.closed = lines_closed(gd.group(), Int(q));
    const int n = gd.n();
    const int dim = 2 * n + 2;

    // flat open-addressing membership table over the encodings
    std::size_t cap = 1;
    while (cap < orbit.points.size() * 4) cap <<= 1;
    constexpr std::uint64_t kEmpty = ~std::uint64_t(0);
    std::vector<std::uint64_t> slots(cap, kEmpty);
    auto insert_slot = [&](std::uint64_t e) {
        std::size_t h = (e * 0x9e3779b97f4a7c15ull) & (cap - 1);
        while (slots[h] != kEmpty) h = (h + 1) & (cap - 1);
        slots[h] = e;
    };
    auto contains = [&](std::uint64_t e) {
        std::size_t h = (e * 0x9e3779b97f4a7c15ull) & (cap - 1);
        while (slots[h] != kEmpty) {
            if (slots[h] == e) return true;
            h = (h + 1) & (cap - 1);
        }
        return false;
    };
    for (std::uint64_t e : orbit.points) insert_slot(e);

    // digit-wise addition of encodings through quarter add-tables
    const int qd = (dim + 3) / 4;  // digits per quarter
    const std::uint64_t qsz = upow(static_cast<std::uint64_t>(q), qd);
    std::vector<std::uint32_t> qadd(qsz * qsz);
    {
        std::vector<long> da(qd), db(qd);
        for (std::uint64_t a = 0; a < qsz; ++a) {
            std::uint64_t t = a;
            for (int i = 0; i < qd; ++i) {
                da[i] = static_cast<long>(t % q);
                t /= q;
            }
            for (std::uint64_t b = 0; b < qsz; ++b) {
                t = b;
                std::uint64_t enc = 0, pv = 1;
                for (int i = 0; i < qd; ++i) {
                    enc += pv * static_cast<std::uint64_t>((da[i] + static_cast<long>(t % q)) % q);
                    t /= q;
                    pv *= static_cast<std::uint64_t>(q);
                }
                qadd[a * qsz + b] = static_cast<std::uint32_t>(enc);
            }
        }
    }
    auto enc_add = [&](std::uint64_t a, std::uint64_t b) {
        if (q == 2) return a ^ b;
        std::uint64_t r = 0, pv = 1;
        for (int part = 0; part < 4; ++part) {
            r += pv * qadd[(a % qsz) * qsz + (b % qsz)];
            a /= qsz;
            b /= qsz;
            pv *= qsz;
        }
        return r;
    };

    // projective representatives: first nonzero digit equal to 1
    std::vector<std::uint64_t> reps;
    {
        std::vector<long> v(dim);
        for (std::uint64_t code : orbit.points) {
            std::uint64_t e = code;
            for (int i = 0; i < dim; ++i) {
                v[i] = static_cast<long>(e % q);
                e /= q;
            }
            int fz = 0;
            while (v[fz] == 0) ++fz;
            if (v[fz] == 1) reps.push_back(code);
        }
    }
    const std::size_t m = reps.size();
    if (m * m / 2 > budget) throw std::length_error("lines pair budget exceeded");
    std::uint64_t pairs_on_lines = 0;
    for (std::size_t i = 0; i < m; ++i) {
        std::uint64_t a = reps[i];
        for (std::size_t j = i + 1; j < m; ++j) {
            // [b + t a], t = 1..q-1, covers the mixed points of the line [a],[b]
            std::uint64_t cur = reps[j];
            bool ok = true;
            for (long t = 1; t < q && ok; ++t) {
                cur = enc_add(cur, a);
                ok = contains(cur);
            }
            if (ok) ++pairs_on_lines;
        }
    }
    std::uint64_t per_line = static_cast<std::uint64_t>(q) * (q + 1) / 2;
    if (pairs_on_lines % per_line != 0) throw std::logic_error("lines_in_cone: pair count not divisible");
    rep.brute = Int(pairs_on_lines / per_line);
    rep.match = *rep.brute == rep.closed;
    rep.millis = ms_since(t0);
    return rep;
}

namespace {

/// Tables over F_q^n (prime q, encoded base q) for the section counts.
struct SectionTables {
    long q;
    int n;
    std::uint64_t qn;
    std::vector<std::int8_t> I;           // I(x) in F_q
    std::vector<std::int8_t> grad;        // n digits per point
    std::vector<std::uint32_t> half_lo, half_hi;  // split add tables
    int lo_digits;
    std::uint64_t lo_size, hi_size;

    SectionTables(const GroupData& gd, long q_) : q(q_), n(gd.n()) {
        qn = upow(static_cast<std::uint64_t>(q), n);
        I.resize(qn);
        grad.resize(qn * static_cast<std::uint64_t>(n));
        std::vector<long> x(n, 0);
        std::vector<long> g(n);
        for (std::uint64_t idx = 0;; ++idx) {
            long Iv = 0;
            std::fill(g.begin(), g.end(), 0L);
            for (const auto& m : gd.cubic.monos) {
                long a = x[m.i - 1], b = x[m.j - 1], c = x[m.k - 1];
                Iv += m.coef * a * b * c;
                g[m.i - 1] += m.coef * b * c;
                g[m.j - 1] += m.coef * a * c;
                g[m.k - 1] += m.coef * a * b;
            }
            I[idx] = static_cast<std::int8_t>(((Iv % q) + q) % q);
            for (int i = 0; i < n; ++i)
                grad[idx * n + i] = static_cast<std::int8_t>(((g[i] % q) + q) % q);
            int i = 0;
            while (i < n && ++x[i] == q) x[i++] = 0;
            if (i == n) break;
        }
        // digit-wise add tables on a lo/hi split of the encoding
        lo_digits = n / 2;
        lo_size = upow(static_cast<std::uint64_t>(q), lo_digits);
        hi_size = qn / lo_size;
        auto build = [&](std::uint64_t sz, int digs, std::vector<std::uint32_t>& tbl) {
            tbl.resize(sz * sz);
            std::vector<long> da(digs), db(digs);
            for (std::uint64_t a = 0; a < sz; ++a) {
                std::uint64_t t = a;
                for (int i = 0; i < digs; ++i) {
                    da[i] = static_cast<long>(t % q);
                    t /= q;
                }
                for (std::uint64_t b = 0; b < sz; ++b) {
                    t = b;
                    std::uint64_t enc = 0, pwv = 1;
                    for (int i = 0; i < digs; ++i) {
                        long d = static_cast<long>(t % q);
                        t /= q;
                        enc += pwv * static_cast<std::uint64_t>((da[i] + d) % q);
                        pwv *= static_cast<std::uint64_t>(q);
                    }
                    tbl[a * sz + b] = static_cast<std::uint32_t>(enc);
                }
            }
        };
        build(lo_size, lo_digits, half_lo);
        build(hi_size, n - lo_digits, half_hi);
    }

    std::uint64_t add(std::uint64_t a, std::uint64_t b) const {
        std::uint64_t alo = a % lo_size, ahi = a / lo_size;
        std::uint64_t blo = b % lo_size, bhi = b / lo_size;
        return static_cast<std::uint64_t>(half_lo[alo * lo_size + blo]) +
               static_cast<std::uint64_t>(half_hi[ahi * hi_size + bhi]) * lo_size;
    }

    bool grad_zero(std::uint64_t idx) const {
        for (int i = 0; i < n; ++i)
            if (grad[idx * n + i]) return false;
        return true;
    }
};

}  // namespace

CountReport sections_singular_count(const GroupData& gd, long q, std::uint64_t budget) {
    auto t0 = Clock::now();
    if (!is_prime(q)) throw std::invalid_argument("sections_singular_count: prime q only");
    CountReport rep;
    rep.label = "sections1";
    rep.params = to_string(gd.group()) + " q=" + std::to_string(q);
    rep.closed = sections1_closed(gd.group(), Int(q));
    SectionTables T(gd, q);
    if (T.qn > budget) throw std::length_error("sections budget exceeded");
    // Z = {A : I'(A) = 0}; a degree-1 section x <-> (A, B) = (x(p1), x(p2)),
    // and I'(x) = 0 as an O(2)-section iff it vanishes at three distinct points.
    std::vector<std::uint64_t> Z;
    for (std::uint64_t a = 0; a < T.qn; ++a)
        if (T.grad_zero(a)) Z.push_back(a);
    Int count = 0;
    for (std::uint64_t a : Z)
        for (std::uint64_t b : Z)
            if (T.grad_zero(T.add(a, b))) ++count;
    count -= 1;  // exclude x = 0
    rep.brute = count;
    rep.match = *rep.brute == rep.closed;
    rep.millis = ms_since(t0);
    return rep;
}

CountReport sections_divisor2_count(const GroupData& gd, long q, std::uint64_t budget) {
    auto t0 = Clock::now();
    if (!is_prime(q)) throw std::invalid_argument("sections_divisor2_count: prime q only");
    CountReport rep;
    rep.label = "sections2";
    rep.params = to_string(gd.group()) + " q=" + std::to_string(q);
    rep.closed = sections2_closed(gd.group(), Int(q));
    SectionTables T(gd, q);
    const int n = T.n;
    if (T.qn * T.qn / 8 > budget) throw std::length_error("sections2 budget exceeded");

    // x <-> (A,B); I(x) = 0 as an O(3)-section iff the four cubic coefficients
    // vanish; deg div(I'(x)) = 2 iff the n quadratic components are pairwise
    // proportional and not all zero (a nonzero binary quadratic has a degree-2
    // divisor on P^1).
    std::vector<std::uint64_t> zero_cubic;  // A with I(A) = 0
    for (std::uint64_t a = 0; a < T.qn; ++a)
        if (T.I[a] == 0) zero_cubic.push_back(a);

    Int count = 0;
    std::vector<long> sa(n), sb(n), sc(n);
    for (std::uint64_t A : zero_cubic) {
        const std::int8_t* gA = &T.grad[A * n];
        for (std::uint64_t B : zero_cubic) {
            // c1 = grad I(A).B, c2 = grad I(B).A over F_q
            const std::int8_t* gB = &T.grad[B * n];
            long c1 = 0, c2 = 0;
            {
                std::uint64_t tb = B, ta = A;
                for (int i = 0; i < n; ++i) {
                    long bd = static_cast<long>(tb % q);
                    long ad = static_cast<long>(ta % q);
                    tb /= q;
                    ta /= q;
                    c1 += gA[i] * bd;
                    c2 += gB[i] * ad;
                }
            }
            if (c1 % q != 0 || c2 % q != 0) continue;
            // s_i = gA[i] u^2 + (gAB[i]-gA[i]-gB[i]) uv + gB[i] v^2
            std::uint64_t AB = T.add(A, B);
            const std::int8_t* gAB = &T.grad[AB * n];
            int first = -1;
            bool prop = true, allzero = true;
            for (int i = 0; i < n && prop; ++i) {
                long ai = gA[i];
                long bi = ((gAB[i] - gA[i] - gB[i]) % q + q) % q;
                long ci = gB[i];
                sa[i] = ai;
                sb[i] = bi;
                sc[i] = ci;
                if (ai || bi || ci) {
                    allzero = false;
                    if (first < 0)
                        first = i;
                    else
                        prop = (sa[first] * bi - sb[first] * ai) % q == 0 &&
                               (sa[first] * ci - sc[first] * ai) % q == 0 &&
                               (sb[first] * ci - sc[first] * bi) % q == 0;
                }
            }
            if (prop && !allzero) ++count;
        }
    }
    rep.brute = count;
    rep.match = *rep.brute == rep.closed;
    rep.millis = ms_since(t0);
    return rep;
}

}  // namespace minrep
