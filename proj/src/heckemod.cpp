#include "minrep/heckemod.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace minrep {

LaurentPoly::LaurentPoly(const Int& c, long e) {
    if (c != 0) {
        lo_ = e;
        c_.push_back(c);
    }
}

void LaurentPoly::trim() {
    size_t a = 0, b = c_.size();
    while (b > a && c_[b - 1] == 0) --b;
    while (a < b && c_[a] == 0) ++a;
    if (a > 0 || b < c_.size()) {
        c_ = std::vector<Int>(c_.begin() + a, c_.begin() + b);
        lo_ += static_cast<long>(a);
    }
    if (c_.empty()) lo_ = 0;
}

Int LaurentPoly::coeff(long e) const {
    if (c_.empty() || e < lo_ || e > hi()) return 0;
    return c_[static_cast<size_t>(e - lo_)];
}

LaurentPoly LaurentPoly::operator+(const LaurentPoly& o) const {
    if (is_zero()) return o;
    if (o.is_zero()) return *this;
    long nlo = std::min(lo_, o.lo_), nhi = std::max(hi(), o.hi());
    LaurentPoly r;
    r.lo_ = nlo;
    r.c_.assign(static_cast<size_t>(nhi - nlo + 1), Int(0));
    for (size_t i = 0; i < c_.size(); ++i) r.c_[lo_ - nlo + i] += c_[i];
    for (size_t i = 0; i < o.c_.size(); ++i) r.c_[o.lo_ - nlo + i] += o.c_[i];
    r.trim();
    return r;
}

LaurentPoly LaurentPoly::operator-(const LaurentPoly& o) const {
    LaurentPoly neg = o;
    for (auto& c : neg.c_) c = -c;
    return *this + neg;
}

LaurentPoly LaurentPoly::operator*(const LaurentPoly& o) const {
    if (is_zero() || o.is_zero()) return LaurentPoly();
    LaurentPoly r;
    r.lo_ = lo_ + o.lo_;
    r.c_.assign(c_.size() + o.c_.size() - 1, Int(0));
    for (size_t i = 0; i < c_.size(); ++i) {
        if (c_[i] == 0) continue;
        for (size_t j = 0; j < o.c_.size(); ++j) r.c_[i + j] += c_[i] * o.c_[j];
    }
    r.trim();
    return r;
}

bool LaurentPoly::operator==(const LaurentPoly& o) const { return lo_ == o.lo_ && c_ == o.c_; }

bool LaurentPoly::is_q_polynomial() const {
    if (is_zero()) return true;
    if (lo_ < 0) return false;
    for (size_t i = 0; i < c_.size(); ++i)
        if (c_[i] != 0 && (lo_ + static_cast<long>(i)) % 2 != 0) return false;
    return true;
}

std::string LaurentPoly::str() const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (size_t i = 0; i < c_.size(); ++i) {
        if (c_[i] == 0) continue;
        long e = lo_ + static_cast<long>(i);
        if (!first) os << (c_[i] > 0 ? " + " : " - ");
        else if (c_[i] < 0) os << "-";
        Int a = c_[i] < 0 ? Int(-c_[i]) : c_[i];
        if (a != 1 || e == 0) os << a.str();
        if (e != 0) {
            if (a != 1) os << "*";
            os << "v";
            if (e != 1) os << "^" << e;
        }
        first = false;
    }
    return os.str();
}

LaurentMatrix LaurentMatrix::identity(int n) {
    LaurentMatrix m(n);
    for (int i = 0; i < n; ++i) m.at(i, i) = LaurentPoly(Int(1));
    return m;
}

LaurentMatrix LaurentMatrix::operator*(const LaurentMatrix& o) const {
    LaurentMatrix r(n_);
    for (int i = 0; i < n_; ++i)
        for (int k = 0; k < n_; ++k) {
            const LaurentPoly& a = at(i, k);
            if (a.is_zero()) continue;
            for (int j = 0; j < n_; ++j) {
                if (o.at(k, j).is_zero()) continue;
                r.at(i, j) = r.at(i, j) + a * o.at(k, j);
            }
        }
    return r;
}

LaurentMatrix LaurentMatrix::operator+(const LaurentMatrix& o) const {
    LaurentMatrix r(n_);
    for (int i = 0; i < n_ * n_; ++i) r.a_[i] = a_[i] + o.a_[i];
    return r;
}

LaurentMatrix LaurentMatrix::operator-(const LaurentMatrix& o) const {
    LaurentMatrix r(n_);
    for (int i = 0; i < n_ * n_; ++i) r.a_[i] = a_[i] - o.a_[i];
    return r;
}

bool LaurentMatrix::operator==(const LaurentMatrix& o) const { return n_ == o.n_ && a_ == o.a_; }

bool LaurentMatrix::is_zero() const {
    return std::all_of(a_.begin(), a_.end(), [](const LaurentPoly& f) { return f.is_zero(); });
}

LaurentMatrix LaurentMatrix::scaled(const LaurentPoly& f) const {
    LaurentMatrix r(n_);
    for (int i = 0; i < n_ * n_; ++i) r.a_[i] = a_[i] * f;
    return r;
}

int affine_pairing(const RootSystem& rs, int a, int b) {
    RootVec ra = a == 0 ? rs.negative(rs.omega()) : rs.simple(a - 1);
    RootVec rb = b == 0 ? rs.negative(rs.omega()) : rs.simple(b - 1);
    return rs.pairing(ra, rb);
}

std::vector<LaurentMatrix> lusztig_generators(const RootSystem& rs) {
    const int K = rs.rank() + 1;
    const LaurentPoly q = LaurentPoly::q_power(1), v = LaurentPoly(Int(1), 1);
    std::vector<LaurentMatrix> out;
    for (int a = 0; a < K; ++a) {
        LaurentMatrix M(K);
        for (int b = 0; b < K; ++b) {
            if (a == b) {
                M.at(b, b) = LaurentPoly(Int(-1));
            } else if (affine_pairing(rs, a, b) == -1) {
                M.at(b, b) = q;
                M.at(a, b) = v;
            } else {
                M.at(b, b) = q;
            }
        }
        out.push_back(std::move(M));
    }
    return out;
}

namespace {

// graph distance on the Dynkin diagram
int dynkin_distance(const RootSystem& rs, int a, int b) {
    const int k = rs.rank();
    std::vector<int> d(k, -1);
    std::vector<int> queue{a};
    d[a] = 0;
    for (size_t h = 0; h < queue.size(); ++h) {
        int u = queue[h];
        for (int w = 0; w < k; ++w)
            if (rs.adjacent(u, w) && d[w] < 0) {
                d[w] = d[u] + 1;
                queue.push_back(w);
            }
    }
    return d[b];
}

bool on_geodesic(const RootSystem& rs, int a, int b, int m) {
    // m lies on the (closed) geodesic from a to b; trees have unique paths
    return dynkin_distance(rs, a, m) + dynkin_distance(rs, m, b) == dynkin_distance(rs, a, b);
}

}  // namespace

LambdaReport lambda_exponents(const RootSystem& rs, int beta) {
    const int k = rs.rank(), ab = rs.branch();
    LambdaReport rep;
    rep.beta_is_branch = beta == ab;
    const auto& fw = rs.fundamental_coweights()[beta];
    Rat rho(0), lam_b(0);
    for (int i = 0; i < k; ++i) {
        rho += fw[i];
        if (i != ab) lam_b += fw[i];
    }
    int d = dynkin_distance(rs, ab, beta);
    std::vector<Rat> lams;
    lams.push_back(lam_b);  // alpha_b, taken twice
    lams.push_back(lam_b);
    for (int a = 0; a < k; ++a) {
        if (a == ab) continue;
        lams.push_back(on_geodesic(rs, ab, a, beta) ? lam_b - d : lam_b);
    }
    for (const auto& l : lams) {
        Rat e = l + rho;
        if (int_den(e) != 1) throw std::domain_error("lambda_exponents: non-integral exponent");
        rep.exponents.push_back(static_cast<long>(int_num(e)));
    }
    std::sort(rep.exponents.begin(), rep.exponents.end());
    return rep;
}

bool AlcoveWord::trivial_automorphism() const {
    for (size_t i = 0; i < automorphism.size(); ++i)
        if (automorphism[i] != static_cast<int>(i)) return false;
    return true;
}

namespace {

using Mat = std::vector<std::vector<Rat>>;
using Vec = std::vector<Rat>;

Mat mat_id(int k) {
    Mat m(k, Vec(k, Rat(0)));
    for (int i = 0; i < k; ++i) m[i][i] = 1;
    return m;
}

Mat mat_mul(const Mat& a, const Mat& b) {
    int k = static_cast<int>(a.size());
    Mat r(k, Vec(k, Rat(0)));
    for (int i = 0; i < k; ++i)
        for (int t = 0; t < k; ++t) {
            if (a[i][t] == 0) continue;
            for (int j = 0; j < k; ++j) r[i][j] += a[i][t] * b[t][j];
        }
    return r;
}

Vec mat_vec(const Mat& a, const Vec& x) {
    int k = static_cast<int>(a.size());
    Vec r(k, Rat(0));
    for (int i = 0; i < k; ++i)
        for (int j = 0; j < k; ++j) r[i] += a[i][j] * x[j];
    return r;
}

}  // namespace

AlcoveWord translation_word(const RootSystem& rs, const std::vector<Rat>& coweight) {
    const int k = rs.rank();
    auto pairpt = [&](const RootVec& a, const Vec& x) {
        Rat s(0);
        for (int i = 0; i < k; ++i) {
            if (a[i] == 0) continue;
            for (int j = 0; j < k; ++j)
                if (x[j] != 0) s += Rat(a[i]) * rs.cartan(i, j) * x[j];
        }
        return s;
    };
    const long h = RootSystem::height(rs.omega()) + 1;  // Coxeter number
    const auto& rhovee = rs.rho_vee();

    struct Crossing {
        Rat t;
        RootVec alpha;
        long j;
    };
    std::vector<Crossing> crossings;
    static const long retry_primes[] = {97,  101, 103, 107, 109, 113, 127, 131, 137, 139,
                                        149, 151, 157, 163, 167, 173, 179, 181, 191, 193,
                                        197, 199, 211, 223, 227, 229, 233, 239, 241, 251};
    bool found = false;
    const long D = 2 * 3 * 5 * 7 * 11 * 13;
    for (long rp : retry_primes) {
        crossings.clear();
        // geometric perturbation rp^{i+1}, scaled well inside the alcove; ties
        // between distinct walls force a polynomial in rp to vanish, so some
        // retry prime always works
        Vec xstar(k);
        Rat denom = Rat(Int(D) * h) * Rat(ipow(Int(rp), k + 2));
        for (int i = 0; i < k; ++i)
            xstar[i] = rhovee[i] / h + Rat(ipow(Int(rp), i + 1)) / denom;
        bool dominantable = true;
        for (int idx : rs.positive()) {
            const RootVec& al = rs.roots()[idx];
            Rat m = pairpt(al, coweight);
            if (m < 0) {
                dominantable = false;
                break;
            }
            if (m == 0) continue;
            Rat a0 = pairpt(al, xstar);
            Int jlo = int_num(a0) / int_den(a0) + 1;  // first integer > a0 (a0 > 0 here)
            for (Int j = jlo; Rat(j) < a0 + m; ++j)
                crossings.push_back({(Rat(j) - a0) / m, al, static_cast<long>(j)});
        }
        if (!dominantable) throw std::domain_error("translation_word: coweight not dominant");
        std::sort(crossings.begin(), crossings.end(),
                  [](const Crossing& a, const Crossing& b) { return a.t < b.t; });
        bool distinct = true;
        for (size_t i = 0; i + 1 < crossings.size(); ++i)
            if (crossings[i].t == crossings[i + 1].t) distinct = false;
        if (distinct) {
            found = true;
            break;
        }
    }
    if (!found) throw std::runtime_error("translation_word: perturbation retry limit exceeded");

    // simple affine reflection data: point-action matrix, translation, root action
    std::vector<Mat> refl(k);
    for (int i = 0; i < k; ++i) {
        refl[i] = mat_id(k);
        for (int b = 0; b < k; ++b) refl[i][i][b] -= rs.cartan(i, b);
    }
    const RootVec& om = rs.omega();
    Mat S0 = mat_id(k), R0 = mat_id(k);
    for (int t = 0; t < k; ++t)
        for (int b = 0; b < k; ++b) {
            Rat row(0);
            for (int i = 0; i < k; ++i) row += Rat(om[i]) * rs.cartan(i, b);
            S0[t][b] -= Rat(om[t]) * row;
            Rat rowR(0);
            for (int jj = 0; jj < k; ++jj) rowR += Rat(rs.cartan(b, jj)) * om[jj];
            R0[t][b] -= Rat(om[t]) * rowR;
        }
    Vec omv(k);
    for (int i = 0; i < k; ++i) omv[i] = om[i];

    Mat W = mat_id(k), Minv = mat_id(k);
    Vec bt(k, Rat(0));
    AlcoveWord word;
    for (const auto& cr : crossings) {
        Vec alf(k);
        for (int i = 0; i < k; ++i) alf[i] = cr.alpha[i];
        Vec atil = mat_vec(Minv, alf);
        Rat jtil = Rat(cr.j) - pairpt(cr.alpha, bt);
        bool negd = false;
        for (int i = 0; i < k; ++i)
            if (atil[i] != 0) {
                negd = atil[i] < 0;
                break;
            }
        if (negd) {
            for (auto& x : atil) x = -x;
            jtil = -jtil;
        }
        RootVec ati(k);
        for (int i = 0; i < k; ++i) {
            if (int_den(atil[i]) != 1) throw std::logic_error("walk: non-integral pulled-back root");
            ati[i] = static_cast<int>(int_num(atil[i]));
        }
        int letter;
        const Mat* Sm;
        const Mat* Rm;
        const Vec* tm = nullptr;
        if (ati == om && jtil == 1) {
            letter = 0;
            Sm = &S0;
            Rm = &R0;
            tm = &omv;
        } else {
            if (RootSystem::height(ati) != 1 || jtil != 0)
                throw std::logic_error("walk: crossed wall is not a chamber wall");
            int i = 0;
            while (ati[i] == 0) ++i;
            letter = i + 1;
            Sm = &refl[i];
            Rm = &refl[i];
        }
        word.letters.push_back(letter);
        if (tm) {
            Vec wt = mat_vec(W, *tm);
            for (int i = 0; i < k; ++i) bt[i] += wt[i];
        }
        W = mat_mul(W, *Sm);
        Minv = mat_mul(*Rm, Minv);
    }

    // Residual element u = w^{-1} t_lam (so t_lam = w u with u of length 0):
    // u^{-1}(x) = W x + b - lam, h_{alpha,level}(u^{-1}x) = <Minv alpha, x> -
    // (level - <alpha, b> + <alpha, lam>); u must permute the alcove walls.
    word.automorphism.resize(k + 1);
    for (int mwall = 0; mwall <= k; ++mwall) {
        RootVec alpha = mwall == 0 ? om : rs.simple(mwall - 1);
        Rat level = mwall == 0 ? Rat(1) : Rat(0);
        Vec alf(k);
        for (int i = 0; i < k; ++i) alf[i] = alpha[i];
        Vec aim = mat_vec(Minv, alf);
        Rat lvl = level - pairpt(alpha, bt) + pairpt(alpha, coweight);
        bool negd = false;
        for (int i = 0; i < k; ++i)
            if (aim[i] != 0) {
                negd = aim[i] < 0;
                break;
            }
        if (negd) {
            for (auto& x : aim) x = -x;
            lvl = -lvl;
        }
        RootVec ai(k);
        for (int i = 0; i < k; ++i) ai[i] = static_cast<int>(int_num(aim[i]));
        int target = -1;
        if (ai == om && lvl == 1)
            target = 0;
        else if (RootSystem::height(ai) == 1 && lvl == 0) {
            int i = 0;
            while (ai[i] == 0) ++i;
            target = i + 1;
        }
        if (target < 0) throw std::logic_error("walk: residual element does not preserve the alcove");
        word.automorphism[mwall] = target;
    }
    return word;
}

std::pair<long, long> bernstein_eigen_exponents(Group g) {
    long n = g.series == 'E' ? 6 * group_s(g) + 3 : 2 * g.k - 5;
    if (g.series == 'E') {
        long s = group_s(g);
        return {2 * (n + 1) - s, 2 * (n + 1) - 2 * s};
    }
    return {2 * (n + 1) + 4 - g.k, 2 * (n + 1)};
}

long fbar_scaling_exponent(Group g, long u) {
    long n = g.series == 'E' ? 6 * group_s(g) + 3 : 2 * g.k - 5;
    long c = g.series == 'E' ? group_s(g) + 1 : 1;
    return 2 * (n + 2) - (n + 3) / 2 + c + u;
}

BernsteinResult bernstein_matrix(const RootSystem& rs) {
    const int k = rs.rank();
    const Group g = rs.group();
    // omega-vee_{beta0} = coordinates of omega (integral coroot vector)
    std::vector<Rat> lam(k);
    for (int i = 0; i < k; ++i) lam[i] = rs.omega()[i];
    AlcoveWord word = translation_word(rs, lam);
    long expected_len = 0;
    for (int idx : rs.positive()) expected_len += rs.pairing(rs.roots()[idx], rs.omega());
    if (static_cast<long>(word.letters.size()) != expected_len)
        throw std::logic_error("bernstein_matrix: wrong word length");

    auto Ts = lusztig_generators(rs);
    LaurentMatrix P = LaurentMatrix::identity(k + 1);
    if (!word.trivial_automorphism()) {
        P = LaurentMatrix(k + 1);
        for (int b = 0; b <= k; ++b) P.at(word.automorphism[b], b) = LaurentPoly(Int(1));
    }

    // t_lam = w * u with u in Omega, so the Omega factor sits after the
    // T_{s_i} product in the left-to-right convention.
    auto product = [&](bool reversed) {
        LaurentMatrix M = LaurentMatrix::identity(k + 1);
        if (!reversed) {
            for (int l : word.letters) M = M * Ts[l];
            M = M * P;
        } else {
            for (auto it = word.letters.rbegin(); it != word.letters.rend(); ++it) M = M * Ts[*it];
            M = P * M;
        }
        return M;
    };

    auto [e1, e2] = bernstein_eigen_exponents(g);
    auto check = [&](const LaurentMatrix& M, std::string* why) {
        for (int a = 1; a <= k; ++a) {
            if (a - 1 == rs.beta0()) continue;
            if (!(M * Ts[a] - Ts[a] * M).is_zero()) {
                if (why) *why = "commutation fails for alpha_" + std::to_string(a);
                return false;
            }
        }
        LaurentMatrix A1 = M - LaurentMatrix::identity(k + 1).scaled(LaurentPoly::q_power(e1));
        LaurentMatrix A2 = M - LaurentMatrix::identity(k + 1).scaled(LaurentPoly::q_power(e2));
        bool ann = e1 == e2 ? (A1 * A1).is_zero() : (A1 * A2).is_zero();
        if (!ann && why) *why = "annihilator fails";
        return ann;
    };

    BernsteinResult res;
    res.word = word;
    res.eigen_q_exponents = {e1, e2};
    LaurentMatrix M = product(false);
    std::string w1, w2;
    if (check(M, &w1)) {
        res.T = std::move(M);
        res.factor_order = "left-to-right";
    } else {
        LaurentMatrix M2 = product(true);
        if (!check(M2, &w2))
            throw std::runtime_error("bernstein_matrix: both factor orders fail: " + w1 + " / " + w2);
        res.T = std::move(M2);
        res.factor_order = "right-to-left";
    }
    // q-integrality: conjugating by diag(v^{par(i)}) over the bipartition of
    // the affine tree clears all half powers; entrywise this means exponent
    // parity par(i)+par(j) and no negative exponents.
    {
        std::vector<int> par(k + 1, -1);
        std::vector<int> queue{0};
        par[0] = 0;
        for (size_t h = 0; h < queue.size(); ++h)
            for (int b = 0; b <= k; ++b)
                if (par[b] < 0 && affine_pairing(rs, queue[h], b) == -1) {
                    par[b] = 1 - par[queue[h]];
                    queue.push_back(b);
                }
        for (int i = 0; i <= k; ++i)
            for (int j = 0; j <= k; ++j) {
                const LaurentPoly& f = res.T.at(i, j);
                if (f.is_zero()) continue;
                if (f.lo() < 0) throw std::logic_error("bernstein_matrix: negative v-power");
                for (long e = f.lo(); e <= f.hi(); ++e)
                    if (f.coeff(e) != 0 && (e & 1) != ((par[i] + par[j]) & 1))
                        throw std::logic_error("bernstein_matrix: v-parity violated");
            }
    }
    LaurentMatrix A1 = res.T - LaurentMatrix::identity(k + 1).scaled(LaurentPoly::q_power(e1));
    LaurentMatrix A2 = res.T - LaurentMatrix::identity(k + 1).scaled(LaurentPoly::q_power(e2));
    res.semisimple = e1 != e2 && !A1.is_zero() && !A2.is_zero();
    {
        std::ostringstream os;
        long u_hi = g.series == 'E' ? group_s(g) : g.k - 4;
        os << "u=0 -> q^" << fbar_scaling_exponent(g, 0) << ", u=" << u_hi << " -> q^"
           << fbar_scaling_exponent(g, u_hi);
        res.pairing_note = os.str();
    }
    return res;
}

}  // namespace minrep
