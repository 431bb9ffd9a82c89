#pragma once

#include "minrep/rootsys.hpp"

namespace minrep {

/// Integer Laurent polynomial in v (v^2 plays the role of q).
class LaurentPoly {
public:
    LaurentPoly() = default;
    explicit LaurentPoly(const Int& c, long e = 0);
    static LaurentPoly q_power(long e) { return LaurentPoly(Int(1), 2 * e); }

    bool is_zero() const { return c_.empty(); }
    long lo() const { return lo_; }
    long hi() const { return lo_ + static_cast<long>(c_.size()) - 1; }
    Int coeff(long e) const;

    LaurentPoly operator+(const LaurentPoly& o) const;
    LaurentPoly operator-(const LaurentPoly& o) const;
    LaurentPoly operator*(const LaurentPoly& o) const;
    bool operator==(const LaurentPoly& o) const;

    /// true iff all exponents are even and >= 0 (a polynomial in q).
    bool is_q_polynomial() const;
    std::string str() const;

private:
    long lo_ = 0;
    std::vector<Int> c_;  // c_[i] is the coefficient of v^{lo_+i}; trimmed
    void trim();
};

class LaurentMatrix {
public:
    LaurentMatrix() = default;
    explicit LaurentMatrix(int n) : n_(n), a_(static_cast<size_t>(n) * n) {}
    static LaurentMatrix identity(int n);

    int dim() const { return n_; }
    LaurentPoly& at(int i, int j) { return a_[static_cast<size_t>(i) * n_ + j]; }
    const LaurentPoly& at(int i, int j) const { return a_[static_cast<size_t>(i) * n_ + j]; }

    LaurentMatrix operator*(const LaurentMatrix& o) const;
    LaurentMatrix operator+(const LaurentMatrix& o) const;
    LaurentMatrix operator-(const LaurentMatrix& o) const;
    bool operator==(const LaurentMatrix& o) const;
    bool is_zero() const;
    LaurentMatrix scaled(const LaurentPoly& f) const;

private:
    int n_ = 0;
    std::vector<LaurentPoly> a_;
};

/// Lusztig's generators T_a on E~ = span(e_b, b affine vertex), index 0 for
/// the vertex -omega and 1..k for the simple roots. T_a e_b = -e_b (a = b),
/// q e_b + v e_a (<a,b> = -1), q e_b otherwise.
std::vector<LaurentMatrix> lusztig_generators(const RootSystem& rs);

/// Pairing of affine vertices (0 = -omega).
int affine_pairing(const RootSystem& rs, int a, int b);

struct LambdaReport {
    std::vector<long> exponents;  // lambda(alpha, beta) + rho(omega-vee_beta), alpha_b doubled
    bool beta_is_branch = false;  // semisimplicity is not guaranteed there
};

/// Eigen-exponents of T^beta on E~ from the lambda(alpha, beta) combinatorics:
/// lambda_b(alpha-vee) = 1 (alpha != alpha_b) / 0 (alpha_b), lambda(alpha_b, beta)
/// = lambda_b(omega-vee_beta), and lambda(alpha,beta) = lambda(alpha_b,beta) -
/// d(alpha_b,beta) iff beta lies on the closed geodesic from alpha_b to alpha.
LambdaReport lambda_exponents(const RootSystem& rs, int beta);

struct AlcoveWord {
    std::vector<int> letters;       // affine reflection indices, 0 = affine node
    std::vector<int> automorphism;  // permutation of affine vertices (identity when trivial)
    bool trivial_automorphism() const;
};

/// Reduced word for the translation by a dominant coweight (coroot coordinates,
/// exact rationals) via a straight-line alcove walk from a perturbed base point.
AlcoveWord translation_word(const RootSystem& rs, const std::vector<Rat>& coweight);

struct BernsteinResult {
    LaurentMatrix T;
    AlcoveWord word;
    std::string factor_order;          // "left-to-right" or "right-to-left"
    std::pair<long, long> eigen_q_exponents;  // the two eigen-exponents (equal for D4)
    bool semisimple = false;
    std::string pairing_note;          // computed u -> exponent pairing
};

/// T^{beta_0} as the alcove-walk product; the factor order is selected by the
/// commutation relation and the annihilator and recorded in the result.
BernsteinResult bernstein_matrix(const RootSystem& rs);

/// Eigen-exponent pair of T^{beta_0}: E_k: (2(n+1)-s, 2(n+1)-2s);
/// D_k: (2(n+1)+4-k, 2(n+1)).
std::pair<long, long> bernstein_eigen_exponents(Group g);

/// T^{beta_0}-eigen-exponent implied by the fbar scaling relation for the
/// shape c(x) |v|^{-u} delta_{C(O)}: 2(n+2) - (n+3)/2 + (s+1) + u for E_k and
/// 3k-4+u for D_k.
long fbar_scaling_exponent(Group g, long u);

}  // namespace minrep
