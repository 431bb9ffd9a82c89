#pragma once

#include <map>
#include <string>
#include <vector>

#include "minrep/rational.hpp"

namespace minrep {

/// Split group tag: D_k (k >= 4) or E_6/E_7/E_8.
struct Group {
    char series = 'D';  // 'D' or 'E'
    int k = 4;
    bool operator==(const Group&) const = default;
    bool operator<(const Group& o) const { return series != o.series ? series < o.series : k < o.k; }
};

Group parse_group(const std::string& tag);  // "D4", "E6", ...
std::string to_string(Group g);

/// s = 1, 2, 4 for E6, E7, E8; throws for D-series.
int group_s(Group g);

/// Root written in the simple-root basis (integer coordinates).
using RootVec = std::vector<int>;

/// Simply-laced root system in root-lattice coordinates, Bourbaki numbering.
/// The Cartan pairing a^T C b is the Euclidean one (all roots have norm 2).
class RootSystem {
public:
    explicit RootSystem(Group g);

    Group group() const { return g_; }
    int rank() const { return k_; }
    int cartan(int i, int j) const { return cartan_[i][j]; }
    bool adjacent(int i, int j) const { return i != j && cartan_[i][j] == -1; }

    const std::vector<RootVec>& roots() const { return roots_; }
    const std::vector<int>& positive() const { return positive_; }

    /// Index into roots(), or -1.
    int root_index(const RootVec& r) const;
    bool is_root(const RootVec& r) const { return root_index(r) >= 0; }

    /// Cartan pairing <a, b-coroot> = a^T C b.
    int pairing(const RootVec& a, const RootVec& b) const;

    static int height(const RootVec& r);

    const RootVec& omega() const { return omega_; }  // highest root
    RootVec simple(int i) const;
    RootVec negative(const RootVec& r) const;

    /// Simple root carrying the affine node (beta_0), 0-based Bourbaki index.
    int beta0() const { return beta0_; }
    /// The branch vertex alpha_b.
    int branch() const { return branch_; }

    /// Columns of C^{-1}: fundamental coweights in coroot coordinates.
    const std::vector<std::vector<Rat>>& fundamental_coweights() const { return fw_; }
    /// rho-vee in coroot coordinates (<alpha_i, rho-vee> = 1 for all i).
    const std::vector<Rat>& rho_vee() const { return rho_vee_; }
    /// rho(lam-vee) for an integral coweight in coroot coordinates.
    static Int rho_of_coweight(const std::vector<Int>& lam);

    /// n of the Heisenberg frame: 6s+3 for E_k, 2k-5 for D_k.
    int n_heisenberg() const;

    /// Integer Euclidean realization for dumps. D_k lives in Z^k; the E-series
    /// coordinates are doubled Bourbaki ones so that everything stays integral
    /// (the quadratic form is then (x.y)/4).
    std::vector<std::vector<int>> euclidean_simple_roots() const;

private:
    Group g_;
    int k_;
    std::vector<std::vector<int>> cartan_;
    std::vector<RootVec> roots_;
    std::vector<int> positive_;
    std::map<RootVec, int> index_;
    RootVec omega_;
    int beta0_ = -1;
    int branch_ = -1;
    std::vector<std::vector<Rat>> fw_;
    std::vector<Rat> rho_vee_;
};

/// Chevalley sign table c(a,b) = (-1)^{B(a,b)} for the triangular bilinear
/// form B(alpha_i, alpha_j) = <alpha_i,alpha_j> (i<j), 1 (i==j), 0 (i>j).
/// The simple-root order is the Bourbaki one and is part of the contract.
class SignTable {
public:
    /// Verifies the sign identities exhaustively over Phi x Phi on construction.
    explicit SignTable(const RootSystem& rs);

    long B(const RootVec& a, const RootVec& b) const;
    int c(const RootVec& a, const RootVec& b) const { return (B(a, b) & 1) ? -1 : 1; }
    const RootSystem& rs() const { return *rs_; }

private:
    const RootSystem* rs_;
};

/// Heisenberg frame: Sigma = {gamma : <omega,gamma> = 1}, Pi = {beta_0..beta_n},
/// gamma_i = omega - beta_i, eps_i = c(beta_i, gamma_i).
struct HeisenbergFrame {
    const RootSystem* rs = nullptr;
    const SignTable* st = nullptr;
    int n = 0;
    std::vector<RootVec> beta;   // beta[0..n]
    std::vector<RootVec> gamma;  // gamma[i] = omega - beta[i]
    std::vector<int> eps;        // +-1
    std::vector<RootVec> sigma;  // all of Sigma
    int alpha1 = -1;             // simple index of the A1 node for D_k (k>=5)
    RootVec delta;               // omega + sum_i gamma_i
};

HeisenbergFrame build_frame(const RootSystem& rs, const SignTable& st);

}  // namespace minrep
