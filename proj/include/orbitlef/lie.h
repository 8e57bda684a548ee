#pragma once

#include <cstdint>
#include <set>
#include <string>
#include <vector>

#include "orbitlef/qmatrix.h"
#include "orbitlef/rational.h"

namespace orbitlef::lie {

using BettiVector = std::vector<std::int64_t>;

// Root e_i - e_j of type A_{n-1}; indices are 1-based to match the usual
// labelling alpha_k = e_k - e_{k+1}.
struct Root {
    int i = 0;
    int j = 0;

    bool operator==(const Root&) const = default;
    auto operator<=>(const Root&) const = default;

    Root negated() const { return Root{j, i}; }
    std::string str() const;
};

// Traceless exact-rational diagonal element of sl(n).
class CartanElement {
public:
    explicit CartanElement(std::vector<Rat> diag);

    int n() const { return static_cast<int>(diag_.size()); }
    const std::vector<Rat>& diag() const { return diag_; }
    const Rat& entry(int i) const { return diag_[static_cast<std::size_t>(i - 1)]; } // 1-based

    bool is_zero() const;
    bool is_dominant() const; // weakly decreasing entries
    QMatrix matrix() const;

    // Value alpha(H) = h_i - h_j.
    Rat root_value(const Root& a) const { return entry(a.i) - entry(a.j); }

    bool operator==(const CartanElement&) const = default;
    auto operator<=>(const CartanElement&) const = default;

    std::string str() const;

private:
    std::vector<Rat> diag_;
};

// Permutation of {1..n} acting on Cartan elements by permuting diagonal
// entries: (w.H)_{w(i)} = H_i.
class WeylElement {
public:
    explicit WeylElement(std::vector<int> one_line); // one_line[k] = w(k+1)

    static WeylElement identity(int n);

    int n() const { return static_cast<int>(perm_.size()); }
    int apply(int i) const { return perm_[static_cast<std::size_t>(i - 1)]; }
    const std::vector<int>& one_line() const { return perm_; }

    CartanElement act(const CartanElement& h) const;
    int length() const; // number of inversions

    bool operator==(const WeylElement&) const = default;

private:
    std::vector<int> perm_;
};

struct ThetaSet {
    std::set<int> indices; // subset of {1..n-1}, simple-root labels

    bool operator==(const ThetaSet&) const = default;
    std::string str() const;
};

class RootSystemA {
public:
    // Type A_{n-1} inside sl(n); throws InvalidRank for n < 2.
    explicit RootSystemA(int n);

    int n() const { return n_; }
    int rank() const { return n_ - 1; }

    // All n(n-1) roots e_i - e_j, lexicographic in (i, j).
    const std::vector<Root>& roots() const { return roots_; }
    const std::vector<Root>& positive_roots() const { return positive_; }
    // alpha_k = e_k - e_{k+1}, k = 1..n-1.
    const std::vector<Root>& simple_roots() const { return simple_; }

    // Chevalley root vector E_alpha = e_ij as an n x n matrix.
    QMatrix root_vector(const Root& a) const;

private:
    int n_;
    std::vector<Root> roots_, positive_, simple_;
};

RootSystemA root_system(int n);

// True iff alpha(H) != 0 for every root, i.e. all diagonal entries distinct.
bool is_regular(const CartanElement& h, const RootSystemA& rs);

// Entries sorted weakly decreasing; the dominant representative of the orbit.
CartanElement dominant_sort(const CartanElement& h);

// Theta = { simple alpha : alpha(H0) = 0 }. H0 must already be dominant.
ThetaSet theta_of(const CartanElement& h0, const RootSystemA& rs);

// Distinct diagonal matrices obtained by permuting the entries of H0,
// enumerated in lexicographically increasing order of the diagonal.
std::vector<CartanElement> weyl_orbit(const CartanElement& h0);

// All n! Weyl elements in lexicographic one-line order.
std::vector<WeylElement> weyl_group(int n);

// Complex dimension of the adjoint orbit: #{alpha : alpha(H0) != 0}.
int orbit_dim_c(const CartanElement& h0, const RootSystemA& rs);

// Complex dimension of the flag manifold F_Theta: positive roots outside the
// span of Theta (block-internal roots removed).
int flag_dim_c(const ThetaSet& theta, const RootSystemA& rs);

// Betti vector of F_Theta via Schubert cells: b_{2l} = #{w in W^Theta of
// length l}, where W^Theta is the set of minimal coset representatives.
BettiVector flag_poincare(const ThetaSet& theta, const RootSystemA& rs);

// Order-reversing permutation i -> n+1-i, the longest element of S_n.
WeylElement longest_element(const RootSystemA& rs);

// Theta* = -w0.Theta; for type A_{n-1} the index map k -> n-k.
ThetaSet dual_theta(const ThetaSet& theta, const RootSystemA& rs);

} // namespace orbitlef::lie
