#pragma once

#include <optional>
#include <string>
#include <vector>

#include "orbitlef/groebner.h"
#include "orbitlef/lie.h"
#include "orbitlef/poly.h"

namespace orbitlef::ideals {

// n x n matrix of polynomials in the ambient coordinates, trace kept
// symbolically zero (the last diagonal entry is minus the sum of the others).
class SymbolicMatrix {
public:
    SymbolicMatrix(int n, poly::VarContext ctx);

    int n() const { return n_; }
    const poly::VarContext& context() const { return ctx_; }

    poly::Polynomial& at(int i, int j) { return e_[idx(i, j)]; } // 1-based
    const poly::Polynomial& at(int i, int j) const { return e_[idx(i, j)]; }

    poly::Polynomial trace() const;
    poly::Polynomial determinant() const;

    SymbolicMatrix operator*(const SymbolicMatrix& o) const;
    // A - c * identity
    SymbolicMatrix shifted(const Rat& c) const;

    // Entry-wise evaluation at a point of the ambient coordinate space.
    QMatrix eval(const std::vector<Rat>& point) const;

private:
    std::size_t idx(int i, int j) const;

    int n_;
    poly::VarContext ctx_;
    std::vector<poly::Polynomial> e_;
};

// The generic traceless matrix: diagonal x1..x_{n-1} (last entry dependent),
// strictly upper y's and strictly lower z's, both row-major; n = 2 is
// [[x, y], [z, -x]].
SymbolicMatrix generic_matrix(int n);

// Ambient coordinates of a concrete traceless matrix, in context order.
std::vector<Rat> ambient_point(const QMatrix& m);
std::vector<Rat> ambient_point(const lie::CartanElement& h);

// Ideal of the orbit closure of h0: all nonzero entries of the product of
// (A - lambda * id) over the distinct eigenvalues lambda of h0, duplicates
// dropped. Requires h0 nonzero.
poly::Ideal minimal_poly_ideal(const lie::CartanElement& h0);

// Determinantal presentation for a regular h0: one generator
// det(A - c*id) - prod_i (lambda_i - c) per shift c. Requires h0 regular.
poly::Ideal determinant_generators(const lie::CartanElement& h0, const std::vector<Rat>& shifts);

// Generators of I extended by the fiber cut f - c.
poly::Ideal fiber_ideal(const poly::Ideal& ideal, const poly::Polynomial& potential,
                        const Rat& c);

// Comparison of the projective closures obtained by homogenizing two
// generator lists of (expectedly) one affine ideal.
struct CompactificationReport {
    bool affine_equal = false;
    bool hom_subset_ab = false; // homogenized A inside homogenized B
    bool hom_subset_ba = false;
    bool hom_equal = false;
    // First homogenized generator with nonzero normal form modulo the other
    // side, when the closures differ; lives in the extended (t) context.
    std::optional<poly::Polynomial> witness;
    std::string witness_side; // "left" or "right"
};

CompactificationReport compare_compactifications(const std::vector<poly::Polynomial>& gens_a,
                                                 const std::vector<poly::Polynomial>& gens_b,
                                                 const poly::TermOrder& ord = {},
                                                 const poly::GroebnerOptions& opts = {});

} // namespace orbitlef::ideals
