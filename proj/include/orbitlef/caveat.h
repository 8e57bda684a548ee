#pragma once

#include <vector>

#include "orbitlef/poly.h"
#include "orbitlef/qmatrix.h"

namespace orbitlef::caveat {

// Real coordinates of C^n, z_k = x_k + i*y_k: {x, y} for n = 1, otherwise
// {x1..xn, y1..yn}.
poly::VarContext plane_context(int n);

// |g|^2 for g(z) = z_1^2 + ... + z_n^2, as a real polynomial:
// (sum x_i^2 - y_i^2)^2 + 4 (sum x_i y_i)^2.
poly::Polynomial norm_sq_poly(int n);

// The 2n formal partial derivatives of |g|^2, x-block then y-block. They
// expand to 4x_k S + 8y_k T and -4y_k S + 8x_k T with S = sum(x_i^2 - y_i^2),
// T = sum x_i y_i.
std::vector<poly::Polynomial> norm_sq_gradient(int n);

// All second partials of |g|^2 at the origin: the zero 2n x 2n matrix, since
// the function is homogeneous of degree 4. Computed symbolically, not assumed.
QMatrix hessian_at_zero(int n);

// A point of the critical cone {S = T = 0} at distance |r|*sqrt(2) from the
// origin: x = (r, 0, ...), y = (0, r, 0, ...). For n = 1 that cone collapses
// (the displayed gradient does not vanish on x = +-y away from 0), so the
// probe point x = y = r is returned with cone_witness = false.
struct ConeWitness {
    bool cone_witness = false;
    std::vector<Rat> point;    // x-block then y-block
    std::vector<Rat> gradient; // formal gradient evaluated at the point
    Rat point_norm_sq = 0;
};

ConeWitness critical_family_witness(int n, const Rat& r);

} // namespace orbitlef::caveat
