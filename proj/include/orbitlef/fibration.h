#pragma once

#include <string>
#include <vector>

#include "orbitlef/lie.h"
#include "orbitlef/poly.h"
#include "orbitlef/qmatrix.h"

namespace orbitlef::fib {

// Invariant pairing <X,Y> = scale * tr(XY). The default scale 1 is the plain
// trace form; the Killing form of sl(n) corresponds to scale 2n.
Rat trace_form(const QMatrix& x, const QMatrix& y, const Rat& scale = Rat(1));
Rat trace_form(const lie::CartanElement& x, const lie::CartanElement& y,
               const Rat& scale = Rat(1));

// Height potential tr(H * A) as a linear polynomial in the ambient
// coordinates of a generic traceless n x n matrix A: sum (h_i - h_n) x_i.
poly::Polynomial potential_poly(const lie::CartanElement& h, int n);

// Critical values of the potential on the orbit of h0: the pairing against
// every diagonal matrix in the Weyl orbit. Multiset sorted descending,
// multiplicities kept. Requires h regular.
std::vector<Rat> critical_values(const lie::CartanElement& h, const lie::CartanElement& h0);

// Second variation of the potential at the diagonal critical point x,
// expressed in the Chevalley basis of the tangent space: rows/columns are
// indexed by the roots a with a(x) != 0 and B(a,b) = <h, [E_a,[E_b,x]]>.
struct HessianForm {
    QMatrix form;
    std::vector<lie::Root> basis;
};

HessianForm hessian_form(const lie::CartanElement& h, const lie::CartanElement& x,
                         const lie::RootSystemA& rs);

// True iff the second variation has full rank on the tangent space.
bool hessian_nondegenerate(const lie::CartanElement& h, const lie::CartanElement& x,
                           const lie::RootSystemA& rs);

struct CriticalDatum {
    lie::CartanElement point;
    Rat value;
    int hessian_rank = 0;
    // Number of other critical points sharing this critical value.
    int fiber_mates = 0;
};

struct LefschetzReport {
    int n = 0;
    int k = 0;               // number of critical points
    int distinct_values = 0;
    bool values_distinct = false; // every singular fiber holds one critical point
    int orbit_dim = 0;            // complex dimension of the orbit
    bool all_nondegenerate = false;
    std::vector<CriticalDatum> points; // descending by value, then by point
};

// Full critical-structure report for the potential of h on the orbit of h0.
// Requires h regular; degeneracies are reported, never raised.
LefschetzReport lefschetz_report(const lie::CartanElement& h, const lie::CartanElement& h0);

} // namespace orbitlef::fib
