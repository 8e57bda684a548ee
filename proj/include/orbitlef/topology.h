#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "orbitlef/lie.h"

namespace orbitlef::topo {

// Betti vector of the complement of k points in a closed simply-connected
// even-dimensional manifold: the top class dies and degree 2m-1 gains k-1.
lie::BettiVector complement_betti(const lie::BettiVector& flag, int k);

// Middle Betti number of a regular fiber: number of critical points minus 1.
int regular_fiber_middle_betti(const lie::CartanElement& h0);

// Middle Betti number of a singular fiber (k-2), valid only when every
// singular fiber carries exactly one critical point; otherwise inapplicable
// and a shared critical value is reported.
struct SingularFiberBetti {
    std::optional<int> betti;
    std::optional<Rat> shared_value; // witnesses inapplicability
};
SingularFiberBetti singular_fiber_middle_betti(const lie::CartanElement& h0,
                                               const lie::CartanElement& h);

// Everything the Betti-number corollaries say about the fibers over a given
// pair (h0, h): flag data, puncture count, and middle Betti numbers.
struct FiberSummary {
    int n = 0;
    int k = 0;          // number of critical points = punctures of the flag
    int orbit_dim = 0;  // complex dimension of the orbit
    int flag_dim = 0;   // complex dimension of the flag manifold F_Theta
    lie::ThetaSet theta, theta_dual;
    lie::BettiVector flag_betti;       // of F_Theta
    lie::BettiVector complement;       // of F_Theta minus the k punctures
    int regular_middle = 0;            // k - 1
    std::optional<int> singular_middle;    // k - 2 when applicable, needs h
    std::optional<Rat> shared_value;       // witnesses inapplicability
};

// h enables the singular-fiber analysis (it needs the critical values).
FiberSummary fiber_summary(const lie::CartanElement& h0,
                           const std::optional<lie::CartanElement>& h);

// Square array h^{p,q}, 0 <= p,q <= dim; a cell may be unknown.
class HodgeDiamond {
public:
    using Cell = std::optional<std::int64_t>;

    explicit HodgeDiamond(int dim);

    int dim() const { return d_; }
    const Cell& at(int p, int q) const { return h_[idx(p, q)]; }
    void set(int p, int q, Cell v) { h_[idx(p, q)] = v; }
    bool has_unknown() const;

    bool operator==(const HodgeDiamond&) const = default;

private:
    std::size_t idx(int p, int q) const;

    int d_ = 0;
    std::vector<Cell> h_;
};

// Diamond of complex projective n-space: 1 along the diagonal.
HodgeDiamond pn_diamond(int n);

// Diamond of a product: h^{p,q}(X x Y) = sum h^{a,b}(X) h^{p-a,q-b}(Y).
// Rejects unknown cells.
HodgeDiamond kunneth(const HodgeDiamond& a, const HodgeDiamond& b);

struct CellDifference {
    int p = 0, q = 0;
    std::int64_t lhs = 0, rhs = 0;
};

struct DiamondComparison {
    bool equal_on_checked = true;          // no differences among known cells
    std::vector<CellDifference> differences;
    std::vector<std::pair<int, int>> uncheckable; // unknown on either side
};

// Cell-by-cell comparison; unknown cells are reported as uncheckable, never
// as unequal. Dimensions must match.
DiamondComparison diamond_compare(const HodgeDiamond& a, const HodgeDiamond& b);

// Parity obstruction: an odd Euler characteristic rules out a topological
// fibration over the 2-sphere (multiplicativity of Euler numbers).
bool euler_obstruction(std::int64_t chi);

// Alternating sum of the diamond; empty when any cell is unknown.
std::optional<std::int64_t> euler_from_diamond(const HodgeDiamond& d);

// Centered rotated rendering; '?' for unknown cells. Row k lists h^{p,k-p}
// with p descending.
std::string render(const HodgeDiamond& d);

// JSON form: {"dim": d, "h": [[row p=0], ...], "unknown": [[p,q], ...]},
// unknown cells carried as 0 inside "h".
std::string diamond_to_json(const HodgeDiamond& d);
HodgeDiamond diamond_from_json(const std::string& text);
HodgeDiamond read_diamond_file(const std::string& path);

} // namespace orbitlef::topo
