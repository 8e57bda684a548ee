#include "orbitlef/reports.h"

#include <iomanip>
#include <sstream>

#include <json.hpp>

namespace orbitlef::report {

using nlohmann::ordered_json;

namespace {

std::string dump(const ordered_json& j) {
    return j.dump(2) + "\n";
}

ordered_json rat_array(const std::vector<Rat>& v) {
    ordered_json a = ordered_json::array();
    for (const auto& x : v)
        a.push_back(rat_str(x));
    return a;
}

ordered_json diag_array(const lie::CartanElement& h) {
    return rat_array(h.diag());
}

ordered_json betti_array(const lie::BettiVector& v) {
    ordered_json a = ordered_json::array();
    for (auto b : v)
        a.push_back(b);
    return a;
}

ordered_json poly_array(const std::vector<poly::Polynomial>& gens) {
    ordered_json a = ordered_json::array();
    for (const auto& g : gens)
        a.push_back(g.str());
    return a;
}

ordered_json theta_array(const lie::ThetaSet& t) {
    ordered_json a = ordered_json::array();
    for (int k : t.indices)
        a.push_back(k);
    return a;
}

std::string yesno(bool b) { return b ? "yes" : "no"; }

} // namespace

std::string fibration_text(const fib::LefschetzReport& r, const poly::Polynomial& potential) {
    std::ostringstream os;
    os << "potential f_H = " << potential.str() << "\n";
    os << "critical points: " << r.k << ", distinct critical values: " << r.distinct_values
       << "\n";
    os << "orbit dimension (complex): " << r.orbit_dim << "\n";
    os << "one critical point per fiber: " << yesno(r.values_distinct) << "\n";
    os << "all Hessians nondegenerate: " << yesno(r.all_nondegenerate) << "\n";
    for (const auto& d : r.points)
        os << "  " << d.point.str() << "  value " << rat_str(d.value) << "  Hessian rank "
           << d.hessian_rank << "  fiber mates " << d.fiber_mates << "\n";
    return os.str();
}

std::string fibration_json(const fib::LefschetzReport& r, const poly::Polynomial& potential) {
    ordered_json j;
    j["n"] = r.n;
    j["potential"] = potential.str();
    j["k"] = r.k;
    j["distinct_values"] = r.distinct_values;
    j["values_distinct"] = r.values_distinct;
    j["orbit_dim"] = r.orbit_dim;
    j["all_nondegenerate"] = r.all_nondegenerate;
    ordered_json pts = ordered_json::array();
    for (const auto& d : r.points) {
        ordered_json p;
        p["point"] = diag_array(d.point);
        p["value"] = rat_str(d.value);
        p["hessian_rank"] = d.hessian_rank;
        p["fiber_mates"] = d.fiber_mates;
        pts.push_back(std::move(p));
    }
    j["critical_points"] = std::move(pts);
    return dump(j);
}

std::string ideal_text(const poly::VarContext& ctx, const std::vector<poly::Polynomial>& gens) {
    std::ostringstream os;
    os << "# vars: ";
    for (std::size_t k = 0; k < ctx.size(); ++k)
        os << (k ? "," : "") << ctx.name(static_cast<std::uint32_t>(k));
    os << "\n";
    for (const auto& g : gens)
        os << g.str() << "\n";
    return os.str();
}

std::string ideal_json(const poly::VarContext& ctx, const std::vector<poly::Polynomial>& gens) {
    ordered_json j;
    j["vars"] = ctx.names();
    j["generators"] = poly_array(gens);
    return dump(j);
}

std::string groebner_text(const poly::GroebnerResult& r, const poly::TermOrder& ord) {
    std::ostringstream os;
    os << "order: " << ord.str() << "\n";
    os << "complete: " << yesno(r.complete) << "  S-pairs: " << r.pairs_processed
       << "  reductions to zero: " << r.reductions_to_zero << "\n";
    os << (r.complete ? "reduced basis" : "partial basis") << " (" << r.basis.size()
       << "):\n";
    for (const auto& g : r.basis)
        os << "  " << g.str() << "\n";
    return os.str();
}

std::string groebner_json(const poly::GroebnerResult& r, const poly::TermOrder& ord) {
    ordered_json j;
    j["order"] = ord.str();
    j["complete"] = r.complete;
    j["pairs_processed"] = r.pairs_processed;
    j["reductions_to_zero"] = r.reductions_to_zero;
    j["basis"] = poly_array(r.basis);
    return dump(j);
}

std::string compare_text(const ideals::CompactificationReport& r) {
    std::ostringstream os;
    os << "affine ideals equal: " << yesno(r.affine_equal) << "\n";
    os << "homogenized left inside right: " << yesno(r.hom_subset_ab) << "\n";
    os << "homogenized right inside left: " << yesno(r.hom_subset_ba) << "\n";
    os << "projective closures equal: " << yesno(r.hom_equal) << "\n";
    if (r.witness)
        os << "witness (" << r.witness_side << " side, nonzero normal form): "
           << r.witness->str() << "\n";
    return os.str();
}

std::string compare_json(const ideals::CompactificationReport& r) {
    ordered_json j;
    j["affine_equal"] = r.affine_equal;
    j["hom_subset_ab"] = r.hom_subset_ab;
    j["hom_subset_ba"] = r.hom_subset_ba;
    j["hom_equal"] = r.hom_equal;
    j["witness"] = r.witness ? ordered_json(r.witness->str()) : ordered_json(nullptr);
    j["witness_side"] = r.witness_side;
    return dump(j);
}

std::string fiber_summary_text(const topo::FiberSummary& s) {
    std::ostringstream os;
    os << "critical points k = " << s.k << ", orbit dimension " << s.orbit_dim
       << " (complex)\n";
    os << "theta = " << s.theta.str() << ", dual theta = " << s.theta_dual.str() << "\n";
    os << "flag dimension " << s.flag_dim << " (complex), Betti";
    for (auto b : s.flag_betti)
        os << " " << b;
    os << "\n";
    os << "punctured-flag Betti";
    for (auto b : s.complement)
        os << " " << b;
    os << "\n";
    os << "regular fiber middle Betti number: " << s.regular_middle << "\n";
    if (s.singular_middle)
        os << "singular fiber middle Betti number: " << *s.singular_middle << "\n";
    else if (s.shared_value)
        os << "singular fiber middle Betti number: inapplicable (critical value "
           << rat_str(*s.shared_value) << " is shared by several critical points)\n";
    return os.str();
}

std::string fiber_summary_json(const topo::FiberSummary& s) {
    ordered_json j;
    j["n"] = s.n;
    j["k"] = s.k;
    j["orbit_dim"] = s.orbit_dim;
    j["flag_dim"] = s.flag_dim;
    j["theta"] = theta_array(s.theta);
    j["theta_dual"] = theta_array(s.theta_dual);
    j["flag_betti"] = betti_array(s.flag_betti);
    j["complement_betti"] = betti_array(s.complement);
    j["regular_middle_betti"] = s.regular_middle;
    j["singular_middle_betti"] =
        s.singular_middle ? ordered_json(*s.singular_middle) : ordered_json(nullptr);
    j["shared_value"] =
        s.shared_value ? ordered_json(rat_str(*s.shared_value)) : ordered_json(nullptr);
    return dump(j);
}

std::string diamond_text(const topo::HodgeDiamond& d) {
    std::ostringstream os;
    os << topo::render(d);
    const auto chi = topo::euler_from_diamond(d);
    os << "Euler characteristic: " << (chi ? std::to_string(*chi) : std::string("unknown"))
       << "\n";
    return os.str();
}

std::string diamond_compare_text(const topo::DiamondComparison& c) {
    std::ostringstream os;
    os << "equal on checkable cells: " << yesno(c.equal_on_checked) << "\n";
    for (const auto& d : c.differences)
        os << "  differ at (" << d.p << "," << d.q << "): " << d.lhs << " vs " << d.rhs
           << "\n";
    if (!c.uncheckable.empty()) {
        os << "uncheckable cells:";
        for (const auto& [p, q] : c.uncheckable)
            os << " (" << p << "," << q << ")";
        os << "\n";
    }
    return os.str();
}

std::string diamond_compare_json(const topo::DiamondComparison& c) {
    ordered_json j;
    j["equal_on_checked"] = c.equal_on_checked;
    ordered_json diffs = ordered_json::array();
    for (const auto& d : c.differences) {
        ordered_json e;
        e["p"] = d.p;
        e["q"] = d.q;
        e["left"] = d.lhs;
        e["right"] = d.rhs;
        diffs.push_back(std::move(e));
    }
    j["differences"] = std::move(diffs);
    ordered_json unc = ordered_json::array();
    for (const auto& [p, q] : c.uncheckable)
        unc.push_back(ordered_json::array({p, q}));
    j["uncheckable"] = std::move(unc);
    return dump(j);
}

std::string caveat_text(int n, const std::vector<poly::Polynomial>& grad, bool hessian_zero,
                        const std::vector<caveat::ConeWitness>& witnesses) {
    std::ostringstream os;
    os << "|g|^2 gradient in " << 2 * n << " real coordinates:\n";
    for (const auto& g : grad)
        os << "  " << g.str() << "\n";
    os << "Hessian at the origin is the zero matrix: " << yesno(hessian_zero) << "\n";
    os << "origin is a degenerate critical point: " << yesno(hessian_zero) << "\n";
    for (const auto& w : witnesses) {
        os << "witness point (";
        for (std::size_t k = 0; k < w.point.size(); ++k)
            os << (k ? "," : "") << rat_str(w.point[k]);
        os << "), |point|^2 = " << rat_str(w.point_norm_sq) << ": ";
        bool zero = true;
        for (const auto& v : w.gradient)
            if (v != 0)
                zero = false;
        if (w.cone_witness && zero)
            os << "gradient vanishes exactly (nonzero critical point)\n";
        else if (!w.cone_witness)
            os << "no cone witness in one complex variable; gradient there is (" << [&] {
                std::string s;
                for (std::size_t k = 0; k < w.gradient.size(); ++k)
                    s += (k ? "," : "") + rat_str(w.gradient[k]);
                return s;
            }() << ")\n";
        else
            os << "gradient unexpectedly nonzero\n";
    }
    return os.str();
}

std::string caveat_json(int n, const std::vector<poly::Polynomial>& grad, bool hessian_zero,
                        const std::vector<caveat::ConeWitness>& witnesses) {
    ordered_json j;
    j["n"] = n;
    j["gradient"] = poly_array(grad);
    j["hessian_at_zero_is_zero"] = hessian_zero;
    ordered_json ws = ordered_json::array();
    for (const auto& w : witnesses) {
        ordered_json e;
        e["cone_witness"] = w.cone_witness;
        e["point"] = rat_array(w.point);
        e["gradient"] = rat_array(w.gradient);
        e["point_norm_sq"] = rat_str(w.point_norm_sq);
        ws.push_back(std::move(e));
    }
    j["witnesses"] = std::move(ws);
    return dump(j);
}

std::string verify_text(const std::vector<verify::CriterionResult>& rs) {
    std::ostringstream os;
    bool all = true;
    for (const auto& r : rs) {
        os << "[" << std::setw(2) << r.id << "] " << (r.pass ? "PASS" : "FAIL") << "  "
           << std::fixed << std::setprecision(3) << r.seconds << "s (budget "
           << std::setprecision(0) << r.budget_seconds << "s)  " << r.title;
        if (!r.detail.empty())
            os << " — " << r.detail;
        os << "\n";
        all = all && r.pass;
    }
    os << (all ? "all criteria passed" : "SOME CRITERIA FAILED") << "\n";
    return os.str();
}

std::string verify_json(const std::vector<verify::CriterionResult>& rs) {
    ordered_json j;
    ordered_json arr = ordered_json::array();
    for (const auto& r : rs) {
        ordered_json e;
        e["id"] = r.id;
        e["title"] = r.title;
        e["pass"] = r.pass;
        e["seconds"] = r.seconds;
        e["budget_seconds"] = r.budget_seconds;
        e["detail"] = r.detail;
        arr.push_back(std::move(e));
    }
    j["criteria"] = std::move(arr);
    j["all_pass"] = verify::all_pass(rs);
    return dump(j);
}

} // namespace orbitlef::report
