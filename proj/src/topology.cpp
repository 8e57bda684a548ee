#include "orbitlef/topology.h"

#include <algorithm>
#include <fstream>
#include <map>
#include <sstream>

#include <json.hpp>

#include "orbitlef/fibration.h"

namespace orbitlef::topo {

lie::BettiVector complement_betti(const lie::BettiVector& flag, int k) {
    if (k <= 0)
        fail(ErrorKind::InvalidArgument, "need at least one puncture");
    if (flag.size() < 3 || flag.size() % 2 == 0)
        fail(ErrorKind::InvalidArgument,
             "expected Betti numbers b_0..b_{2m} of a closed even-dimensional manifold");
    if (flag.front() != 1 || flag.back() != 1)
        fail(ErrorKind::InvalidArgument, "expected a connected manifold with b_top = 1");
    for (std::size_t i = 1; i < flag.size(); i += 2)
        if (flag[i] != 0)
            fail(ErrorKind::InvalidArgument,
                 "expected vanishing odd Betti numbers (simply-connected with cells in "
                 "even degrees)");
    lie::BettiVector out = flag;
    out[out.size() - 1] = 0;
    out[out.size() - 2] = k - 1;
    return out;
}

int regular_fiber_middle_betti(const lie::CartanElement& h0) {
    return static_cast<int>(lie::weyl_orbit(h0).size()) - 1;
}

SingularFiberBetti singular_fiber_middle_betti(const lie::CartanElement& h0,
                                               const lie::CartanElement& h) {
    if (h.n() != h0.n())
        fail(ErrorKind::SizeMismatch, "H and H0 have different rank");
    std::map<Rat, int> count;
    for (const auto& w : lie::weyl_orbit(h0))
        ++count[fib::trace_form(h, w)];
    SingularFiberBetti out;
    int k = 0;
    for (const auto& [value, c] : count) {
        k += c;
        if (c > 1 && !out.shared_value)
            out.shared_value = value;
    }
    if (!out.shared_value)
        out.betti = k - 2;
    return out;
}

FiberSummary fiber_summary(const lie::CartanElement& h0,
                           const std::optional<lie::CartanElement>& h) {
    const lie::RootSystemA rs(h0.n());
    const lie::CartanElement dom = lie::dominant_sort(h0);
    FiberSummary s;
    s.n = h0.n();
    s.k = static_cast<int>(lie::weyl_orbit(dom).size());
    s.orbit_dim = lie::orbit_dim_c(dom, rs);
    s.theta = lie::theta_of(dom, rs);
    s.theta_dual = lie::dual_theta(s.theta, rs);
    s.flag_dim = lie::flag_dim_c(s.theta, rs);
    s.flag_betti = lie::flag_poincare(s.theta, rs);
    s.complement = complement_betti(s.flag_betti, s.k);
    s.regular_middle = s.k - 1;
    if (h) {
        const SingularFiberBetti sb = singular_fiber_middle_betti(dom, *h);
        s.singular_middle = sb.betti;
        s.shared_value = sb.shared_value;
    }
    return s;
}

HodgeDiamond::HodgeDiamond(int dim) : d_(dim) {
    if (dim < 0)
        fail(ErrorKind::InvalidArgument, "diamond dimension must be nonnegative");
    h_.assign(static_cast<std::size_t>(dim + 1) * static_cast<std::size_t>(dim + 1),
              Cell(0));
}

std::size_t HodgeDiamond::idx(int p, int q) const {
    if (p < 0 || q < 0 || p > d_ || q > d_)
        fail(ErrorKind::InvalidArgument, "diamond cell out of range");
    return static_cast<std::size_t>(p) * static_cast<std::size_t>(d_ + 1) +
           static_cast<std::size_t>(q);
}

bool HodgeDiamond::has_unknown() const {
    return std::any_of(h_.begin(), h_.end(), [](const Cell& c) { return !c.has_value(); });
}

HodgeDiamond pn_diamond(int n) {
    if (n < 0)
        fail(ErrorKind::InvalidArgument, "projective space dimension must be nonnegative");
    HodgeDiamond d(n);
    for (int p = 0; p <= n; ++p)
        d.set(p, p, 1);
    return d;
}

HodgeDiamond kunneth(const HodgeDiamond& a, const HodgeDiamond& b) {
    if (a.has_unknown() || b.has_unknown())
        fail(ErrorKind::InvalidArgument, "product formula needs fully known diamonds");
    HodgeDiamond out(a.dim() + b.dim());
    for (int p = 0; p <= out.dim(); ++p)
        for (int q = 0; q <= out.dim(); ++q) {
            std::int64_t sum = 0;
            for (int s = std::max(0, p - b.dim()); s <= std::min(p, a.dim()); ++s)
                for (int t = std::max(0, q - b.dim()); t <= std::min(q, a.dim()); ++t)
                    sum += *a.at(s, t) * *b.at(p - s, q - t);
            out.set(p, q, sum);
        }
    return out;
}

DiamondComparison diamond_compare(const HodgeDiamond& a, const HodgeDiamond& b) {
    if (a.dim() != b.dim())
        fail(ErrorKind::SizeMismatch, "diamonds of different dimension");
    DiamondComparison out;
    for (int p = 0; p <= a.dim(); ++p)
        for (int q = 0; q <= a.dim(); ++q) {
            const auto& x = a.at(p, q);
            const auto& y = b.at(p, q);
            if (!x || !y) {
                out.uncheckable.push_back({p, q});
            } else if (*x != *y) {
                out.differences.push_back({p, q, *x, *y});
                out.equal_on_checked = false;
            }
        }
    return out;
}

bool euler_obstruction(std::int64_t chi) {
    return chi % 2 != 0;
}

std::optional<std::int64_t> euler_from_diamond(const HodgeDiamond& d) {
    std::int64_t chi = 0;
    for (int p = 0; p <= d.dim(); ++p)
        for (int q = 0; q <= d.dim(); ++q) {
            const auto& c = d.at(p, q);
            if (!c)
                return std::nullopt;
            chi += ((p + q) % 2 == 0) ? *c : -*c;
        }
    return chi;
}

std::string render(const HodgeDiamond& d) {
    std::size_t width = 1;
    for (int p = 0; p <= d.dim(); ++p)
        for (int q = 0; q <= d.dim(); ++q) {
            const auto& c = d.at(p, q);
            width = std::max(width, (c ? std::to_string(*c) : std::string("?")).size());
        }

    auto cell_text = [&](int p, int q) {
        const auto& c = d.at(p, q);
        std::string s = c ? std::to_string(*c) : std::string("?");
        const std::size_t pad = width - s.size();
        return std::string(pad - pad / 2, ' ') + s + std::string(pad / 2, ' ');
    };

    std::vector<std::string> rows;
    std::size_t widest = 0;
    for (int k = 0; k <= 2 * d.dim(); ++k) {
        std::string row;
        for (int p = std::min(d.dim(), k); p >= std::max(0, k - d.dim()); --p) {
            if (!row.empty())
                row += std::string(width, ' ');
            row += cell_text(p, k - p);
        }
        widest = std::max(widest, row.size());
        rows.push_back(std::move(row));
    }
    std::ostringstream os;
    for (auto& row : rows) {
        std::string line = std::string((widest - row.size()) / 2, ' ') + row;
        while (!line.empty() && line.back() == ' ')
            line.pop_back();
        os << line << "\n";
    }
    return os.str();
}

std::string diamond_to_json(const HodgeDiamond& d) {
    nlohmann::ordered_json j;
    j["dim"] = d.dim();
    nlohmann::ordered_json rows = nlohmann::ordered_json::array();
    nlohmann::ordered_json unknown = nlohmann::ordered_json::array();
    for (int p = 0; p <= d.dim(); ++p) {
        nlohmann::ordered_json row = nlohmann::ordered_json::array();
        for (int q = 0; q <= d.dim(); ++q) {
            const auto& c = d.at(p, q);
            row.push_back(c ? *c : 0);
            if (!c)
                unknown.push_back(nlohmann::ordered_json::array({p, q}));
        }
        rows.push_back(std::move(row));
    }
    j["h"] = std::move(rows);
    j["unknown"] = std::move(unknown);
    return j.dump(2) + "\n";
}

HodgeDiamond diamond_from_json(const std::string& text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        fail(ErrorKind::ParseError, std::string("bad diamond JSON: ") + e.what());
    }
    if (!j.is_object() || !j.contains("dim") || !j.contains("h"))
        fail(ErrorKind::ParseError, "diamond JSON needs 'dim' and 'h'");
    const int dim = j.at("dim").get<int>();
    HodgeDiamond d(dim);
    const auto& rows = j.at("h");
    if (!rows.is_array() || rows.size() != static_cast<std::size_t>(dim + 1))
        fail(ErrorKind::ParseError, "diamond JSON 'h' must have dim+1 rows");
    for (int p = 0; p <= dim; ++p) {
        const auto& row = rows[static_cast<std::size_t>(p)];
        if (!row.is_array() || row.size() != static_cast<std::size_t>(dim + 1))
            fail(ErrorKind::ParseError, "diamond JSON 'h' must be square");
        for (int q = 0; q <= dim; ++q)
            d.set(p, q, row[static_cast<std::size_t>(q)].get<std::int64_t>());
    }
    if (j.contains("unknown"))
        for (const auto& cell : j.at("unknown")) {
            if (!cell.is_array() || cell.size() != 2)
                fail(ErrorKind::ParseError, "diamond JSON 'unknown' entries must be pairs");
            d.set(cell[0].get<int>(), cell[1].get<int>(), std::nullopt);
        }
    return d;
}

HodgeDiamond read_diamond_file(const std::string& path) {
    std::ifstream in(path);
    if (!in)
        fail(ErrorKind::FixtureError, "cannot open diamond file: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return diamond_from_json(buf.str());
}

} // namespace orbitlef::topo
