#include "orbitlef/fibration.h"

#include <algorithm>
#include <map>

namespace orbitlef::fib {

Rat trace_form(const QMatrix& x, const QMatrix& y, const Rat& scale) {
    return scale * trace_product(x, y);
}

Rat trace_form(const lie::CartanElement& x, const lie::CartanElement& y, const Rat& scale) {
    if (x.n() != y.n())
        fail(ErrorKind::SizeMismatch, "pairing of diagonal elements of different rank");
    Rat total(0);
    for (int i = 1; i <= x.n(); ++i)
        total += x.entry(i) * y.entry(i);
    return scale * total;
}

poly::Polynomial potential_poly(const lie::CartanElement& h, int n) {
    if (h.n() != n)
        fail(ErrorKind::SizeMismatch, "potential for a matrix size different from H");
    const poly::VarContext ctx = poly::VarContext::ambient(n);
    poly::Polynomial f(ctx);
    for (int i = 1; i < n; ++i) {
        const Rat c = h.entry(i) - h.entry(n);
        if (c != 0)
            f += poly::Polynomial::variable(ctx, static_cast<std::uint32_t>(i - 1)) * c;
    }
    return f;
}

std::vector<Rat> critical_values(const lie::CartanElement& h, const lie::CartanElement& h0) {
    if (h.n() != h0.n())
        fail(ErrorKind::SizeMismatch, "H and H0 have different rank");
    const lie::RootSystemA rs(h.n());
    if (!lie::is_regular(h, rs))
        fail(ErrorKind::NotRegular, "critical points are isolated only for regular H");
    std::vector<Rat> values;
    for (const auto& w : lie::weyl_orbit(h0))
        values.push_back(trace_form(h, w));
    std::sort(values.begin(), values.end(), [](const Rat& a, const Rat& b) { return a > b; });
    return values;
}

HessianForm hessian_form(const lie::CartanElement& h, const lie::CartanElement& x,
                         const lie::RootSystemA& rs) {
    if (h.n() != rs.n() || x.n() != rs.n())
        fail(ErrorKind::SizeMismatch, "elements do not match the root system rank");

    HessianForm out;
    for (const auto& a : rs.roots())
        if (x.root_value(a) != 0)
            out.basis.push_back(a);

    const QMatrix hm = h.matrix();
    const QMatrix xm = x.matrix();
    const std::size_t m = out.basis.size();
    out.form = QMatrix(m, m);
    for (std::size_t r = 0; r < m; ++r) {
        const QMatrix ea = rs.root_vector(out.basis[r]);
        for (std::size_t c = 0; c < m; ++c) {
            const QMatrix eb = rs.root_vector(out.basis[c]);
            out.form.at(r, c) = trace_form(hm, bracket(ea, bracket(eb, xm)));
        }
    }
    return out;
}

bool hessian_nondegenerate(const lie::CartanElement& h, const lie::CartanElement& x,
                           const lie::RootSystemA& rs) {
    const HessianForm b = hessian_form(h, x, rs);
    return b.form.rank() == b.basis.size();
}

LefschetzReport lefschetz_report(const lie::CartanElement& h, const lie::CartanElement& h0) {
    if (h.n() != h0.n())
        fail(ErrorKind::SizeMismatch, "H and H0 have different rank");
    const lie::RootSystemA rs(h.n());
    if (!lie::is_regular(h, rs))
        fail(ErrorKind::NotRegular, "critical points are isolated only for regular H");

    LefschetzReport rep;
    rep.n = h.n();
    rep.orbit_dim = lie::orbit_dim_c(lie::dominant_sort(h0), rs);

    std::map<Rat, int> value_count;
    for (const auto& w : lie::weyl_orbit(h0)) {
        CriticalDatum d{w, trace_form(h, w), 0, 0};
        const HessianForm b = hessian_form(h, w, rs);
        d.hessian_rank = static_cast<int>(b.form.rank());
        ++value_count[d.value];
        rep.points.push_back(std::move(d));
    }
    rep.k = static_cast<int>(rep.points.size());
    rep.distinct_values = static_cast<int>(value_count.size());
    rep.values_distinct = rep.distinct_values == rep.k;
    rep.all_nondegenerate = true;
    for (auto& d : rep.points) {
        d.fiber_mates = value_count[d.value] - 1;
        if (d.hessian_rank != rep.orbit_dim)
            rep.all_nondegenerate = false;
    }
    std::sort(rep.points.begin(), rep.points.end(),
              [](const CriticalDatum& a, const CriticalDatum& b) {
                  if (a.value != b.value)
                      return a.value > b.value;
                  return a.point < b.point;
              });
    return rep;
}

} // namespace orbitlef::fib
