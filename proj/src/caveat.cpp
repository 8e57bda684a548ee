#include "orbitlef/caveat.h"

namespace orbitlef::caveat {

using poly::Polynomial;
using poly::VarContext;

VarContext plane_context(int n) {
    if (n < 1)
        fail(ErrorKind::InvalidRank, "need at least one complex coordinate");
    if (n == 1)
        return VarContext({"x", "y"});
    std::vector<std::string> names;
    names.reserve(2 * static_cast<std::size_t>(n));
    for (int k = 1; k <= n; ++k)
        names.push_back("x" + std::to_string(k));
    for (int k = 1; k <= n; ++k)
        names.push_back("y" + std::to_string(k));
    return VarContext(std::move(names));
}

Polynomial norm_sq_poly(int n) {
    const VarContext ctx = plane_context(n);
    Polynomial s(ctx), t(ctx);
    for (int k = 0; k < n; ++k) {
        const auto xk = Polynomial::variable(ctx, static_cast<std::uint32_t>(k));
        const auto yk = Polynomial::variable(ctx, static_cast<std::uint32_t>(n + k));
        s += xk * xk - yk * yk;
        t += xk * yk;
    }
    return s * s + t * t * Rat(4);
}

std::vector<Polynomial> norm_sq_gradient(int n) {
    const Polynomial f = norm_sq_poly(n);
    std::vector<Polynomial> grad;
    grad.reserve(2 * static_cast<std::size_t>(n));
    for (std::uint32_t v = 0; v < 2 * static_cast<std::uint32_t>(n); ++v)
        grad.push_back(f.derivative(v));
    return grad;
}

QMatrix hessian_at_zero(int n) {
    const Polynomial f = norm_sq_poly(n);
    const std::size_t m = 2 * static_cast<std::size_t>(n);
    const std::vector<Rat> origin(m, Rat(0));
    QMatrix h(m, m);
    for (std::uint32_t i = 0; i < m; ++i) {
        const Polynomial di = f.derivative(i);
        for (std::uint32_t j = i; j < m; ++j) {
            Rat v = di.derivative(j).eval(origin);
            h.at(j, i) = v;
            h.at(i, j) = std::move(v);
        }
    }
    return h;
}

ConeWitness critical_family_witness(int n, const Rat& r) {
    if (n < 1)
        fail(ErrorKind::InvalidRank, "need at least one complex coordinate");
    if (r == 0)
        fail(ErrorKind::InvalidArgument, "witness scale must be nonzero");

    ConeWitness w;
    w.point.assign(2 * static_cast<std::size_t>(n), Rat(0));
    if (n == 1) {
        // The cone {S = T = 0} is just the origin over the reals; probe the
        // zero set of g instead, where the gradient does not vanish.
        w.cone_witness = false;
        w.point[0] = r;
        w.point[1] = r;
    } else {
        w.cone_witness = true;
        w.point[0] = r;                            // x_1 = r
        w.point[static_cast<std::size_t>(n) + 1] = r; // y_2 = r
    }
    for (const Rat& c : w.point)
        w.point_norm_sq += c * c;
    for (const auto& d : norm_sq_gradient(n))
        w.gradient.push_back(d.eval(w.point));
    return w;
}

} // namespace orbitlef::caveat
