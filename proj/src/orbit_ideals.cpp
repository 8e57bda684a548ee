#include "orbitlef/orbit_ideals.h"

#include <algorithm>
#include <set>

namespace orbitlef::ideals {

using poly::Polynomial;
using poly::VarContext;

SymbolicMatrix::SymbolicMatrix(int n, VarContext ctx)
    : n_(n), ctx_(std::move(ctx)),
      e_(static_cast<std::size_t>(n) * static_cast<std::size_t>(n), Polynomial(ctx_)) {
    if (n < 1)
        fail(ErrorKind::InvalidRank, "matrix size must be positive");
}

std::size_t SymbolicMatrix::idx(int i, int j) const {
    if (i < 1 || j < 1 || i > n_ || j > n_)
        fail(ErrorKind::InvalidArgument, "matrix index out of range");
    return static_cast<std::size_t>(i - 1) * static_cast<std::size_t>(n_) +
           static_cast<std::size_t>(j - 1);
}

Polynomial SymbolicMatrix::trace() const {
    Polynomial t(ctx_);
    for (int i = 1; i <= n_; ++i)
        t += at(i, i);
    return t;
}

Polynomial SymbolicMatrix::determinant() const {
    // Laplace expansion along the first row of the index submatrix.
    std::vector<int> rows(static_cast<std::size_t>(n_)), cols(rows);
    for (int i = 0; i < n_; ++i)
        rows[static_cast<std::size_t>(i)] = cols[static_cast<std::size_t>(i)] = i + 1;

    auto rec = [&](auto&& self, std::vector<int> r, std::vector<int> c) -> Polynomial {
        if (r.size() == 1)
            return at(r[0], c[0]);
        Polynomial det(ctx_);
        std::vector<int> rsub(r.begin() + 1, r.end());
        for (std::size_t k = 0; k < c.size(); ++k) {
            std::vector<int> csub;
            csub.reserve(c.size() - 1);
            for (std::size_t l = 0; l < c.size(); ++l)
                if (l != k)
                    csub.push_back(c[l]);
            Polynomial cof = at(r[0], c[k]) * self(self, rsub, csub);
            if (k % 2 == 0)
                det += cof;
            else
                det -= cof;
        }
        return det;
    };
    return rec(rec, rows, cols);
}

SymbolicMatrix SymbolicMatrix::operator*(const SymbolicMatrix& o) const {
    if (n_ != o.n_ || !ctx_.same(o.ctx_))
        fail(ErrorKind::SizeMismatch, "symbolic matrix product shape mismatch");
    SymbolicMatrix out(n_, ctx_);
    for (int i = 1; i <= n_; ++i)
        for (int j = 1; j <= n_; ++j) {
            Polynomial s(ctx_);
            for (int k = 1; k <= n_; ++k)
                s += at(i, k) * o.at(k, j);
            out.at(i, j) = std::move(s);
        }
    return out;
}

SymbolicMatrix SymbolicMatrix::shifted(const Rat& c) const {
    SymbolicMatrix out = *this;
    for (int i = 1; i <= n_; ++i)
        out.at(i, i) -= Polynomial::constant(ctx_, c);
    return out;
}

QMatrix SymbolicMatrix::eval(const std::vector<Rat>& point) const {
    QMatrix out(static_cast<std::size_t>(n_), static_cast<std::size_t>(n_));
    for (int i = 1; i <= n_; ++i)
        for (int j = 1; j <= n_; ++j)
            out.at(static_cast<std::size_t>(i - 1), static_cast<std::size_t>(j - 1)) =
                at(i, j).eval(point);
    return out;
}

SymbolicMatrix generic_matrix(int n) {
    const VarContext ctx = VarContext::ambient(n);
    SymbolicMatrix a(n, ctx);

    Polynomial last = Polynomial(ctx);
    for (int i = 1; i < n; ++i) {
        const auto xi = Polynomial::variable(ctx, static_cast<std::uint32_t>(i - 1));
        a.at(i, i) = xi;
        last -= xi;
    }
    a.at(n, n) = std::move(last);

    std::uint32_t upper = static_cast<std::uint32_t>(n - 1);
    std::uint32_t lower = upper + static_cast<std::uint32_t>(n * (n - 1) / 2);
    for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j)
            a.at(i, j) = Polynomial::variable(ctx, upper++);
    for (int i = 2; i <= n; ++i)
        for (int j = 1; j < i; ++j)
            a.at(i, j) = Polynomial::variable(ctx, lower++);
    return a;
}

std::vector<Rat> ambient_point(const QMatrix& m) {
    if (m.rows() != m.cols() || m.rows() < 2)
        fail(ErrorKind::SizeMismatch, "ambient coordinates need a square matrix, n >= 2");
    if (m.trace() != 0)
        fail(ErrorKind::InvalidArgument, "ambient coordinates need a traceless matrix");
    const std::size_t n = m.rows();
    std::vector<Rat> pt;
    pt.reserve(n * n - 1);
    for (std::size_t i = 0; i + 1 < n; ++i)
        pt.push_back(m.at(i, i));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            pt.push_back(m.at(i, j));
    for (std::size_t i = 1; i < n; ++i)
        for (std::size_t j = 0; j < i; ++j)
            pt.push_back(m.at(i, j));
    return pt;
}

std::vector<Rat> ambient_point(const lie::CartanElement& h) {
    return ambient_point(h.matrix());
}

poly::Ideal minimal_poly_ideal(const lie::CartanElement& h0) {
    if (h0.is_zero())
        fail(ErrorKind::InvalidArgument, "the zero element has no orbit ideal");
    const int n = h0.n();
    const SymbolicMatrix a = generic_matrix(n);

    std::vector<Rat> eigen = h0.diag();
    std::sort(eigen.begin(), eigen.end(), [](const Rat& x, const Rat& y) { return x > y; });
    eigen.erase(std::unique(eigen.begin(), eigen.end()), eigen.end());

    std::optional<SymbolicMatrix> prod;
    for (const Rat& lam : eigen) {
        SymbolicMatrix factor = a.shifted(lam);
        prod = prod ? *prod * factor : std::move(factor);
    }

    std::vector<Polynomial> gens;
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n; ++j) {
            const Polynomial& g = prod->at(i, j);
            if (g.is_zero())
                continue;
            if (std::find(gens.begin(), gens.end(), g) == gens.end())
                gens.push_back(g);
        }
    return poly::Ideal(a.context(), std::move(gens));
}

poly::Ideal determinant_generators(const lie::CartanElement& h0,
                                   const std::vector<Rat>& shifts) {
    const lie::RootSystemA rs(h0.n());
    if (!lie::is_regular(h0, rs))
        fail(ErrorKind::NotRegular,
             "determinantal presentation needs distinct eigenvalues (regular element)");
    const SymbolicMatrix a = generic_matrix(h0.n());
    std::vector<Polynomial> gens;
    gens.reserve(shifts.size());
    for (const Rat& c : shifts) {
        Rat target(1);
        for (int i = 1; i <= h0.n(); ++i)
            target *= h0.entry(i) - c;
        gens.push_back(a.shifted(c).determinant() -
                       Polynomial::constant(a.context(), target));
    }
    return poly::Ideal(a.context(), std::move(gens));
}

poly::Ideal fiber_ideal(const poly::Ideal& ideal, const Polynomial& potential,
                        const Rat& c) {
    if (!ideal.context().same(potential.context()))
        fail(ErrorKind::ContextMismatch, "potential from a different variable context");
    std::vector<Polynomial> gens = ideal.generators();
    gens.push_back(potential - Polynomial::constant(potential.context(), c));
    return poly::Ideal(ideal.context(), std::move(gens));
}

CompactificationReport compare_compactifications(const std::vector<Polynomial>& gens_a,
                                                 const std::vector<Polynomial>& gens_b,
                                                 const poly::TermOrder& ord,
                                                 const poly::GroebnerOptions& opts) {
    if (gens_a.empty() || gens_b.empty())
        fail(ErrorKind::InvalidArgument, "compactification comparison needs generators");
    const VarContext& ctx = gens_a.front().context();
    for (const auto& g : gens_b)
        if (!g.context().same(ctx))
            fail(ErrorKind::ContextMismatch, "generators from different variable contexts");

    CompactificationReport rep;
    const poly::Ideal ia(ctx, gens_a);
    const poly::Ideal ib(ctx, gens_b);
    rep.affine_equal = poly::ideal_equal(ia, ib, ord, opts);

    const std::vector<Polynomial> ha = poly::homogenize_generators(gens_a);
    const std::vector<Polynomial> hb = poly::homogenize_generators(gens_b);
    const VarContext ext = ha.front().context();
    const poly::Ideal iha(ext, ha);
    const poly::Ideal ihb(ext, hb);

    rep.hom_subset_ab = true;
    for (const auto& g : ha)
        if (!ihb.contains(g, ord, opts)) {
            rep.hom_subset_ab = false;
            if (!rep.witness) {
                rep.witness = g;
                rep.witness_side = "left";
            }
            break;
        }
    rep.hom_subset_ba = true;
    for (const auto& g : hb)
        if (!iha.contains(g, ord, opts)) {
            rep.hom_subset_ba = false;
            if (!rep.witness) {
                rep.witness = g;
                rep.witness_side = "right";
            }
            break;
        }
    rep.hom_equal = rep.hom_subset_ab && rep.hom_subset_ba;
    return rep;
}

} // namespace orbitlef::ideals
