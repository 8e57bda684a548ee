#include "orbitlef/groebner.h"

#include <algorithm>
#include <chrono>
#include <fstream>
#include <set>
#include <sstream>

namespace orbitlef::poly {

namespace {

struct MonoDesc {
    TermOrder ord;
    bool operator()(const Monomial& a, const Monomial& b) const {
        return ord.cmp(a, b) > 0;
    }
};

// Working form of a polynomial during division: terms keyed descending.
using WorkPoly = std::map<Monomial, Rat, MonoDesc>;

WorkPoly to_work(const Polynomial& f, const TermOrder& ord) {
    WorkPoly w{MonoDesc{ord}};
    for (const auto& t : f.terms())
        w.emplace(t.mono, t.coeff);
    return w;
}

struct Divisor {
    Monomial lead;
    Rat lead_coeff;
    std::vector<Term> tail; // descending under ord
};

Divisor make_divisor(const Polynomial& g, const TermOrder& ord) {
    std::vector<Term> terms = sorted_terms(g, ord);
    Divisor d;
    d.lead = terms.front().mono;
    d.lead_coeff = terms.front().coeff;
    d.tail.assign(terms.begin() + 1, terms.end());
    return d;
}

// p -= c * u * tail  (the leading term of the divisor is handled by erasure).
void subtract_scaled_tail(WorkPoly& p, const Rat& c, const Monomial& u,
                          const std::vector<Term>& tail) {
    for (const auto& t : tail) {
        Monomial m = t.mono * u;
        auto it = p.find(m);
        if (it == p.end()) {
            p.emplace(std::move(m), -c * t.coeff);
        } else {
            it->second -= c * t.coeff;
            if (it->second == 0)
                p.erase(it);
        }
    }
}

Polynomial division_remainder(const Polynomial& f, const std::vector<Divisor>& divs,
                              const TermOrder& ord) {
    WorkPoly p = to_work(f, ord);
    std::vector<Term> remainder;
    while (!p.empty()) {
        auto lead = p.begin();
        bool reduced = false;
        for (const auto& d : divs) {
            if (!d.lead.divides(lead->first))
                continue;
            const Monomial u = lead->first.divide_by(d.lead);
            const Rat c = lead->second / d.lead_coeff;
            p.erase(lead);
            subtract_scaled_tail(p, c, u, d.tail);
            reduced = true;
            break;
        }
        if (!reduced) {
            remainder.push_back({lead->first, lead->second});
            p.erase(lead);
        }
    }
    return Polynomial::from_terms(f.context(), std::move(remainder));
}

Monomial lead_monomial(const Polynomial& f, const TermOrder& ord) {
    return sorted_terms(f, ord).front().mono;
}

Rat lead_coefficient(const Polynomial& f, const TermOrder& ord) {
    return sorted_terms(f, ord).front().coeff;
}

std::string order_key(const TermOrder& ord) {
    std::ostringstream os;
    os << ord.str();
    for (std::uint32_t v : ord.priority)
        os << ':' << v;
    return os.str();
}

} // namespace

Polynomial normal_form(const Polynomial& f, const std::vector<Polynomial>& G,
                       const TermOrder& ord) {
    std::vector<Divisor> divs;
    divs.reserve(G.size());
    for (const auto& g : G) {
        if (!g.context().same(f.context()))
            fail(ErrorKind::ContextMismatch, "divisor from a different variable context");
        if (!g.is_zero())
            divs.push_back(make_divisor(g, ord));
    }
    if (divs.empty())
        return f;
    return division_remainder(f, divs, ord);
}

namespace {

struct PendingPair {
    Monomial lcm_mono;
    std::uint32_t lcm_deg = 0;
    std::size_t i = 0, j = 0; // i < j
};

struct PairCmp {
    TermOrder ord;
    bool operator()(const PendingPair& a, const PendingPair& b) const {
        if (a.lcm_deg != b.lcm_deg)
            return a.lcm_deg < b.lcm_deg;
        const int s = ord.cmp(a.lcm_mono, b.lcm_mono);
        if (s != 0)
            return s < 0;
        if (a.i != b.i)
            return a.i < b.i;
        return a.j < b.j;
    }
};

// Minimizes lead monomials and tail-reduces, yielding the unique reduced
// monic basis sorted ascending by leading monomial.
std::vector<Polynomial> interreduce(std::vector<Polynomial> basis, const TermOrder& ord) {
    std::erase_if(basis, [](const Polynomial& g) { return g.is_zero(); });
    if (basis.empty())
        return basis;

    std::vector<std::pair<Monomial, std::size_t>> by_lead;
    by_lead.reserve(basis.size());
    for (std::size_t k = 0; k < basis.size(); ++k)
        by_lead.push_back({lead_monomial(basis[k], ord), k});
    std::stable_sort(by_lead.begin(), by_lead.end(),
                     [&](const auto& a, const auto& b) { return ord.cmp(a.first, b.first) < 0; });

    // Keep only elements whose lead is not divisible by an earlier kept lead.
    std::vector<Polynomial> kept;
    std::vector<Monomial> kept_leads;
    for (const auto& [lm, k] : by_lead) {
        const bool covered = std::any_of(kept_leads.begin(), kept_leads.end(),
                                         [&](const Monomial& m) { return m.divides(lm); });
        if (!covered) {
            kept_leads.push_back(lm);
            kept.push_back(basis[k] * (Rat(1) / lead_coefficient(basis[k], ord)));
        }
    }

    // Tail-reduce each element against the others; leads are pairwise
    // non-divisible so the leading terms are untouched.
    for (std::size_t k = 0; k < kept.size(); ++k) {
        std::vector<Polynomial> others;
        others.reserve(kept.size() - 1);
        for (std::size_t l = 0; l < kept.size(); ++l)
            if (l != k)
                others.push_back(kept[l]);
        if (!others.empty())
            kept[k] = normal_form(kept[k], others, ord);
    }
    return kept;
}

} // namespace

GroebnerResult buchberger(const std::vector<Polynomial>& gens, const TermOrder& ord,
                          const GroebnerOptions& opts) {
    GroebnerResult res;

    std::vector<Polynomial> basis;
    for (const auto& g : gens) {
        if (!gens.front().context().same(g.context()))
            fail(ErrorKind::ContextMismatch, "generators from different variable contexts");
        if (!g.is_zero())
            basis.push_back(g * (Rat(1) / lead_coefficient(g, ord)));
    }
    if (basis.empty())
        return res;

    std::vector<Divisor> divs;
    divs.reserve(basis.size());
    for (const auto& g : basis)
        divs.push_back(make_divisor(g, ord));

    std::set<PendingPair, PairCmp> queue{PairCmp{ord}};
    std::set<std::pair<std::size_t, std::size_t>> pending_idx;
    auto push_pair = [&](std::size_t i, std::size_t j) {
        // Product criterion: coprime leads give an S-polynomial reducing to 0.
        if (divs[i].lead.coprime(divs[j].lead))
            return;
        Monomial l = lcm(divs[i].lead, divs[j].lead);
        const std::uint32_t d = l.degree();
        queue.insert({std::move(l), d, i, j});
        pending_idx.insert({i, j});
    };
    for (std::size_t j = 1; j < basis.size(); ++j)
        for (std::size_t i = 0; i < j; ++i)
            push_pair(i, j);

    const auto start = std::chrono::steady_clock::now();
    const bool budgeted = opts.budget_seconds > 0;
    auto over_budget = [&] {
        if (!budgeted)
            return false;
        const std::chrono::duration<double> used = std::chrono::steady_clock::now() - start;
        return used.count() > opts.budget_seconds;
    };
    auto report = [&] {
        if (opts.progress)
            opts.progress({queue.size(), res.pairs_processed, basis.size()});
    };

    while (!queue.empty()) {
        if (over_budget()) {
            res.basis = std::move(basis);
            res.complete = false;
            return res;
        }
        if (res.pairs_processed % 16 == 0)
            report();

        PendingPair pr = *queue.begin();
        queue.erase(queue.begin());
        pending_idx.erase({pr.i, pr.j});
        ++res.pairs_processed;

        // Chain criterion: skip when some other lead divides the lcm and both
        // connecting pairs have already been handled.
        bool skip = false;
        for (std::size_t k = 0; k < basis.size() && !skip; ++k) {
            if (k == pr.i || k == pr.j || !divs[k].lead.divides(pr.lcm_mono))
                continue;
            const auto a = std::minmax(pr.i, k);
            const auto b = std::minmax(pr.j, k);
            if (!pending_idx.count({a.first, a.second}) &&
                !pending_idx.count({b.first, b.second}))
                skip = true;
        }
        if (skip)
            continue;

        const Polynomial& f = basis[pr.i];
        const Polynomial& g = basis[pr.j];
        const Polynomial spoly =
            f.times_term(Rat(1), pr.lcm_mono.divide_by(divs[pr.i].lead)) -
            g.times_term(Rat(1), pr.lcm_mono.divide_by(divs[pr.j].lead));
        const Polynomial reduced = division_remainder(spoly, divs, ord);
        if (reduced.is_zero()) {
            ++res.reductions_to_zero;
            continue;
        }
        const std::size_t t = basis.size();
        basis.push_back(reduced * (Rat(1) / lead_coefficient(reduced, ord)));
        divs.push_back(make_divisor(basis.back(), ord));
        for (std::size_t i = 0; i < t; ++i)
            push_pair(i, t);
    }
    report();

    res.basis = interreduce(std::move(basis), ord);
    return res;
}

Ideal::Ideal(VarContext ctx, std::vector<Polynomial> gens)
    : ctx_(std::move(ctx)), gens_(std::move(gens)), cache_(std::make_shared<Cache>()) {
    for (const auto& g : gens_)
        if (!g.context().same(ctx_))
            fail(ErrorKind::ContextMismatch, "generator from a different variable context");
}

const std::vector<Polynomial>& Ideal::groebner(const TermOrder& ord,
                                               const GroebnerOptions& opts) const {
    const std::string key = order_key(ord);
    std::lock_guard<std::mutex> lock(cache_->mu);
    auto it = cache_->per_order.find(key);
    if (it != cache_->per_order.end())
        return it->second;
    GroebnerResult res = buchberger(gens_, ord, opts);
    if (!res.complete)
        fail(ErrorKind::BudgetExceeded,
             "Groebner computation exceeded its budget after " +
                 std::to_string(res.pairs_processed) + " S-pairs");
    return cache_->per_order.emplace(key, std::move(res.basis)).first->second;
}

bool Ideal::contains(const Polynomial& f, const TermOrder& ord,
                     const GroebnerOptions& opts) const {
    if (!f.context().same(ctx_))
        fail(ErrorKind::ContextMismatch, "membership test across variable contexts");
    const auto& gb = groebner(ord, opts);
    if (gb.empty())
        return f.is_zero();
    return normal_form(f, gb, ord).is_zero();
}

bool ideal_subset(const Ideal& lhs, const Ideal& rhs, const TermOrder& ord,
                  const GroebnerOptions& opts) {
    if (!lhs.context().same(rhs.context()))
        fail(ErrorKind::ContextMismatch, "ideal comparison across variable contexts");
    return std::all_of(lhs.generators().begin(), lhs.generators().end(),
                       [&](const Polynomial& g) { return rhs.contains(g, ord, opts); });
}

bool ideal_equal(const Ideal& lhs, const Ideal& rhs, const TermOrder& ord,
                 const GroebnerOptions& opts) {
    if (!lhs.context().same(rhs.context()))
        fail(ErrorKind::ContextMismatch, "ideal comparison across variable contexts");
    return lhs.groebner(ord, opts) == rhs.groebner(ord, opts);
}

std::vector<Polynomial> homogenize_generators(const std::vector<Polynomial>& gens,
                                              const std::string& fresh) {
    if (gens.empty())
        return {};
    const VarContext ext = gens.front().context().extended(fresh);
    const std::uint32_t tvar = static_cast<std::uint32_t>(ext.size() - 1);
    std::vector<Polynomial> out;
    out.reserve(gens.size());
    for (const auto& g : gens) {
        if (!g.context().same(gens.front().context()))
            fail(ErrorKind::ContextMismatch, "generators from different variable contexts");
        const std::uint32_t d = g.is_zero() ? 0 : static_cast<std::uint32_t>(g.degree());
        std::vector<Term> terms;
        terms.reserve(g.term_count());
        for (const auto& t : g.terms())
            terms.push_back({t.mono * Monomial::var(tvar, d - t.mono.degree()), t.coeff});
        out.push_back(Polynomial::from_terms(ext, std::move(terms)));
    }
    return out;
}

std::vector<Polynomial> dehomogenize_generators(const std::vector<Polynomial>& gens) {
    if (gens.empty())
        return {};
    const VarContext& ext = gens.front().context();
    const VarContext base = ext.without_last();
    const std::uint32_t tvar = static_cast<std::uint32_t>(ext.size() - 1);
    std::vector<Polynomial> out;
    out.reserve(gens.size());
    for (const auto& g : gens) {
        if (!g.context().same(ext))
            fail(ErrorKind::ContextMismatch, "generators from different variable contexts");
        std::vector<Term> terms;
        terms.reserve(g.term_count());
        for (const auto& t : g.terms()) {
            Monomial m = t.mono;
            std::erase_if(m.factors, [&](const auto& f) { return f.first == tvar; });
            terms.push_back({std::move(m), t.coeff});
        }
        out.push_back(Polynomial::from_terms(base, std::move(terms)));
    }
    return out;
}

std::vector<Polynomial> homogenize_ideal_closure(const std::vector<Polynomial>& gens,
                                                 const std::string& fresh,
                                                 const TermOrder& ord,
                                                 const GroebnerOptions& opts) {
    if (!ord.is_graded())
        fail(ErrorKind::InvalidArgument,
             "ideal-level homogenization requires a graded term order");
    GroebnerResult res = buchberger(gens, ord, opts);
    if (!res.complete)
        fail(ErrorKind::BudgetExceeded, "Groebner computation exceeded its budget");
    return homogenize_generators(res.basis, fresh);
}

namespace {

// Dense integer polynomials in one variable s; {} is the zero polynomial.
using ZPoly = std::vector<mpz_class>;

void zp_trim(ZPoly& a) {
    while (!a.empty() && a.back() == 0)
        a.pop_back();
}

// a -= s^shift * b
void zp_sub_shifted(ZPoly& a, const ZPoly& b, std::uint32_t shift) {
    if (a.size() < b.size() + shift)
        a.resize(b.size() + shift, mpz_class(0));
    for (std::size_t k = 0; k < b.size(); ++k)
        a[k + shift] -= b[k];
    zp_trim(a);
}

// a *= (1 - s^d)
ZPoly zp_mul_one_minus_power(const ZPoly& a, std::uint32_t d) {
    ZPoly out = a;
    zp_sub_shifted(out, a, d);
    return out;
}

std::vector<Monomial> minimalize(std::vector<Monomial> gens) {
    std::sort(gens.begin(), gens.end(), [](const Monomial& a, const Monomial& b) {
        return canonical_order().cmp(a, b) < 0;
    });
    gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
    std::vector<Monomial> out;
    for (const auto& m : gens) {
        const bool covered = std::any_of(out.begin(), out.end(),
                                         [&](const Monomial& k) { return k.divides(m); });
        if (!covered)
            out.push_back(m);
    }
    return out;
}

ZPoly hilbert_rec(std::vector<Monomial> gens) {
    gens = minimalize(gens);
    if (gens.empty())
        return {mpz_class(1)};
    if (gens.front().is_one())
        return {};

    bool pairwise_coprime = true;
    for (std::size_t i = 0; i < gens.size() && pairwise_coprime; ++i)
        for (std::size_t j = i + 1; j < gens.size() && pairwise_coprime; ++j)
            if (!gens[i].coprime(gens[j]))
                pairwise_coprime = false;
    if (pairwise_coprime) {
        ZPoly out{mpz_class(1)};
        for (const auto& m : gens)
            out = zp_mul_one_minus_power(out, m.degree());
        return out;
    }

    // Split on the largest generator: N(<J, m>) = N(J) - s^deg(m) N(J : m).
    Monomial m = std::move(gens.back());
    gens.pop_back();
    std::vector<Monomial> colon;
    colon.reserve(gens.size());
    for (const auto& g : gens)
        colon.push_back(g.divide_by(gcd(g, m)));
    ZPoly out = hilbert_rec(gens);
    zp_sub_shifted(out, hilbert_rec(std::move(colon)), m.degree());
    return out;
}

} // namespace

std::vector<mpz_class> hilbert_numerator(const std::vector<Monomial>& gens,
                                         std::size_t nvars) {
    for (const auto& m : gens)
        for (const auto& [v, e] : m.factors)
            if (v >= nvars)
                fail(ErrorKind::InvalidArgument, "monomial variable outside the ring");
    return hilbert_rec(gens);
}

DimDegree proj_dim_degree(const Ideal& ideal, const GroebnerOptions& opts) {
    for (const auto& g : ideal.generators())
        if (!g.is_homogeneous())
            fail(ErrorKind::NotHomogeneous,
                 "projective dimension needs homogeneous generators; got " + g.str());
    const TermOrder ord = canonical_order();
    const auto& gb = ideal.groebner(ord, opts);
    std::vector<Monomial> leads;
    leads.reserve(gb.size());
    for (const auto& g : gb)
        leads.push_back(lead_monomial(g, ord));

    ZPoly num = hilbert_numerator(leads, ideal.context().size());
    DimDegree out;
    if (num.empty()) {
        out.dimension = -1;
        out.degree = 0;
        return out;
    }
    // Factor out (1-s)^k; the quotient by (1-s) is the prefix-sum vector.
    std::size_t k = 0;
    auto value_at_one = [](const ZPoly& p) {
        mpz_class v(0);
        for (const auto& c : p)
            v += c;
        return v;
    };
    while (value_at_one(num) == 0) {
        ZPoly q(num.size() > 0 ? num.size() - 1 : 0, mpz_class(0));
        mpz_class acc(0);
        for (std::size_t i = 0; i + 1 < num.size(); ++i) {
            acc += num[i];
            q[i] = acc;
        }
        zp_trim(q);
        num = std::move(q);
        ++k;
        if (num.empty())
            break;
    }
    const long long affine_dim =
        static_cast<long long>(ideal.context().size()) - static_cast<long long>(k);
    out.dimension = static_cast<int>(affine_dim - 1);
    mpz_class deg = value_at_one(num);
    if (!deg.fits_slong_p())
        fail(ErrorKind::InvalidArgument, "degree does not fit a machine integer");
    out.degree = deg.get_si();
    return out;
}

namespace {

std::string join_names(const std::vector<std::string>& names) {
    std::string out;
    for (std::size_t k = 0; k < names.size(); ++k) {
        if (k)
            out += ",";
        out += names[k];
    }
    return out;
}

std::vector<std::string> split_names(const std::string& text) {
    std::vector<std::string> out;
    std::string item;
    std::istringstream is(text);
    while (std::getline(is, item, ',')) {
        // trim
        const auto b = item.find_first_not_of(" \t");
        const auto e = item.find_last_not_of(" \t");
        if (b == std::string::npos)
            fail(ErrorKind::ParseError, "empty variable name in list");
        out.push_back(item.substr(b, e - b + 1));
    }
    return out;
}

} // namespace

IdealFile read_ideal_file(const std::string& path,
                          const std::optional<VarContext>& override_ctx) {
    std::ifstream in(path);
    if (!in)
        fail(ErrorKind::FixtureError, "cannot open ideal file: " + path);
    std::optional<VarContext> ctx = override_ctx;
    std::vector<std::string> body;
    std::string line;
    const std::string vars_tag = "# vars:";
    while (std::getline(in, line)) {
        if (!line.empty() && line.back() == '\r')
            line.pop_back();
        const auto b = line.find_first_not_of(" \t");
        if (b == std::string::npos)
            continue;
        if (line[b] == '#') {
            if (!ctx && line.compare(b, vars_tag.size(), vars_tag) == 0)
                ctx = VarContext(split_names(line.substr(b + vars_tag.size())));
            continue;
        }
        body.push_back(line.substr(b));
    }
    if (!ctx)
        fail(ErrorKind::ParseError,
             "ideal file lacks a '# vars:' header and no variable list was given: " + path);
    IdealFile out{*ctx, {}};
    out.gens.reserve(body.size());
    for (const auto& text : body)
        out.gens.push_back(parse_polynomial(*ctx, text));
    return out;
}

void write_ideal_file(const std::string& path, const VarContext& ctx,
                      const std::vector<Polynomial>& gens,
                      const std::vector<std::string>& comments) {
    std::ofstream out(path);
    if (!out)
        fail(ErrorKind::FixtureError, "cannot write ideal file: " + path);
    out << "# vars: " << join_names(ctx.names()) << "\n";
    for (const auto& c : comments)
        out << "# " << c << "\n";
    for (const auto& g : gens) {
        if (!g.context().same(ctx))
            fail(ErrorKind::ContextMismatch, "generator from a different variable context");
        out << g.str() << "\n";
    }
    if (!out)
        fail(ErrorKind::FixtureError, "short write to ideal file: " + path);
}

} // namespace orbitlef::poly
