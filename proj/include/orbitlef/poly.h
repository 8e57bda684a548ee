#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "orbitlef/rational.h"

namespace orbitlef::poly {

// Ordered list of variable names. The listing order is the priority order used
// by term orders (most significant first). Contexts are immutable and shared.
class VarContext {
public:
    explicit VarContext(std::vector<std::string> names);

    // Coordinates of a generic traceless n x n matrix: diagonal x's, strictly
    // upper y's, strictly lower z's (row-major). n = 2 uses the classic x,y,z.
    static VarContext ambient(int n);

    std::size_t size() const { return names_->size(); }
    const std::string& name(std::uint32_t v) const { return (*names_)[v]; }
    const std::vector<std::string>& names() const { return *names_; }
    std::optional<std::uint32_t> index_of(std::string_view name) const;

    // New context with one fresh variable appended (existing indices keep
    // their meaning). Throws VariableClash if the name is already present.
    VarContext extended(const std::string& fresh) const;
    // New context without the last variable.
    VarContext without_last() const;

    bool same(const VarContext& o) const {
        return names_ == o.names_ || *names_ == *o.names_;
    }

private:
    std::shared_ptr<const std::vector<std::string>> names_;
};

// Sparse monomial: (variable, exponent) factors sorted by variable index,
// exponents strictly positive.
struct Monomial {
    std::vector<std::pair<std::uint32_t, std::uint32_t>> factors;

    static Monomial one() { return {}; }
    static Monomial var(std::uint32_t v, std::uint32_t e = 1);

    bool is_one() const { return factors.empty(); }
    std::uint32_t degree() const;
    std::uint32_t exponent(std::uint32_t v) const;

    Monomial operator*(const Monomial& o) const;
    bool divides(const Monomial& o) const;     // this | o
    Monomial divide_by(const Monomial& o) const; // this / o; o must divide this
    bool coprime(const Monomial& o) const;

    bool operator==(const Monomial&) const = default;

    friend Monomial lcm(const Monomial& a, const Monomial& b);
    friend Monomial gcd(const Monomial& a, const Monomial& b);
};

enum class OrderKind { Degrevlex, Lex, Deglex };

// Monomial well-order: kind plus optional variable priority permutation
// (most significant first). Empty priority means the context listing order.
struct TermOrder {
    OrderKind kind = OrderKind::Degrevlex;
    std::vector<std::uint32_t> priority;

    bool is_graded() const { return kind != OrderKind::Lex; }
    // <0: a before b is false... returns negative if a < b, 0 if equal,
    // positive if a > b under the order.
    int cmp(const Monomial& a, const Monomial& b) const;

    bool operator==(const TermOrder&) const = default;
    std::string str() const;
    static TermOrder parse(std::string_view name); // "degrevlex" | "lex" | "deglex"
};

struct Term {
    Monomial mono;
    Rat coeff;
};

// Sparse multivariate polynomial over Q. Terms are kept strictly descending
// under the canonical order (degrevlex in context listing priority), which is
// also the display order.
class Polynomial {
public:
    explicit Polynomial(VarContext ctx) : ctx_(std::move(ctx)) {}

    static Polynomial constant(const VarContext& ctx, const Rat& c);
    static Polynomial variable(const VarContext& ctx, std::uint32_t v);

    const VarContext& context() const { return ctx_; }
    const std::vector<Term>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t term_count() const { return terms_.size(); }

    // Total degree; -1 for the zero polynomial.
    int degree() const;
    bool is_homogeneous() const;
    bool is_constant() const;

    Polynomial operator-() const;
    Polynomial operator+(const Polynomial& o) const;
    Polynomial operator-(const Polynomial& o) const;
    Polynomial operator*(const Polynomial& o) const;
    Polynomial operator*(const Rat& c) const;
    Polynomial& operator+=(const Polynomial& o) { return *this = *this + o; }
    Polynomial& operator-=(const Polynomial& o) { return *this = *this - o; }

    // this * c * m, merged into canonical form.
    Polynomial times_term(const Rat& c, const Monomial& m) const;

    bool operator==(const Polynomial& o) const {
        return ctx_.same(o.ctx_) && same_terms(o);
    }

    Polynomial derivative(std::uint32_t v) const;
    Rat eval(const std::vector<Rat>& point) const;

    // Builds a polynomial from arbitrary (possibly duplicated) terms.
    static Polynomial from_terms(const VarContext& ctx, std::vector<Term> terms);

    std::string str() const;

private:
    bool same_terms(const Polynomial& o) const;

    VarContext ctx_;
    std::vector<Term> terms_;
};

// Canonical display/normalization order for a polynomial's context.
inline TermOrder canonical_order() { return TermOrder{}; }

// Text format: terms like `3*x1^2*y3 - 1/2*t`; `*` and `^` mandatory,
// rationals as p/q. parse_polynomial accepts everything str() emits.
Polynomial parse_polynomial(const VarContext& ctx, std::string_view text);

// Terms of f sorted strictly descending under ord (used by division).
std::vector<Term> sorted_terms(const Polynomial& f, const TermOrder& ord);

} // namespace orbitlef::poly
