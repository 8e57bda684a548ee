#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

#include "orbitlef/poly.h"

namespace orbitlef::poly {

// Remainder of multivariate division of f by G under ord: no term of the
// result is divisible by any leading monomial of G, and f - result lies in
// the ideal generated by G. Deterministic (first divisor in list order wins).
Polynomial normal_form(const Polynomial& f, const std::vector<Polynomial>& G,
                       const TermOrder& ord);

struct GroebnerProgress {
    std::size_t pairs_pending = 0;
    std::size_t pairs_processed = 0;
    std::size_t basis_size = 0;
};

struct GroebnerOptions {
    // Wall-clock budget in seconds; <= 0 means unlimited.
    double budget_seconds = 0.0;
    // Invoked periodically with queue statistics.
    std::function<void(const GroebnerProgress&)> progress;
};

struct GroebnerResult {
    std::vector<Polynomial> basis;
    // False when the budget expired first; basis is then a partial,
    // non-reduced intermediate state.
    bool complete = true;
    std::size_t pairs_processed = 0;
    std::size_t reductions_to_zero = 0;
};

// Buchberger's algorithm with the normal selection strategy (smallest S-pair
// lcm first) and the product/chain criteria. On completion the basis is the
// unique reduced monic Groebner basis, sorted ascending by leading monomial.
GroebnerResult buchberger(const std::vector<Polynomial>& gens, const TermOrder& ord,
                          const GroebnerOptions& opts = {});

// Generator list plus a per-order cache of reduced Groebner bases.
class Ideal {
public:
    Ideal(VarContext ctx, std::vector<Polynomial> gens);

    const VarContext& context() const { return ctx_; }
    const std::vector<Polynomial>& generators() const { return gens_; }

    // Reduced Groebner basis under ord, cached per order. Throws
    // BudgetExceeded if the computation does not finish within the budget.
    const std::vector<Polynomial>& groebner(const TermOrder& ord = {},
                                            const GroebnerOptions& opts = {}) const;

    // True iff f reduces to zero modulo the cached/computed basis.
    bool contains(const Polynomial& f, const TermOrder& ord = {},
                  const GroebnerOptions& opts = {}) const;

private:
    VarContext ctx_;
    std::vector<Polynomial> gens_;

    struct Cache {
        std::mutex mu;
        std::map<std::string, std::vector<Polynomial>> per_order;
    };
    std::shared_ptr<Cache> cache_;
};

// True iff every generator of lhs has zero normal form modulo GB(rhs).
bool ideal_subset(const Ideal& lhs, const Ideal& rhs, const TermOrder& ord = {},
                  const GroebnerOptions& opts = {});

// True iff the reduced Groebner bases coincide (equivalent to two-way subset).
bool ideal_equal(const Ideal& lhs, const Ideal& rhs, const TermOrder& ord = {},
                 const GroebnerOptions& opts = {});

// Homogenizes each generator individually to its own total degree with a
// fresh last variable (default "t"). This is generator-dependent on purpose:
// different generating sets of one ideal may homogenize to different ideals.
// Throws VariableClash if the variable already exists.
std::vector<Polynomial> homogenize_generators(const std::vector<Polynomial>& gens,
                                              const std::string& fresh = "t");

// Substitutes 1 for the last variable and drops it from the context.
std::vector<Polynomial> dehomogenize_generators(const std::vector<Polynomial>& gens);

// Generator-independent homogenization of the ideal itself: reduced Groebner
// basis under a graded order, then generator-wise homogenization of the basis
// (a Groebner basis under a graded order homogenizes to a basis of the
// homogenized ideal). Requires ord graded.
std::vector<Polynomial> homogenize_ideal_closure(const std::vector<Polynomial>& gens,
                                                 const std::string& fresh = "t",
                                                 const TermOrder& ord = {},
                                                 const GroebnerOptions& opts = {});

// Numerator N(s) of the Hilbert series N(s)/(1-s)^nvars of R/M for the
// monomial ideal M; dense coefficient vector, index = power of s.
std::vector<mpz_class> hilbert_numerator(const std::vector<Monomial>& gens,
                                         std::size_t nvars);

struct DimDegree {
    // Projective dimension of Proj(R/I); -1 for the empty scheme.
    int dimension = -1;
    // Degree of the projective scheme (numerator value at s=1); 0 when empty.
    long long degree = 0;
};

// Dimension and degree via the Hilbert series of the leading-term ideal under
// degrevlex. All generators must be homogeneous (throws NotHomogeneous).
DimDegree proj_dim_degree(const Ideal& ideal, const GroebnerOptions& opts = {});

// Ideal file format: optional leading `# vars: a,b,c` header naming the
// context, further `#` lines ignored, one generator per line.
struct IdealFile {
    VarContext ctx;
    std::vector<Polynomial> gens;
};

IdealFile read_ideal_file(const std::string& path,
                          const std::optional<VarContext>& override_ctx = std::nullopt);
void write_ideal_file(const std::string& path, const VarContext& ctx,
                      const std::vector<Polynomial>& gens,
                      const std::vector<std::string>& comments = {});

} // namespace orbitlef::poly
