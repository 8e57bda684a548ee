#include <doctest.h>

#include <algorithm>
#include <set>
#include <vector>

#include "orbitlef/error.h"
#include "orbitlef/lie.h"

using namespace orbitlef;
using lie::CartanElement;
using lie::RootSystemA;
using lie::ThetaSet;
using lie::WeylElement;

namespace {

// Independent inversion count, the combinatorial definition of Coxeter length.
int inversions(const std::vector<int>& w) {
    int c = 0;
    for (std::size_t i = 0; i < w.size(); ++i)
        for (std::size_t j = i + 1; j < w.size(); ++j)
            if (w[i] > w[j])
                ++c;
    return c;
}

// Coefficient vectors of integer polynomials in q.
using QPoly = std::vector<long long>;

QPoly qpoly_mul(const QPoly& a, const QPoly& b) {
    QPoly r(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j)
            r[i + j] += a[i] * b[j];
    return r;
}

// q-factorial [n]_q! = prod_{i=1..n} (1 + q + ... + q^{i-1}), the Poincare
// polynomial of the full flag manifold of sl(n) in q = t^2.
QPoly q_factorial(int n) {
    QPoly r{1};
    for (int i = 1; i <= n; ++i)
        r = qpoly_mul(r, QPoly(static_cast<std::size_t>(i), 1));
    return r;
}

// Gaussian binomial [n choose k]_q by the Pascal recurrence
// [n,k] = [n-1,k-1] + q^k [n-1,k].
QPoly gauss_binomial(int n, int k) {
    if (k < 0 || k > n)
        return {0};
    if (k == 0 || k == n)
        return {1};
    QPoly left = gauss_binomial(n - 1, k - 1);
    QPoly right = gauss_binomial(n - 1, k);
    QPoly r(std::max(left.size(), right.size() + static_cast<std::size_t>(k)), 0);
    for (std::size_t i = 0; i < left.size(); ++i)
        r[i] += left[i];
    for (std::size_t i = 0; i < right.size(); ++i)
        r[i + static_cast<std::size_t>(k)] += right[i];
    return r;
}

// Betti vector (index = real degree) from a q-polynomial (index = half degree).
lie::BettiVector betti_from_qpoly(const QPoly& p) {
    lie::BettiVector b(2 * p.size() - 1, 0);
    for (std::size_t i = 0; i < p.size(); ++i)
        b[2 * i] = p[i];
    return b;
}

} // namespace

TEST_CASE("root systems enumerate type-A roots") {
    RootSystemA rs(3);
    CHECK(rs.n() == 3);
    CHECK(rs.rank() == 2);
    CHECK(rs.roots().size() == 6);
    CHECK(rs.positive_roots().size() == 3);
    CHECK(rs.simple_roots().size() == 2);
    CHECK(rs.roots().front().str() == "e1-e2");
    CHECK(rs.simple_roots()[1].str() == "e2-e3");
    CHECK(rs.simple_roots()[1].negated().str() == "e3-e2");
    CHECK_THROWS_AS(RootSystemA(1), Error);

    // Root vectors are the matrix units e_ij.
    const QMatrix e13 = rs.root_vector(lie::Root{1, 3});
    CHECK(e13.at(0, 2) == 1);
    CHECK(e13.trace() == 0);
}

TEST_CASE("Cartan elements validate and evaluate roots") {
    CHECK_THROWS_AS(CartanElement({1, 1}), Error);
    const CartanElement h({2, -1, -1});
    CHECK(h.n() == 3);
    CHECK(h.str() == "diag(2,-1,-1)");
    CHECK(h.is_dominant());
    CHECK(!CartanElement({-1, 2, -1}).is_dominant());
    CHECK(h.root_value(lie::Root{1, 2}) == 3);
    CHECK(h.root_value(lie::Root{2, 3}) == 0);
    CHECK(h.matrix().trace() == 0);

    const CartanElement third({Rat(1, 3), Rat(1, 3), Rat(-2, 3)});
    CHECK(third.is_dominant());
    CHECK(third.root_value(lie::Root{1, 3}) == 1);
}

TEST_CASE("Weyl elements act by permuting diagonal entries") {
    const WeylElement w({2, 3, 1}); // 1->2, 2->3, 3->1
    const CartanElement h({1, -1, 0});
    const CartanElement moved = w.act(h);
    // (w.H)_{w(i)} = H_i: entry 2 gets 1, entry 3 gets -1, entry 1 gets 0.
    CHECK(moved == CartanElement({0, 1, -1}));
    CHECK_THROWS_AS(WeylElement({1, 1, 2}), Error);
}

TEST_CASE("length equals the inversion count of the one-line form") {
    for (const auto& w : lie::weyl_group(4))
        CHECK(w.length() == inversions(w.one_line()));
    CHECK(lie::weyl_group(4).size() == 24);
    const auto w0 = lie::longest_element(RootSystemA(4));
    CHECK(w0.one_line() == std::vector<int>{4, 3, 2, 1});
    CHECK(w0.length() == 6);
}

TEST_CASE("Weyl orbits are the distinct entry permutations, lex ascending") {
    const auto orbit = lie::weyl_orbit(CartanElement({2, -1, -1}));
    REQUIRE(orbit.size() == 3);
    CHECK(orbit[0] == CartanElement({-1, -1, 2}));
    CHECK(orbit[1] == CartanElement({-1, 2, -1}));
    CHECK(orbit[2] == CartanElement({2, -1, -1}));
    CHECK(std::is_sorted(orbit.begin(), orbit.end()));

    CHECK(lie::weyl_orbit(CartanElement({1, -1, 0})).size() == 6);
    CHECK(lie::weyl_orbit(CartanElement({1, 1, -1, -1})).size() == 6);
    CHECK(lie::weyl_orbit(CartanElement({0, 0, 0})).size() == 1);
}

TEST_CASE("orbit dimension counts the roots not vanishing on the base point") {
    const std::vector<CartanElement> samples{
        CartanElement({1, -1}), CartanElement({2, -1, -1}), CartanElement({1, -1, 0}),
        CartanElement({1, 1, -1, -1}), CartanElement({3, 1, -1, -3})};
    for (const auto& h : samples) {
        const RootSystemA rs(h.n());
        int expect = 0;
        for (int i = 1; i <= h.n(); ++i)
            for (int j = 1; j <= h.n(); ++j)
                if (i != j && h.entry(i) != h.entry(j))
                    ++expect;
        CHECK(lie::orbit_dim_c(h, rs) == expect);
    }
    CHECK(lie::orbit_dim_c(CartanElement({2, -1, -1}), RootSystemA(3)) == 4);
    CHECK(lie::orbit_dim_c(CartanElement({1, -1, 0}), RootSystemA(3)) == 6);
}

TEST_CASE("regularity and dominant representatives") {
    const RootSystemA rs(3);
    CHECK(lie::is_regular(CartanElement({1, -1, 0}), rs));
    CHECK(!lie::is_regular(CartanElement({2, -1, -1}), rs));
    CHECK(lie::dominant_sort(CartanElement({-1, 2, -1})) == CartanElement({2, -1, -1}));
}

TEST_CASE("theta marks the vanishing simple roots of a dominant element") {
    const RootSystemA rs(3);
    CHECK(lie::theta_of(CartanElement({2, -1, -1}), rs) == ThetaSet{{2}});
    CHECK(lie::theta_of(CartanElement({1, 0, -1}), rs) == ThetaSet{});
    CHECK_THROWS_AS(lie::theta_of(CartanElement({-1, 2, -1}), rs), Error);
    CHECK(lie::theta_of(CartanElement({1, 1, -1, -1}), RootSystemA(4)) == ThetaSet{{1, 3}});
}

TEST_CASE("flag Poincare vectors match the q-factorial for full flags") {
    for (int n = 2; n <= 5; ++n) {
        const RootSystemA rs(n);
        CHECK(lie::flag_poincare(ThetaSet{}, rs) == betti_from_qpoly(q_factorial(n)));
    }
    CHECK(lie::flag_poincare(ThetaSet{}, RootSystemA(3)) ==
          lie::BettiVector{1, 0, 2, 0, 2, 0, 1});
}

TEST_CASE("flag Poincare vectors match Gaussian binomials for Grassmannians") {
    // Theta = all simple roots except a_k gives the Grassmannian Gr(k, n).
    for (int n = 3; n <= 5; ++n) {
        for (int k = 1; k < n; ++k) {
            ThetaSet theta;
            for (int i = 1; i < n; ++i)
                if (i != k)
                    theta.indices.insert(i);
            CHECK(lie::flag_poincare(theta, RootSystemA(n)) ==
                  betti_from_qpoly(gauss_binomial(n, k)));
        }
    }
    // Projective plane: Gr(1,3).
    CHECK(lie::flag_poincare(ThetaSet{{2}}, RootSystemA(3)) == lie::BettiVector{1, 0, 1, 0, 1});
}

TEST_CASE("flag dimension counts positive roots outside the theta blocks") {
    const RootSystemA rs3(3);
    CHECK(lie::flag_dim_c(ThetaSet{}, rs3) == 3);
    CHECK(lie::flag_dim_c(ThetaSet{{2}}, rs3) == 2);
    CHECK(lie::flag_dim_c(ThetaSet{{1, 2}}, rs3) == 0);
    CHECK(lie::flag_dim_c(ThetaSet{{1, 3}}, RootSystemA(4)) == 4); // Gr(2,4)

    // Dimension is also the top nonzero degree of the Poincare vector.
    for (int n = 2; n <= 5; ++n) {
        const RootSystemA rs(n);
        for (int mask = 0; mask < (1 << (n - 1)); ++mask) {
            ThetaSet theta;
            for (int k = 1; k < n; ++k)
                if (mask & (1 << (k - 1)))
                    theta.indices.insert(k);
            const auto betti = lie::flag_poincare(theta, rs);
            CHECK(static_cast<int>(betti.size()) == 2 * lie::flag_dim_c(theta, rs) + 1);
            CHECK(betti.back() == 1);

            // Any dominant element realizing this vanishing pattern has an
            // orbit of twice the flag dimension (cotangent bundle).
            std::vector<Rat> vals;
            Rat v(0);
            for (int i = 0; i < n; ++i) {
                if (i > 0 && !(mask & (1 << (i - 1))))
                    v -= 1;
                vals.push_back(v);
            }
            Rat mean(0);
            for (const auto& x : vals)
                mean += x;
            mean /= n;
            for (auto& x : vals)
                x -= mean;
            const CartanElement h0(vals);
            CHECK(lie::theta_of(h0, rs) == theta);
            CHECK(lie::orbit_dim_c(h0, rs) == 2 * lie::flag_dim_c(theta, rs));

            // Orbit size is the multinomial n!/prod(multiplicities!), which
            // also equals the sum of the Betti numbers of F_Theta.
            long multinomial = 1;
            for (int i = 2; i <= n; ++i)
                multinomial *= i;
            int run = 1;
            for (int i = 1; i <= n; ++i) {
                if (i < n && vals[static_cast<std::size_t>(i)] ==
                                 vals[static_cast<std::size_t>(i - 1)]) {
                    ++run;
                } else {
                    for (int j = 2; j <= run; ++j)
                        multinomial /= j;
                    run = 1;
                }
            }
            CHECK(static_cast<long>(lie::weyl_orbit(h0).size()) == multinomial);
            long betti_sum = 0;
            for (std::size_t i = 0; i < betti.size(); ++i) {
                betti_sum += betti[i];
                CHECK(betti[i] == betti[betti.size() - 1 - i]); // Poincare duality
            }
            CHECK(betti_sum == multinomial);
        }
    }
}

TEST_CASE("dual theta is the label reversal") {
    const RootSystemA rs4(4);
    CHECK(lie::dual_theta(ThetaSet{{1}}, rs4) == ThetaSet{{3}});
    CHECK(lie::dual_theta(ThetaSet{{2}}, rs4) == ThetaSet{{2}});
    CHECK(lie::dual_theta(ThetaSet{{1, 2}}, rs4) == ThetaSet{{2, 3}});
    CHECK(lie::dual_theta(ThetaSet{}, rs4) == ThetaSet{});
}
