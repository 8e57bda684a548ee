#include <doctest.h>

#include <algorithm>
#include <map>
#include <set>
#include <vector>

#include "orbitlef/error.h"
#include "orbitlef/fibration.h"
#include "orbitlef/lie.h"

using namespace orbitlef;
using lie::CartanElement;
using lie::RootSystemA;

TEST_CASE("trace form on diagonal and general matrices") {
    const CartanElement h({1, -1, 0});
    const CartanElement g({2, -1, -1});
    CHECK(fib::trace_form(h, g) == 3); // 1*2 + (-1)(-1) + 0
    CHECK(fib::trace_form(h, h) == 2);
    CHECK(fib::trace_form(h, g, Rat(6)) == 18); // Killing normalization 2n

    const RootSystemA rs(3);
    const QMatrix e12 = rs.root_vector(lie::Root{1, 2});
    const QMatrix e21 = rs.root_vector(lie::Root{2, 1});
    CHECK(fib::trace_form(e12, e21) == 1);
    CHECK(fib::trace_form(e12, e12) == 0);
    CHECK_THROWS_AS(fib::trace_form(h, CartanElement({1, -1})), Error);
}

TEST_CASE("the potential is the pairing written in ambient coordinates") {
    CHECK(fib::potential_poly(CartanElement({1, -1, 0}), 3).str() == "x1 - x2");
    CHECK(fib::potential_poly(CartanElement({1, -1}), 2).str() == "2*x");
    CHECK(fib::potential_poly(CartanElement({2, -1, -1}), 3).str() == "3*x1");

    // Pinning the linear form against the pairing on diagonal points.
    const CartanElement h({3, 1, -4});
    const auto f = fib::potential_poly(h, 3);
    for (const auto& w : lie::weyl_orbit(CartanElement({1, -1, 0}))) {
        std::vector<Rat> pt(8, Rat(0));
        pt[0] = w.entry(1);
        pt[1] = w.entry(2);
        CHECK(f.eval(pt) == fib::trace_form(h, w));
    }
}

TEST_CASE("critical values enumerate the Weyl orbit pairings") {
    const CartanElement h({1, -1, 0});
    const CartanElement h0({2, -1, -1});
    CHECK(fib::critical_values(h, h0) == std::vector<Rat>{Rat(3), Rat(0), Rat(-3)});
    CHECK(fib::critical_values(h, h) ==
          std::vector<Rat>{Rat(2), Rat(1), Rat(1), Rat(-1), Rat(-1), Rat(-2)});

    // Independent oracle: pair against every distinct entry permutation,
    // enumerated by brute force over the symmetric group.
    const auto got = fib::critical_values(h, h0);
    std::set<CartanElement> distinct_points;
    for (const auto& w : lie::weyl_group(3))
        distinct_points.insert(w.act(h0));
    std::multiset<Rat> orbit_values;
    for (const auto& w : distinct_points)
        orbit_values.insert(fib::trace_form(h, w));
    CHECK(std::multiset<Rat>(got.begin(), got.end()) == orbit_values);

    CHECK_THROWS_AS(fib::critical_values(CartanElement({1, 1, -2}), h0), Error);
}

TEST_CASE("the second variation matches its closed form") {
    // For diagonal x the tangent-root pairing collapses to
    // B(a, b) = a(H) a(x) when b = -a and 0 otherwise.
    const std::vector<std::pair<CartanElement, CartanElement>> cases{
        {CartanElement({1, -1}), CartanElement({1, -1})},
        {CartanElement({1, -1, 0}), CartanElement({2, -1, -1})},
        {CartanElement({1, -1, 0}), CartanElement({-1, 2, -1})},
        {CartanElement({3, 1, -1, -3}), CartanElement({1, 1, -1, -1})},
        {CartanElement({Rat(1, 2), Rat(1, 3), Rat(-5, 6)}), CartanElement({1, -1, 0})},
    };
    for (const auto& [h, x] : cases) {
        const RootSystemA rs(h.n());
        const auto hf = fib::hessian_form(h, x, rs);
        // Basis = the roots not vanishing on x, in enumeration order.
        std::size_t expected_basis = 0;
        for (const auto& a : rs.roots())
            if (x.root_value(a) != 0)
                ++expected_basis;
        REQUIRE(hf.basis.size() == expected_basis);
        for (std::size_t r = 0; r < hf.basis.size(); ++r) {
            for (std::size_t s = 0; s < hf.basis.size(); ++s) {
                const auto& a = hf.basis[r];
                const auto& b = hf.basis[s];
                const Rat expect = (b == a.negated()) ? h.root_value(a) * x.root_value(a)
                                                      : Rat(0);
                CHECK(hf.form.at(r, s) == expect);
            }
        }
    }
}

TEST_CASE("the 2x2 case in matrix form") {
    const CartanElement h({1, -1});
    const auto hf = fib::hessian_form(h, h, RootSystemA(2));
    REQUIRE(hf.basis.size() == 2);
    CHECK(hf.basis[0].str() == "e1-e2");
    CHECK(hf.basis[1].str() == "e2-e1");
    QMatrix want(2, 2);
    want.at(0, 1) = 4;
    want.at(1, 0) = 4;
    CHECK(hf.form == want);
    CHECK(hf.form.rank() == 2);
    CHECK(fib::hessian_nondegenerate(h, h, RootSystemA(2)));
}

TEST_CASE("full report for a minimal orbit") {
    const auto rep = fib::lefschetz_report(CartanElement({1, -1, 0}), CartanElement({2, -1, -1}));
    CHECK(rep.n == 3);
    CHECK(rep.k == 3);
    CHECK(rep.distinct_values == 3);
    CHECK(rep.values_distinct);
    CHECK(rep.orbit_dim == 4);
    CHECK(rep.all_nondegenerate);
    REQUIRE(rep.points.size() == 3);
    CHECK(rep.points[0].point == CartanElement({2, -1, -1}));
    CHECK(rep.points[0].value == 3);
    CHECK(rep.points[1].point == CartanElement({-1, -1, 2}));
    CHECK(rep.points[1].value == 0);
    CHECK(rep.points[2].point == CartanElement({-1, 2, -1}));
    CHECK(rep.points[2].value == -3);
    for (const auto& d : rep.points) {
        CHECK(d.hessian_rank == 4);
        CHECK(d.fiber_mates == 0);
    }
}

TEST_CASE("full report for a regular orbit with value collisions") {
    const CartanElement h({1, -1, 0});
    const auto rep = fib::lefschetz_report(h, h);
    CHECK(rep.k == 6);
    CHECK(rep.distinct_values == 4);
    CHECK(!rep.values_distinct);
    CHECK(rep.orbit_dim == 6);
    CHECK(rep.all_nondegenerate);
    std::map<Rat, int> counts;
    for (const auto& d : rep.points) {
        CHECK(d.hessian_rank == 6);
        ++counts[d.value];
    }
    CHECK(counts == std::map<Rat, int>{{Rat(-2), 1}, {Rat(-1), 2}, {Rat(1), 2}, {Rat(2), 1}});
    for (const auto& d : rep.points)
        CHECK(d.fiber_mates == counts[d.value] - 1);
    // Points are sorted by descending value, ties by ascending point.
    for (std::size_t i = 0; i + 1 < rep.points.size(); ++i) {
        CHECK((rep.points[i].value > rep.points[i + 1].value ||
               (rep.points[i].value == rep.points[i + 1].value &&
                rep.points[i].point < rep.points[i + 1].point)));
    }
    CHECK_THROWS_AS(fib::lefschetz_report(CartanElement({1, 1, -2}), h), Error);
}

TEST_CASE("a stabilized base point with separated values") {
    // H0 has a stabilizer (three critical points, not six), yet the values
    // 3, 0, -3 stay distinct, so the one-point-per-fiber condition holds.
    const auto rep = fib::lefschetz_report(CartanElement({1, 0, -1}), CartanElement({1, 1, -2}));
    CHECK(rep.k == 3);
    CHECK(rep.distinct_values == 3);
    CHECK(rep.values_distinct);
    CHECK(rep.orbit_dim == 4);
    CHECK(rep.all_nondegenerate);
    CHECK(rep.points.front().value == 3);
    CHECK(rep.points.back().value == -3);
}

TEST_CASE("critical values are equivariant, scale linearly, and count the orbit") {
    const CartanElement h({1, -1, 0});
    for (const auto& h0 : {CartanElement({2, -1, -1}), CartanElement({1, -1, 0}),
                           CartanElement({3, 1, -1, -3})}) {
        const auto base = fib::critical_values(h0.n() == 3 ? h : CartanElement({2, 1, -1, -2}),
                                               h0);
        const auto orbit = lie::weyl_orbit(h0);
        CHECK(base.size() == orbit.size());
        // Replacing the base point by any Weyl translate leaves the multiset
        // of critical values unchanged.
        const CartanElement hh = h0.n() == 3 ? h : CartanElement({2, 1, -1, -2});
        for (const auto& w : orbit)
            CHECK(fib::critical_values(hh, w) == base);
    }

    // Scaling the height by a positive rational scales every value and
    // preserves the Hessian ranks.
    const CartanElement h0({2, -1, -1});
    const auto rep = fib::lefschetz_report(h, h0);
    const CartanElement h32({Rat(3, 2), Rat(-3, 2), Rat(0)});
    const auto rep32 = fib::lefschetz_report(h32, h0);
    REQUIRE(rep.points.size() == rep32.points.size());
    for (std::size_t i = 0; i < rep.points.size(); ++i) {
        CHECK(rep32.points[i].point == rep.points[i].point);
        CHECK(rep32.points[i].value == rep.points[i].value * Rat(3, 2));
        CHECK(rep32.points[i].hessian_rank == rep.points[i].hessian_rank);
    }
    CHECK(rep32.all_nondegenerate == rep.all_nondegenerate);
}

TEST_CASE("every critical point of a rank-four pencil is nondegenerate") {
    const auto rep = fib::lefschetz_report(CartanElement({2, 1, -1, -2}),
                                           CartanElement({3, 1, -1, -3}));
    CHECK(rep.k == 24);
    CHECK(rep.orbit_dim == 12);
    CHECK(rep.all_nondegenerate);
    for (const auto& d : rep.points)
        CHECK(d.hessian_rank == 12);
}
