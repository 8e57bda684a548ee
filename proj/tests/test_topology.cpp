#include <doctest.h>

#include <filesystem>
#include <fstream>

#include "orbitlef/error.h"
#include "orbitlef/topology.h"

using namespace orbitlef;
using lie::BettiVector;
using lie::CartanElement;
using topo::HodgeDiamond;

namespace {

std::string temp_file(const char* name) {
    return (std::filesystem::temp_directory_path() / name).string();
}

// Independent Betti oracle for a product of projective spaces: coefficients
// of (1 + t^2 + ... + t^2a)(1 + t^2 + ... + t^2b).
std::int64_t product_betti(int a, int b, int degree) {
    if (degree % 2)
        return 0;
    std::int64_t c = 0;
    for (int i = 0; i <= a; ++i)
        for (int j = 0; j <= b; ++j)
            if (2 * (i + j) == degree)
                ++c;
    return c;
}

} // namespace

TEST_CASE("puncturing a closed manifold moves the top class") {
    CHECK(topo::complement_betti({1, 0, 1, 0, 1}, 3) == BettiVector{1, 0, 1, 2, 0});
    CHECK(topo::complement_betti({1, 0, 1}, 2) == BettiVector{1, 1, 0});
    CHECK(topo::complement_betti({1, 0, 2, 0, 2, 0, 1}, 6) == BettiVector{1, 0, 2, 0, 2, 5, 0});
    // One puncture only kills the top class.
    CHECK(topo::complement_betti({1, 0, 1, 0, 1}, 1) == BettiVector{1, 0, 1, 0, 0});

    CHECK_THROWS_AS(topo::complement_betti({1, 0, 1}, 0), Error);
    CHECK_THROWS_AS(topo::complement_betti({1, 0, 1, 0}, 1), Error); // even length
    CHECK_THROWS_AS(topo::complement_betti({1, 1, 1}, 1), Error);    // odd class
    CHECK_THROWS_AS(topo::complement_betti({2, 0, 1}, 1), Error);    // disconnected
    CHECK_THROWS_AS(topo::complement_betti({1, 0, 2}, 1), Error);    // b_top != 1
}

TEST_CASE("middle Betti numbers of fibers") {
    CHECK(topo::regular_fiber_middle_betti(CartanElement({2, -1, -1})) == 2);
    CHECK(topo::regular_fiber_middle_betti(CartanElement({1, -1, 0})) == 5);
    CHECK(topo::regular_fiber_middle_betti(CartanElement({1, -1})) == 1);

    const auto ok =
        topo::singular_fiber_middle_betti(CartanElement({2, -1, -1}), CartanElement({1, -1, 0}));
    CHECK(ok.betti == 1);
    CHECK(!ok.shared_value);

    const auto bad =
        topo::singular_fiber_middle_betti(CartanElement({1, -1, 0}), CartanElement({1, -1, 0}));
    CHECK(!bad.betti);
    REQUIRE(bad.shared_value);
    CHECK((*bad.shared_value == 1 || *bad.shared_value == -1));
}

TEST_CASE("fiber summaries tie the pieces together") {
    const auto s = topo::fiber_summary(CartanElement({2, -1, -1}), CartanElement({1, -1, 0}));
    CHECK(s.n == 3);
    CHECK(s.k == 3);
    CHECK(s.orbit_dim == 4);
    CHECK(s.flag_dim == 2);
    CHECK(s.theta == lie::ThetaSet{{2}});
    CHECK(s.theta_dual == lie::ThetaSet{{1}});
    CHECK(s.flag_betti == BettiVector{1, 0, 1, 0, 1});
    CHECK(s.complement == BettiVector{1, 0, 1, 2, 0});
    CHECK(s.regular_middle == 2);
    CHECK(s.singular_middle == 1);
    CHECK(!s.shared_value);

    // Without a height the singular-fiber column is absent.
    const auto s2 = topo::fiber_summary(CartanElement({2, -1, -1}), std::nullopt);
    CHECK(s2.k == 3);
    CHECK(!s2.singular_middle);

    // A non-dominant base point is sorted first.
    const auto s3 = topo::fiber_summary(CartanElement({-1, 2, -1}), std::nullopt);
    CHECK(s3.theta == lie::ThetaSet{{2}});

    // Shared critical values propagate as inapplicability.
    const auto s4 = topo::fiber_summary(CartanElement({1, -1, 0}), CartanElement({1, -1, 0}));
    CHECK(s4.k == 6);
    CHECK(!s4.singular_middle);
    CHECK(s4.shared_value);
}

TEST_CASE("projective-space diamonds and products") {
    const auto p2 = topo::pn_diamond(2);
    CHECK(p2.dim() == 2);
    CHECK(p2.at(0, 0) == 1);
    CHECK(p2.at(1, 1) == 1);
    CHECK(p2.at(1, 0) == 0);
    CHECK(!p2.has_unknown());

    const auto prod = topo::kunneth(p2, p2);
    CHECK(prod.dim() == 4);
    for (int p = 0; p <= 4; ++p)
        for (int q = 0; q <= 4; ++q) {
            // Hodge numbers of P2 x P2 sit on the diagonal; compare row sums
            // with the independent Betti oracle.
            if (p != q)
                CHECK(prod.at(p, q) == 0);
        }
    for (int d = 0; d <= 8; ++d) {
        std::int64_t row = 0;
        for (int p = 0; p <= 4; ++p) {
            const int q = d - p;
            if (q >= 0 && q <= 4)
                row += *prod.at(p, q);
        }
        CHECK(row == product_betti(2, 2, d));
    }
    CHECK(topo::euler_from_diamond(prod) == 9);

    const auto p1xp2 = topo::kunneth(topo::pn_diamond(1), topo::pn_diamond(2));
    CHECK(p1xp2.dim() == 3);
    for (int p = 0; p <= 3; ++p)
        CHECK(*p1xp2.at(p, p) == (p == 0 || p == 3 ? 1 : 2));
    CHECK(topo::euler_from_diamond(p1xp2) == 6);

    CHECK_THROWS_AS(topo::pn_diamond(-1), Error);
}

TEST_CASE("unknown cells block products but not bookkeeping") {
    HodgeDiamond d(1);
    d.set(0, 0, 1);
    d.set(1, 1, 1);
    d.set(0, 1, std::nullopt);
    d.set(1, 0, 0);
    CHECK(d.has_unknown());
    CHECK(!topo::euler_from_diamond(d));
    CHECK_THROWS_AS(topo::kunneth(d, d), Error);
}

TEST_CASE("diamond comparison reports differences and unknowns") {
    auto make = [](std::int64_t corner) {
        HodgeDiamond d(5);
        for (int p = 0; p <= 5; ++p)
            for (int q = 0; q <= 5; ++q)
                d.set(p, q, p == q ? 1 : 0);
        d.set(4, 1, corner);
        d.set(1, 4, corner);
        d.set(3, 2, std::nullopt);
        d.set(2, 3, std::nullopt);
        return d;
    };
    const auto left = make(16), right = make(1);
    const auto cmp = topo::diamond_compare(left, right);
    CHECK(!cmp.equal_on_checked);
    REQUIRE(cmp.differences.size() == 2);
    CHECK(cmp.differences[0].p == 1);
    CHECK(cmp.differences[0].q == 4);
    CHECK(cmp.differences[0].lhs == 16);
    CHECK(cmp.differences[0].rhs == 1);
    CHECK(cmp.differences[1].p == 4);
    CHECK(cmp.differences[1].q == 1);
    CHECK(cmp.uncheckable == std::vector<std::pair<int, int>>{{2, 3}, {3, 2}});

    const auto same = topo::diamond_compare(left, left);
    CHECK(same.equal_on_checked);
    CHECK(same.differences.empty());
    // Unknown-vs-unknown is still uncheckable, not equal.
    CHECK(same.uncheckable.size() == 2);

    CHECK_THROWS_AS(topo::diamond_compare(left, topo::pn_diamond(2)), Error);
}

TEST_CASE("Euler parity obstruction") {
    CHECK(topo::euler_obstruction(3));
    CHECK(topo::euler_obstruction(-7));
    CHECK(!topo::euler_obstruction(0));
    CHECK(!topo::euler_obstruction(6));
    for (int n = 1; n <= 5; ++n) {
        CHECK(topo::euler_obstruction(*topo::euler_from_diamond(topo::pn_diamond(2 * n))));
        CHECK(!topo::euler_obstruction(*topo::euler_from_diamond(topo::pn_diamond(2 * n - 1))));
    }
}

TEST_CASE("rendering the rotated square") {
    CHECK(topo::render(topo::pn_diamond(1)) == " 1\n0 0\n 1\n");
    CHECK(topo::render(topo::kunneth(topo::pn_diamond(2), topo::pn_diamond(2))) ==
          "    1\n"
          "   0 0\n"
          "  0 2 0\n"
          " 0 0 0 0\n"
          "0 0 3 0 0\n"
          " 0 0 0 0\n"
          "  0 2 0\n"
          "   0 0\n"
          "    1\n");
    HodgeDiamond d(1);
    d.set(0, 0, 1);
    d.set(1, 1, 1);
    d.set(0, 1, std::nullopt);
    d.set(1, 0, 12);
    const auto text = topo::render(d);
    CHECK(text.find('?') != std::string::npos);
    CHECK(text.find("12") != std::string::npos);
}

TEST_CASE("diamond JSON round-trips byte-identically") {
    auto with_unknown = topo::pn_diamond(3);
    with_unknown.set(2, 1, std::nullopt);
    for (const auto& d : {topo::pn_diamond(2), with_unknown}) {
        const std::string j = topo::diamond_to_json(d);
        const HodgeDiamond back = topo::diamond_from_json(j);
        CHECK(back == d);
        CHECK(topo::diamond_to_json(back) == j);
    }

    const std::string path = temp_file("orbitlef_test_diamond.json");
    {
        std::ofstream f(path, std::ios::binary);
        f << topo::diamond_to_json(with_unknown);
    }
    CHECK(topo::read_diamond_file(path) == with_unknown);
    std::filesystem::remove(path);

    CHECK_THROWS_AS(topo::diamond_from_json("{ not json"), Error);
    CHECK_THROWS_AS(topo::diamond_from_json("{\"dim\": 1}"), Error);
    CHECK_THROWS_AS(topo::read_diamond_file(temp_file("orbitlef_missing.json")), Error);
}

TEST_CASE("removing k points lowers the Euler characteristic by exactly k") {
    const std::vector<std::pair<BettiVector, int>> cases{
        {{1, 0, 1, 0, 1}, 3},
        {{1, 0, 1}, 2},
        {{1, 0, 2, 0, 2, 0, 1}, 6},
        {{1, 0, 1, 0, 2, 0, 1, 0, 1}, 5},
    };
    for (const auto& [flag, k] : cases) {
        const auto comp = topo::complement_betti(flag, k);
        long chi_flag = 0, chi_comp = 0;
        for (std::size_t i = 0; i < flag.size(); ++i)
            chi_flag += (i % 2 ? -1 : 1) * flag[i];
        for (std::size_t i = 0; i < comp.size(); ++i)
            chi_comp += (i % 2 ? -1 : 1) * comp[i];
        CHECK(chi_comp == chi_flag - k);
    }
}

TEST_CASE("products of diamonds commute, associate, and multiply Euler numbers") {
    const auto p1 = topo::pn_diamond(1);
    const auto p2 = topo::pn_diamond(2);
    const auto p3 = topo::pn_diamond(3);
    CHECK(topo::kunneth(p1, p2) == topo::kunneth(p2, p1));
    CHECK(topo::kunneth(topo::kunneth(p1, p2), p3) ==
          topo::kunneth(p1, topo::kunneth(p2, p3)));
    for (const auto& [a, b] : {std::pair{p1, p2}, {p2, p3}, {p2, p2}}) {
        const auto prod = topo::kunneth(a, b);
        CHECK(*topo::euler_from_diamond(prod) ==
              *topo::euler_from_diamond(a) * *topo::euler_from_diamond(b));
    }
}

TEST_CASE("smooth product diamonds carry both classical symmetries") {
    for (const auto& d : {topo::kunneth(topo::pn_diamond(2), topo::pn_diamond(2)),
                          topo::kunneth(topo::pn_diamond(1), topo::pn_diamond(2))}) {
        const int dim = d.dim();
        for (int p = 0; p <= dim; ++p)
            for (int q = 0; q <= dim; ++q) {
                CHECK(d.at(p, q) == d.at(q, p));                  // conjugation
                CHECK(d.at(p, q) == d.at(dim - p, dim - q));      // Serre duality
            }
        CHECK(topo::diamond_compare(d, d).equal_on_checked);
    }
}

TEST_CASE("the punctured flag reproduces the middle Betti number in every rank") {
    // Every dominance pattern with a nonzero orbit, n <= 4.
    for (int n = 2; n <= 4; ++n) {
        for (int mask = 0; mask + 1 < (1 << (n - 1)); ++mask) {
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
            const auto s = topo::fiber_summary(h0, std::nullopt);
            REQUIRE(s.flag_dim >= 1);
            CHECK(s.regular_middle == s.k - 1);
            CHECK(s.complement[static_cast<std::size_t>(2 * s.flag_dim - 1)] ==
                  s.regular_middle);
            CHECK(s.regular_middle + 1 ==
                  static_cast<int>(lie::weyl_orbit(h0).size()));
        }
    }
}
