// Regenerates the shipped fixture set into a target directory. The checked-in
// files under data/fixtures/v1 are the output of this program; rerun it after
// changing any producing code and review the diff.
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include <json.hpp>

#include "orbitlef/fibration.h"
#include "orbitlef/fixtures.h"
#include "orbitlef/groebner.h"
#include "orbitlef/lie.h"
#include "orbitlef/orbit_ideals.h"
#include "orbitlef/topology.h"

using namespace orbitlef;
using lie::CartanElement;

namespace {

void write_text(const std::string& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary);
    if (!out)
        throw std::runtime_error("cannot write " + path);
    out << text;
}

topo::HodgeDiamond proj_candidate_diamond(std::int64_t corner) {
    topo::HodgeDiamond d(5);
    for (int p = 0; p <= 5; ++p)
        for (int q = 0; q <= 5; ++q)
            d.set(p, q, 0);
    for (int p = 0; p <= 5; ++p)
        d.set(p, p, 1);
    d.set(4, 1, corner);
    d.set(1, 4, corner);
    d.set(3, 2, std::nullopt);
    d.set(2, 3, std::nullopt);
    return d;
}

} // namespace

int main(int argc, char** argv) {
    if (argc != 2) {
        std::cerr << "usage: fixgen <output-dir>\n";
        return 2;
    }
    const std::string dir(argv[1]);
    auto path = [&](const std::string& f) { return fix::fixture_path(dir, f); };

    // --- Hodge diamonds ------------------------------------------------
    write_text(path("diamond_orbit_2m1m1.json"),
               topo::diamond_to_json(topo::kunneth(topo::pn_diamond(2), topo::pn_diamond(2))));
    write_text(path("diamond_fiber_2m1m1.json"),
               topo::diamond_to_json(topo::kunneth(topo::pn_diamond(1), topo::pn_diamond(2))));
    write_text(path("diamond_proj_left_1m10.json"),
               topo::diamond_to_json(proj_candidate_diamond(16)));
    write_text(path("diamond_proj_right_1m10.json"),
               topo::diamond_to_json(proj_candidate_diamond(1)));

    // --- ideals ---------------------------------------------------------
    const auto sl2 = ideals::minimal_poly_ideal(CartanElement({1, -1}));
    poly::write_ideal_file(path("sl2_orbit.ideal"), sl2.context(), sl2.generators(),
                           {"orbit of diag(1,-1) in the traceless 2x2 matrices"});

    const CartanElement h0_min({2, -1, -1});
    const auto minpoly = ideals::minimal_poly_ideal(h0_min);
    poly::write_ideal_file(path("sl3_2m1m1_minpoly.ideal"), minpoly.context(),
                           minpoly.generators(),
                           {"orbit closure of diag(2,-1,-1): entries of (A-2)(A+1)"});

    const CartanElement h({1, -1, 0});
    const auto fiber1 = ideals::fiber_ideal(minpoly, fib::potential_poly(h, 3), Rat(1));
    poly::write_ideal_file(path("sl3_2m1m1_fiber1.ideal"), fiber1.context(),
                           fiber1.generators(),
                           {"regular fiber of the height x1 - x2 over 1 on that orbit"});

    const auto pq = ideals::determinant_generators(h, {Rat(0), Rat(1)});
    poly::write_ideal_file(path("sl3_1m10_pq.ideal"), pq.context(), pq.generators(),
                           {"regular orbit of diag(1,-1,0): det(A) - d0 and det(A-1) - d1"});

    const poly::Polynomial p = pq.generators()[0];
    const poly::Polynomial q = pq.generators()[1];
    const poly::Polynomial f = fib::potential_poly(h, 3);
    poly::write_ideal_file(path("sl3_1m10_fiber0_I.ideal"), pq.context(), {p, q, f},
                           {"fiber of x1 - x2 over 0, presented by p, q"});
    poly::write_ideal_file(path("sl3_1m10_fiber0_J.ideal"), pq.context(), {p, p - q, f},
                           {"the same fiber, presented by p, p - q"});

    // --- manifest ---------------------------------------------------------
    nlohmann::ordered_json m;
    m["version"] = 1;
    auto add = [&](const std::string& name, const std::string& file, const std::string& kind,
                   const std::string& description) {
        m["fixtures"].push_back(nlohmann::ordered_json{
            {"name", name}, {"file", file}, {"kind", kind}, {"description", description}});
    };
    add("orbit-diamond-2m1m1", "diamond_orbit_2m1m1.json", "diamond",
        "Hodge diamond of P2 x P2, the closure of the orbit of diag(2,-1,-1)");
    add("fiber-diamond-2m1m1", "diamond_fiber_2m1m1.json", "diamond",
        "Hodge diamond of P1 x P2, the closure of a regular fiber on that orbit");
    add("proj-diamond-left-1m10", "diamond_proj_left_1m10.json", "diamond",
        "candidate diamond of the first projectivized regular fiber of the "
        "diag(1,-1,0) orbit: h^{4,1} = h^{1,4} = 16, two middle cells unresolved");
    add("proj-diamond-right-1m10", "diamond_proj_right_1m10.json", "diamond",
        "candidate diamond of the second projectivization of the same fiber: "
        "h^{4,1} = h^{1,4} = 1, two middle cells unresolved");
    add("sl2-orbit", "sl2_orbit.ideal", "ideal",
        "defining ideal of the orbit of diag(1,-1) in sl(2)");
    add("sl3-2m1m1-minpoly", "sl3_2m1m1_minpoly.ideal", "ideal",
        "defining ideal of the orbit closure of diag(2,-1,-1) in sl(3)");
    add("sl3-2m1m1-fiber1", "sl3_2m1m1_fiber1.ideal", "ideal",
        "regular fiber of the height x1 - x2 over 1 on the diag(2,-1,-1) orbit");
    add("sl3-1m10-pq", "sl3_1m10_pq.ideal", "ideal",
        "determinantal generators p, q of the regular orbit of diag(1,-1,0)");
    add("sl3-1m10-fiber0-left", "sl3_1m10_fiber0_I.ideal", "ideal",
        "fiber over 0 of x1 - x2 on the regular orbit, generators p, q, f");
    add("sl3-1m10-fiber0-right", "sl3_1m10_fiber0_J.ideal", "ideal",
        "the same fiber with generators p, p - q, f; its projective closure differs");
    write_text(path("manifest.json"), m.dump(2) + "\n");

    std::cout << "fixtures written to " << dir << "\n";
    return 0;
}
