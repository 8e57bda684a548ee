// Command-line surface of the workbench. Every subcommand prints a human
// report by default and a stable JSON document under --json; --out redirects
// either to a file.
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "orbitlef/caveat.h"
#include "orbitlef/error.h"
#include "orbitlef/fibration.h"
#include "orbitlef/fixtures.h"
#include "orbitlef/groebner.h"
#include "orbitlef/orbit_ideals.h"
#include "orbitlef/reports.h"
#include "orbitlef/topology.h"
#include "orbitlef/verify.h"

using namespace orbitlef;
using lie::CartanElement;

namespace {

struct Config {
    std::optional<double> budget_secs;
    std::optional<std::string> order;
    std::optional<std::string> data_dir;
};

// key = value lines, '#' comments. Unknown keys are rejected to catch typos.
Config read_config(const std::string& path) {
    std::ifstream in(path);
    if (!in)
        fail(ErrorKind::InvalidArgument, "cannot open config file: " + path);
    Config cfg;
    std::string line;
    while (std::getline(in, line)) {
        if (!line.empty() && line.back() == '\r')
            line.pop_back();
        const auto hash = line.find('#');
        if (hash != std::string::npos)
            line.erase(hash);
        const auto eq = line.find('=');
        if (line.find_first_not_of(" \t") == std::string::npos)
            continue;
        if (eq == std::string::npos)
            fail(ErrorKind::InvalidArgument, "config line is not key = value: " + line);
        auto trim = [](std::string s) {
            const auto a = s.find_first_not_of(" \t");
            const auto b = s.find_last_not_of(" \t");
            return a == std::string::npos ? std::string{} : s.substr(a, b - a + 1);
        };
        const std::string key = trim(line.substr(0, eq));
        const std::string value = trim(line.substr(eq + 1));
        if (key == "budget_secs")
            cfg.budget_secs = std::stod(value);
        else if (key == "order")
            cfg.order = value;
        else if (key == "data_dir")
            cfg.data_dir = value;
        else
            fail(ErrorKind::InvalidArgument, "unknown config key: " + key);
    }
    return cfg;
}

// Shared option values, filled by CLI11.
struct Opts {
    bool json = false;
    std::string out;
    std::string config_file;
    double budget_flag = -1.0; // <0: not set on the command line
    std::string order_flag;
    std::string data_flag;
};

double resolve_budget(const Opts& o, const Config& cfg) {
    if (const char* env = std::getenv("ORBITLEF_BUDGET_SECS"))
        return std::stod(env);
    if (o.budget_flag >= 0)
        return o.budget_flag;
    if (cfg.budget_secs)
        return *cfg.budget_secs;
    return 0.0; // unlimited
}

poly::TermOrder resolve_order(const Opts& o, const Config& cfg) {
    if (!o.order_flag.empty())
        return poly::TermOrder::parse(o.order_flag);
    if (cfg.order)
        return poly::TermOrder::parse(*cfg.order);
    return {};
}

std::string resolve_data_dir(const Opts& o, const Config& cfg) {
    if (!o.data_flag.empty())
        return o.data_flag;
    if (const char* env = std::getenv("ORBITLEF_DATA"))
        return env;
    if (cfg.data_dir)
        return *cfg.data_dir;
    return fix::default_data_dir();
}

void emit(const Opts& o, const std::string& text) {
    if (o.out.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream f(o.out, std::ios::binary);
    if (!f)
        fail(ErrorKind::InvalidArgument, "cannot write output file: " + o.out);
    f << text;
}

CartanElement parse_cartan(const std::string& csv) {
    return CartanElement(parse_rat_list(csv));
}

// "P2" / "p2" / "2" -> 2
int parse_pn(const std::string& token) {
    std::string t = token;
    if (!t.empty() && (t[0] == 'P' || t[0] == 'p'))
        t.erase(0, 1);
    try {
        std::size_t used = 0;
        const int n = std::stoi(t, &used);
        if (used != t.size() || n < 0)
            throw std::invalid_argument(token);
        return n;
    } catch (const std::exception&) {
        fail(ErrorKind::InvalidArgument, "not a projective-space label: " + token);
    }
}

std::vector<std::string> split_csv(const std::string& s) {
    std::vector<std::string> parts;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, ','))
        parts.push_back(item);
    return parts;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact workbench for height potentials on adjoint orbits of sl(n)"};
    app.require_subcommand(1);

    Opts o;
    std::string arg_h, arg_h0, arg_in, arg_vars, arg_fixture, arg_compare, arg_product,
        arg_witness = "1";
    std::string arg_det_shifts, arg_fiber;
    bool flag_minpoly = false;
    int arg_pn = -1, arg_n = 1;

    auto add_common = [&](CLI::App* cmd, bool with_out = true) {
        cmd->add_flag("--json", o.json, "emit JSON instead of text");
        if (with_out)
            cmd->add_option("--out", o.out, "write the output to a file instead of stdout");
        cmd->add_option("--config", o.config_file, "key = value config file");
    };

    auto* c_fib = app.add_subcommand("fibration", "critical structure of a height potential");
    c_fib->add_option("--H", arg_h, "height direction, comma-separated rationals")->required();
    c_fib->add_option("--H0", arg_h0, "orbit base point, comma-separated rationals")->required();
    add_common(c_fib);

    auto* c_ideal = app.add_subcommand("ideal", "defining ideals of orbits and fibers");
    c_ideal->add_option("--H0", arg_h0, "orbit base point")->required();
    c_ideal->add_flag("--min-poly", flag_minpoly,
                      "minimal-polynomial presentation (the default)");
    c_ideal->add_option("--det-shifts", arg_det_shifts,
                        "determinantal presentation with these shifts (regular orbits)");
    c_ideal->add_option("--fiber", arg_fiber, "cut by the height fiber over this value");
    c_ideal->add_option("--H", arg_h, "height direction (required with --fiber)");
    add_common(c_ideal);

    auto* c_gb = app.add_subcommand("groebner", "reduced Groebner basis of an ideal file");
    c_gb->add_option("--in", arg_in, "ideal file to read")->required();
    c_gb->add_option("--vars", arg_vars, "override the variable context, comma-separated");
    c_gb->add_option("--order", o.order_flag, "term order: degrevlex | lex | deglex");
    c_gb->add_option("--budget", o.budget_flag, "wall-clock budget in seconds");
    add_common(c_gb);

    auto* c_fb = app.add_subcommand("fiber-betti", "Betti data of regular and singular fibers");
    c_fb->add_option("--H0", arg_h0, "orbit base point")->required();
    c_fb->add_option("--H", arg_h, "height direction (enables singular-fiber data)");
    add_common(c_fb);

    auto* c_dia = app.add_subcommand("diamond", "Hodge diamonds: projective spaces, products, fixtures");
    c_dia->add_option("--pn", arg_pn, "diamond of complex projective n-space");
    c_dia->add_option("--product", arg_product, "Kunneth product, e.g. P2,P2");
    c_dia->add_option("--fixture", arg_fixture, "render a diamond fixture by manifest name");
    c_dia->add_option("--compare", arg_compare, "compare two diamond fixtures by name: A,B");
    c_dia->add_option("--data", o.data_flag, "fixture directory");
    add_common(c_dia);

    auto* c_cav = app.add_subcommand("caveat",
                                     "degenerate critical locus of |z1^2+...+zn^2|^2");
    c_cav->add_option("--n", arg_n, "number of complex variables")->required();
    c_cav->add_option("--witness", arg_witness,
                      "radii of critical-cone witness points, comma-separated rationals");
    add_common(c_cav);

    auto* c_ver = app.add_subcommand("verify-paper",
                                     "run the acceptance verification suite over the fixtures");
    c_ver->add_option("--data", o.data_flag, "fixture directory");
    add_common(c_ver);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForVersion& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        const Config cfg = o.config_file.empty() ? Config{} : read_config(o.config_file);

        if (app.got_subcommand(c_fib)) {
            const CartanElement h = parse_cartan(arg_h);
            const CartanElement h0 = parse_cartan(arg_h0);
            const auto rep = fib::lefschetz_report(h, h0);
            const auto pot = fib::potential_poly(h, rep.n);
            emit(o, o.json ? report::fibration_json(rep, pot) : report::fibration_text(rep, pot));
        } else if (app.got_subcommand(c_ideal)) {
            const CartanElement h0 = parse_cartan(arg_h0);
            if (flag_minpoly && !arg_det_shifts.empty())
                fail(ErrorKind::InvalidArgument, "--min-poly and --det-shifts are exclusive");
            poly::Ideal ideal = arg_det_shifts.empty()
                                    ? ideals::minimal_poly_ideal(h0)
                                    : ideals::determinant_generators(
                                          h0, parse_rat_list(arg_det_shifts));
            if (!arg_fiber.empty()) {
                if (arg_h.empty())
                    fail(ErrorKind::InvalidArgument, "--fiber needs --H");
                const CartanElement h = parse_cartan(arg_h);
                ideal = ideals::fiber_ideal(ideal, fib::potential_poly(h, h.n()),
                                            parse_rat(arg_fiber));
            }
            emit(o, o.json ? report::ideal_json(ideal.context(), ideal.generators())
                           : report::ideal_text(ideal.context(), ideal.generators()));
        } else if (app.got_subcommand(c_gb)) {
            std::optional<poly::VarContext> override_ctx;
            if (!arg_vars.empty())
                override_ctx = poly::VarContext(split_csv(arg_vars));
            const auto file = poly::read_ideal_file(arg_in, override_ctx);
            const auto ord = resolve_order(o, cfg);
            poly::GroebnerOptions gopts;
            gopts.budget_seconds = resolve_budget(o, cfg);
            const auto res = poly::buchberger(file.gens, ord, gopts);
            emit(o, o.json ? report::groebner_json(res, ord) : report::groebner_text(res, ord));
            if (!res.complete)
                return 3;
        } else if (app.got_subcommand(c_fb)) {
            const CartanElement h0 = parse_cartan(arg_h0);
            std::optional<CartanElement> h;
            if (!arg_h.empty())
                h = parse_cartan(arg_h);
            const auto s = topo::fiber_summary(h0, h);
            emit(o, o.json ? report::fiber_summary_json(s) : report::fiber_summary_text(s));
        } else if (app.got_subcommand(c_dia)) {
            const int modes = (arg_pn >= 0) + !arg_product.empty() + !arg_fixture.empty() +
                              !arg_compare.empty();
            if (modes != 1)
                fail(ErrorKind::InvalidArgument,
                     "pick exactly one of --pn, --product, --fixture, --compare");
            if (!arg_compare.empty()) {
                const auto names = split_csv(arg_compare);
                if (names.size() != 2)
                    fail(ErrorKind::InvalidArgument, "--compare needs two fixture names");
                const std::string dir = resolve_data_dir(o, cfg);
                const auto manifest = fix::read_manifest(dir);
                const auto a = topo::read_diamond_file(
                    fix::fixture_path(dir, fix::find_fixture(manifest, names[0]).file));
                const auto b = topo::read_diamond_file(
                    fix::fixture_path(dir, fix::find_fixture(manifest, names[1]).file));
                const auto cmp = topo::diamond_compare(a, b);
                emit(o, o.json ? report::diamond_compare_json(cmp)
                               : report::diamond_compare_text(cmp));
            } else {
                topo::HodgeDiamond d(0);
                if (arg_pn >= 0) {
                    d = topo::pn_diamond(arg_pn);
                } else if (!arg_product.empty()) {
                    const auto parts = split_csv(arg_product);
                    if (parts.size() != 2)
                        fail(ErrorKind::InvalidArgument, "--product needs two factors, e.g. P2,P2");
                    d = topo::kunneth(topo::pn_diamond(parse_pn(parts[0])),
                                      topo::pn_diamond(parse_pn(parts[1])));
                } else {
                    const std::string dir = resolve_data_dir(o, cfg);
                    const auto manifest = fix::read_manifest(dir);
                    d = topo::read_diamond_file(
                        fix::fixture_path(dir, fix::find_fixture(manifest, arg_fixture).file));
                }
                emit(o, o.json ? topo::diamond_to_json(d) : report::diamond_text(d));
            }
        } else if (app.got_subcommand(c_cav)) {
            const auto grad = caveat::norm_sq_gradient(arg_n);
            const bool hz = caveat::hessian_at_zero(arg_n).is_zero();
            std::vector<caveat::ConeWitness> ws;
            for (const auto& r : parse_rat_list(arg_witness))
                ws.push_back(caveat::critical_family_witness(arg_n, r));
            emit(o, o.json ? report::caveat_json(arg_n, grad, hz, ws)
                           : report::caveat_text(arg_n, grad, hz, ws));
        } else if (app.got_subcommand(c_ver)) {
            const auto rs = verify::run_all(resolve_data_dir(o, cfg));
            emit(o, o.json ? report::verify_json(rs) : report::verify_text(rs));
            if (!verify::all_pass(rs))
                return 1;
        }
        return 0;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return e.kind() == ErrorKind::BudgetExceeded ? 3 : 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}
