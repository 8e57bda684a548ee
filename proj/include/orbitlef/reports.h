#pragma once

#include <string>
#include <vector>

#include "orbitlef/caveat.h"
#include "orbitlef/fibration.h"
#include "orbitlef/groebner.h"
#include "orbitlef/orbit_ideals.h"
#include "orbitlef/topology.h"
#include "orbitlef/verify.h"

// Text and JSON renderings of the library's result records. All JSON is
// emitted in a stable field order so that parse + re-serialize reproduces the
// bytes exactly; rationals travel as strings.
namespace orbitlef::report {

std::string fibration_text(const fib::LefschetzReport& r, const poly::Polynomial& potential);
std::string fibration_json(const fib::LefschetzReport& r, const poly::Polynomial& potential);

std::string ideal_text(const poly::VarContext& ctx, const std::vector<poly::Polynomial>& gens);
std::string ideal_json(const poly::VarContext& ctx, const std::vector<poly::Polynomial>& gens);

std::string groebner_text(const poly::GroebnerResult& r, const poly::TermOrder& ord);
std::string groebner_json(const poly::GroebnerResult& r, const poly::TermOrder& ord);

std::string compare_text(const ideals::CompactificationReport& r);
std::string compare_json(const ideals::CompactificationReport& r);

std::string fiber_summary_text(const topo::FiberSummary& s);
std::string fiber_summary_json(const topo::FiberSummary& s);

std::string diamond_text(const topo::HodgeDiamond& d);
// JSON form of a diamond is topo::diamond_to_json.

std::string diamond_compare_text(const topo::DiamondComparison& c);
std::string diamond_compare_json(const topo::DiamondComparison& c);

std::string caveat_text(int n, const std::vector<poly::Polynomial>& grad, bool hessian_zero,
                        const std::vector<caveat::ConeWitness>& witnesses);
std::string caveat_json(int n, const std::vector<poly::Polynomial>& grad, bool hessian_zero,
                        const std::vector<caveat::ConeWitness>& witnesses);

std::string verify_text(const std::vector<verify::CriterionResult>& rs);
std::string verify_json(const std::vector<verify::CriterionResult>& rs);

} // namespace orbitlef::report
