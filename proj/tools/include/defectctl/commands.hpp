#ifndef DEFECTCTL_COMMANDS_HPP_
#define DEFECTCTL_COMMANDS_HPP_

#include <optional>
#include <string>

#include "crysdef/homotopy.hpp"
#include "crysdef/semidirect.hpp"
#include "crysdef/spherical.hpp"
#include "defectctl/report.hpp"

namespace defectctl {

Json classify_report(const ParsedSpec& spec, crysdef::Int window);

// n3 unset: every residue modulo the order. oracle_window set: also the
// brute-force partition and an AGREE/DISAGREE verdict per n3.
Json conjugacy_report(const crysdef::PointGroup2D& pg, const std::string& lattice_arg,
                      std::optional<crysdef::Int> n3, std::optional<crysdef::Int> oracle_window,
                      crysdef::Int window);

Json spherical_report(const crysdef::BinaryKind& kind);

Json retract_report(const crysdef::SpaceSpec& space, Json input);

// Human-readable rendering of any report built above.
std::string render_text(const Json& report);

} // namespace defectctl

#endif
