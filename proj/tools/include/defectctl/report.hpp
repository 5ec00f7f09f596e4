#ifndef DEFECTCTL_REPORT_HPP_
#define DEFECTCTL_REPORT_HPP_

// JSON views of library results. Everything exact is emitted as integers or
// strings so that reports round-trip byte for byte.

#include <string>
#include <vector>

#include "crysdef/classifier.hpp"
#include "defectctl/spec_file.hpp"

namespace defectctl {

inline constexpr const char* kToolName = "defectctl";
inline constexpr const char* kToolVersion = DEFECTCTL_VERSION;

Json vec_json(const crysdef::Vec2& v);
std::string vec_text(const crysdef::Vec2& v);
std::string set_text(const std::vector<crysdef::Vec2>& vs);

Json cardinality_json(const crysdef::Cardinality& c);

// Finite: representatives. Infinite: domain, predicate and the canonical
// members inside [-window, window]^2.
Json class_set_json(const crysdef::ClassSet& cs, crysdef::Int window);
// One entry per residue of n3 modulo the order of the point group.
Json planar_families_json(const crysdef::PointGroup2D& pg, crysdef::Int window);

Json binary_group_json(const crysdef::BinaryKind& kind);

Json factor_json(const crysdef::ClassFactor& f, crysdef::Int window);
Json defect_report_json(const crysdef::DefectReport& r, crysdef::Int window);

Json provenance_json(std::vector<std::string> cross_refs);

// {"tool", "command", "input", "result", "provenance"}
Json envelope(const std::string& command, Json input, Json result,
              std::vector<std::string> cross_refs);

std::string dump(const Json& report); // two-space indent, trailing newline

} // namespace defectctl

#endif
