// JSON and CSV serialisation for field specs, arc files, censuses and
// command reports.

#pragma once

#include "hermarc/aschreier.hpp"
#include "hermarc/charsums.hpp"
#include "hermarc/geometry.hpp"
#include "hermarc/kernels.hpp"

#include <nlohmann/json.hpp>

#include <iosfwd>
#include <string>

namespace hermarc::report {

using nlohmann::json;

inline constexpr const char* kToolName = "hermarc";
inline constexpr int kFormatVersion = 1;

std::string tool_version();

json field_json(const gf::TowerSpec& spec);
/// Validates the modulus as well as the shape.
gf::TowerSpec field_from_json(const json& j);

json elem_json(const gf::Field& f, gf::Elem x);
json bigint_json(const cyclo::BigInt& v);
json cyclo_json(const cyclo::CycloInt& z);

json witnesses_json(const gf::Field& f, const aschreier::WitnessBundle& w);
json conditions_json(const aschreier::MaximalityConditions& c);
json sweep_json(const gf::Field& f, const kernels::SweepResult& s);
json distribution_json(const geometry::SecantDistribution& d);
json theorem_json(const geometry::TheoremReport& t);

json arc_file_json(const gf::TowerSpec& spec, const geometry::Arc& arc);
struct LoadedArc {
    gf::TowerSpec spec;
    json raw;
};
/// Parses the field part; the points are attached once a plane exists.
LoadedArc load_arc_file(const std::string& path);
geometry::Arc arc_from_json(const geometry::Plane& plane, const json& j);

void write_census_csv(std::ostream& out, const geometry::SecantDistribution& d);

} // namespace hermarc::report
