#pragma once

#include <susyw/report.hpp>
#include <susyw/wgen.hpp>

#include <json.hpp>

#include <string>

namespace susyw {

using Json = nlohmann::ordered_json;

// schema: {family, n, k, floor, generators: [{label, delta, terms: [{coeff,
// monomial: [{basis, deriv}]}]}], minimal: [labels], verification: {...}}
Json emit_generators(const Engine& eng, const GeneratorSet& gs, bool minimal_only,
                     const Report* verification);
GeneratorSet parse_generators(const AlgebraSpec& spec, const Json& j);

Json emit_report(const Engine& eng, const std::string& command, const Report& rep);

std::string render_text(const Engine& eng, const GeneratorSet& gs, bool minimal_only);
std::string render_report_text(const Report& rep);

}  // namespace susyw
