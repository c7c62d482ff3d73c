#pragma once

#include <string>

#include "json.hpp"

#include "dynalg/interaction.hpp"
#include "dynalg/scenario.hpp"
#include "dynalg/weyl.hpp"

namespace dynalg {

using json = nlohmann::ordered_json;

json to_json(const PiecewisePoly& p);
PiecewisePoly piecewise_from_json(const json& j);

json to_json(const Functional& f);
// auto_h constants are recomputed from the density under the given
// convention; explicit constants load verbatim.
Functional functional_from_json(const json& j, HConvention conv = HConvention::Consistent);

json to_json(const LoopPath& l);
LoopPath loop_from_json(const json& j);

json to_json(const SampledPath& p);
SampledPath path_from_json(const json& j);

json to_json(const WeylElement& w);

json to_json(const GroupWord& w);
GroupWord word_from_json(const json& j, HConvention conv = HConvention::Consistent);

json to_json(const InteractionSpec& s);
InteractionSpec interaction_from_json(const json& j);

json to_json(const Scenario& s);
Scenario scenario_from_json(const json& j);

json to_json(const Report& r);

// Throws ConfigError for unreadable files or schema violations.
json load_json_file(const std::string& path);
void write_text_file(const std::string& path, const std::string& text);

// CSV dump (x, Re psi, Im psi) with a header line.
std::string state_to_csv(const WaveState& s);

} // namespace dynalg
