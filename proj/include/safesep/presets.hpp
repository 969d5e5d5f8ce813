#pragma once

#include <string>
#include <vector>

#include "safesep/sim.hpp"

namespace safesep {

/// Names of the built-in scenario presets (the three desk-scale single and
/// multi obstacle cases, the cooperative case, and the three lab-scale
/// parameter sets).
std::vector<std::string> preset_names();

/// Builds the named preset. Throws std::invalid_argument for unknown names.
ScenarioConfig make_preset(const std::string& name);

}  // namespace safesep
