#pragma once

#include <string>

#include "smsgw/scenario.hpp"

namespace smsgw::demos {

// Built-in scenario texts; the files under scenarios/ carry identical bytes
// so `simulate scenarios/<name>.scenario` matches `demo <name>` exactly.
const std::string& scenario_text(scenario::AttackKind kind);

} // namespace smsgw::demos
