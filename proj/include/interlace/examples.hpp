#pragma once

#include "interlace/involution.hpp"

#include <string>
#include <vector>

namespace interlace {

// Grid path through the listed corners, filling in unit steps between them.
Path path_through(const Network& g, const std::vector<Coord>& corners);

// The worked pair on Gamma^4_{9,9} with pattern ({2,4,6}, {2,4,6}) and unit weights.
Network sample_grid();
PncPair sample_pair(const Network& g);

// Directory holding the reference outputs compared by replay-examples.
std::string golden_dir();

}  // namespace interlace
