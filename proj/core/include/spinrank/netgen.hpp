#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "spinrank/graph.hpp"

namespace spinrank {

enum class WeightMode {
    UniformNormalized,  // raw activities uniform in (0,1], normalized per source
    Unit,               // all raw activities 1
};

struct GenSpec {
    std::size_t node_count = 0;
    std::size_t edge_count = 0;
    std::uint64_t seed = 0;
    WeightMode weight_mode = WeightMode::UniformNormalized;
    // Skip isolate rewiring and the commitment constraints; raw timing only.
    bool allow_isolated = false;
};

// Deterministic seeded generation: exactly edge_count distinct directed edges,
// no self-loops, sampled uniformly over ordered pairs; isolates are rewired
// away by edge swaps (edge count preserved); weights per weight_mode followed
// by inactive-member redistribution. Throws TooManyEdgesError when edge_count
// exceeds node_count*(node_count-1).
SocialNetwork generate(const GenSpec& spec);

// Grid spec file: CSV `nodes,edges,seed`, one spec per line, optional header.
std::vector<GenSpec> read_grid_file(const std::string& path);

}  // namespace spinrank
