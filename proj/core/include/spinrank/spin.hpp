#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "spinrank/graph.hpp"

namespace spinrank {

enum class StopMode { PerMember, Sum };
enum class SpinVariant { Nodes, Edges, Hybrid };

const char* to_string(SpinVariant variant);
SpinVariant parse_variant(std::string_view name);

struct SpinConfig {
    double epsilon = 0.5;            // openness coefficient, in (0, 1)
    double tau = 1e-5;               // stop-condition precision, > 0
    StopMode stop_mode = StopMode::PerMember;
    std::size_t max_iterations = 100;
    double initial_sp = 1.0;
    std::size_t chunk_size = 8192;   // hybrid subset size, >= 1
    bool record_snapshots = false;   // keep a per-iteration SP copy in the log
};

struct SpVector {
    std::vector<double> values;
    std::size_t iteration = 0;
};

struct IterationLog {
    std::size_t iteration = 0;
    double duration_ms = 0.0;
    std::vector<double> snapshot;  // filled only when record_snapshots is set
};

struct SpinResult {
    SpVector sp;
    std::size_t iterations = 0;
    bool converged = false;
    std::vector<IterationLog> log;
};

// One Jacobi step: next(x) = (1-eps) + eps * sum over in-edges of prev(y)*C(y->x).
std::vector<double> iterate_once(const SocialNetwork& net,
                                 const std::vector<double>& sp_prev, double epsilon);

// Stop test: per-member max |delta| <= tau, or |sum delta| <= tau.
bool check_stop(const std::vector<double>& sp_prev, const std::vector<double>& sp_next,
                double tau, StopMode mode);

// Node perspective: one member at a time through the neighborhood lookup.
SpinResult spin_nodes(const SocialNetwork& net, const SpinConfig& cfg);
// Edge perspective: single pass over the flat edge list per iteration.
SpinResult spin_edges(const SocialNetwork& net, const SpinConfig& cfg);
// Subset perspective: contiguous member blocks accumulated one block at a time.
SpinResult spin_hybrid(const SocialNetwork& net, const SpinConfig& cfg);

SpinResult run_spin(const SocialNetwork& net, const SpinConfig& cfg, SpinVariant variant);

}  // namespace spinrank
