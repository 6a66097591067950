#pragma once

#include <iosfwd>
#include <vector>

#include "spinrank/graph.hpp"
#include "spinrank/netgen.hpp"
#include "spinrank/spin.hpp"

namespace spinrank {

// One timing measurement: per-iteration wall times of a single run.
struct BenchRecord {
    SpinVariant variant = SpinVariant::Edges;
    std::size_t node_count = 0;
    std::size_t edge_count = 0;
    double epsilon = 0.0;
    std::vector<double> iteration_ms;  // warm-up iteration already excluded
    std::size_t iterations = 0;
    bool converged = false;

    double mean_ms() const;
    double std_ms() const;    // population standard deviation
    double median_ms() const;
};

// Runs each variant `repetitions` times with identical cfg and records per-
// iteration wall time (monotonic clock; the first iteration of each run is a
// warm-up and excluded from the recorded durations unless it is the only one).
// Cross-variant SP vectors are verified equal within 1e-12 per member before
// reporting; disagreement throws VariantMismatchError.
std::vector<BenchRecord> bench_spin(const SocialNetwork& net, const SpinConfig& cfg,
                                    const std::vector<SpinVariant>& variants,
                                    std::size_t repetitions);

// Generates each spec, benchmarks all three variants, and writes a CSV table
// `variant,nodes,edges,epsilon,mean_iter_ms,std_iter_ms,iterations` followed
// by a ratio section with the edges variant time as denominator.
void bench_grid(const std::vector<GenSpec>& grid, const SpinConfig& cfg,
                std::ostream& out);

void write_bench_csv(const std::vector<BenchRecord>& records, std::ostream& out,
                     bool header = true);

}  // namespace spinrank
