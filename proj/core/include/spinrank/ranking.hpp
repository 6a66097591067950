#pragma once

#include <array>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace spinrank {

// Competition ranking: tied scores share the highest position; the next
// occupied position skips by the tie count.
struct Ranking {
    std::vector<std::uint64_t> positions;  // one per member, 1-based
};

// Throws NonFiniteError on NaN/inf scores.
Ranking make_ranking(std::span<const double> scores);

// Pairwise rank agreement in [-1, 1], ties contributing 0 through sgn = 0.
// O(n log n) merge-sort implementation of the double-loop definition.
double kendall(const Ranking& rank_x, const Ranking& rank_y);
double kendall(std::span<const std::uint64_t> x, std::span<const std::uint64_t> y);

struct DistributionReport {
    // Classes: SP<=1, 1<SP<10, 10<=SP<100, 100<=SP<1000, SP>=1000.
    std::array<std::size_t, 5> class_counts{};
    std::array<double, 5> class_percentages{};
    double mean = 0.0;
    double std_dev = 0.0;  // population standard deviation
    double min = 0.0;
    double max = 0.0;
};

DistributionReport sp_distribution(std::span<const double> scores);
std::string format_distribution(const DistributionReport& report);

struct DuplicateReport {
    std::size_t duplicates = 0;  // n - number of distinct values (exact equality)
    double percentage = 0.0;
};

DuplicateReport duplicate_stats(std::span<const double> scores);

}  // namespace spinrank
