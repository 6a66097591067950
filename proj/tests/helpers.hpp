#pragma once

// Shared test fixtures and independent reference implementations ("oracles")
// that the production code is checked against.

#include <cmath>
#include <cstdint>
#include <random>
#include <span>
#include <vector>

#include "spinrank/graph.hpp"
#include "spinrank/spin.hpp"

namespace testutil {

// The classic 10-member kite network: 18 undirected friendships stored as
// directed edge pairs with unit weight.
inline spinrank::SocialNetwork kite() {
    using spinrank::LabeledEdge;
    const std::vector<std::pair<const char*, const char*>> undirected = {
        {"Andre", "Beverly"},  {"Andre", "Carol"},    {"Andre", "Diane"},
        {"Andre", "Fernando"}, {"Beverly", "Diane"},  {"Beverly", "Ed"},
        {"Beverly", "Garth"},  {"Carol", "Diane"},    {"Carol", "Fernando"},
        {"Diane", "Ed"},       {"Diane", "Fernando"}, {"Diane", "Garth"},
        {"Ed", "Garth"},       {"Fernando", "Garth"}, {"Fernando", "Heather"},
        {"Garth", "Heather"},  {"Heather", "Ike"},    {"Ike", "Jane"},
    };
    std::vector<LabeledEdge> edges;
    for (const auto& [a, b] : undirected) {
        edges.push_back({a, b, 1.0});
        edges.push_back({b, a, 1.0});
    }
    return spinrank::SocialNetwork::build(std::move(edges));
}

// Reference Kendall coefficient: the literal O(n^2) double loop over all
// ordered pairs of rank positions.
inline double kendall_oracle(std::span<const std::uint64_t> x,
                             std::span<const std::uint64_t> y) {
    const std::size_t n = x.size();
    auto sgn = [](double d) { return d > 0 ? 1 : d < 0 ? -1 : 0; };
    long long total = 0;
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            if (i == j) {
                continue;
            }
            total += sgn(static_cast<double>(x[i]) - static_cast<double>(x[j])) *
                     sgn(static_cast<double>(y[i]) - static_cast<double>(y[j]));
        }
    }
    return static_cast<double>(total) / (static_cast<double>(n) * (n - 1));
}

// Reference social-position solver: dense matrix iteration, no sparsity or
// scheduling tricks. Suitable for small member counts only.
inline std::vector<double> dense_sp_oracle(const spinrank::SocialNetwork& net,
                                           double epsilon, double tau,
                                           std::size_t max_iterations) {
    const std::size_t n = net.member_count();
    std::vector<std::vector<double>> c(n, std::vector<double>(n, 0.0));
    auto src = net.edge_sources();
    auto dst = net.edge_targets();
    auto w = net.edge_weights();
    for (std::size_t e = 0; e < src.size(); ++e) {
        c[src[e]][dst[e]] = w[e];
    }
    std::vector<double> sp(n, 1.0);
    std::vector<double> next(n, 0.0);
    for (std::size_t it = 0; it < max_iterations; ++it) {
        for (std::size_t x = 0; x < n; ++x) {
            double acc = 0.0;
            for (std::size_t y = 0; y < n; ++y) {
                acc += sp[y] * c[y][x];
            }
            next[x] = (1.0 - epsilon) + epsilon * acc;
        }
        double max_delta = 0.0;
        for (std::size_t x = 0; x < n; ++x) {
            max_delta = std::max(max_delta, std::abs(next[x] - sp[x]));
        }
        sp.swap(next);
        if (max_delta <= tau) {
            break;
        }
    }
    return sp;
}

// Reference betweenness: count all-pairs shortest paths through each vertex by
// explicit path enumeration over BFS DAGs. Exponential; keep inputs tiny.
std::vector<double> betweenness_oracle(const spinrank::SocialNetwork& net);

inline std::vector<std::uint64_t> random_permutation(std::size_t n,
                                                     std::mt19937_64& rng) {
    std::vector<std::uint64_t> p(n);
    for (std::size_t i = 0; i < n; ++i) {
        p[i] = i + 1;
    }
    for (std::size_t i = n; i > 1; --i) {
        std::uniform_int_distribution<std::size_t> d(0, i - 1);
        std::swap(p[i - 1], p[d(rng)]);
    }
    return p;
}

}  // namespace testutil
