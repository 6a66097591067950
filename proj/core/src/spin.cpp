#include "spinrank/spin.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>

#include "spinrank/error.hpp"

namespace spinrank {

const char* to_string(SpinVariant variant) {
    switch (variant) {
        case SpinVariant::Nodes: return "nodes";
        case SpinVariant::Edges: return "edges";
        case SpinVariant::Hybrid: return "hybrid";
    }
    return "?";
}

SpinVariant parse_variant(std::string_view name) {
    if (name == "nodes") return SpinVariant::Nodes;
    if (name == "edges") return SpinVariant::Edges;
    if (name == "hybrid") return SpinVariant::Hybrid;
    throw Error("unknown variant '" + std::string(name) + "'");
}

namespace {

void validate_config(const SpinConfig& cfg) {
    if (!(cfg.epsilon > 0.0 && cfg.epsilon < 1.0)) {
        throw Error("epsilon must be in (0, 1)");
    }
    if (!(cfg.tau > 0.0)) {
        throw Error("tau must be > 0");
    }
    if (cfg.max_iterations == 0) {
        throw Error("max-iterations must be >= 1");
    }
    if (cfg.chunk_size == 0) {
        throw Error("chunk-size must be >= 1");
    }
}

// Shared driver: step(prev, next) fills next from prev for one iteration.
template <typename Step>
SpinResult drive(const SocialNetwork& net, const SpinConfig& cfg, Step&& step) {
    validate_config(cfg);
    using clock = std::chrono::steady_clock;

    SpinResult result;
    std::vector<double> prev(net.member_count(), cfg.initial_sp);
    std::vector<double> next(net.member_count());

    for (std::size_t n = 0; n < cfg.max_iterations; ++n) {
        auto start = clock::now();
        step(prev, next);
        double ms = std::chrono::duration<double, std::milli>(clock::now() - start).count();

        result.converged = check_stop(prev, next, cfg.tau, cfg.stop_mode);
        prev.swap(next);
        ++result.iterations;

        IterationLog entry;
        entry.iteration = result.iterations;
        entry.duration_ms = ms;
        if (cfg.record_snapshots) {
            entry.snapshot = prev;
        }
        result.log.push_back(std::move(entry));

        if (result.converged) {
            break;
        }
    }
    result.sp.values = std::move(prev);
    result.sp.iteration = result.iterations;
    return result;
}

}  // namespace

std::vector<double> iterate_once(const SocialNetwork& net,
                                 const std::vector<double>& sp_prev, double epsilon) {
    if (sp_prev.size() != net.member_count()) {
        throw LengthMismatchError(sp_prev.size(), net.member_count());
    }
    std::vector<double> next(net.member_count());
    const double floor = 1.0 - epsilon;
    for (MemberId x = 0; x < net.member_count(); ++x) {
        double acc = 0.0;
        for (const Neighbor& nb : net.in_edges(x)) {
            acc += sp_prev[nb.id] * nb.weight;
        }
        next[x] = floor + epsilon * acc;
    }
    return next;
}

bool check_stop(const std::vector<double>& sp_prev, const std::vector<double>& sp_next,
                double tau, StopMode mode) {
    if (sp_prev.size() != sp_next.size()) {
        throw LengthMismatchError(sp_prev.size(), sp_next.size());
    }
    if (mode == StopMode::PerMember) {
        for (std::size_t i = 0; i < sp_prev.size(); ++i) {
            if (std::abs(sp_next[i] - sp_prev[i]) > tau) {
                return false;
            }
        }
        return true;
    }
    double prev_sum = 0.0;
    double next_sum = 0.0;
    for (std::size_t i = 0; i < sp_prev.size(); ++i) {
        prev_sum += sp_prev[i];
        next_sum += sp_next[i];
    }
    return std::abs(next_sum - prev_sum) <= tau;
}

SpinResult spin_nodes(const SocialNetwork& net, const SpinConfig& cfg) {
    const double eps = cfg.epsilon;
    const double floor = 1.0 - eps;
    return drive(net, cfg, [&](const std::vector<double>& prev, std::vector<double>& next) {
        for (MemberId x = 0; x < net.member_count(); ++x) {
            double acc = 0.0;
            for (const Neighbor& nb : net.neighbors(x, Direction::In)) {
                acc += prev[nb.id] * nb.weight;
            }
            next[x] = floor + eps * acc;
        }
    });
}

SpinResult spin_edges(const SocialNetwork& net, const SpinConfig& cfg) {
    const double eps = cfg.epsilon;
    const double floor = 1.0 - eps;
    auto src = net.edge_sources();
    auto dst = net.edge_targets();
    auto w = net.edge_weights();
    return drive(net, cfg, [&](const std::vector<double>& prev, std::vector<double>& next) {
        std::fill(next.begin(), next.end(), 0.0);
        for (std::size_t e = 0; e < src.size(); ++e) {
            next[dst[e]] += prev[src[e]] * w[e];
        }
        for (double& v : next) {
            v = floor + eps * v;
        }
    });
}

SpinResult spin_hybrid(const SocialNetwork& net, const SpinConfig& cfg) {
    const double eps = cfg.epsilon;
    const double floor = 1.0 - eps;
    const std::size_t n = net.member_count();
    const std::size_t chunk = cfg.chunk_size;
    std::vector<double> block(std::min(chunk, n));
    return drive(net, cfg, [&](const std::vector<double>& prev, std::vector<double>& next) {
        for (std::size_t lo = 0; lo < n; lo += chunk) {
            const std::size_t hi = std::min(lo + chunk, n);
            std::fill(block.begin(), block.begin() + static_cast<std::ptrdiff_t>(hi - lo),
                      0.0);
            for (std::size_t x = lo; x < hi; ++x) {
                double acc = 0.0;
                for (const Neighbor& nb : net.in_edges(static_cast<MemberId>(x))) {
                    acc += prev[nb.id] * nb.weight;
                }
                block[x - lo] = acc;
            }
            for (std::size_t x = lo; x < hi; ++x) {
                next[x] = block[x - lo];
            }
        }
        for (double& v : next) {
            v = floor + eps * v;
        }
    });
}

SpinResult run_spin(const SocialNetwork& net, const SpinConfig& cfg, SpinVariant variant) {
    switch (variant) {
        case SpinVariant::Nodes: return spin_nodes(net, cfg);
        case SpinVariant::Edges: return spin_edges(net, cfg);
        case SpinVariant::Hybrid: return spin_hybrid(net, cfg);
    }
    throw InternalError("unreachable variant");
}

}  // namespace spinrank
