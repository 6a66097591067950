#include "spinrank/commitment.hpp"

#include <algorithm>
#include <cmath>

#include "spinrank/error.hpp"

namespace spinrank {

ActivityMatrix::ActivityMatrix(std::size_t member_count, std::size_t period_count)
    : member_count_(member_count) {
    if (period_count == 0) {
        throw Error("period count must be >= 1");
    }
    periods_.resize(period_count);
    for (auto& period : periods_) {
        period.resize(member_count);
    }
}

void ActivityMatrix::add(MemberId y, MemberId x, double amount, std::size_t period) {
    if (y >= member_count_ || x >= member_count_) {
        throw OutOfRangeError("activity endpoint out of range");
    }
    if (period >= periods_.size()) {
        throw OutOfRangeError("period index out of range");
    }
    if (y == x) {
        throw SelfLoopError(std::to_string(y));
    }
    if (!std::isfinite(amount) || amount < 0.0) {
        throw Error("activity amount must be finite and >= 0");
    }
    if (amount > 0.0) {
        periods_[period][y][x] += amount;
    }
}

namespace {

CommitmentRows normalize_rows(std::size_t member_count,
                              const std::vector<std::unordered_map<MemberId, double>>& raw) {
    CommitmentRows out;
    out.member_count = member_count;
    out.rows.resize(member_count);
    for (MemberId y = 0; y < member_count; ++y) {
        const auto& row = raw[y];
        double total = 0.0;
        for (const auto& [x, a] : row) {
            total += a;
        }
        if (total <= 0.0) {
            continue;
        }
        auto& dst = out.rows[y];
        dst.reserve(row.size());
        for (const auto& [x, a] : row) {
            if (a > 0.0) {
                dst.push_back({x, a / total});
            }
        }
        std::sort(dst.begin(), dst.end(),
                  [](const Neighbor& a, const Neighbor& b) { return a.id < b.id; });
    }
    return out;
}

}  // namespace

CommitmentRows relationship_commitment(const ActivityMatrix& acts) {
    TimeDecayConfig cfg;
    cfg.lambda = 1.0;
    cfg.periods = acts.period_count();
    return time_decayed_commitment(acts, cfg);
}

CommitmentRows time_decayed_commitment(const ActivityMatrix& acts,
                                       const TimeDecayConfig& cfg) {
    if (cfg.lambda <= 0.0 || cfg.lambda > 1.0) {
        throw Error("lambda must be in (0, 1]");
    }
    if (cfg.periods == 0 || cfg.periods > acts.period_count()) {
        throw Error("period count must be in [1, " + std::to_string(acts.period_count()) + "]");
    }

    std::vector<std::unordered_map<MemberId, double>> combined(acts.member_count());
    double weight = 1.0;  // lambda^0 applies to the most recent period
    for (std::size_t i = 0; i < cfg.periods; ++i) {
        for (MemberId y = 0; y < acts.member_count(); ++y) {
            for (const auto& [x, a] : acts.period_row(i, y)) {
                combined[y][x] += weight * a;
            }
        }
        weight *= cfg.lambda;
    }
    return normalize_rows(acts.member_count(), combined);
}

SocialNetwork redistribute_inactive(const CommitmentRows& c_rel,
                                    std::vector<std::string> labels,
                                    bool allow_isolated) {
    const std::size_t n = c_rel.member_count;
    std::vector<std::vector<MemberId>> in_neighbors(n);
    for (MemberId y = 0; y < n; ++y) {
        for (const Neighbor& nb : c_rel.rows[y]) {
            in_neighbors[nb.id].push_back(y);
        }
    }

    std::vector<WeightedEdge> edges;
    for (MemberId y = 0; y < n; ++y) {
        if (!c_rel.rows[y].empty()) {
            for (const Neighbor& nb : c_rel.rows[y]) {
                edges.push_back({y, nb.id, nb.weight});
            }
        } else if (!in_neighbors[y].empty()) {
            // Inactive member: distribute the sum 1 equally among the members
            // active toward y, using the pre-redistribution rows only.
            const double share = 1.0 / static_cast<double>(in_neighbors[y].size());
            for (MemberId x : in_neighbors[y]) {
                edges.push_back({y, x, share});
            }
        } else if (!allow_isolated) {
            throw IsolatedMemberError(labels.empty() ? std::to_string(y) : labels[y]);
        }
    }
    return SocialNetwork::build_indexed(n, std::move(edges), std::move(labels),
                                        allow_isolated);
}

}  // namespace spinrank
