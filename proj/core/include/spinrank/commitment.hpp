#pragma once

#include <cstddef>
#include <string>
#include <unordered_map>
#include <vector>

#include "spinrank/graph.hpp"

namespace spinrank {

// Sparse per-ordered-pair raw activity totals, optionally split into time
// periods (period 0 is the most recent).
class ActivityMatrix {
public:
    explicit ActivityMatrix(std::size_t member_count, std::size_t period_count = 1);

    std::size_t member_count() const { return member_count_; }
    std::size_t period_count() const { return periods_.size(); }

    // Accumulates activity from y toward x. Throws on self-activity, negative
    // or non-finite amount, or out-of-range ids/period.
    void add(MemberId y, MemberId x, double amount, std::size_t period = 0);

    // Row of one period: x -> raw activity.
    const std::unordered_map<MemberId, double>& period_row(std::size_t period,
                                                           MemberId y) const {
        return periods_[period][y];
    }

private:
    std::size_t member_count_;
    // periods_[i][y] maps x -> A_i(y->x)
    std::vector<std::vector<std::unordered_map<MemberId, double>>> periods_;
};

struct TimeDecayConfig {
    double lambda = 1.0;     // in (0, 1]
    std::size_t periods = 1;  // k >= 1
};

// Rows of a sparse commitment map; rows[y] lists strictly positive entries,
// sorted by target id.
struct CommitmentRows {
    std::size_t member_count = 0;
    std::vector<std::vector<Neighbor>> rows;
};

// Per-row normalization of raw activity: rows with zero total stay empty.
CommitmentRows relationship_commitment(const ActivityMatrix& acts);

// Time-decayed variant: activity in period i is weighted by lambda^i before
// the per-row normalization.
CommitmentRows time_decayed_commitment(const ActivityMatrix& acts,
                                       const TimeDecayConfig& cfg);

// Builds the final commitment network: active rows are copied unchanged; each
// inactive member with k in-neighbors gets k outgoing edges of weight 1/k
// (single pass, targets taken from the pre-redistribution rows). Throws
// IsolatedMemberError for members with no entries in either direction unless
// allow_isolated is set.
SocialNetwork redistribute_inactive(const CommitmentRows& c_rel,
                                    std::vector<std::string> labels = {},
                                    bool allow_isolated = false);

}  // namespace spinrank
