#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace spinrank {

using MemberId = std::uint32_t;

// One directed edge over external labels, as read from input files.
struct LabeledEdge {
    std::string from;
    std::string to;
    double weight = 0.0;
};

// One directed edge over dense member ids.
struct WeightedEdge {
    MemberId from = 0;
    MemberId to = 0;
    double weight = 0.0;
};

struct Neighbor {
    MemberId id = 0;
    double weight = 0.0;
};

enum class Direction { In, Out };

struct ValidationReport {
    struct RowSum {
        MemberId member;
        double sum;
    };
    struct RangeViolation {
        MemberId from;
        MemberId to;
        double weight;
    };
    std::vector<RowSum> bad_row_sums;    // out-weight sum deviates from 1 by more than tol
    std::vector<MemberId> isolated;      // no incident edge in either direction
    std::vector<RangeViolation> out_of_range;  // weight outside [0,1]

    bool ok() const {
        return bad_row_sums.empty() && isolated.empty() && out_of_range.empty();
    }
};

// Immutable sparse directed weighted graph with forward and reverse adjacency.
// Members carry dense ids 0..member_count-1; external labels live in a side table.
// Edges are stored in compressed per-member slices, sorted by (from, to).
class SocialNetwork {
public:
    // Builds from labeled input. Duplicate (from,to) rows are merged by summing
    // weights before validation. Throws SelfLoopError, EmptyInputError, or
    // Error on non-finite / negative weights.
    static SocialNetwork build(std::vector<LabeledEdge> edges);

    // Builds from pre-indexed edges over a fixed member set. When labels is
    // empty, decimal ids are used as labels. Throws IsolatedMemberError unless
    // allow_isolated is set.
    static SocialNetwork build_indexed(std::size_t member_count,
                                       std::vector<WeightedEdge> edges,
                                       std::vector<std::string> labels = {},
                                       bool allow_isolated = false);

    std::size_t member_count() const { return member_count_; }
    std::size_t edge_count() const { return dst_.size(); }

    // Outgoing edges of y, ascending target id. Unchecked span access.
    std::span<const Neighbor> out_edges(MemberId y) const {
        return {out_adj_.data() + out_offsets_[y],
                out_offsets_[y + 1] - out_offsets_[y]};
    }
    // Incoming edges of x, ascending source id.
    std::span<const Neighbor> in_edges(MemberId x) const {
        return {in_adj_.data() + in_offsets_[x],
                in_offsets_[x + 1] - in_offsets_[x]};
    }

    // Range-checked neighborhood lookup; throws OutOfRangeError.
    std::vector<Neighbor> neighbors(MemberId x, Direction dir) const;

    // Flat edge arrays sorted by (from, to); one entry per edge.
    std::span<const MemberId> edge_sources() const { return src_; }
    std::span<const MemberId> edge_targets() const { return dst_; }
    std::span<const double> edge_weights() const { return weights_; }

    const std::string& label(MemberId id) const { return labels_[id]; }
    const std::vector<std::string>& labels() const { return labels_; }
    std::optional<MemberId> find(std::string_view label) const;

    double out_weight_sum(MemberId y) const;

    // True when every edge has a structural reverse edge (weights ignored).
    bool is_symmetric() const;

private:
    SocialNetwork() = default;
    void build_indexes();

    std::size_t member_count_ = 0;
    std::vector<std::string> labels_;

    std::vector<MemberId> src_;
    std::vector<MemberId> dst_;
    std::vector<double> weights_;

    std::vector<std::size_t> out_offsets_;  // member_count_+1
    std::vector<Neighbor> out_adj_;
    std::vector<std::size_t> in_offsets_;
    std::vector<Neighbor> in_adj_;
};

// Checks the commitment constraints: every member's outgoing weights sum to 1
// within tol, no isolated members, all weights in [0,1]. Members without any
// outgoing edge violate the row-sum constraint unless exempt_inactive is set
// (redistribution eliminates such members before a network is considered final).
ValidationReport validate_commitment(const SocialNetwork& net, double tol = 1e-9,
                                     bool exempt_inactive = false);

}  // namespace spinrank
