#include "spinrank/graph.hpp"

#include <algorithm>
#include <cmath>
#include <unordered_map>

#include "spinrank/error.hpp"

namespace spinrank {

namespace {

void check_weight(double w, const std::string& from, const std::string& to) {
    if (!std::isfinite(w) || w < 0.0) {
        throw Error("invalid weight " + std::to_string(w) + " on edge " + from + "->" + to);
    }
}

}  // namespace

SocialNetwork SocialNetwork::build(std::vector<LabeledEdge> edges) {
    if (edges.empty()) {
        throw EmptyInputError();
    }

    std::unordered_map<std::string, MemberId> index;
    std::vector<std::string> labels;
    auto intern = [&](const std::string& label) -> MemberId {
        auto [it, inserted] = index.try_emplace(label, static_cast<MemberId>(labels.size()));
        if (inserted) {
            labels.push_back(label);
        }
        return it->second;
    };

    std::vector<WeightedEdge> indexed;
    indexed.reserve(edges.size());
    for (const LabeledEdge& e : edges) {
        if (e.from == e.to) {
            throw SelfLoopError(e.from);
        }
        check_weight(e.weight, e.from, e.to);
        indexed.push_back({intern(e.from), intern(e.to), e.weight});
    }
    const std::size_t member_count = labels.size();
    return build_indexed(member_count, std::move(indexed), std::move(labels));
}

SocialNetwork SocialNetwork::build_indexed(std::size_t member_count,
                                           std::vector<WeightedEdge> edges,
                                           std::vector<std::string> labels,
                                           bool allow_isolated) {
    if (edges.empty()) {
        throw EmptyInputError();
    }
    if (labels.empty()) {
        labels.reserve(member_count);
        for (std::size_t i = 0; i < member_count; ++i) {
            labels.push_back(std::to_string(i));
        }
    } else if (labels.size() != member_count) {
        throw InternalError("label table size does not match member count");
    }

    for (const WeightedEdge& e : edges) {
        if (e.from >= member_count || e.to >= member_count) {
            throw OutOfRangeError("edge endpoint out of range");
        }
        if (e.from == e.to) {
            throw SelfLoopError(labels[e.from]);
        }
        check_weight(e.weight, labels[e.from], labels[e.to]);
    }

    std::sort(edges.begin(), edges.end(), [](const WeightedEdge& a, const WeightedEdge& b) {
        return a.from != b.from ? a.from < b.from : a.to < b.to;
    });

    SocialNetwork net;
    net.member_count_ = member_count;
    net.labels_ = std::move(labels);
    net.src_.reserve(edges.size());
    net.dst_.reserve(edges.size());
    net.weights_.reserve(edges.size());

    // Merge duplicate (from,to) pairs by weight summation.
    for (std::size_t i = 0; i < edges.size();) {
        double w = edges[i].weight;
        std::size_t j = i + 1;
        while (j < edges.size() && edges[j].from == edges[i].from &&
               edges[j].to == edges[i].to) {
            w += edges[j].weight;
            ++j;
        }
        net.src_.push_back(edges[i].from);
        net.dst_.push_back(edges[i].to);
        net.weights_.push_back(w);
        i = j;
    }

    net.build_indexes();

    if (!allow_isolated) {
        std::vector<bool> touched(member_count, false);
        for (std::size_t e = 0; e < net.src_.size(); ++e) {
            touched[net.src_[e]] = true;
            touched[net.dst_[e]] = true;
        }
        for (std::size_t i = 0; i < member_count; ++i) {
            if (!touched[i]) {
                throw IsolatedMemberError(net.labels_[i]);
            }
        }
    }
    return net;
}

void SocialNetwork::build_indexes() {
    const std::size_t n = member_count_;
    const std::size_t m = src_.size();

    out_offsets_.assign(n + 1, 0);
    in_offsets_.assign(n + 1, 0);
    for (std::size_t e = 0; e < m; ++e) {
        ++out_offsets_[src_[e] + 1];
        ++in_offsets_[dst_[e] + 1];
    }
    for (std::size_t i = 0; i < n; ++i) {
        out_offsets_[i + 1] += out_offsets_[i];
        in_offsets_[i + 1] += in_offsets_[i];
    }

    out_adj_.resize(m);
    in_adj_.resize(m);
    std::vector<std::size_t> out_pos(out_offsets_.begin(), out_offsets_.end() - 1);
    std::vector<std::size_t> in_pos(in_offsets_.begin(), in_offsets_.end() - 1);
    for (std::size_t e = 0; e < m; ++e) {
        out_adj_[out_pos[src_[e]]++] = {dst_[e], weights_[e]};
        in_adj_[in_pos[dst_[e]]++] = {src_[e], weights_[e]};
    }
    // Edges arrive sorted by (from,to), so out slices are already ascending;
    // in slices need a per-member sort by source id.
    for (std::size_t i = 0; i < n; ++i) {
        std::sort(in_adj_.begin() + static_cast<std::ptrdiff_t>(in_offsets_[i]),
                  in_adj_.begin() + static_cast<std::ptrdiff_t>(in_offsets_[i + 1]),
                  [](const Neighbor& a, const Neighbor& b) { return a.id < b.id; });
    }
}

std::vector<Neighbor> SocialNetwork::neighbors(MemberId x, Direction dir) const {
    if (x >= member_count_) {
        throw OutOfRangeError("member id " + std::to_string(x) + " out of range (count " +
                              std::to_string(member_count_) + ")");
    }
    auto view = dir == Direction::Out ? out_edges(x) : in_edges(x);
    return {view.begin(), view.end()};
}

std::optional<MemberId> SocialNetwork::find(std::string_view label) const {
    for (std::size_t i = 0; i < labels_.size(); ++i) {
        if (labels_[i] == label) {
            return static_cast<MemberId>(i);
        }
    }
    return std::nullopt;
}

double SocialNetwork::out_weight_sum(MemberId y) const {
    double sum = 0.0;
    for (const Neighbor& nb : out_edges(y)) {
        sum += nb.weight;
    }
    return sum;
}

bool SocialNetwork::is_symmetric() const {
    for (std::size_t e = 0; e < src_.size(); ++e) {
        auto rev = in_edges(src_[e]);
        auto it = std::lower_bound(rev.begin(), rev.end(), dst_[e],
                                   [](const Neighbor& nb, MemberId id) { return nb.id < id; });
        if (it == rev.end() || it->id != dst_[e]) {
            return false;
        }
    }
    return true;
}

ValidationReport validate_commitment(const SocialNetwork& net, double tol,
                                     bool exempt_inactive) {
    ValidationReport report;
    for (MemberId y = 0; y < net.member_count(); ++y) {
        auto out = net.out_edges(y);
        auto in = net.in_edges(y);
        if (out.empty() && in.empty()) {
            report.isolated.push_back(y);
        }
        if (!out.empty()) {
            double sum = 0.0;
            for (const Neighbor& nb : out) {
                sum += nb.weight;
                if (nb.weight < 0.0 || nb.weight > 1.0) {
                    report.out_of_range.push_back({y, nb.id, nb.weight});
                }
            }
            if (std::abs(sum - 1.0) > tol) {
                report.bad_row_sums.push_back({y, sum});
            }
        } else if (!in.empty() && !exempt_inactive) {
            // Member with incoming edges only: row sum 0, reported so
            // redistribution can be applied.
            report.bad_row_sums.push_back({y, 0.0});
        }
    }
    return report;
}

}  // namespace spinrank
