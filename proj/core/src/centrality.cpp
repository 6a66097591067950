#include "spinrank/centrality.hpp"

#include <algorithm>
#include <cstdint>
#include <queue>

#include "spinrank/error.hpp"

namespace spinrank {

const char* to_string(Measure measure) {
    switch (measure) {
        case Measure::Degree: return "degree";
        case Measure::InDegree: return "indegree";
        case Measure::OutDegree: return "outdegree";
        case Measure::DegreePrestige: return "degree_prestige";
        case Measure::Closeness: return "closeness";
        case Measure::Betweenness: return "betweenness";
        case Measure::InfluenceDomain: return "influence_domain";
        case Measure::ProximityPrestige: return "proximity_prestige";
    }
    return "?";
}

Measure parse_measure(std::string_view name) {
    if (name == "degree") return Measure::Degree;
    if (name == "indegree") return Measure::InDegree;
    if (name == "outdegree") return Measure::OutDegree;
    if (name == "degree_prestige") return Measure::DegreePrestige;
    if (name == "closeness") return Measure::Closeness;
    if (name == "betweenness") return Measure::Betweenness;
    if (name == "influence_domain") return Measure::InfluenceDomain;
    if (name == "proximity_prestige") return Measure::ProximityPrestige;
    throw Error("unknown measure '" + std::string(name) + "'");
}

namespace {

// BFS over one direction; fills hop distances (-1 when unreachable).
void bfs_distances(const SocialNetwork& net, MemberId start, Direction dir,
                   std::vector<std::int64_t>& dist) {
    dist.assign(net.member_count(), -1);
    dist[start] = 0;
    std::queue<MemberId> queue;
    queue.push(start);
    while (!queue.empty()) {
        MemberId u = queue.front();
        queue.pop();
        auto edges = dir == Direction::Out ? net.out_edges(u) : net.in_edges(u);
        for (const Neighbor& nb : edges) {
            if (dist[nb.id] < 0) {
                dist[nb.id] = dist[u] + 1;
                queue.push(nb.id);
            }
        }
    }
}

}  // namespace

CentralityScores degree(const SocialNetwork& net, DegreeDirection dir, bool normalized) {
    const std::size_t n = net.member_count();
    CentralityScores scores{dir == DegreeDirection::In
                                ? Measure::InDegree
                                : dir == DegreeDirection::Out ? Measure::OutDegree
                                                              : Measure::Degree,
                            normalized, std::vector<double>(n, 0.0)};
    for (MemberId x = 0; x < n; ++x) {
        std::size_t count = 0;
        if (dir == DegreeDirection::In) {
            count = net.in_edges(x).size();
        } else if (dir == DegreeDirection::Out) {
            count = net.out_edges(x).size();
        } else {
            // Distinct neighbors over both directions (merge of sorted lists).
            auto in = net.in_edges(x);
            auto out = net.out_edges(x);
            std::size_t i = 0;
            std::size_t j = 0;
            while (i < in.size() || j < out.size()) {
                if (j == out.size() || (i < in.size() && in[i].id < out[j].id)) {
                    ++i;
                } else if (i == in.size() || out[j].id < in[i].id) {
                    ++j;
                } else {
                    ++i;
                    ++j;
                }
                ++count;
            }
        }
        double v = static_cast<double>(count);
        if (normalized && n > 1) {
            v /= static_cast<double>(n - 1);
        }
        scores.values[x] = v;
    }
    return scores;
}

CentralityScores closeness(const SocialNetwork& net, bool normalized) {
    const std::size_t n = net.member_count();
    CentralityScores scores{Measure::Closeness, normalized, std::vector<double>(n, 0.0)};
    std::vector<std::int64_t> dist;
    for (MemberId x = 0; x < n; ++x) {
        bfs_distances(net, x, Direction::Out, dist);
        std::int64_t sum = 0;
        std::size_t reachable = 0;
        for (MemberId y = 0; y < n; ++y) {
            if (y != x && dist[y] > 0) {
                sum += dist[y];
                ++reachable;
            }
        }
        if (reachable == 0 || sum == 0) {
            continue;
        }
        double r = static_cast<double>(reachable);
        double value = r / static_cast<double>(sum);
        if (normalized) {
            value *= n > 1 ? r / static_cast<double>(n - 1) : 0.0;
        } else {
            // Reciprocal of the distance sum over reached members.
            value = 1.0 / static_cast<double>(sum);
        }
        scores.values[x] = value;
    }
    return scores;
}

CentralityScores betweenness(const SocialNetwork& net, bool normalized) {
    const std::size_t n = net.member_count();
    CentralityScores scores{Measure::Betweenness, normalized, std::vector<double>(n, 0.0)};
    const bool symmetric = net.is_symmetric();

    // Brandes accumulation, one BFS per source.
    std::vector<double> sigma(n);
    std::vector<double> delta(n);
    std::vector<std::int64_t> dist(n);
    std::vector<MemberId> order;
    order.reserve(n);

    for (MemberId s = 0; s < n; ++s) {
        std::fill(sigma.begin(), sigma.end(), 0.0);
        std::fill(delta.begin(), delta.end(), 0.0);
        std::fill(dist.begin(), dist.end(), -1);
        order.clear();

        sigma[s] = 1.0;
        dist[s] = 0;
        std::queue<MemberId> queue;
        queue.push(s);
        while (!queue.empty()) {
            MemberId u = queue.front();
            queue.pop();
            order.push_back(u);
            for (const Neighbor& nb : net.out_edges(u)) {
                if (dist[nb.id] < 0) {
                    dist[nb.id] = dist[u] + 1;
                    queue.push(nb.id);
                }
                if (dist[nb.id] == dist[u] + 1) {
                    sigma[nb.id] += sigma[u];
                }
            }
        }
        for (auto it = order.rbegin(); it != order.rend(); ++it) {
            MemberId w = *it;
            for (const Neighbor& nb : net.out_edges(w)) {
                if (dist[nb.id] == dist[w] + 1) {
                    delta[w] += sigma[w] / sigma[nb.id] * (1.0 + delta[nb.id]);
                }
            }
            if (w != s) {
                scores.values[w] += delta[w];
            }
        }
    }

    if (symmetric) {
        // Each undirected pair was visited from both endpoints.
        for (double& v : scores.values) {
            v *= 0.5;
        }
    }
    if (normalized && n > 2) {
        double denom = static_cast<double>(n - 1) * static_cast<double>(n - 2);
        if (symmetric) {
            denom *= 0.5;
        }
        for (double& v : scores.values) {
            v /= denom;
        }
    }
    return scores;
}

CentralityScores influence_domain(const SocialNetwork& net) {
    const std::size_t n = net.member_count();
    CentralityScores scores{Measure::InfluenceDomain, false, std::vector<double>(n, 0.0)};
    std::vector<std::int64_t> dist;
    for (MemberId x = 0; x < n; ++x) {
        bfs_distances(net, x, Direction::In, dist);
        std::size_t count = 0;
        for (MemberId y = 0; y < n; ++y) {
            if (y != x && dist[y] > 0) {
                ++count;
            }
        }
        scores.values[x] = static_cast<double>(count);
    }
    return scores;
}

CentralityScores proximity_prestige(const SocialNetwork& net, bool normalized) {
    const std::size_t n = net.member_count();
    CentralityScores scores{Measure::ProximityPrestige, normalized,
                            std::vector<double>(n, 0.0)};
    std::vector<std::int64_t> dist;
    for (MemberId x = 0; x < n; ++x) {
        bfs_distances(net, x, Direction::In, dist);
        std::int64_t sum = 0;
        std::size_t influence = 0;
        for (MemberId y = 0; y < n; ++y) {
            if (y != x && dist[y] > 0) {
                sum += dist[y];
                ++influence;
            }
        }
        if (influence == 0 || sum == 0) {
            continue;
        }
        double ix = static_cast<double>(influence);
        double value = ix / static_cast<double>(sum);
        if (normalized && n > 1) {
            value = ix * ix / (static_cast<double>(n - 1) * static_cast<double>(sum));
        }
        scores.values[x] = value;
    }
    return scores;
}

CentralityScores compute_centrality(const SocialNetwork& net, Measure measure,
                                    bool normalized) {
    switch (measure) {
        case Measure::Degree: return degree(net, DegreeDirection::Both, normalized);
        case Measure::InDegree: return degree(net, DegreeDirection::In, normalized);
        case Measure::OutDegree: return degree(net, DegreeDirection::Out, normalized);
        case Measure::DegreePrestige: {
            CentralityScores s = degree(net, DegreeDirection::In, normalized);
            s.measure = Measure::DegreePrestige;
            return s;
        }
        case Measure::Closeness: return closeness(net, normalized);
        case Measure::Betweenness: return betweenness(net, normalized);
        case Measure::InfluenceDomain: return influence_domain(net);
        case Measure::ProximityPrestige: return proximity_prestige(net, normalized);
    }
    throw InternalError("unreachable measure");
}

}  // namespace spinrank
