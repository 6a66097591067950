#pragma once

#include <string>
#include <vector>

#include "spinrank/graph.hpp"

namespace spinrank {

enum class Measure {
    Degree,
    InDegree,
    OutDegree,
    DegreePrestige,  // alias for InDegree
    Closeness,
    Betweenness,
    InfluenceDomain,
    ProximityPrestige,
};

const char* to_string(Measure measure);
Measure parse_measure(std::string_view name);

struct CentralityScores {
    Measure measure;
    bool normalized = false;
    std::vector<double> values;
};

enum class DegreeDirection { In, Out, Both };

// Count of distinct neighbors in the given direction; weights are ignored.
// Normalization divides by n-1.
CentralityScores degree(const SocialNetwork& net, DegreeDirection dir, bool normalized);

// Outward geodesic closeness with reachable-set scaling:
// (r_x / sum of distances) * (r_x / (n-1)); members reaching nothing score 0.
// On strongly connected inputs this is the classical (n-1)/sum form.
CentralityScores closeness(const SocialNetwork& net, bool normalized);

// Shortest-path betweenness via per-source dependency accumulation. On
// structurally symmetric networks each undirected pair is counted once and
// the normalizer is (n-1)(n-2)/2; otherwise (n-1)(n-2).
CentralityScores betweenness(const SocialNetwork& net, bool normalized);

// Number of members with a directed path to x.
CentralityScores influence_domain(const SocialNetwork& net);

// Influence domain combined with inward closeness; normalized form is
// I_x^2 / ((n-1) * sum of inward distances). I_x = 0 scores 0.
CentralityScores proximity_prestige(const SocialNetwork& net, bool normalized);

CentralityScores compute_centrality(const SocialNetwork& net, Measure measure,
                                    bool normalized);

}  // namespace spinrank
