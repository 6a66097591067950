#include "helpers.hpp"

#include <queue>

namespace testutil {

namespace {

// BFS from `s`: geodesic distance and geodesic count to every member.
void bfs_counts(const spinrank::SocialNetwork& net, spinrank::MemberId s,
                std::vector<long long>& dist, std::vector<double>& sigma) {
    const std::size_t n = net.member_count();
    dist.assign(n, -1);
    sigma.assign(n, 0.0);
    dist[s] = 0;
    sigma[s] = 1.0;
    std::queue<spinrank::MemberId> q;
    q.push(s);
    while (!q.empty()) {
        spinrank::MemberId v = q.front();
        q.pop();
        for (const spinrank::Neighbor& nb : net.out_edges(v)) {
            if (dist[nb.id] < 0) {
                dist[nb.id] = dist[v] + 1;
                q.push(nb.id);
            }
            if (dist[nb.id] == dist[v] + 1) {
                sigma[nb.id] += sigma[v];
            }
        }
    }
}

}  // namespace

std::vector<double> betweenness_oracle(const spinrank::SocialNetwork& net) {
    const std::size_t n = net.member_count();
    std::vector<std::vector<long long>> dist(n);
    std::vector<std::vector<double>> sigma(n);
    for (spinrank::MemberId s = 0; s < n; ++s) {
        bfs_counts(net, s, dist[s], sigma[s]);
    }

    // sigma_st(v) = sigma_s(v) * sigma_v(t) whenever v lies on an s-t geodesic.
    std::vector<double> score(n, 0.0);
    for (spinrank::MemberId v = 0; v < n; ++v) {
        for (spinrank::MemberId s = 0; s < n; ++s) {
            if (s == v) {
                continue;
            }
            for (spinrank::MemberId t = 0; t < n; ++t) {
                if (t == s || t == v) {
                    continue;
                }
                if (dist[s][t] < 0 || dist[s][v] < 0 || dist[v][t] < 0) {
                    continue;
                }
                if (dist[s][v] + dist[v][t] != dist[s][t]) {
                    continue;
                }
                score[v] += sigma[s][v] * sigma[v][t] / sigma[s][t];
            }
        }
    }
    if (net.is_symmetric()) {
        for (double& x : score) {
            x /= 2.0;
        }
    }
    return score;
}

}  // namespace testutil
