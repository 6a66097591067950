#include "spinrank/netgen.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <random>
#include <unordered_set>

#include "spinrank/commitment.hpp"
#include "spinrank/error.hpp"

namespace spinrank {

namespace {

// splitmix64, used to derive independent sub-seeds from the user seed.
std::uint64_t split_seed(std::uint64_t state) {
    std::uint64_t z = state + 0x9e3779b97f4a7c15ULL;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

// Unbiased bounded draw; fixed rejection scheme for cross-platform output.
std::uint64_t bounded(std::mt19937_64& rng, std::uint64_t n) {
    const std::uint64_t reject_below = (0 - n) % n;  // 2^64 mod n
    std::uint64_t r;
    do {
        r = rng();
    } while (r < reject_below);
    return r % n;
}

// Uniform draw in (0, 1] from the top 53 bits.
double uniform01(std::mt19937_64& rng) {
    return (static_cast<double>(rng() >> 11) + 1.0) * 0x1.0p-53;
}

std::uint64_t encode(std::size_t n, MemberId from, MemberId to) {
    return static_cast<std::uint64_t>(from) * n + to;
}

}  // namespace

SocialNetwork generate(const GenSpec& spec) {
    const std::size_t n = spec.node_count;
    const std::size_t m = spec.edge_count;
    if (n < 2) {
        throw Error("node count must be >= 2");
    }
    const std::size_t capacity = n * (n - 1);
    if (m > capacity) {
        throw TooManyEdgesError(m, capacity);
    }
    if (m == 0) {
        throw EmptyInputError();
    }
    if (!spec.allow_isolated && 2 * m < n) {
        throw Error("cannot avoid isolated members: " + std::to_string(m) +
                    " edges cover at most " + std::to_string(2 * m) + " of " +
                    std::to_string(n) + " nodes (use allow_isolated)");
    }

    std::mt19937_64 structure_rng(split_seed(spec.seed));
    std::mt19937_64 weight_rng(split_seed(spec.seed + 1));

    // Sample m distinct ordered pairs without self-loops.
    std::vector<std::pair<MemberId, MemberId>> pairs;
    pairs.reserve(m);
    std::unordered_set<std::uint64_t> used;
    used.reserve(m * 2);
    if (m * 2 <= capacity) {
        while (pairs.size() < m) {
            auto from = static_cast<MemberId>(bounded(structure_rng, n));
            auto to = static_cast<MemberId>(bounded(structure_rng, n));
            if (from == to) {
                continue;
            }
            if (used.insert(encode(n, from, to)).second) {
                pairs.emplace_back(from, to);
            }
        }
    } else {
        // Dense case: sample the complement, then keep everything else.
        std::unordered_set<std::uint64_t> excluded;
        excluded.reserve((capacity - m) * 2);
        while (excluded.size() < capacity - m) {
            auto from = static_cast<MemberId>(bounded(structure_rng, n));
            auto to = static_cast<MemberId>(bounded(structure_rng, n));
            if (from != to) {
                excluded.insert(encode(n, from, to));
            }
        }
        for (MemberId from = 0; from < n; ++from) {
            for (MemberId to = 0; to < n; ++to) {
                if (from != to && !excluded.contains(encode(n, from, to))) {
                    pairs.emplace_back(from, to);
                    used.insert(encode(n, from, to));
                }
            }
        }
    }

    // Rewire isolates away: repoint one endpoint of an edge whose other
    // endpoint keeps coverage. Each swap covers exactly one isolate.
    if (!spec.allow_isolated) {
        std::vector<std::uint32_t> degree(n, 0);
        for (const auto& [from, to] : pairs) {
            ++degree[from];
            ++degree[to];
        }
        std::size_t cursor = 0;
        for (MemberId v = 0; v < n; ++v) {
            if (degree[v] != 0) {
                continue;
            }
            bool fixed = false;
            for (std::size_t scanned = 0; scanned < pairs.size(); ++scanned) {
                auto& [from, to] = pairs[cursor];
                cursor = (cursor + 1) % pairs.size();
                std::pair<MemberId, MemberId> replacement;
                if (degree[from] >= 2) {
                    replacement = {v, to};
                } else if (degree[to] >= 2) {
                    replacement = {from, v};
                } else {
                    continue;
                }
                used.erase(encode(n, from, to));
                --degree[from];
                --degree[to];
                std::tie(from, to) = replacement;
                used.insert(encode(n, from, to));
                ++degree[from];
                ++degree[to];
                fixed = true;
                break;
            }
            if (!fixed) {
                throw InternalError("isolate rewiring failed to find a swappable edge");
            }
        }
    }

    // Canonical order before weight assignment keeps output seed-deterministic
    // regardless of sampling path.
    std::sort(pairs.begin(), pairs.end());

    CommitmentRows rows;
    {
        ActivityMatrix acts(n);
        for (const auto& [from, to] : pairs) {
            double raw = spec.weight_mode == WeightMode::UniformNormalized
                             ? uniform01(weight_rng)
                             : 1.0;
            acts.add(from, to, raw);
        }
        rows = relationship_commitment(acts);
    }
    return redistribute_inactive(rows, {}, spec.allow_isolated);
}

std::vector<GenSpec> read_grid_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) {
        throw IoError(path, "cannot open for reading");
    }
    std::vector<GenSpec> grid;
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (!line.empty() && line.back() == '\r') {
            line.pop_back();
        }
        if (line.empty() || line[0] == '#' || line.rfind("nodes", 0) == 0) {
            continue;
        }
        GenSpec spec;
        std::uint64_t fields[3] = {0, 0, 0};
        const char* ptr = line.data();
        const char* end = line.data() + line.size();
        for (int f = 0; f < 3; ++f) {
            auto [next, ec] = std::from_chars(ptr, end, fields[f]);
            if (ec != std::errc{}) {
                throw MalformedRecordError(line_no, "expected nodes,edges,seed in " + path);
            }
            ptr = next;
            if (f < 2) {
                if (ptr == end || *ptr != ',') {
                    throw MalformedRecordError(line_no,
                                               "expected nodes,edges,seed in " + path);
                }
                ++ptr;
            }
        }
        if (ptr != end) {
            throw MalformedRecordError(line_no, "trailing characters in " + path);
        }
        spec.node_count = fields[0];
        spec.edge_count = fields[1];
        spec.seed = fields[2];
        grid.push_back(spec);
    }
    return grid;
}

}  // namespace spinrank
