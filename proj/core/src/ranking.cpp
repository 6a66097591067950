#include "spinrank/ranking.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <sstream>

#include "spinrank/error.hpp"
#include "spinrank/io.hpp"

namespace spinrank {

Ranking make_ranking(std::span<const double> scores) {
    const std::size_t n = scores.size();
    for (std::size_t i = 0; i < n; ++i) {
        if (!std::isfinite(scores[i])) {
            throw NonFiniteError(i);
        }
    }
    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
        return scores[a] > scores[b];
    });

    Ranking ranking;
    ranking.positions.assign(n, 0);
    std::size_t i = 0;
    while (i < n) {
        std::size_t j = i;
        while (j < n && scores[order[j]] == scores[order[i]]) {
            ++j;
        }
        // Tied block [i, j) shares position i+1; positions i+2..j stay empty.
        for (std::size_t k = i; k < j; ++k) {
            ranking.positions[order[k]] = i + 1;
        }
        i = j;
    }
    return ranking;
}

namespace {

// Counts strict inversions on values (pairs i<j with values[i] > values[j]).
std::uint64_t count_inversions(std::vector<std::uint64_t>& values,
                               std::vector<std::uint64_t>& scratch) {
    const std::size_t n = values.size();
    std::uint64_t inversions = 0;
    for (std::size_t width = 1; width < n; width *= 2) {
        for (std::size_t lo = 0; lo + width < n; lo += 2 * width) {
            const std::size_t mid = lo + width;
            const std::size_t hi = std::min(lo + 2 * width, n);
            std::size_t i = lo;
            std::size_t j = mid;
            std::size_t k = lo;
            while (i < mid && j < hi) {
                if (values[j] < values[i]) {
                    inversions += mid - i;
                    scratch[k++] = values[j++];
                } else {
                    scratch[k++] = values[i++];
                }
            }
            while (i < mid) {
                scratch[k++] = values[i++];
            }
            while (j < hi) {
                scratch[k++] = values[j++];
            }
            std::copy(scratch.begin() + static_cast<std::ptrdiff_t>(lo),
                      scratch.begin() + static_cast<std::ptrdiff_t>(hi),
                      values.begin() + static_cast<std::ptrdiff_t>(lo));
        }
    }
    return inversions;
}

// Sum over groups of equal keys of pairs within the group; keys must be sorted.
template <typename It, typename Eq>
std::uint64_t tied_pairs(It first, It last, Eq eq) {
    std::uint64_t total = 0;
    while (first != last) {
        It next = first;
        std::uint64_t run = 0;
        while (next != last && eq(*first, *next)) {
            ++next;
            ++run;
        }
        total += run * (run - 1) / 2;
        first = next;
    }
    return total;
}

}  // namespace

double kendall(std::span<const std::uint64_t> x, std::span<const std::uint64_t> y) {
    if (x.size() != y.size()) {
        throw LengthMismatchError(x.size(), y.size());
    }
    const std::size_t n = x.size();
    if (n < 2) {
        throw TooSmallError("kendall requires at least 2 items");
    }

    // Knight's algorithm: sort by (x, y), then concordant - discordant over
    // untied pairs equals (untied pairs) - 2 * (y-inversions).
    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
        return x[a] != x[b] ? x[a] < x[b] : y[a] < y[b];
    });

    std::vector<std::pair<std::uint64_t, std::uint64_t>> sorted(n);
    for (std::size_t i = 0; i < n; ++i) {
        sorted[i] = {x[order[i]], y[order[i]]};
    }

    const std::uint64_t n0 = static_cast<std::uint64_t>(n) * (n - 1) / 2;
    const std::uint64_t n1 = tied_pairs(sorted.begin(), sorted.end(),
                                        [](auto& a, auto& b) { return a.first == b.first; });
    const std::uint64_t n3 = tied_pairs(sorted.begin(), sorted.end(), [](auto& a, auto& b) {
        return a.first == b.first && a.second == b.second;
    });

    std::vector<std::uint64_t> ys(n);
    for (std::size_t i = 0; i < n; ++i) {
        ys[i] = sorted[i].second;
    }
    std::vector<std::uint64_t> scratch(n);
    const std::uint64_t discordant = count_inversions(ys, scratch);
    // ys is now sorted; count pairs tied in y.
    const std::uint64_t n2 =
        tied_pairs(ys.begin(), ys.end(), [](auto a, auto b) { return a == b; });

    // Pairs untied in both rankings: C + D.
    const double untied = static_cast<double>(n0 - n1 - n2 + n3);
    const double numerator = untied - 2.0 * static_cast<double>(discordant);
    // Eq-style double loop runs over ordered pairs: 2 * (C - D) / (n (n-1)).
    return 2.0 * numerator / (static_cast<double>(n) * static_cast<double>(n - 1));
}

double kendall(const Ranking& rank_x, const Ranking& rank_y) {
    return kendall(std::span<const std::uint64_t>(rank_x.positions),
                   std::span<const std::uint64_t>(rank_y.positions));
}

DistributionReport sp_distribution(std::span<const double> scores) {
    DistributionReport report;
    if (scores.empty()) {
        return report;
    }
    double sum = 0.0;
    report.min = scores[0];
    report.max = scores[0];
    for (double v : scores) {
        if (!std::isfinite(v)) {
            throw NonFiniteError(static_cast<std::size_t>(&v - scores.data()));
        }
        std::size_t cls;
        if (v <= 1.0) {
            cls = 0;
        } else if (v < 10.0) {
            cls = 1;
        } else if (v < 100.0) {
            cls = 2;
        } else if (v < 1000.0) {
            cls = 3;
        } else {
            cls = 4;
        }
        ++report.class_counts[cls];
        sum += v;
        report.min = std::min(report.min, v);
        report.max = std::max(report.max, v);
    }
    const double n = static_cast<double>(scores.size());
    report.mean = sum / n;
    double sq = 0.0;
    for (double v : scores) {
        sq += (v - report.mean) * (v - report.mean);
    }
    report.std_dev = std::sqrt(sq / n);
    for (std::size_t i = 0; i < report.class_counts.size(); ++i) {
        report.class_percentages[i] =
            100.0 * static_cast<double>(report.class_counts[i]) / n;
    }
    return report;
}

std::string format_distribution(const DistributionReport& report) {
    static const char* kClassNames[] = {"SP <= 1", "1 < SP < 10", "10 <= SP < 100",
                                        "100 <= SP < 1000", "SP >= 1000"};
    std::ostringstream out;
    for (std::size_t i = 0; i < report.class_counts.size(); ++i) {
        out << kClassNames[i];
        for (std::size_t pad = std::string(kClassNames[i]).size(); pad < 20; ++pad) {
            out << ' ';
        }
        out << report.class_counts[i] << " (" << format_double(report.class_percentages[i])
            << "%)\n";
    }
    out << "Average SP          " << format_double(report.mean) << '\n'
        << "Std. Dev. SP        " << format_double(report.std_dev) << '\n'
        << "Min SP value        " << format_double(report.min) << '\n'
        << "Max SP value        " << format_double(report.max) << '\n';
    return out.str();
}

DuplicateReport duplicate_stats(std::span<const double> scores) {
    DuplicateReport report;
    if (scores.empty()) {
        return report;
    }
    std::vector<double> sorted(scores.begin(), scores.end());
    for (std::size_t i = 0; i < sorted.size(); ++i) {
        if (!std::isfinite(sorted[i])) {
            throw NonFiniteError(i);
        }
    }
    std::sort(sorted.begin(), sorted.end());
    std::size_t distinct =
        static_cast<std::size_t>(std::unique(sorted.begin(), sorted.end()) - sorted.begin());
    report.duplicates = scores.size() - distinct;
    report.percentage =
        100.0 * static_cast<double>(report.duplicates) / static_cast<double>(scores.size());
    return report;
}

}  // namespace spinrank
