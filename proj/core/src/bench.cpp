#include "spinrank/bench.hpp"

#include <algorithm>
#include <cmath>
#include <ostream>

#include "spinrank/error.hpp"
#include "spinrank/io.hpp"

namespace spinrank {

double BenchRecord::mean_ms() const {
    if (iteration_ms.empty()) {
        return 0.0;
    }
    double sum = 0.0;
    for (double ms : iteration_ms) {
        sum += ms;
    }
    return sum / static_cast<double>(iteration_ms.size());
}

double BenchRecord::std_ms() const {
    if (iteration_ms.empty()) {
        return 0.0;
    }
    const double mean = mean_ms();
    double sq = 0.0;
    for (double ms : iteration_ms) {
        sq += (ms - mean) * (ms - mean);
    }
    return std::sqrt(sq / static_cast<double>(iteration_ms.size()));
}

double BenchRecord::median_ms() const {
    if (iteration_ms.empty()) {
        return 0.0;
    }
    std::vector<double> sorted = iteration_ms;
    std::sort(sorted.begin(), sorted.end());
    const std::size_t mid = sorted.size() / 2;
    return sorted.size() % 2 == 1 ? sorted[mid] : 0.5 * (sorted[mid - 1] + sorted[mid]);
}

std::vector<BenchRecord> bench_spin(const SocialNetwork& net, const SpinConfig& cfg,
                                    const std::vector<SpinVariant>& variants,
                                    std::size_t repetitions) {
    if (variants.empty() || repetitions == 0) {
        return {};
    }

    std::vector<BenchRecord> records;
    std::vector<std::vector<double>> final_sp(variants.size());

    for (std::size_t v = 0; v < variants.size(); ++v) {
        for (std::size_t rep = 0; rep < repetitions; ++rep) {
            SpinResult result = run_spin(net, cfg, variants[v]);
            if (rep == 0) {
                final_sp[v] = result.sp.values;
            }
            BenchRecord record;
            record.variant = variants[v];
            record.node_count = net.member_count();
            record.edge_count = net.edge_count();
            record.epsilon = cfg.epsilon;
            record.iterations = result.iterations;
            record.converged = result.converged;
            for (std::size_t i = result.log.size() > 1 ? 1 : 0; i < result.log.size(); ++i) {
                record.iteration_ms.push_back(result.log[i].duration_ms);
            }
            records.push_back(std::move(record));
        }
    }

    for (std::size_t v = 1; v < variants.size(); ++v) {
        for (std::size_t i = 0; i < final_sp[0].size(); ++i) {
            if (std::abs(final_sp[v][i] - final_sp[0][i]) > 1e-12) {
                throw VariantMismatchError(
                    std::string("SP mismatch between ") + to_string(variants[0]) + " and " +
                    to_string(variants[v]) + " at member " + std::to_string(i));
            }
        }
    }
    return records;
}

void write_bench_csv(const std::vector<BenchRecord>& records, std::ostream& out,
                     bool header) {
    if (header) {
        out << "variant,nodes,edges,epsilon,mean_iter_ms,std_iter_ms,iterations\n";
    }
    for (const BenchRecord& r : records) {
        out << to_string(r.variant) << ',' << r.node_count << ',' << r.edge_count << ','
            << format_double(r.epsilon) << ',' << format_double(r.mean_ms()) << ','
            << format_double(r.std_ms()) << ',' << r.iterations << '\n';
    }
}

void bench_grid(const std::vector<GenSpec>& grid, const SpinConfig& cfg,
                std::ostream& out) {
    const std::vector<SpinVariant> variants = {SpinVariant::Nodes, SpinVariant::Edges,
                                               SpinVariant::Hybrid};
    out << "variant,nodes,edges,epsilon,mean_iter_ms,std_iter_ms,iterations\n";

    struct RatioRow {
        std::size_t nodes;
        std::size_t edges;
        double nodes_over_edges;
        double hybrid_over_edges;
    };
    std::vector<RatioRow> ratios;

    for (const GenSpec& spec : grid) {
        SocialNetwork net = generate(spec);
        std::vector<BenchRecord> records = bench_spin(net, cfg, variants, 1);
        write_bench_csv(records, out, false);

        double nodes_ms = 0.0;
        double edges_ms = 0.0;
        double hybrid_ms = 0.0;
        for (const BenchRecord& r : records) {
            switch (r.variant) {
                case SpinVariant::Nodes: nodes_ms = r.mean_ms(); break;
                case SpinVariant::Edges: edges_ms = r.mean_ms(); break;
                case SpinVariant::Hybrid: hybrid_ms = r.mean_ms(); break;
            }
        }
        if (edges_ms > 0.0) {
            ratios.push_back({spec.node_count, spec.edge_count, nodes_ms / edges_ms,
                              hybrid_ms / edges_ms});
        }
    }

    out << "# ratios (edges variant as denominator)\n"
        << "# nodes,edges,nodes_over_edges,hybrid_over_edges\n";
    for (const RatioRow& r : ratios) {
        out << "# " << r.nodes << ',' << r.edges << ',' << format_double(r.nodes_over_edges)
            << ',' << format_double(r.hybrid_over_edges) << '\n';
    }
}

}  // namespace spinrank
