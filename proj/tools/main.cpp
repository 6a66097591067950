// spinrank: directed-graph analytics over interaction data. Subcommands cover
// the whole pipeline: CDR ingest, commitment construction, iterative social
// position, centrality baselines, ranking/statistics, and the random-network
// benchmark harness.

#include <CLI11.hpp>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <sstream>
#include <unordered_map>

#include "spinrank/bench.hpp"
#include "spinrank/cdr.hpp"
#include "spinrank/centrality.hpp"
#include "spinrank/commitment.hpp"
#include "spinrank/error.hpp"
#include "spinrank/graph.hpp"
#include "spinrank/io.hpp"
#include "spinrank/netgen.hpp"
#include "spinrank/ranking.hpp"
#include "spinrank/spin.hpp"

namespace {

namespace fs = std::filesystem;
using namespace spinrank;

struct GlobalOpts {
    unsigned threads = 1;
    std::uint64_t seed = 0;
    bool quiet = false;
};

std::ostream& progress(const GlobalOpts& global) {
    static std::ofstream null_sink;
    if (global.quiet) {
        if (!null_sink.is_open()) {
            null_sink.setstate(std::ios::badbit);
        }
        return null_sink;
    }
    return std::cerr;
}

std::ofstream open_out(const std::string& path) {
    std::ofstream out(path);
    if (!out) {
        throw IoError(path, "cannot open for writing");
    }
    return out;
}

// Writes to `path` or stdout when path is empty.
template <typename Fn>
void with_output(const std::string& path, Fn&& fn) {
    if (path.empty()) {
        fn(std::cout);
    } else {
        std::ofstream out = open_out(path);
        fn(out);
        if (!out) {
            throw IoError(path, "write failure");
        }
    }
}

// `commit` input: `A;B;ACTIVITY` rows, or `A;B;PERIOD;ACTIVITY` in decay mode.
struct ActivityInput {
    std::vector<std::string> labels;
    ActivityMatrix acts;
};

ActivityInput read_activity_file(const std::string& path, bool with_periods,
                                 std::size_t period_count) {
    std::ifstream in(path);
    if (!in) {
        throw IoError(path, "cannot open for reading");
    }
    struct Row {
        std::string from;
        std::string to;
        std::size_t period;
        double amount;
    };
    std::vector<Row> rows;
    std::unordered_map<std::string, MemberId> index;
    std::vector<std::string> labels;
    auto intern = [&](const std::string& label) {
        auto [it, inserted] = index.try_emplace(label, static_cast<MemberId>(labels.size()));
        if (inserted) {
            labels.push_back(label);
        }
        return it->second;
    };

    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (!line.empty() && line.back() == '\r') {
            line.pop_back();
        }
        if (line.empty()) {
            continue;
        }
        std::vector<std::string> fields;
        std::size_t start = 0;
        for (std::size_t i = 0; i <= line.size(); ++i) {
            if (i == line.size() || line[i] == ';') {
                fields.push_back(line.substr(start, i - start));
                start = i + 1;
            }
        }
        const std::size_t expected = with_periods ? 4 : 3;
        if (fields.size() != expected) {
            throw MalformedRecordError(line_no, "expected " + std::to_string(expected) +
                                                    " ';'-separated fields in " + path);
        }
        Row row;
        row.from = fields[0];
        row.to = fields[1];
        row.period = with_periods
                         ? static_cast<std::size_t>(parse_double_field(
                               fields[2], path + ":" + std::to_string(line_no)))
                         : 0;
        row.amount = parse_double_field(fields.back(), path + ":" + std::to_string(line_no));
        intern(row.from);
        intern(row.to);
        rows.push_back(std::move(row));
    }

    ActivityInput input{std::move(labels),
                        ActivityMatrix(index.size(), with_periods ? period_count : 1)};
    for (const Row& row : rows) {
        input.acts.add(index.at(row.from), index.at(row.to), row.amount, row.period);
    }
    return input;
}

std::string env_log_dir(const std::string& flag_value) {
    if (const char* env = std::getenv("SPINRANK_LOG_DIR"); env != nullptr && *env != '\0') {
        return env;
    }
    return flag_value;
}

void write_iteration_logs(const SpinResult& result, const SocialNetwork& net,
                          const std::string& log_dir) {
    fs::create_directories(log_dir);
    std::ofstream iter_out = open_out((fs::path(log_dir) / "iterations.csv").string());
    iter_out << "iteration,duration_ms\n";
    for (const IterationLog& entry : result.log) {
        iter_out << entry.iteration << ',' << format_double(entry.duration_ms) << '\n';
    }
    for (const IterationLog& entry : result.log) {
        if (entry.snapshot.empty()) {
            continue;
        }
        std::ofstream snap_out = open_out(
            (fs::path(log_dir) / ("sp_iter_" + std::to_string(entry.iteration) + ".csv"))
                .string());
        for (MemberId x = 0; x < net.member_count(); ++x) {
            snap_out << net.label(x) << ';' << format_double(entry.snapshot[x]) << '\n';
        }
    }
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"directed-graph analytics: social position, centrality, rankings"};
    app.require_subcommand(1);

    GlobalOpts global;
    app.add_option("--threads", global.threads, "worker thread budget")->capture_default_str();
    app.add_option("--seed", global.seed, "global RNG seed")->capture_default_str();
    app.add_flag("--quiet", global.quiet, "suppress progress output");

    // --- ingest ---
    auto* ingest = app.add_subcommand("ingest", "clean and aggregate a CDR file");
    std::string ingest_cdr;
    std::int64_t ingest_min_duration = 3;
    std::string ingest_out_dir = ".";
    bool ingest_lenient = false;
    ingest->add_option("cdr", ingest_cdr, "CDR input file")->required();
    ingest->add_option("--min-duration", ingest_min_duration, "minimum call duration [s]")
        ->capture_default_str();
    ingest->add_option("--out-dir", ingest_out_dir, "output directory")
        ->capture_default_str();
    ingest->add_flag("--lenient", ingest_lenient, "skip malformed lines instead of aborting");

    // --- commit ---
    auto* commit = app.add_subcommand("commit", "build normalized commitment edges");
    std::string commit_edges;
    std::string commit_mode = "count";
    double commit_lambda = 0.9;
    std::size_t commit_periods = 1;
    std::string commit_out;
    commit->add_option("edges", commit_edges, "raw activity edge file (A;B;ACTIVITY, or A;B;PERIOD;ACTIVITY with --mode decay)")
        ->required();
    commit->add_option("--mode", commit_mode, "count|duration|decay")
        ->check(CLI::IsMember({"count", "duration", "decay"}))
        ->capture_default_str();
    commit->add_option("--lambda", commit_lambda, "decay factor in (0,1]")
        ->capture_default_str();
    commit->add_option("--periods", commit_periods, "number of time periods")
        ->capture_default_str();
    commit->add_option("--out", commit_out, "output edge file (default stdout)");

    // --- spin ---
    auto* spin = app.add_subcommand("spin", "iterative social position");
    std::string spin_nodes_path;
    std::string spin_edges_path;
    std::string spin_variant = "edges";
    double spin_epsilon = 0.5;
    double spin_tau = 1e-5;
    std::string spin_stop = "per-member";
    std::size_t spin_max_iter = 100;
    std::size_t spin_chunk = 8192;
    double spin_initial = 1.0;
    std::string spin_log_dir;
    bool spin_snapshots = false;
    std::string spin_out;
    spin->add_option("nodes", spin_nodes_path, "node list file")->required();
    spin->add_option("edges", spin_edges_path, "commitment edge file")->required();
    spin->add_option("--variant", spin_variant, "nodes|edges|hybrid")
        ->check(CLI::IsMember({"nodes", "edges", "hybrid"}))
        ->capture_default_str();
    spin->add_option("--epsilon", spin_epsilon, "openness coefficient in (0,1)")
        ->capture_default_str();
    spin->add_option("--tau", spin_tau, "stop-condition precision")->capture_default_str();
    spin->add_option("--stop", spin_stop, "per-member|sum")
        ->check(CLI::IsMember({"per-member", "sum"}))
        ->capture_default_str();
    spin->add_option("--max-iter", spin_max_iter, "iteration cap")->capture_default_str();
    spin->add_option("--chunk-size", spin_chunk, "hybrid subset size")->capture_default_str();
    spin->add_option("--initial-sp", spin_initial, "initial SP value")->capture_default_str();
    spin->add_option("--log-dir", spin_log_dir,
                     "per-iteration log directory (env SPINRANK_LOG_DIR overrides)");
    spin->add_flag("--snapshots", spin_snapshots, "write per-iteration SP snapshots");
    spin->add_option("--out", spin_out, "output CSV (default stdout)");

    // --- centrality ---
    auto* cent = app.add_subcommand("centrality", "centrality and prestige baselines");
    std::string cent_nodes_path;
    std::string cent_edges_path;
    std::string cent_measure = "degree";
    bool cent_normalized = false;
    std::string cent_out;
    cent->add_option("nodes", cent_nodes_path, "node list file")->required();
    cent->add_option("edges", cent_edges_path, "edge file")->required();
    cent->add_option("--measure", cent_measure,
                     "degree|indegree|outdegree|degree_prestige|closeness|betweenness|"
                     "influence_domain|proximity_prestige")
        ->capture_default_str();
    cent->add_flag("--normalized", cent_normalized, "report normalized values");
    cent->add_option("--out", cent_out, "output CSV (default stdout)");

    // --- rank ---
    auto* rank = app.add_subcommand("rank", "competition ranking of a score file");
    std::string rank_scores;
    std::string rank_out;
    rank->add_option("scores", rank_scores, "score file (MEMBER;SCORE)")->required();
    rank->add_option("--out", rank_out, "output CSV (default stdout)");

    // --- compare ---
    auto* compare = app.add_subcommand("compare", "Kendall coefficient of two score files");
    std::string compare_a;
    std::string compare_b;
    compare->add_option("a", compare_a, "first score file")->required();
    compare->add_option("b", compare_b, "second score file")->required();

    // --- stats ---
    auto* stats = app.add_subcommand("stats", "distribution classes and duplicate counts");
    std::string stats_scores;
    stats->add_option("scores", stats_scores, "score file (MEMBER;SCORE)")->required();

    // --- gen ---
    auto* gen = app.add_subcommand("gen", "seeded random directed network");
    std::size_t gen_nodes = 0;
    std::size_t gen_edges = 0;
    std::uint64_t gen_seed = 0;
    bool gen_seed_set = false;
    std::string gen_weight_mode = "uniform";
    bool gen_allow_isolated = false;
    std::string gen_out_nodes = "nodes.txt";
    std::string gen_out_edges = "edges.csv";
    gen->add_option("--nodes", gen_nodes, "node count")->required();
    gen->add_option("--edges", gen_edges, "edge count")->required();
    gen->add_option("--seed", gen_seed, "generator seed (defaults to global --seed)")
        ->each([&](const std::string&) { gen_seed_set = true; });
    gen->add_option("--weight-mode", gen_weight_mode, "uniform|unit")
        ->check(CLI::IsMember({"uniform", "unit"}))
        ->capture_default_str();
    gen->add_flag("--allow-isolated", gen_allow_isolated,
                  "keep isolated nodes (raw timing parity; skips commitment validation)");
    gen->add_option("--out-nodes", gen_out_nodes, "node file path")->capture_default_str();
    gen->add_option("--out-edges", gen_out_edges, "edge file path")->capture_default_str();

    // --- bench ---
    auto* bench = app.add_subcommand("bench", "SPIN variant timing over a network grid");
    std::string bench_grid_path;
    double bench_epsilon = 0.8;
    double bench_tau = 1e-5;
    std::size_t bench_max_iter = 10;
    std::string bench_out;
    bench->add_option("--grid", bench_grid_path, "grid CSV (nodes,edges,seed)")->required();
    bench->add_option("--epsilon", bench_epsilon, "openness coefficient")
        ->capture_default_str();
    bench->add_option("--tau", bench_tau, "stop-condition precision")->capture_default_str();
    bench->add_option("--max-iter", bench_max_iter, "iteration cap per run")
        ->capture_default_str();
    bench->add_option("--out", bench_out, "output CSV (default stdout)");

    try {
        app.parse(argc, argv);

        if (ingest->parsed()) {
            IngestSummary summary =
                run_ingest(ingest_cdr, ingest_min_duration, ingest_out_dir, ingest_lenient);
            progress(global) << format_summary(summary);
            return 0;
        }

        if (commit->parsed()) {
            const bool decay = commit_mode == "decay";
            ActivityInput input =
                read_activity_file(commit_edges, decay, decay ? commit_periods : 1);
            CommitmentRows rows;
            if (decay) {
                rows = time_decayed_commitment(input.acts, {commit_lambda, commit_periods});
            } else {
                rows = relationship_commitment(input.acts);
            }
            SocialNetwork net = redistribute_inactive(rows, std::move(input.labels));
            with_output(commit_out, [&](std::ostream& out) {
                auto src = net.edge_sources();
                auto dst = net.edge_targets();
                auto w = net.edge_weights();
                for (std::size_t e = 0; e < src.size(); ++e) {
                    out << net.label(src[e]) << ';' << net.label(dst[e]) << ';'
                        << format_double(w[e]) << '\n';
                }
            });
            return 0;
        }

        if (spin->parsed()) {
            SocialNetwork net = load_network(spin_nodes_path, spin_edges_path);
            SpinConfig cfg;
            cfg.epsilon = spin_epsilon;
            cfg.tau = spin_tau;
            cfg.stop_mode = spin_stop == "sum" ? StopMode::Sum : StopMode::PerMember;
            cfg.max_iterations = spin_max_iter;
            cfg.chunk_size = spin_chunk;
            cfg.initial_sp = spin_initial;
            cfg.record_snapshots = spin_snapshots;
            SpinResult result = run_spin(net, cfg, parse_variant(spin_variant));

            const std::string log_dir = env_log_dir(spin_log_dir);
            if (!log_dir.empty()) {
                write_iteration_logs(result, net, log_dir);
            }
            Ranking ranking = make_ranking(result.sp.values);
            with_output(spin_out, [&](std::ostream& out) {
                for (MemberId x = 0; x < net.member_count(); ++x) {
                    out << net.label(x) << ';' << format_double(result.sp.values[x]) << ';'
                        << ranking.positions[x] << '\n';
                }
            });
            progress(global) << "iterations: " << result.iterations
                             << " converged: " << (result.converged ? "yes" : "no") << '\n';
            return 0;
        }

        if (cent->parsed()) {
            SocialNetwork net = load_network(cent_nodes_path, cent_edges_path);
            CentralityScores scores =
                compute_centrality(net, parse_measure(cent_measure), cent_normalized);
            with_output(cent_out, [&](std::ostream& out) {
                out << "# measure=" << to_string(scores.measure)
                    << " normalized=" << (scores.normalized ? "yes" : "no")
                    << " network=" << cent_edges_path << '\n';
                for (MemberId x = 0; x < net.member_count(); ++x) {
                    out << net.label(x) << ';' << format_double(scores.values[x]) << '\n';
                }
            });
            return 0;
        }

        if (rank->parsed()) {
            std::vector<ScoreRow> rows = read_score_file(rank_scores);
            std::vector<double> scores;
            scores.reserve(rows.size());
            for (const ScoreRow& row : rows) {
                scores.push_back(row.score);
            }
            Ranking ranking = make_ranking(scores);
            with_output(rank_out, [&](std::ostream& out) {
                for (std::size_t i = 0; i < rows.size(); ++i) {
                    out << rows[i].member << ';' << format_double(rows[i].score) << ';'
                        << ranking.positions[i] << '\n';
                }
            });
            return 0;
        }

        if (compare->parsed()) {
            std::vector<ScoreRow> rows_a = read_score_file(compare_a);
            std::vector<ScoreRow> rows_b = read_score_file(compare_b);
            std::map<std::string, double> by_member;
            for (const ScoreRow& row : rows_b) {
                by_member[row.member] = row.score;
            }
            std::vector<double> scores_a;
            std::vector<double> scores_b;
            for (const ScoreRow& row : rows_a) {
                auto it = by_member.find(row.member);
                if (it == by_member.end()) {
                    throw Error("member '" + row.member + "' missing from " + compare_b);
                }
                scores_a.push_back(row.score);
                scores_b.push_back(it->second);
            }
            if (scores_a.size() != rows_b.size()) {
                throw Error("score files list different member sets");
            }
            double k = kendall(make_ranking(scores_a), make_ranking(scores_b));
            std::cout << format_double(k) << '\n';
            return 0;
        }

        if (stats->parsed()) {
            std::vector<ScoreRow> rows = read_score_file(stats_scores);
            std::vector<double> scores;
            scores.reserve(rows.size());
            for (const ScoreRow& row : rows) {
                scores.push_back(row.score);
            }
            DistributionReport dist = sp_distribution(scores);
            DuplicateReport dup = duplicate_stats(scores);
            std::cout << format_distribution(dist) << "Duplicates          "
                      << dup.duplicates << " (" << format_double(dup.percentage) << "%)\n";
            return 0;
        }

        if (gen->parsed()) {
            GenSpec spec;
            spec.node_count = gen_nodes;
            spec.edge_count = gen_edges;
            spec.seed = gen_seed_set ? gen_seed : global.seed;
            spec.weight_mode = gen_weight_mode == "unit" ? WeightMode::Unit
                                                         : WeightMode::UniformNormalized;
            spec.allow_isolated = gen_allow_isolated;
            SocialNetwork net = generate(spec);
            write_node_file(gen_out_nodes, net.labels());
            write_edge_file(gen_out_edges, net);
            progress(global) << "generated " << net.member_count() << " members, "
                             << net.edge_count() << " edges\n";
            return 0;
        }

        if (bench->parsed()) {
            std::vector<GenSpec> grid = read_grid_file(bench_grid_path);
            SpinConfig cfg;
            cfg.epsilon = bench_epsilon;
            cfg.tau = bench_tau;
            cfg.max_iterations = bench_max_iter;
            with_output(bench_out, [&](std::ostream& out) { bench_grid(grid, cfg, out); });
            return 0;
        }

        return 0;
    } catch (const CLI::ParseError& e) {
        return app.exit(e);
    } catch (const InternalError& e) {
        std::cerr << "internal error: " << e.what() << '\n';
        return 2;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
}
