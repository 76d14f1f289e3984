#include <CLI11.hpp>

#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include "iscount/chromatic.hpp"
#include "iscount/connectivity.hpp"
#include "iscount/engine.hpp"
#include "iscount/generators.hpp"
#include "iscount/oracle.hpp"
#include "iscount/parse.hpp"
#include "iscount/stats_json.hpp"

namespace {

using namespace iscount;

GraphFormat to_format(const std::string& s) {
    if (s == "edgelist") return GraphFormat::edgelist;
    if (s == "dimacs") return GraphFormat::dimacs;
    throw ParseError("unknown format '" + s + "'");
}

Graph read_graph(const std::string& input, const std::string& format) {
    if (input == "-") return parse_graph(std::cin, to_format(format));
    std::ifstream in(input);
    if (!in) throw ParseError("cannot open '" + input + "'");
    return parse_graph(in, to_format(format));
}

int default_cutoff() {
    if (const char* env = std::getenv("ISCOUNT_CUTOFF")) {
        int v = std::atoi(env);
        if (v >= 2) return v;
    }
    return 20;
}

void print_stats_text(const SearchStats& s) {
    auto j = stats_to_json(s);
    for (auto& [key, value] : j.items()) std::cout << key << ": " << value.dump() << "\n";
}

struct SelftestSuite {
    std::mt19937_64 rng;
    int pass = 0, fail = 0;

    void check(bool ok, const std::string& what) {
        if (ok) {
            ++pass;
        } else {
            ++fail;
            std::cout << "FAIL " << what << "\n";
        }
    }
};

int run_selftest(std::uint64_t seed, int trials, int cutoff) {
    SelftestSuite s{std::mt19937_64(seed)};
    std::uniform_int_distribution<int> pick_n(1, 14);
    std::uniform_real_distribution<double> pick_p(0.1, 0.8);

    for (int t = 0; t < trials; ++t) {
        int n = pick_n(s.rng);
        Graph g = gnp(n, pick_p(s.rng), s.rng);
        EngineConfig cfg;
        cfg.small_cutoff = cutoff;
        cfg.rng_seed = seed;
        Engine e(cfg);
        s.check(e.count(g) == Rational(count_is_bruteforce(g)),
                "count vs oracle on trial " + std::to_string(t));
    }
    std::cout << "unweighted: " << s.pass << " passed, " << s.fail << " failed\n";
    int p0 = s.pass, f0 = s.fail;

    for (int t = 0; t < trials; ++t) {
        int n = pick_n(s.rng);
        Graph g = gnp(n, pick_p(s.rng), s.rng);
        CardinalityState c = random_proper_state(g, s.rng, t % 2 == 1);
        EngineConfig cfg;
        cfg.small_cutoff = cutoff;
        cfg.rng_seed = seed;
        Engine e(cfg);
        s.check(e.count(g, c) == weighted_total_bruteforce(g, c),
                "weighted count vs oracle on trial " + std::to_string(t));
    }
    std::cout << "weighted: " << (s.pass - p0) << " passed, " << (s.fail - f0) << " failed\n";
    p0 = s.pass, f0 = s.fail;

    SubCounter oracle_counter = [](const Graph& g, const CardinalityState& c) {
        return weighted_total_bruteforce(g, c);
    };
    for (int t = 0; t < trials; ++t) {
        int n = 3 + static_cast<int>(s.rng() % 10);
        Graph g = gnp(n, pick_p(s.rng), s.rng);
        CardinalityState c = random_proper_state(g, s.rng, t % 3 == 0);
        Rational before = weighted_total_bruteforce(g, c);
        ReducedState st{g, c};
        reduction(st);
        bool ok = weighted_total_bruteforce(st.graph, st.card) == before;
        if (ok && !st.graph.empty()) {
            VertexId v = st.graph.vertices()[s.rng() % st.graph.num_vertices()];
            int eta = static_cast<int>(s.rng() % 2);
            Rational restricted =
                restricted_total_bruteforce(st.graph, st.card, {{v, eta}});
            ReducedState pr = st;
            prop(pr, v, eta);
            ok = weighted_total_bruteforce(pr.graph, pr.card) == restricted;
        }
        s.check(ok, "reduction/prop preservation on trial " + std::to_string(t));
    }
    std::cout << "procedures: " << (s.pass - p0) << " passed, " << (s.fail - f0)
              << " failed\n";
    std::cout << "selftest: " << s.pass << " passed, " << s.fail << " failed\n";
    return s.fail == 0 ? 0 : 4;
}

int run_bench(const std::string& sizes_csv, std::uint64_t seed, int cutoff, bool json_out) {
    std::vector<int> sizes;
    std::stringstream ss(sizes_csv);
    for (std::string tok; std::getline(ss, tok, ',');)
        if (!tok.empty()) sizes.push_back(std::stoi(tok));

    nlohmann::ordered_json rows = nlohmann::ordered_json::array();
    if (!json_out)
        std::cout << "n n3 m count nodes depth r1 r2 d0 d1 d2 restarts bisections "
                     "width_min width_max ms\n";
    std::mt19937_64 rng(seed);
    for (int n : sizes) {
        Graph g = random_cubic(n, rng);
        EngineConfig cfg;
        cfg.small_cutoff = cutoff;
        cfg.rng_seed = seed;
        cfg.collect_stats = true;
        Engine e(cfg);
        auto t0 = std::chrono::steady_clock::now();
        Rational total = e.count(g);
        auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                      std::chrono::steady_clock::now() - t0)
                      .count();
        const SearchStats& st = e.stats();
        int wmin = 0, wmax = 0;
        if (!st.widths.empty()) {
            wmin = *std::min_element(st.widths.begin(), st.widths.end());
            wmax = *std::max_element(st.widths.begin(), st.widths.end());
        }
        if (json_out) {
            nlohmann::ordered_json row;
            row["n"] = n;
            row["n3"] = g.count_degree(3);
            row["m"] = g.num_edges();
            row["result"] = total.str();
            row["stats"] = stats_to_json(st);
            row["ms"] = ms;
            rows.push_back(std::move(row));
        } else {
            std::cout << n << " " << g.count_degree(3) << " " << g.num_edges() << " "
                      << total.str() << " " << st.branch_nodes << " " << st.max_depth << " "
                      << st.r1 << " " << st.r2 << " " << st.d0 << " " << st.d1 << " " << st.d2
                      << " " << st.restarts << " " << st.bisections << " " << wmin << " "
                      << wmax << " " << ms << "\n";
        }
    }
    if (json_out) std::cout << rows.dump() << "\n";
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact independent-set counting and chromatic numbers"};
    app.require_subcommand(1);

    std::string input = "-";
    std::string format = "edgelist";
    int cutoff = default_cutoff();
    std::uint64_t seed = 1;
    bool stats_flag = false, json_flag = false;

    auto add_common = [&](CLI::App* cmd, bool with_input) {
        if (with_input) cmd->add_option("input", input, "input file, or - for stdin");
        cmd->add_option("--format", format, "edgelist or dimacs")
            ->check(CLI::IsMember({"edgelist", "dimacs"}));
        cmd->add_option("--cutoff", cutoff, "plain-branching threshold")->check(CLI::Range(2, 1 << 20));
        cmd->add_option("--seed", seed, "random seed");
        cmd->add_flag("--stats", stats_flag, "print search statistics");
        cmd->add_flag("--json", json_flag, "JSON output");
    };

    auto* count_cmd = app.add_subcommand("count", "exact number of independent sets");
    add_common(count_cmd, true);
    auto* chrom_cmd = app.add_subcommand("chromatic", "chromatic number");
    add_common(chrom_cmd, true);
    auto* oracle_cmd = app.add_subcommand("oracle", "brute-force independent-set count");
    add_common(oracle_cmd, true);
    auto* self_cmd = app.add_subcommand("selftest", "randomized oracle-equivalence suite");
    int trials = 50;
    self_cmd->add_option("--trials", trials, "trials per suite")->check(CLI::Range(1, 100000));
    add_common(self_cmd, false);
    auto* bench_cmd = app.add_subcommand("bench", "stats on random cubic graphs");
    std::string sizes = "20,30,40,50,60";
    bench_cmd->add_option("--sizes", sizes, "comma-separated sizes (even)");
    add_common(bench_cmd, false);

    try {
        app.parse(argc, argv);

        if (count_cmd->parsed()) {
            Graph g = read_graph(input, format);
            EngineConfig cfg;
            cfg.small_cutoff = cutoff;
            cfg.rng_seed = seed;
            cfg.collect_stats = stats_flag || json_flag;
            Engine e(cfg);
            Rational total = e.count(g);
            if (json_flag) {
                nlohmann::ordered_json j;
                j["result"] = total.str();
                j["stats"] = stats_to_json(e.stats());
                std::cout << j.dump() << "\n";
            } else {
                std::cout << total.str() << "\n";
                if (stats_flag) print_stats_text(e.stats());
            }
            return 0;
        }
        if (chrom_cmd->parsed()) {
            Graph g = read_graph(input, format);
            ChromaticConfig cfg;
            cfg.engine.small_cutoff = cutoff;
            cfg.engine.rng_seed = seed;
            ChromaticResult res = chromatic_number(g, cfg);
            if (json_flag) {
                nlohmann::ordered_json j;
                j["result"] = res.chi;
                auto sums = nlohmann::ordered_json::array();
                for (const auto& s : res.per_k_sums) sums.push_back(s.get_str());
                j["per_k_sums"] = sums;
                j["subsets_evaluated"] = res.subsets_evaluated;
                std::cout << j.dump() << "\n";
            } else {
                std::cout << res.chi << "\n";
                if (stats_flag) {
                    std::cout << "subsets_evaluated: " << res.subsets_evaluated << "\n";
                    for (size_t k = 0; k < res.per_k_sums.size(); ++k)
                        std::cout << "s_" << k + 1 << ": " << res.per_k_sums[k].get_str()
                                  << "\n";
                }
            }
            return 0;
        }
        if (oracle_cmd->parsed()) {
            Graph g = read_graph(input, format);
            std::cout << count_is_bruteforce(g).get_str() << "\n";
            return 0;
        }
        if (self_cmd->parsed()) return run_selftest(seed, trials, cutoff);
        if (bench_cmd->parsed()) return run_bench(sizes, seed, cutoff, json_flag);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? 0 : 2;
    } catch (const ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const OracleCapError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 4;
    }
    return 0;
}
