// Command-line front-end: dataset generation, dominance-filtering of single
// sets, unions and Minkowski sums, tree shape statistics, and a benchmark
// sweep emitting CSV.
//
// Exit codes: 0 success, 1 I/O or generation failure, 2 invalid arguments,
// 3 verification mismatch (--verify).

#include <CLI11.hpp>

#include <algorithm>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "paretond/paretond.hpp"

using namespace paretond;

namespace {

TreeKind tree_kind(const std::string& name) {
    if (name == "nd") return TreeKind::nd_plus;
    if (name == "qnd") return TreeKind::qnd_plus;
    return TreeKind::tnd_plus;
}

Family family_kind(const std::string& name) {
    if (name == "urs") return Family::urs;
    if (name == "ursp") return Family::ursp;
    if (name == "ursc") return Family::ursc;
    return Family::urspc;
}

std::vector<std::string> split_list(const std::string& csv) {
    std::vector<std::string> out;
    std::stringstream ss(csv);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (!item.empty()) out.push_back(item);
    }
    return out;
}

bool set_equal(const PointSet& a, const PointSet& b) {
    auto key = [](const PointSet& s) {
        std::vector<std::vector<double>> rows;
        rows.reserve(s.size());
        for (std::size_t i = 0; i < s.size(); ++i) {
            auto p = s[i];
            rows.emplace_back(p.begin(), p.end());
        }
        std::sort(rows.begin(), rows.end());
        return rows;
    };
    return a.dim() == b.dim() && key(a) == key(b);
}

PointSet load_dedup(const std::string& path) { return dedup(read_points(path)); }

struct FilterArgs {
    std::string algo = "plainndred";
    std::string tree = "nd";
    std::size_t m = 8;
    std::string out;
    std::string stats_path;
    bool verify = false;
};

void add_filter_flags(CLI::App* sub, FilterArgs& args) {
    sub->add_option("--algo", args.algo)
        ->check(CLI::IsMember({"plainndred", "prend", "symnd"}))
        ->required();
    sub->add_option("--tree", args.tree)->check(CLI::IsMember({"nd", "qnd", "tnd"}))->required();
    sub->add_option("--m", args.m, "leaf capacity")->check(CLI::PositiveNumber);
    sub->add_option("--out", args.out)->required();
    sub->add_option("--stats", args.stats_path, "append one CSV measurement row");
    sub->add_flag("--verify", args.verify, "check the result against the brute-force oracle");
}

int emit_result(const FilterArgs& args, const BenchRow& row, const PointSet& frontier) {
    write_points(frontier, args.out);
    if (!args.stats_path.empty()) {
        std::ofstream os(args.stats_path);
        if (!os) throw std::runtime_error("cannot open for writing: " + args.stats_path);
        os << bench_csv_header() << '\n';
        write_csv_row(os, row);
    }
    return 0;
}

int run_single_or_pair(const std::string& op, const std::vector<std::string>& inputs,
                       const FilterArgs& args) {
    if (args.algo == "symnd" && op != "union") {
        std::cerr << "symnd applies only to unions\n";
        return 2;
    }
    const TreeKind kind = tree_kind(args.tree);
    const LeafCapacity m{args.m};

    PointSet a = load_dedup(inputs[0]);
    PointSet b = inputs.size() > 1 ? load_dedup(inputs[1]) : PointSet(a.dim());

    PointSet filter_input(a.dim());
    FilterResult result;
    if (op == "filter") {
        filter_input = a;
        result = args.algo == "prend" ? pre_nd(a, kind, m) : plain_nd_red(a, kind, m);
    } else if (op == "sum") {
        filter_input = minkowski_sum(a, b);
        result = args.algo == "prend" ? pre_nd(filter_input, kind, m)
                                      : plain_nd_red(filter_input, kind, m);
    } else {
        filter_input = union_input(a, b);
        if (args.algo == "symnd") {
            // inputs are trusted to be Pareto sets (generator or filter output)
            a.set_pareto_verified(true);
            b.set_pareto_verified(true);
            result = sym_nd(a, b, kind, m);
        } else {
            result = args.algo == "prend" ? pre_nd(filter_input, kind, m)
                                          : plain_nd_red(filter_input, kind, m);
        }
    }

    if (args.verify && !set_equal(result.frontier, oracle_pareto(filter_input))) {
        std::cerr << "verification mismatch against the oracle\n";
        return 3;
    }

    BenchRow row{.family = "file",
                 .d = a.dim(),
                 .n_a = a.size(),
                 .n_b = inputs.size() > 1 ? b.size() : 0,
                 .op = op,
                 .algorithm = args.algo,
                 .tree = args.tree,
                 .seed = 0,
                 .m = args.m,
                 .output_size = result.frontier.size(),
                 .stats = result.stats};
    return emit_result(args, row, result.frontier);
}

template <typename Tree>
int run_stats(const PointSet& pts, std::size_t m, const std::string& queries_path) {
    Tree tree = Tree::build(pts, {m});
    TreeShapeStats shape = tree.shape();
    std::cout << "max_depth " << shape.max_depth << "\n"
              << "min_depth " << shape.min_depth << "\n"
              << "bi " << shape.balance << "\n"
              << "nodes " << shape.node_count << "\n"
              << "leaves " << shape.leaf_count << "\n"
              << "points " << shape.point_count << "\n";
    if (!queries_path.empty()) {
        PointSet queries = read_points(queries_path);
        if (queries.dim() != pts.dim()) {
            throw std::invalid_argument("queries dimensionality does not match the tree");
        }
        FilterStats stats;
        for (std::size_t i = 0; i < queries.size(); ++i) tree.dominated(queries[i], {}, stats);
        const double avg =
            queries.empty() ? 0.0 : double(stats.comparisons) / double(queries.size());
        std::cout << "queries " << queries.size() << "\n"
                  << "avg_comparisons_per_query " << avg << "\n";
    }
    return 0;
}

struct BenchArgs {
    std::string families, dims, sizes, seeds, ops, algos, trees;
    std::size_t m = 8;
    std::string out;
};

int run_bench(const BenchArgs& args) {
    const std::vector<std::string> families = split_list(args.families);
    const std::vector<std::string> ops = split_list(args.ops);
    const std::vector<std::string> algos = split_list(args.algos);
    const std::vector<std::string> trees = split_list(args.trees);
    std::vector<std::size_t> dims, sizes;
    std::vector<std::uint64_t> seeds;
    try {
        for (const auto& s : split_list(args.dims)) dims.push_back(std::stoul(s));
        for (const auto& s : split_list(args.sizes)) sizes.push_back(std::stoul(s));
        for (const auto& s : split_list(args.seeds)) seeds.push_back(std::stoull(s));
    } catch (const std::exception&) {
        std::cerr << "invalid numeric list in the grid\n";
        return 2;
    }
    for (const auto& f : families) {
        if (f != "urs" && f != "ursp" && f != "ursc" && f != "urspc") {
            std::cerr << "unknown family: " << f << "\n";
            return 2;
        }
    }
    for (const auto& o : ops) {
        if (o != "union" && o != "sum" && o != "filter") {
            std::cerr << "unknown op: " << o << "\n";
            return 2;
        }
    }
    for (const auto& a : algos) {
        if (a != "plainndred" && a != "prend" && a != "symnd") {
            std::cerr << "unknown algorithm: " << a << "\n";
            return 2;
        }
    }
    for (const auto& t : trees) {
        if (t != "nd" && t != "qnd" && t != "tnd") {
            std::cerr << "unknown tree: " << t << "\n";
            return 2;
        }
    }

    std::ofstream os(args.out);
    if (!os) {
        std::cerr << "cannot open for writing: " << args.out << "\n";
        return 1;
    }
    os << bench_csv_header() << '\n';
    os.flush();

    std::size_t emitted = 0;
    for (const auto& family : families) {
        for (std::size_t d : dims) {
            if ((family == "ursc" || family == "urspc") && d < 3) continue;
            for (std::size_t n : sizes) {
                for (std::uint64_t seed : seeds) {
                    std::uint64_t stream = seed;
                    const std::uint64_t seed_a = splitmix64(stream);
                    const std::uint64_t seed_b = splitmix64(stream);
                    DatasetSpec base{.family = family_kind(family), .d = d, .n = n};
                    base.seed = seed_a;
                    PointSet a = generate(base);
                    base.seed = seed_b;
                    PointSet b = generate(base);
                    for (const auto& op : ops) {
                        std::optional<PointSet> input;
                        for (const auto& algo : algos) {
                            if (algo == "symnd" && op != "union") continue;
                            if (!input && algo != "symnd") {
                                if (op == "union") input = union_input(a, b);
                                if (op == "sum") input = minkowski_sum(a, b);
                                if (op == "filter") input = a;
                            }
                            for (const auto& tree : trees) {
                                const TreeKind kind = tree_kind(tree);
                                const LeafCapacity m{args.m};
                                FilterResult res;
                                if (algo == "symnd") {
                                    res = sym_nd(a, b, kind, m);
                                } else if (algo == "prend") {
                                    res = pre_nd(*input, kind, m);
                                } else {
                                    res = plain_nd_red(*input, kind, m);
                                }
                                BenchRow row{.family = family,
                                             .d = d,
                                             .n_a = a.size(),
                                             .n_b = op == "filter" ? 0 : b.size(),
                                             .op = op,
                                             .algorithm = algo,
                                             .tree = tree,
                                             .seed = seed,
                                             .m = args.m,
                                             .output_size = res.frontier.size(),
                                             .stats = res.stats};
                                write_csv_row(os, row);
                                os.flush();
                                ++emitted;
                            }
                        }
                    }
                }
            }
        }
    }
    if (emitted == 0) {
        std::cerr << "the grid contains no runnable cells\n";
        return 2;
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Pareto dominance-filtering toolkit"};
    app.require_subcommand(1);

    // generate
    auto* gen = app.add_subcommand("generate", "write a synthetic Pareto set");
    std::string gen_family;
    DatasetSpec gen_spec;
    std::string gen_out;
    gen->add_option("--family", gen_family)
        ->check(CLI::IsMember({"urs", "ursp", "ursc", "urspc"}))
        ->required();
    gen->add_option("--d", gen_spec.d)->required();
    gen->add_option("--n", gen_spec.n)->required();
    gen->add_option("--seed", gen_spec.seed)->required();
    gen->add_option("--oversample", gen_spec.oversample)->check(CLI::PositiveNumber);
    gen->add_option("--plateau-fraction", gen_spec.plateau_fraction);
    gen->add_option("--plateau-dims", gen_spec.plateau_dims);
    gen->add_option("--out", gen_out)->required();

    // filter / union / sum
    FilterArgs fargs;
    std::string filter_input;
    auto* filter = app.add_subcommand("filter", "Pareto frontier of one point set");
    filter->add_option("input", filter_input)->required();
    add_filter_flags(filter, fargs);

    FilterArgs uargs;
    std::vector<std::string> union_inputs;
    auto* uni = app.add_subcommand("union", "Pareto frontier of the union of two sets");
    uni->add_option("inputs", union_inputs)->expected(2)->required();
    add_filter_flags(uni, uargs);

    FilterArgs sargs;
    std::vector<std::string> sum_inputs;
    auto* sum = app.add_subcommand("sum", "Pareto frontier of the Minkowski sum of two sets");
    sum->add_option("inputs", sum_inputs)->expected(2)->required();
    add_filter_flags(sum, sargs);

    // stats
    auto* stats = app.add_subcommand("stats", "index tree shape and query cost");
    std::string stats_tree = "nd";
    std::size_t stats_m = 8;
    std::string stats_input, stats_queries;
    stats->add_option("input", stats_input)->required();
    stats->add_option("--tree", stats_tree)->check(CLI::IsMember({"nd", "qnd", "tnd"}))->required();
    stats->add_option("--m", stats_m)->check(CLI::PositiveNumber);
    stats->add_option("--queries", stats_queries, "point file of dominance queries");

    // bench
    auto* bench = app.add_subcommand("bench", "benchmark grid, one CSV row per cell");
    BenchArgs bargs;
    bench->add_option("--families", bargs.families)->required();
    bench->add_option("--dims", bargs.dims)->required();
    bench->add_option("--sizes", bargs.sizes)->required();
    bench->add_option("--seeds", bargs.seeds)->required();
    bench->add_option("--ops", bargs.ops)->required();
    bench->add_option("--algos", bargs.algos)->required();
    bench->add_option("--trees", bargs.trees)->required();
    bench->add_option("--m", bargs.m)->check(CLI::PositiveNumber);
    bench->add_option("--out", bargs.out)->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (gen->parsed()) {
            gen_spec.family = family_kind(gen_family);
            write_points(generate(gen_spec), gen_out);
            return 0;
        }
        if (filter->parsed()) return run_single_or_pair("filter", {filter_input}, fargs);
        if (uni->parsed()) return run_single_or_pair("union", union_inputs, uargs);
        if (sum->parsed()) return run_single_or_pair("sum", sum_inputs, sargs);
        if (stats->parsed()) {
            PointSet pts = load_dedup(stats_input);
            pts.set_pareto_verified(true);  // same trust model as symnd inputs
            switch (tree_kind(stats_tree)) {
                case TreeKind::nd_plus: return run_stats<NdPlusTree>(pts, stats_m, stats_queries);
                case TreeKind::qnd_plus:
                    return run_stats<QndPlusTree>(pts, stats_m, stats_queries);
                case TreeKind::tnd_plus:
                    return run_stats<TndPlusTree>(pts, stats_m, stats_queries);
            }
        }
        if (bench->parsed()) return run_bench(bargs);
    } catch (const std::invalid_argument& e) {
        std::cerr << "invalid arguments: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 2;
}
