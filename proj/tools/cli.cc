#include "cli.hh"

#include <sgon/construct.hh>
#include <sgon/errors.hh>
#include <sgon/reduction.hh>
#include <sgon/solver.hh>

#include <CLI11.hpp>

#include <cmath>
#include <fstream>
#include <iomanip>
#include <sstream>

using std::optional;
using std::string;
using std::vector;

namespace sgon::cli {

namespace {
    enum Status { Ok = 0, No = 1, Usage = 2, Internal = 3 };

    class FileError : public std::runtime_error {
    public:
        using std::runtime_error::runtime_error;
    };

    auto read_file(const string & path) -> string
    {
        std::ifstream in(path, std::ios::binary);
        if (! in)
            throw FileError("cannot read " + path);
        std::ostringstream buffer;
        buffer << in.rdbuf();
        return buffer.str();
    }

    void write_file(const string & path, const string & content)
    {
        std::ofstream out(path, std::ios::binary);
        if (! out || ! (out << content))
            throw FileError("cannot write " + path);
    }

    auto read_graph(const string & path) -> Multigraph
    {
        try {
            return parse_mgf(read_file(path));
        }
        catch (const ParseError & e) {
            throw ParseError(0, path + ": " + e.what());
        }
    }

    struct ComputeArgs {
        string graph;
        optional<int> decide;
        optional<string> certificate;
        bool no_reduce = false;
        bool no_prune = false;
        int threads = 1;
        optional<int> max_index;
        bool stats = false;
        optional<string> fixed_tf;
    };

    void print_stats(std::ostream & out, std::uint64_t examined, std::uint64_t pruned, std::chrono::nanoseconds wall)
    {
        out << "tuples_examined=" << examined << " pruned=" << pruned << " wall_time=" << std::fixed << std::setprecision(3)
            << std::chrono::duration<double>(wall).count() << "s\n";
    }

    auto compute_fixed(const ComputeArgs & args, const Multigraph & g, std::ostream & out) -> int
    {
        auto start = std::chrono::steady_clock::now();
        auto map = parse_tree_map(read_file(*args.fixed_tf));
        if (map.f.size() != static_cast<std::size_t>(g.vertex_count()))
            throw InvalidInput("tree map covers " + std::to_string(map.f.size()) + " vertices, graph has " + std::to_string(g.vertex_count()));
        int k = args.decide.value_or(map.target);
        auto result = solve_fixed_tf(g, map.tree, map.f, k, args.max_index);
        out << (result.exists ? "yes" : "no") << '\n';
        if (args.stats) {
            out << "best_degree=" << result.best_degree << '\n';
            print_stats(out, result.tuples_examined, 0, std::chrono::steady_clock::now() - start);
        }
        if (args.certificate && result.exists) {
            auto built = build_phi_alpha(g, TupleAlpha{map.tree, map.f, *result.witness_r}, args.max_index);
            write_file(*args.certificate, write_certificate(Certificate{std::move(built.morphism), built.degree, std::nullopt}));
        }
        return result.exists ? Ok : No;
    }

    auto compute(const ComputeArgs & args, std::ostream & out) -> int
    {
        auto g = read_graph(args.graph);
        if (args.fixed_tf)
            return compute_fixed(args, g, out);

        SolveOptions opts;
        opts.use_reduction = ! args.no_reduce;
        opts.prune = ! args.no_prune;
        opts.parallelism = args.threads;
        opts.max_index_override = args.max_index;

        optional<Certificate> cert;
        if (args.decide) {
            auto start = std::chrono::steady_clock::now();
            auto decision = decide(g, *args.decide, opts);
            out << (decision.yes ? "yes" : "no") << '\n';
            if (args.stats)
                print_stats(out, decision.tuples_examined, decision.pruned, std::chrono::steady_clock::now() - start);
            cert = std::move(decision.certificate);
        }
        else {
            auto result = sgon(g, opts);
            out << "sgon = " << result.sgon << '\n';
            if (args.stats)
                print_stats(out, result.tuples_examined, result.pruned, result.wall_time);
            cert = std::move(result.certificate);
        }

        if (args.certificate && cert) {
            write_file(*args.certificate, write_certificate(*cert));
            if (cert->reduced_graph)
                out << "graph: reduced\n";
        }
        if (args.decide)
            return cert ? Ok : No;
        return Ok;
    }

    auto verify(const string & graph_path, const string & cert_path, std::ostream & out) -> int
    {
        auto g = read_graph(graph_path);
        Certificate cert;
        try {
            cert = parse_certificate(read_file(cert_path));
        }
        catch (const ParseError & e) {
            throw ParseError(0, cert_path + ": " + e.what());
        }
        auto verdict = verify_certificate(g, cert);
        if (verdict.accepted) {
            out << "valid degree=" << *verdict.computed_degree << '\n';
            return Ok;
        }
        out << "invalid: " << verdict.failure_reason.value_or("rejected") << '\n';
        return No;
    }

    auto bounds(const string & graph_path, std::ostream & out) -> int
    {
        auto g = read_graph(graph_path);
        if (g.vertex_count() < 1 || ! is_connected(g))
            throw InvalidInput("graph must be connected and non-empty");
        out << "lower=" << lower_bound(g) << " upper=" << upper_bound(g) << '\n';
        return Ok;
    }

    auto reduce3dm(const string & instance_path, const string & prefix, std::ostream & out) -> int
    {
        auto inst = parse_3dm(read_file(instance_path));
        auto gadget = build_gadget(inst);
        write_file(prefix + ".mgf", write_mgf(gadget.graph));
        write_file(prefix + ".tf", write_tree_map(gadget.tree, gadget.f, gadget.target));
        out << "vertices=" << gadget.graph.vertex_count() << " edges=" << gadget.graph.edge_count() << " target=" << gadget.target << '\n';
        return Ok;
    }

    auto count_pairs(int n, int k) -> std::uint64_t
    {
        std::uint64_t partitions = 0, trees = 0;
        PartitionStream p(n, k);
        while (p.next())
            ++partitions;
        LabelledTreeStream t(k);
        while (t.next())
            ++trees;
        return partitions * trees;
    }

    auto enumerate_stats(const string & graph_path, bool enumerate, std::ostream & out) -> int
    {
        auto g = read_graph(graph_path);
        int n = g.vertex_count();
        if (n < 1)
            throw InvalidInput("graph has no vertices");
        std::uint64_t total = 0;
        for (int k = 1; k <= n; ++k) {
            auto trees = cayley_count(k);
            auto partitions = stirling2(n, k);
            out << "k=" << k << " trees=" << trees << " partitions=" << partitions << " pairs=" << trees * partitions;
            if (enumerate)
                out << " enumerated=" << count_pairs(n, k);
            out << '\n';
            total += trees * partitions;
        }
        auto bound = std::pow(1.33 * n, n + 1);
        auto i_max = upper_bound(g);
        out << "total=" << total << " bound=" << std::setprecision(6) << bound << '\n';
        out << "index_range=" << i_max << " index_maps=" << std::pow(static_cast<double>(i_max), g.edge_count()) << '\n';
        return Ok;
    }
}

auto run(const vector<string> & args, std::ostream & out, std::ostream & err) -> int
{
    CLI::App app{"Exact stable gonality of multigraphs", "sgon"};
    app.require_subcommand(1);

    ComputeArgs compute_args;
    auto * compute_cmd = app.add_subcommand("compute", "compute sgon, or decide sgon <= k");
    compute_cmd->add_option("graph", compute_args.graph, "graph file (mgf)")->required();
    compute_cmd->add_option("--decide", compute_args.decide, "decide whether sgon <= k")->check(CLI::PositiveNumber);
    compute_cmd->add_option("--certificate", compute_args.certificate, "write the certificate here");
    compute_cmd->add_flag("--no-reduce", compute_args.no_reduce, "search the input graph without stable reduction");
    compute_cmd->add_flag("--no-prune", compute_args.no_prune, "evaluate every tuple");
    compute_cmd->add_option("--threads", compute_args.threads, "worker threads")->check(CLI::PositiveNumber);
    compute_cmd->add_option("--max-index", compute_args.max_index, "largest edge index to try")->check(CLI::PositiveNumber);
    compute_cmd->add_flag("--stats", compute_args.stats, "print search statistics");
    compute_cmd->add_option("--fixed-tf", compute_args.fixed_tf, "optimize indices only, for the tree map in this file");

    string graph_path, cert_path;
    auto * verify_cmd = app.add_subcommand("verify", "check a certificate against a graph");
    verify_cmd->add_option("graph", graph_path, "graph file (mgf)")->required();
    verify_cmd->add_option("certificate", cert_path, "certificate file")->required();

    auto * bounds_cmd = app.add_subcommand("bounds", "print the lower and upper bounds");
    bounds_cmd->add_option("graph", graph_path, "graph file (mgf)")->required();

    string instance_path, prefix;
    auto * reduce_cmd = app.add_subcommand("reduce3dm", "build the gadget for a 3DM instance");
    reduce_cmd->add_option("instance", instance_path, "3DM instance file")->required();
    reduce_cmd->add_option("prefix", prefix, "output prefix for <prefix>.mgf and <prefix>.tf")->required();

    bool enumerate = false;
    auto * stats_cmd = app.add_subcommand("enumerate-stats", "count the (tree, surjection) pairs");
    stats_cmd->add_option("graph", graph_path, "graph file (mgf)")->required();
    stats_cmd->add_flag("--enumerate", enumerate, "also count by running the enumerators");

    vector<string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    }
    catch (const CLI::ParseError & e) {
        auto code = app.exit(e, out, err);
        return code == 0 ? Ok : Usage;
    }

    try {
        if (compute_cmd->parsed())
            return compute(compute_args, out);
        if (verify_cmd->parsed())
            return verify(graph_path, cert_path, out);
        if (bounds_cmd->parsed())
            return bounds(graph_path, out);
        if (reduce_cmd->parsed())
            return reduce3dm(instance_path, prefix, out);
        if (stats_cmd->parsed())
            return enumerate_stats(graph_path, enumerate, out);
    }
    catch (const InternalError & e) {
        err << "internal error: " << e.what() << '\n';
        return Internal;
    }
    catch (const ParseError & e) {
        err << "error: " << e.what() << '\n';
        return Usage;
    }
    catch (const InvalidInput & e) {
        err << "error: " << e.what() << '\n';
        return Usage;
    }
    catch (const FileError & e) {
        err << "error: " << e.what() << '\n';
        return Usage;
    }
    catch (const std::exception & e) {
        err << "internal error: " << e.what() << '\n';
        return Internal;
    }
    return Usage;
}

} // namespace sgon::cli
