#include <sgon/errors.hh>
#include <sgon/solver.hh>

#include <algorithm>
#include <atomic>
#include <climits>
#include <mutex>
#include <thread>

using std::optional;
using std::span;
using std::uint64_t;
using std::vector;

namespace sgon {

namespace {
    struct SearchConfig {
        int i_max = 1;
        bool prune = true;
        // degrees >= cutoff are never wanted
        int cutoff = INT_MAX;
        // once a degree <= stop_at is found, later pairs need not be searched
        optional<int> stop_at;
        // prune against the best degree found by any worker
        bool share_best = true;
        int workers = 1;
        optional<uint64_t> budget;
    };

    struct Found {
        int degree = INT_MAX;
        uint64_t sequence = 0;
        vector<int> r;
        TreeGraph tree;
        vector<VertexId> f;
    };

    struct Shared {
        std::atomic<int> best{INT_MAX};
        std::atomic<uint64_t> stop_sequence{UINT64_MAX};
        std::atomic<uint64_t> examined{0};
        std::atomic<uint64_t> pruned{0};
        std::atomic<bool> out_of_budget{false};
    };

    /// Searches the index maps of one (T, f) pair.
    class PairSearch {
    public:
        PairSearch(const Multigraph & g, const TreeFunctionPair & pair, const SearchConfig & config, Shared & shared) :
            _g(g), _pair(pair), _config(config), _shared(shared), _model(g, pair.tree, pair.f)
        {
        }

        auto run() -> Found
        {
            Found found;
            found.sequence = _pair.sequence;
            if (_config.prune)
                run_branch_and_bound(found);
            else
                run_exhaustive(found);
            if (found.degree != INT_MAX) {
                found.tree = _pair.tree;
                found.f = _pair.f;
            }
            return found;
        }

    private:
        auto abandoned() const -> bool
        {
            return _shared.out_of_budget.load(std::memory_order_relaxed)
                || _shared.stop_sequence.load(std::memory_order_relaxed) < _pair.sequence;
        }

        auto count_examined() -> bool
        {
            auto total = _shared.examined.fetch_add(1, std::memory_order_relaxed) + 1;
            if (_config.budget && total > *_config.budget) {
                _shared.out_of_budget = true;
                return false;
            }
            return true;
        }

        void offer(Found & found, int degree, const vector<int> & r)
        {
            if (degree >= found.degree)
                return;
            found.degree = degree;
            found.r = r;
            int seen = _shared.best.load();
            while (degree < seen && ! _shared.best.compare_exchange_weak(seen, degree)) {
            }
            if (_config.stop_at && degree <= *_config.stop_at) {
                uint64_t current = _shared.stop_sequence.load();
                while (_pair.sequence < current && ! _shared.stop_sequence.compare_exchange_weak(current, _pair.sequence)) {
                }
                _stop = true;
            }
        }

        void run_exhaustive(Found & found)
        {
            IndexStream stream(_g.edge_count(), _config.i_max);
            while (stream.next()) {
                if ((_stop && _config.stop_at) || abandoned() || ! count_examined())
                    return;
                auto degree = _model.degree(stream.indices());
                if (degree < _config.cutoff)
                    offer(found, degree, stream.indices());
            }
        }

        void run_branch_and_bound(Found & found)
        {
            auto m = static_cast<std::size_t>(_g.edge_count());
            _lo.assign(m, 1);
            _hi.assign(m, 1);
            for (auto e : _model.cross_edges())
                _hi[static_cast<std::size_t>(e)] = _config.i_max;
            descend(found, 0);
        }

        // Cross edges are fixed in ascending id order with ascending values,
        // so the first leaf reaching the final minimum is the lexicographically
        // first minimizer.
        void descend(Found & found, std::size_t depth)
        {
            if (_stop || abandoned())
                return;
            auto bound = _model.lower_bound(_lo, _hi);
            if (bound >= found.degree || bound >= _config.cutoff
                || (_config.share_best && bound > _shared.best.load(std::memory_order_relaxed))) {
                _shared.pruned.fetch_add(1, std::memory_order_relaxed);
                return;
            }
            auto & cross = _model.cross_edges();
            if (depth == cross.size()) {
                if (count_examined())
                    offer(found, bound, _lo);
                return;
            }
            auto e = static_cast<std::size_t>(cross[depth]);
            for (int value = 1; value <= _config.i_max && ! _stop; ++value) {
                _lo[e] = _hi[e] = value;
                descend(found, depth + 1);
            }
            _lo[e] = 1;
            _hi[e] = _config.i_max;
        }

        const Multigraph & _g;
        const TreeFunctionPair & _pair;
        const SearchConfig & _config;
        Shared & _shared;
        DegreeModel _model;
        vector<int> _lo, _hi;
        bool _stop = false;
    };

    struct SearchOutcome {
        optional<Found> best;
        uint64_t examined = 0;
        uint64_t pruned = 0;
        bool complete = true;
    };

    auto better(const Found & a, const Found & b) -> bool
    {
        return a.degree < b.degree || (a.degree == b.degree && a.sequence < b.sequence);
    }

    auto search(const Multigraph & g, const SearchConfig & config) -> SearchOutcome
    {
        Shared shared;
        PairStream pairs(g.vertex_count());
        std::mutex stream_mutex, result_mutex;
        optional<Found> best;

        auto worker = [&] {
            while (true) {
                TreeFunctionPair pair;
                {
                    std::lock_guard lock(stream_mutex);
                    if (shared.out_of_budget || ! pairs.next())
                        return;
                    pair = pairs.current();
                }
                if (shared.stop_sequence.load() < pair.sequence)
                    return;

                auto found = PairSearch(g, pair, config, shared).run();
                if (found.degree == INT_MAX)
                    continue;
                std::lock_guard lock(result_mutex);
                if (! best || better(found, *best))
                    best = std::move(found);
            }
        };

        auto workers = std::max(config.workers, 1);
        if (workers == 1)
            worker();
        else {
            vector<std::jthread> pool;
            for (int i = 0; i < workers; ++i)
                pool.emplace_back(worker);
        }

        return SearchOutcome{std::move(best), shared.examined.load(), shared.pruned.load(), ! shared.out_of_budget.load()};
    }

    void require_solvable(const Multigraph & g)
    {
        if (g.vertex_count() < 1)
            throw InvalidInput("graph has no vertices");
        if (! is_connected(g))
            throw InvalidInput("graph is disconnected");
    }

    struct Prepared {
        Multigraph target;
        bool reduced = false;
        optional<int> closed_form;
    };

    auto prepare(const Multigraph & g, const SolveOptions & opts) -> Prepared
    {
        require_solvable(g);
        if (opts.max_index_override && *opts.max_index_override < 1)
            throw InvalidInput("max index override must be at least 1");
        if (opts.parallelism < 1)
            throw InvalidInput("parallelism must be at least 1");

        Prepared prepared{g, false, std::nullopt};
        if (opts.use_reduction) {
            auto report = stable_reduce(g);
            prepared.reduced = ! (report.reduced == g);
            prepared.target = std::move(report.reduced);
            prepared.closed_form = report.fast_answer;
        }
        if (prepared.target.vertex_count() == 1 && prepared.target.edge_count() == 0)
            prepared.closed_form = 1;
        return prepared;
    }

    auto certify(const Prepared & prepared, const TupleAlpha & tuple, int expected, optional<int> i_max) -> Certificate
    {
        auto built = build_phi_alpha(prepared.target, tuple, i_max);
        if (built.degree != expected)
            throw InternalError("constructed morphism has degree " + std::to_string(built.degree) + ", search reported " + std::to_string(expected));
        Certificate cert{std::move(built.morphism), built.degree, std::nullopt};
        if (prepared.reduced)
            cert.reduced_graph = prepared.target;
        auto verdict = verify_certificate(prepared.target, cert);
        if (! verdict.accepted)
            throw InternalError("emitted certificate fails verification: " + verdict.failure_reason.value_or("?"));
        return cert;
    }

    // Single-vertex graphs: the one-vertex tree, with each loop folded onto its own leaf.
    auto closed_form_tuple(const Multigraph & target) -> TupleAlpha
    {
        if (target.vertex_count() != 1)
            throw InternalError("closed-form answer on a graph with more than one vertex");
        return TupleAlpha{TreeGraph(Multigraph(1)), vector<VertexId>{0}, vector<int>(static_cast<std::size_t>(target.edge_count()), 1)};
    }

    auto config_for(const Multigraph & target, const SolveOptions & opts) -> SearchConfig
    {
        SearchConfig config;
        config.i_max = opts.max_index_override.value_or(upper_bound(target));
        config.prune = opts.prune;
        config.workers = opts.parallelism;
        config.budget = opts.budget;
        return config;
    }
}

auto sgon(const Multigraph & g, const SolveOptions & opts) -> SolveResult
{
    auto start = std::chrono::steady_clock::now();
    auto prepared = prepare(g, opts);

    SolveResult result;
    result.searched_graph = prepared.target;
    result.reduced = prepared.reduced;

    if (prepared.closed_form) {
        auto tuple = closed_form_tuple(prepared.target);
        result.sgon = *prepared.closed_form;
        result.certificate = certify(prepared, tuple, result.sgon, std::nullopt);
    }
    else {
        auto config = config_for(prepared.target, opts);
        if (opts.prune) {
            if (! opts.max_index_override)
                config.cutoff = upper_bound(prepared.target) + 1;
            config.stop_at = lower_bound(prepared.target);
        }
        auto outcome = search(prepared.target, config);
        result.tuples_examined = outcome.examined;
        result.pruned = outcome.pruned;
        result.complete = outcome.complete;
        if (! outcome.best)
            throw InternalError(outcome.complete ? "exhaustive search found no tuple within the degree bound" : "budget exhausted before any tuple was evaluated");

        auto & best = *outcome.best;
        TupleAlpha tuple{best.tree, best.f, best.r};
        result.sgon = best.degree;
        result.certificate = certify(prepared, tuple, best.degree, config.i_max);
        result.best_tuple = std::move(tuple);
    }

    result.wall_time = std::chrono::steady_clock::now() - start;
    return result;
}

auto decide(const Multigraph & g, int k, const SolveOptions & opts) -> Decision
{
    auto prepared = prepare(g, opts);
    Decision decision;

    if (prepared.closed_form) {
        if (k >= *prepared.closed_form) {
            decision.yes = true;
            decision.certificate = certify(prepared, closed_form_tuple(prepared.target), *prepared.closed_form, std::nullopt);
        }
        return decision;
    }
    if (k < lower_bound(prepared.target))
        return decision;

    auto config = config_for(prepared.target, opts);
    config.cutoff = k + 1;
    config.stop_at = k;
    config.share_best = false;
    auto outcome = search(prepared.target, config);
    decision.tuples_examined = outcome.examined;
    decision.pruned = outcome.pruned;
    if (outcome.best) {
        auto & best = *outcome.best;
        decision.yes = true;
        decision.certificate = certify(prepared, TupleAlpha{best.tree, best.f, best.r}, best.degree, config.i_max);
    }
    return decision;
}

auto solve_fixed_tf(const Multigraph & g, const TreeGraph & tree, span<const VertexId> f, int k, optional<int> i_max) -> FixedPairResult
{
    require_solvable(g);
    SearchConfig config;
    config.i_max = i_max.value_or(upper_bound(g));
    if (config.i_max < 1)
        throw InvalidInput("index bound must be at least 1");

    Shared shared;
    TreeFunctionPair pair{0, tree, vector<VertexId>(f.begin(), f.end())};
    auto found = PairSearch(g, pair, config, shared).run();

    FixedPairResult result;
    result.tuples_examined = shared.examined.load();
    if (found.degree == INT_MAX)
        throw InternalError("fixed-pair search evaluated no index map");
    result.best_degree = found.degree;
    result.exists = found.degree <= k;
    if (result.exists)
        result.witness_r = std::move(found.r);
    return result;
}

} // namespace sgon
