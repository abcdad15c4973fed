#include "cli.hh"

#include <conflict/bounds.hh>
#include <conflict/choosability.hh>
#include <conflict/exact.hh>
#include <conflict/generators.hh>
#include <conflict/io.hh>
#include <conflict/lemma_check.hh>
#include <conflict/lll.hh>
#include <conflict/orientation.hh>
#include <conflict/split_adaptable.hh>
#include <conflict/two_phase.hh>

#include <CLI11.hpp>

#include <algorithm>
#include <atomic>
#include <chrono>
#include <filesystem>
#include <iomanip>
#include <map>
#include <optional>
#include <ostream>
#include <sstream>
#include <thread>

using namespace conflict;

using std::optional;
using std::ostream;
using std::string;
using std::vector;

namespace fs = std::filesystem;

namespace conflictcol
{
    namespace
    {
        const vector<string> solver_names{ "exact", "orient", "lll", "two-phase", "split" };

        auto randomized(const string & solver) -> bool
        {
            return solver == "lll" || solver == "two-phase" || solver == "split";
        }

        auto exit_for(Verdict verdict) -> int
        {
            switch (verdict) {
                case Verdict::colourable: return exit_success;
                case Verdict::budget_exhausted: return exit_error;
                default: return exit_negative;
            }
        }

        auto elapsed_ms(std::chrono::steady_clock::time_point start) -> double
        {
            return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
        }

        struct SolveRequest
        {
            string solver = "exact";
            optional<std::uint64_t> seed;
            optional<std::uint64_t> cap;
            optional<std::uint64_t> time_ms;
            string mode = "desk";
        };

        struct SolveOutcome
        {
            SolveResult result;
            optional<TwoPhaseStats> two_phase;
            bool valid = false;
            double wall_ms = 0;
        };

        auto two_phase_json(const TwoPhaseStats & s) -> Json
        {
            return { { "a_size", s.a_size }, { "b_size", s.b_size }, { "pruned_colours", s.pruned_colours },
                { "phase_a_resamples", s.phase_a_resamples }, { "phase_b_resamples", s.phase_b_resamples },
                { "max_b_clash", s.max_b_clash }, { "phase_a_conflict_free", s.phase_a_conflict_free },
                { "b_cap_respected", s.b_cap_respected }, { "phase_b_max_degree", s.phase_b_max_degree } };
        }

        // every solver but split, on a conflict instance
        auto run_conflict_solver(const ConflictInstance & instance, const SolveRequest & request) -> SolveOutcome
        {
            SolveOutcome outcome;
            auto start = std::chrono::steady_clock::now();
            if (request.solver == "exact") {
                SearchLimits limits{ request.cap, std::nullopt };
                if (request.time_ms)
                    limits.time_budget = std::chrono::milliseconds{ *request.time_ms };
                outcome.result = solve_exact(instance, limits);
            }
            else if (request.solver == "orient")
                outcome.result = solve_via_orientation(instance);
            else if (request.solver == "lll")
                outcome.result = solve_lll(instance, *request.seed, request.cap.value_or(default_resample_cap));
            else if (request.solver == "two-phase") {
                auto params = TwoPhaseParams::for_instance(instance, parse_pipeline_mode(request.mode));
                if (request.cap)
                    params.resample_cap = *request.cap;
                auto r = two_phase(instance, params, *request.seed);
                outcome.result = std::move(r.result);
                outcome.two_phase = r.stats;
            }
            else
                throw InvalidInput{ "solver '" + request.solver + "' does not take conflict instances" };
            outcome.wall_ms = elapsed_ms(start);
            outcome.valid = outcome.result.colouring && validate_colouring(instance, *outcome.result.colouring).empty();
            return outcome;
        }

        auto base_report(const string & solver, const SolveResult & result, bool valid) -> Json
        {
            Json report{ { "schema", report_schema }, { "solver", solver }, { "verdict", verdict_name(result.verdict) },
                { "nodes", result.nodes }, { "resamples", result.resamples }, { "attempts", result.attempts } };
            report["colouring"] = result.colouring ? Json(*result.colouring) : Json(nullptr);
            report["valid"] = result.colouring ? Json(valid) : Json(nullptr);
            if (! result.diagnostic.empty())
                report["diagnostic"] = result.diagnostic;
            return report;
        }

        auto cmd_solve(const string & file, const SolveRequest & request, const optional<string> & out_file,
                ostream & out, ostream & err) -> int
        {
            if (randomized(request.solver) && ! request.seed) {
                err << "error: --seed is required for solver " << request.solver << '\n';
                return exit_error;
            }
            auto json = read_json_file(file);

            Json report;
            int code;
            optional<Json> colouring_file;
            if (request.solver == "split") {
                auto instance = adaptable_from_json(json);
                SplitParams params;
                if (request.cap)
                    params.resample_cap = *request.cap;
                auto start = std::chrono::steady_clock::now();
                auto split = split_adaptable(instance, *request.seed, params);
                auto wall = elapsed_ms(start);
                SolveResult as_result{ split.verdict, split.colouring, 0, split.resamples, split.bipartition_attempts, split.diagnostic };
                bool valid = split.colouring && check_adapted(instance, *split.colouring);
                report = base_report(request.solver, as_result, valid);
                report["wall_ms"] = wall;
                report["graph"] = stats_to_json(graph_stats(instance.graph()));
                report["split"] = { { "bipartition_attempts", split.bipartition_attempts },
                    { "side_colours", split.side_colours }, { "min_low_side", split.min_low_side },
                    { "min_high_side", split.min_high_side }, { "split_threshold", split.split_threshold },
                    { "a_size", split.a_size }, { "b_size", split.b_size },
                    { "a_max_degree", split.a_max_degree }, { "b_max_degree", split.b_max_degree } };
                if (split.colouring && ! valid)
                    throw std::logic_error{ "split pipeline produced a colouring that fails the adapted check" };
                if (split.colouring)
                    colouring_file = colouring_to_json(*split.colouring);
                code = exit_for(split.verdict);
            }
            else {
                auto instance = instance_from_json(json);
                auto outcome = run_conflict_solver(instance, request);
                report = base_report(request.solver, outcome.result, outcome.valid);
                report["wall_ms"] = outcome.wall_ms;
                report["graph"] = stats_to_json(graph_stats(instance.graph()));
                if (outcome.two_phase)
                    report["two_phase"] = two_phase_json(*outcome.two_phase);
                if (outcome.result.colouring && ! outcome.valid)
                    throw std::logic_error{ "solver returned a colouring that fails validation" };
                if (outcome.result.colouring)
                    colouring_file = colouring_to_json(*outcome.result.colouring);
                code = exit_for(outcome.result.verdict);
            }

            if (out_file && colouring_file)
                write_json_file(*out_file, *colouring_file);
            out << report.dump(2) << '\n';
            return code;
        }

        auto cmd_verify(const string & file, const string & colouring_path, ostream & out) -> int
        {
            auto instance = instance_from_json(read_json_file(file));
            auto colouring = colouring_from_json(read_json_file(colouring_path));
            auto violations = validate_colouring(instance, colouring);
            Json report{ { "schema", report_schema }, { "valid", violations.empty() }, { "conflict_edges", violations.edges } };
            out << report.dump(2) << '\n';
            return violations.empty() ? exit_success : exit_negative;
        }

        auto expect_args(const vector<double> & args, std::size_t count, const string & what) -> void
        {
            if (args.size() != count)
                throw InvalidInput{ what + " expects " + std::to_string(count) + " argument(s), got " + std::to_string(args.size()) };
            for (auto a : args)
                if (a != std::floor(a))
                    throw InvalidInput{ what + " expects integer arguments" };
        }

        auto cmd_gen(const string & family, const vector<double> & a, optional<std::uint64_t> seed,
                const optional<string> & out_file, ostream & out, ostream & err) -> int
        {
            auto need_seed = [&] {
                if (! seed)
                    throw CLI::ValidationError{ "--seed", "family " + family + " is randomized and needs --seed" };
                return *seed;
            };
            auto i = [&] (std::size_t idx) { return static_cast<int>(a[idx]); };

            optional<ConflictInstance> instance;
            if (family == "two-vertex") {
                expect_args(a, 1, "two-vertex (k)");
                instance = gen_two_vertex(i(0));
            }
            else if (family == "star") {
                expect_args(a, 1, "star (mu)");
                instance = gen_star(i(0));
            }
            else if (family == "random") {
                expect_args(a, 4, "random (n m mu k)");
                auto s = need_seed();
                instance = gen_random_partition(gen_random_multigraph(i(0), i(1), i(2), s), i(3), s + 1);
            }
            else if (family == "complete") {
                expect_args(a, 3, "complete (n mu k)");
                instance = gen_random_partition(gen_complete_multigraph(i(0), i(1)), i(2), need_seed());
            }
            else if (family == "planar") {
                expect_args(a, 2, "planar (n k)");
                auto s = need_seed();
                instance = gen_random_partition(gen_planar_triangulation(i(0), s), i(1), s + 1);
            }
            else {
                err << "error: unknown family " << family << '\n';
                return exit_error;
            }

            auto json = instance_to_json(*instance);
            if (out_file)
                write_json_file(*out_file, json);
            else
                out << json.dump(2) << '\n';
            return exit_success;
        }

        auto status_name(ChoosabilityStatus status) -> string
        {
            switch (status) {
                case ChoosabilityStatus::determined: return "determined";
                case ChoosabilityStatus::above_k_max: return "above-kmax";
                case ChoosabilityStatus::budget_exceeded: return "budget-exceeded";
            }
            return "unknown";
        }

        auto cmd_exact_ch(const string & file, const string & variant, const ChoosabilityOptions & options, ostream & out) -> int
        {
            auto instance = instance_from_json(read_json_file(file));
            auto start = std::chrono::steady_clock::now();
            ChoosabilityResult result;
            if (variant == "conflict")
                result = exact_choosability(instance.graph(), options);
            else if (variant == "adaptable")
                result = exact_adaptable_choosability(instance.graph(), options);
            else
                result = exact_separation_choosability(instance.graph(), options);

            Json report{ { "schema", report_schema }, { "variant", variant }, { "status", status_name(result.status) },
                { "partitions", result.partitions }, { "work", result.work }, { "wall_ms", elapsed_ms(start) },
                { "kmax", options.k_max } };
            report["value"] = result.status == ChoosabilityStatus::determined ? Json(result.value) : Json(nullptr);
            report["witness"] = result.witness ? instance_to_json(*result.witness) : Json(nullptr);
            if (! result.diagnostic.empty())
                report["diagnostic"] = result.diagnostic;
            out << report.dump(2) << '\n';

            switch (result.status) {
                case ChoosabilityStatus::determined: return exit_success;
                case ChoosabilityStatus::above_k_max: return exit_negative;
                case ChoosabilityStatus::budget_exceeded: return exit_error;
            }
            return exit_error;
        }

        struct BoundReport
        {
            double value;
            optional<long long> ceiling;
            optional<long long> floor;
            string reference;
            Json extra = Json::object();
        };

        auto evaluate_bound(const string & formula, const vector<double> & a, const BoundConstants & constants) -> BoundReport
        {
            auto ll = [&] (std::size_t idx) { return static_cast<long long>(a[idx]); };
            if (formula == "max-degree") {
                expect_args(a, 1, formula + " (Delta)");
                auto target = std::numbers::e * (2.0 * ll(0) - 1.0);
                return { std::sqrt(target), bound_max_degree(ll(0)), std::nullopt, "max-degree resampling bound" };
            }
            if (formula == "avg-degree") {
                if (a.size() != 1)
                    throw InvalidInput{ formula + " expects 1 argument (d)" };
                auto k = lower_bound_avg_degree(a[0], constants);
                return { std::sqrt(a[0] / constants.log(a[0])), std::nullopt, k, "average-degree lower bound" };
            }
            if (formula == "edges") {
                expect_args(a, 2, formula + " (m mu)");
                auto b = bound_edges(ll(0), ll(1), constants);
                return { b.value, b.ceiling, std::nullopt, "edge-count upper bound" };
            }
            if (formula == "surface") {
                expect_args(a, 2, formula + " (g mu)");
                auto b = bound_surface(ll(0), ll(1), constants);
                return { b.value, b.ceiling, std::nullopt, "surface upper bound" };
            }
            if (formula == "adaptable-edges") {
                expect_args(a, 2, formula + " (m mu)");
                auto b = bound_adaptable_edges(ll(0), ll(1));
                BoundReport r{ b.bound.value, b.bound.ceiling, std::nullopt, "adaptable edge-count bound" };
                r.extra["below_threshold"] = b.below_threshold;
                return r;
            }
            if (formula == "adaptable-surface") {
                expect_args(a, 2, formula + " (g mu)");
                auto b = bound_adaptable_surface(ll(0), ll(1), constants);
                return { b.value, b.ceiling, std::nullopt, "adaptable surface bound" };
            }
            if (formula == "heawood") {
                expect_args(a, 1, formula + " (g)");
                auto b = heawood_orientation_bound(ll(0));
                BoundReport r{ b.value(), robust_ceil(b.value()), b.floor(), "surface orientation bound" };
                r.extra["planar"] = b.planar;
                r.extra["heawood_number"] = b.heawood_number;
                r.extra["fraction"] = { b.numerator, b.denominator };
                if (b.planar)
                    r.extra["triangle_free_bound"] = b.triangle_free_bound;
                return r;
            }
            if (formula == "lemma-feasibility") {
                if (a.size() != 1)
                    throw InvalidInput{ formula + " expects 1 argument (d)" };
                auto f = lll_feasibility_check(a[0]);
                BoundReport r{ a[0], std::nullopt, std::nullopt, "phase-A local lemma conditions" };
                r.extra["holds"] = f.holds;
                r.extra["uncoloured_slack"] = f.uncoloured_slack;
                r.extra["edge_conflict_slack"] = f.edge_conflict_slack;
                r.extra["overload_slack"] = f.overload_slack;
                return r;
            }
            throw InvalidInput{ "unknown formula '" + formula + "'" };
        }

        auto cmd_bounds(const string & formula, const vector<double> & args, const BoundConstants & constants, ostream & out) -> int
        {
            auto r = evaluate_bound(formula, args, constants);
            Json report{ { "schema", report_schema }, { "formula", formula }, { "args", args },
                { "value", r.value }, { "reference", r.reference } };
            report["ceiling"] = r.ceiling ? Json(*r.ceiling) : Json(nullptr);
            if (r.floor)
                report["floor"] = *r.floor;
            for (auto & [key, value] : r.extra.items())
                report[key] = value;
            out << report.dump(2) << '\n';
            return exit_success;
        }

        struct BenchCell
        {
            string instance;
            string solver;
            optional<std::uint64_t> seed;
            string verdict;
            std::uint64_t nodes = 0;
            std::uint64_t resamples = 0;
            bool valid = false;
            double wall_ms = 0;
            string diagnostic;
        };

        auto cmd_bench(const string & dir, const vector<string> & solvers, const vector<std::uint64_t> & seeds,
                optional<std::uint64_t> cap, const string & mode, int threads, const optional<string> & json_file,
                ostream & out) -> int
        {
            if (! fs::is_directory(dir))
                throw InvalidInput{ "corpus directory " + dir + " does not exist" };
            for (auto & s : solvers)
                if (s == "split")
                    throw InvalidInput{ "bench runs conflict instances; the split solver is not supported here" };
            if (seeds.empty() && std::any_of(solvers.begin(), solvers.end(), randomized))
                throw InvalidInput{ "randomized solvers in the bench need --seeds" };

            vector<fs::path> files;
            for (auto & entry : fs::directory_iterator{ dir })
                if (entry.is_regular_file() && entry.path().extension() == ".json")
                    files.push_back(entry.path());
            std::sort(files.begin(), files.end());

            vector<BenchCell> cells;
            for (auto & f : files)
                for (auto & s : solvers) {
                    if (randomized(s))
                        for (auto seed : seeds)
                            cells.push_back({ f.filename().string(), s, seed, "", 0, 0, false, 0, "" });
                    else
                        cells.push_back({ f.filename().string(), s, std::nullopt, "", 0, 0, false, 0, "" });
                }

            std::map<string, ConflictInstance> instances;
            for (auto & f : files)
                instances.emplace(f.filename().string(), instance_from_json(read_json_file(f)));

            std::atomic<std::size_t> next{ 0 };
            auto worker = [&] {
                for (std::size_t i ; (i = next++) < cells.size() ; ) {
                    auto & cell = cells[i];
                    SolveRequest request{ cell.solver, cell.seed, cap, std::nullopt, mode };
                    try {
                        auto outcome = run_conflict_solver(instances.at(cell.instance), request);
                        cell.verdict = verdict_name(outcome.result.verdict);
                        cell.nodes = outcome.result.nodes;
                        cell.resamples = outcome.result.resamples;
                        cell.valid = outcome.valid;
                        cell.wall_ms = outcome.wall_ms;
                    }
                    catch (const InvalidInput & e) {
                        cell.verdict = verdict_name(Verdict::not_applicable);
                        cell.diagnostic = e.what();
                    }
                }
            };
            {
                vector<std::jthread> pool;
                for (int t = 1 ; t < std::max(1, threads) ; ++t)
                    pool.emplace_back(worker);
                worker();
            }

            std::map<string, std::pair<int, int>> rates;
            for (auto & s : solvers)
                rates[s] = { 0, 0 };
            for (auto & cell : cells) {
                ++rates[cell.solver].first;
                if (cell.valid)
                    ++rates[cell.solver].second;
            }

            out << std::left << std::setw(28) << "instance" << std::setw(11) << "solver" << std::setw(8) << "seed"
                << std::setw(18) << "verdict" << std::right << std::setw(12) << "nodes" << std::setw(12) << "resamples"
                << std::setw(11) << "ms" << '\n';
            for (auto & cell : cells)
                out << std::left << std::setw(28) << cell.instance << std::setw(11) << cell.solver
                    << std::setw(8) << (cell.seed ? std::to_string(*cell.seed) : "-")
                    << std::setw(18) << cell.verdict << std::right << std::setw(12) << cell.nodes
                    << std::setw(12) << cell.resamples << std::setw(11) << std::fixed << std::setprecision(2) << cell.wall_ms << '\n';
            for (auto & [solver, rate] : rates)
                out << "success " << solver << ": " << rate.second << "/" << rate.first << '\n';

            if (json_file) {
                // wall time is left out so that equal seeds give identical files
                auto rows = Json::array();
                for (auto & cell : cells) {
                    Json row{ { "instance", cell.instance }, { "solver", cell.solver }, { "verdict", cell.verdict },
                        { "nodes", cell.nodes }, { "resamples", cell.resamples }, { "valid", cell.valid } };
                    row["seed"] = cell.seed ? Json(*cell.seed) : Json(nullptr);
                    if (! cell.diagnostic.empty())
                        row["diagnostic"] = cell.diagnostic;
                    rows.push_back(std::move(row));
                }
                Json summary = Json::object();
                for (auto & [solver, rate] : rates)
                    summary[solver] = { { "runs", rate.first }, { "successes", rate.second },
                        { "rate", rate.first == 0 ? 0.0 : static_cast<double>(rate.second) / rate.first } };
                write_json_file(*json_file, { { "schema", report_schema }, { "rows", std::move(rows) }, { "summary", std::move(summary) } });
            }
            return exit_success;
        }
    }

    auto run_cli(const vector<string> & args, ostream & out, ostream & err) -> int
    {
        CLI::App app{ "Conflict colouring of multigraphs: solvers, generators, bounds and an exact oracle" };
        app.require_subcommand(1);

        string file, colouring_path, family, formula, dir, variant = "conflict";
        SolveRequest request;
        optional<string> out_file, json_file;
        optional<std::uint64_t> seed, cap;
        vector<double> gen_args, bound_args;
        vector<string> solvers{ "exact" };
        vector<std::uint64_t> seeds;
        ChoosabilityOptions ch_options;
        BoundConstants constants;
        int threads = 1;
        string mode = "desk";

        auto solve = app.add_subcommand("solve", "Solve one instance file and print a report");
        solve->add_option("file", file, "Instance file")->required();
        solve->add_option("--solver", request.solver, "Solver")->check(CLI::IsMember(solver_names));
        solve->add_option("--seed", request.seed, "Seed, required by randomized solvers");
        solve->add_option("--cap", request.cap, "Node budget (exact) or resample cap (randomized)");
        solve->add_option("--time-ms", request.time_ms, "Time budget for the exact solver");
        solve->add_option("--mode", request.mode, "Two-phase parameter mode")->check(CLI::IsMember({ "paper", "desk" }));
        solve->add_option("--out", out_file, "Write the colouring here");

        auto verify = app.add_subcommand("verify", "Check a colouring against an instance");
        verify->add_option("file", file, "Instance file")->required();
        verify->add_option("colouring", colouring_path, "Colouring file")->required();

        auto gen = app.add_subcommand("gen", "Generate an instance");
        gen->add_option("--family", family, "Family")->required()
            ->check(CLI::IsMember({ "two-vertex", "star", "random", "complete", "planar" }));
        gen->add_option("--args", gen_args, "two-vertex: k; star: mu; random: n m mu k; complete: n mu k; planar: n k");
        gen->add_option("--seed", seed, "Seed for randomized families");
        gen->add_option("--out", out_file, "Output file (stdout if absent)");

        auto exact_ch = app.add_subcommand("exact-ch", "Exact choosability of an instance's graph");
        exact_ch->add_option("file", file, "Instance file (only the graph is used)")->required();
        exact_ch->add_option("--kmax", ch_options.k_max, "Largest k tried")->check(CLI::PositiveNumber);
        exact_ch->add_option("--budget", ch_options.work_budget, "Work budget");
        exact_ch->add_option("--threads", ch_options.threads, "Worker threads")->check(CLI::PositiveNumber);
        exact_ch->add_option("--variant", variant, "Which choosability")
            ->check(CLI::IsMember({ "conflict", "adaptable", "separation" }));

        auto bounds = app.add_subcommand("bounds", "Evaluate a bound formula");
        bounds->add_option("--formula", formula, "max-degree, avg-degree, edges, surface, adaptable-edges, "
                "adaptable-surface, heawood, lemma-feasibility")->required();
        bounds->add_option("--args", bound_args, "Formula arguments")->required();
        bounds->add_option("--c1", constants.surface, "Surface bound constant");
        bounds->add_option("--c2", constants.edges, "Edge-count bound constant");
        bounds->add_option("--c3", constants.adaptable_surface, "Adaptable surface bound constant");
        bounds->add_option("--log-base", constants.log_base, "Logarithm base");

        auto bench = app.add_subcommand("bench", "Run a solver matrix over a corpus directory");
        bench->add_option("dir", dir, "Directory of instance files")->required();
        bench->add_option("--solvers", solvers, "Solvers")->delimiter(',')
            ->check(CLI::IsMember({ "exact", "orient", "lll", "two-phase" }));
        bench->add_option("--seeds", seeds, "Seeds for randomized solvers")->delimiter(',');
        bench->add_option("--cap", cap, "Node budget or resample cap");
        bench->add_option("--mode", mode, "Two-phase parameter mode")->check(CLI::IsMember({ "paper", "desk" }));
        bench->add_option("--threads", threads, "Worker threads")->check(CLI::PositiveNumber);
        bench->add_option("--json", json_file, "Write the machine-readable report here");

        try {
            vector<string> reversed(args.rbegin(), args.rend());
            app.parse(reversed);
        }
        catch (const CLI::CallForHelp & e) {
            return app.exit(e, out, err);
        }
        catch (const CLI::ParseError & e) {
            app.exit(e, out, err);
            return exit_error;
        }

        try {
            if (*solve)
                return cmd_solve(file, request, out_file, out, err);
            if (*verify)
                return cmd_verify(file, colouring_path, out);
            if (*gen)
                return cmd_gen(family, gen_args, seed, out_file, out, err);
            if (*exact_ch)
                return cmd_exact_ch(file, variant, ch_options, out);
            if (*bounds)
                return cmd_bounds(formula, bound_args, constants, out);
            if (*bench)
                return cmd_bench(dir, solvers, seeds, cap, mode, threads, json_file, out);
        }
        catch (const InvalidInput & e) {
            err << "error: " << e.what() << '\n';
            return exit_error;
        }
        catch (const CLI::Error & e) {
            err << "error: " << e.what() << '\n';
            return exit_error;
        }
        return exit_error;
    }
}
