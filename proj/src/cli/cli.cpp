#include <regramsey/arith.hpp>
#include <regramsey/cli.hpp>
#include <regramsey/search.hpp>

#include <CLI11.hpp>
#include <omp.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <map>
#include <sstream>

namespace regramsey {

namespace {
    using json = nlohmann::json;

    struct UsageError : std::runtime_error
    {
        using std::runtime_error::runtime_error;
    };

    // ---- global configuration ----

    struct Global
    {
        std::string cap_text;
        std::string cap_source = "default";
        BigNat cap = default_cap();
        unsigned jobs = 0;
        std::uint64_t max_nodes = 0;
        std::uint64_t time_limit_ms = 0;
        std::uint64_t max_iterations = 20'000'000;
        std::string output;
        std::string format = "text";

        auto resolve() -> void
        {
            if (cap_text.empty()) {
                if (const char * env = std::getenv("REGRAMSEY_CAP"); env && *env) {
                    cap_text = env;
                    cap_source = "REGRAMSEY_CAP";
                }
                else
                    cap_text = "2^256";
            }
            else
                cap_source = "--cap";
            try {
                cap = parse_natural(cap_text);
            }
            catch (const std::exception & e) {
                throw UsageError("bad cap '" + cap_text + "': " + e.what());
            }
            if (jobs)
                omp_set_num_threads(static_cast<int>(jobs));
        }

        auto budget() const -> SearchBudget
        {
            SearchBudget b;
            b.max_nodes = max_nodes;
            b.time_limit = std::chrono::milliseconds(time_limit_ms);
            b.parallelism = jobs;
            return b;
        }

        auto eval_context() const -> EvalContext
        {
            EvalContext ctx;
            ctx.cap = cap;
            ctx.max_iterations = max_iterations;
            return ctx;
        }

        auto to_json() const -> json
        {
            return {
                {"cap", cap_text},
                {"cap_source", cap_source},
                {"jobs", jobs ? jobs : static_cast<unsigned>(omp_get_max_threads())},
                {"max_nodes", max_nodes},
                {"time_limit_ms", time_limit_ms},
                {"max_iterations", max_iterations},
            };
        }
    };

    // ---- coloring selection ----

    struct ColoringArgs
    {
        std::string construction;
        std::string g = "id";
        Nat k = 3;
        Nat s = 2;
        Nat lo = 0;
        Nat hi = 0;
        Nat colors = 2;
        std::uint64_t seed = 1;
        std::string graph;
        std::string schedule;
        std::string from;

        auto to_json() const -> json
        {
            return {{"construction", construction}, {"g", g}, {"k", k}, {"s", s}, {"lo", lo}, {"hi", hi},
                {"colors", colors}, {"seed", seed}, {"graph", graph}, {"schedule", schedule}, {"from", from}};
        }

        static auto from_json(const json & j) -> ColoringArgs
        {
            ColoringArgs a;
            a.construction = j.at("construction");
            a.g = j.at("g");
            a.k = j.at("k");
            a.s = j.at("s");
            a.lo = j.at("lo");
            a.hi = j.at("hi");
            a.colors = j.at("colors");
            a.seed = j.at("seed");
            a.graph = j.at("graph");
            a.schedule = j.at("schedule");
            a.from = j.at("from");
            return a;
        }
    };

    const std::vector<std::string> construction_names{
        "cg", "base10", "small", "graph", "base-s", "stitched", "random", "file"};

    auto add_coloring_options(CLI::App * cmd, ColoringArgs & a) -> void
    {
        cmd->add_option("construction", a.construction, "cg | base10 | small | graph | base-s | stitched | random | file")
            ->required()
            ->check(CLI::IsMember(construction_names));
        cmd->add_option("--g", a.g, "bound g (cg, random): const:C, id, root:t, pow:j, logq:f=..., sched:...");
        cmd->add_option("--k", a.k, "k for cg: the domain is [mu_g(k), (f_g)_k(mu))");
        cmd->add_option("--s", a.s, "base for base-s");
        cmd->add_option("--lo", a.lo, "lower end for random, or of the searched sub-interval");
        cmd->add_option("--hi", a.hi, "exclusive upper end (base-s, random, sub-interval)");
        cmd->add_option("--colors", a.colors, "number of colors for random");
        cmd->add_option("--seed", a.seed, "seed for random");
        cmd->add_option("--graph", a.graph, "graph file for small / graph (default: the shipped one)");
        cmd->add_option("--schedule", a.schedule, "schedule JSON for stitched (default: mu = [0, 43, 10^4])");
        cmd->add_option("--from", a.from, "exported coloring header for file");
    }

    auto load_graph(const std::string & path) -> RamseyGraph
    {
        return path.empty() ? RamseyGraph::shipped() : RamseyGraph::from_file(path);
    }

    auto toy_schedule() -> Schedule { return Schedule{{0, 43, 10'000}, {11, 6}}; }

    auto load_schedule(const std::string & path) -> Schedule
    {
        return path.empty() ? toy_schedule() : Schedule::from_file(path);
    }

    auto make_coloring(const ColoringArgs & a) -> ColoringPtr
    {
        const auto & c = a.construction;
        if (c == "cg")
            return cg_coloring(BoundFn::parse(a.g), a.k);
        if (c == "base10")
            return base10_coloring();
        if (c == "small")
            return small_interval_coloring(load_graph(a.graph));
        if (c == "graph")
            return graph_coloring(load_graph(a.graph));
        if (c == "base-s")
            return base_s_coloring(a.s, a.hi ? a.hi : 10'001);
        if (c == "stitched") {
            auto s = load_schedule(a.schedule);
            if (s.mu != std::vector<Nat>{0, 43, 10'000})
                throw UsageError("stitched supports the two-interval schedule mu = [0, 43, 10000] only");
            return stitched_coloring(s, {small_interval_coloring(load_graph(a.graph)), base10_coloring()});
        }
        if (c == "random") {
            if (a.hi <= a.lo)
                throw UsageError("random needs --lo < --hi");
            auto g = BoundFn::parse(a.g);
            return TableColoring::random({a.lo, a.hi}, a.colors, a.seed, &g);
        }
        if (c == "file") {
            if (a.from.empty())
                throw UsageError("file needs --from <header.json>");
            return import_coloring(a.from);
        }
        throw UsageError("unknown construction " + c);
    }

    // sub-interval of the coloring's domain selected by --lo / --hi
    auto search_interval(const ColoringArgs & a, const Coloring & c) -> Interval
    {
        auto d = c.domain();
        if (a.construction == "random" || a.construction == "base-s")
            return d;
        Interval r{a.lo ? a.lo : d.lo, a.hi ? a.hi : d.hi};
        if (! d.contains(r))
            throw UsageError("interval [" + std::to_string(r.lo) + ", " + std::to_string(r.hi) +
                ") is outside the domain [" + std::to_string(d.lo) + ", " + std::to_string(d.hi) + ")");
        return r;
    }

    // ---- result documents ----

    struct Run
    {
        std::string command;
        std::vector<std::string> argv;
        json config = json::object();
        std::string status = "RESULT";
        json result = json::object();
        std::string text;
        std::string csv;

        auto document() const -> json
        {
            return {{"tool", "regramsey"}, {"format_version", 1}, {"command", command}, {"argv", argv},
                {"config", config}, {"status", status}, {"result", result}};
        }

        auto exit_code() const -> int
        {
            if (status == "FAIL")
                return exit_fail;
            if (status == "BUDGET" || status == "INDETERMINATE")
                return exit_budget;
            return exit_pass;
        }
    };

    auto status_of(Verdict v) -> std::string
    {
        switch (v) {
        case Verdict::pass: return "PASS";
        case Verdict::fail: return "FAIL";
        case Verdict::indeterminate: return "INDETERMINATE";
        }
        return "INDETERMINATE";
    }

    auto capped_json(const CappedNat & v) -> json
    {
        return v.is_top() ? json("TOP") : json(v.value().str());
    }

    auto evaluation_json(const Evaluation & e) -> json
    {
        return {{"value", capped_json(e.value)}, {"complete", e.complete}, {"iterations", e.iterations}};
    }

    // ---- eval ----

    struct EvalArgs
    {
        std::string spec;
        unsigned level = 1;
        std::string n;
    };

    auto cmd_eval(const Global & gl, const EvalArgs & a, Run & run) -> void
    {
        HierarchySpec spec = [&] {
            try {
                return HierarchySpec::parse(a.spec);
            }
            catch (const std::exception & e) {
                throw UsageError(e.what());
            }
        }();
        BigNat n;
        try {
            n = parse_natural(a.n);
        }
        catch (const std::exception & e) {
            throw UsageError("bad argument n = '" + a.n + "': " + e.what());
        }
        if (a.level == 0)
            throw UsageError("level must be >= 1");
        run.config.update({{"spec", spec.describe()}, {"level", a.level}, {"n", n.str()}});

        auto e = evaluate(spec, a.level, n, gl.eval_context());
        run.result = evaluation_json(e);
        if (e.complete && e.value.is_top())
            run.text = "TOP (exceeds cap " + gl.cap_text + ")";
        else if (e.complete)
            run.text = e.value.value().str();
        else {
            run.status = "BUDGET";
            run.result["lower_bound"] = capped_json(e.value);
            run.text = "at least " + (e.value.is_top() ? std::string("TOP") : e.value.value().str()) +
                " (budget exhausted after " + std::to_string(e.iterations) + " iterations)";
        }
    }

    // ---- color ----

    struct ColorArgs
    {
        ColoringArgs coloring;
        std::vector<Nat> pair;
        std::string check_g;
    };

    auto cmd_color(const Global &, const ColorArgs & a, Run & run) -> void
    {
        auto c = make_coloring(a.coloring);
        run.config["coloring"] = a.coloring.to_json();
        run.result["coloring"] = c->describe();
        if (! a.pair.empty()) {
            if (a.pair.size() != 2)
                throw UsageError("--pair takes two numbers m n");
            auto color = c->color_of(a.pair[0], a.pair[1]);
            run.config["pair"] = a.pair;
            run.result["color"] = color;
            run.text = std::to_string(color);
            return;
        }
        auto g = a.check_g.empty() ? BoundFn::constant(std::numeric_limits<Nat>::max()) : BoundFn::parse(a.check_g);
        auto report = verify_regressive(*c, g);
        run.config["check_g"] = a.check_g;
        run.result["pairs"] = report.pairs_checked;
        run.result["max_color"] = report.max_color;
        std::ostringstream text;
        text << c->name() << " on [" << c->domain().lo << ", " << c->domain().hi << "): " << report.pairs_checked
             << " pairs, max color " << report.max_color;
        if (! a.check_g.empty()) {
            run.result["regressive"] = report.pass();
            if (report.violation) {
                auto & v = *report.violation;
                run.result["violation"] = {{"m", v.m}, {"n", v.n}, {"color", v.color}, {"bound", v.bound}};
                run.status = "FAIL";
                text << "\nnot " << g.descriptor() << "-regressive: c(" << v.m << ", " << v.n << ") = " << v.color
                     << " > g(" << v.m << ") = " << v.bound;
            }
            else {
                run.status = "PASS";
                text << "\n" << g.descriptor() << "-regressive on every pair";
            }
        }
        run.text = text.str();
    }

    // ---- search ----

    struct SearchArgs
    {
        ColoringArgs coloring;
        std::string mode = "min-homogeneous";
        Nat target = 0;
    };

    auto cmd_search(const Global & gl, const SearchArgs & a, Run & run) -> void
    {
        auto c = make_coloring(a.coloring);
        auto d = search_interval(a.coloring, *c);
        auto mode = parse_search_mode(a.mode);
        run.config.update({{"coloring", a.coloring.to_json()}, {"interval", {d.lo, d.hi}}, {"mode", to_string(mode)},
            {"target", a.target}});
        std::ostringstream text;
        auto witness_text = [](const Witness & w) {
            std::ostringstream s;
            s << "{";
            for (std::size_t i = 0; i < w.elements.size(); ++i)
                s << (i ? ", " : "") << w.elements[i];
            s << "}";
            return s.str();
        };
        if (a.target) {
            auto o = mode == SearchMode::min_homogeneous ? max_min_homogeneous(*c, d, a.target, gl.budget())
                                                         : max_homogeneous(*c, d, a.target, gl.budget());
            run.result = outcome_to_json(o);
            if (o.witness)
                text << "found " << to_string(mode) << " set of size " << a.target << ": " << witness_text(*o.witness);
            else if (o.exhaustive)
                text << "no " << to_string(mode) << " set of size " << a.target << " (exhaustive)";
            else {
                run.status = "BUDGET";
                text << "budget exhausted before a witness or certificate for size " << a.target;
            }
        }
        else {
            auto o = mode == SearchMode::min_homogeneous ? largest_min_homogeneous(*c, d, gl.budget())
                                                         : largest_homogeneous(*c, d, gl.budget());
            run.result = maximum_to_json(o);
            text << (o.exhaustive ? "maximum " : "largest found (budget exhausted) ") << to_string(mode)
                 << " size " << o.size;
            if (o.witness)
                text << ": " << witness_text(*o.witness);
            if (! o.exhaustive)
                run.status = "BUDGET";
        }
        run.text = text.str();
    }

    // ---- nu ----

    struct NuArgs
    {
        std::string g;
        Nat k = 3;
        Nat k_max = 0;
        Nat limit = nu_max_N;
        std::string checkpoint;
    };

    auto bad_coloring_json(const std::optional<BadColoring> & b) -> json
    {
        if (! b)
            return nullptr;
        return {{"N", b->N}, {"colors", b->colors}};
    }

    auto read_json_file(const std::string & path) -> json
    {
        std::ifstream in{path};
        if (! in)
            throw std::runtime_error("cannot open " + path);
        return json::parse(in);
    }

    auto write_text_file(const std::string & path, const std::string & text) -> void
    {
        auto tmp = path + ".tmp";
        {
            std::ofstream out{tmp};
            out << text;
            if (! out)
                throw std::runtime_error("cannot write " + path);
        }
        std::filesystem::rename(tmp, path);
    }

    auto cmd_nu(const Global & gl, const NuArgs & a, Run & run) -> void
    {
        auto g = BoundFn::parse(a.g);
        Nat k_max = a.k_max ? a.k_max : a.k;
        if (a.k < 2 || k_max < a.k)
            throw UsageError("nu needs 2 <= k <= k-max");
        if (! a.checkpoint.empty() && k_max != a.k)
            throw UsageError("--checkpoint works with a single k");
        run.config.update({{"g", g.descriptor()}, {"k", a.k}, {"k_max", k_max}, {"limit", a.limit},
            {"checkpoint", a.checkpoint}});

        std::ostringstream text, csv;
        csv << "g,k,status,value,proven_bad_up_to,nodes\n";
        json rows = json::array();
        for (Nat k = a.k; k <= k_max; ++k) {
            std::optional<NuCheckpoint> resume;
            if (! a.checkpoint.empty() && std::filesystem::exists(a.checkpoint))
                resume = NuCheckpoint::from_json(read_json_file(a.checkpoint));
            auto save = [&](const NuCheckpoint & c) {
                if (! a.checkpoint.empty())
                    write_text_file(a.checkpoint, c.to_json().dump(2) + "\n");
            };
            auto r = nu_exact(g, k, a.limit, gl.budget(), resume, save);
            save(r.progress);

            json row{{"g", g.descriptor()}, {"k", k}, {"status", to_string(r.status)},
                {"value", r.value ? json(*r.value) : json(nullptr)},
                {"proven_bad_up_to", r.progress.proven_bad_up_to}, {"nodes_explored", r.nodes_explored},
                {"bad_coloring", bad_coloring_json(r.progress.bad_coloring)}};
            rows.push_back(row);
            csv << g.descriptor() << ',' << k << ',' << to_string(r.status) << ','
                << (r.value ? std::to_string(*r.value) : "") << ',' << r.progress.proven_bad_up_to << ','
                << r.nodes_explored << '\n';
            switch (r.status) {
            case NuStatus::found:
                text << "nu_" << g.descriptor() << "(" << k << ") = " << *r.value << "\n";
                break;
            case NuStatus::not_found_below_limit:
                text << "nu_" << g.descriptor() << "(" << k << ") > " << a.limit << ": NotFoundBelow(" << a.limit
                     << ")\n";
                break;
            case NuStatus::budget_exhausted:
                run.status = "BUDGET";
                text << "nu_" << g.descriptor() << "(" << k << ") > " << r.progress.proven_bad_up_to
                     << " (budget exhausted; a bad coloring of [0, " << r.progress.proven_bad_up_to << ") is known)\n";
                break;
            }
        }
        run.result = k_max == a.k ? rows[0] : json{{"rows", rows}};
        run.text = text.str();
        if (! run.text.empty())
            run.text.pop_back();
        run.csv = csv.str();
    }

    // ---- verify ----

    struct ClaimParams
    {
        std::string g = "id";
        Nat k = 3;
        unsigned t = 1;
        unsigned i = 1;
        Nat n = 16;
        Nat s = 2;
        Nat hi = 0;
        Nat target = 0;
        Nat C = 2;
        Nat trials = 1000;
        std::uint64_t seed = 1;
        std::string graph;
        std::string schedule;

        auto to_json() const -> json
        {
            return {{"g", g}, {"k", k}, {"t", t}, {"i", i}, {"n", n}, {"s", s}, {"hi", hi}, {"target", target},
                {"C", C}, {"trials", trials}, {"seed", seed}, {"graph", graph}, {"schedule", schedule}};
        }
    };

    struct ClaimOutcome
    {
        Verdict verdict = Verdict::indeterminate;
        json details = json::object();
        std::string summary;
    };

    using ClaimFn = std::function<ClaimOutcome(const Global &, const ClaimParams &)>;

    struct Claim
    {
        std::string description;
        std::vector<std::string> params;
        ClaimFn run;
    };

    auto witness_elements(const std::optional<Witness> & w) -> json
    {
        return w ? json(w->elements) : json(nullptr);
    }

    auto search_verdict(const SearchOutcome & o) -> Verdict
    {
        if (o.witness)
            return Verdict::fail;
        return o.exhaustive ? Verdict::pass : Verdict::indeterminate;
    }

    auto inequality_outcome(const InequalityCheck & c) -> ClaimOutcome
    {
        ClaimOutcome out;
        out.verdict = c.verdict;
        out.details = {{"name", c.name}, {"statement", c.statement}, {"lhs", evaluation_json(c.lhs)},
            {"rhs", evaluation_json(c.rhs)}, {"strict", c.strict}};
        out.summary = c.statement + ": lhs " + (c.lhs.complete ? "" : ">= ") + out.details["lhs"]["value"].get<std::string>() +
            ", rhs " + out.details["rhs"]["value"].get<std::string>();
        return out;
    }

    auto claim_registry() -> const std::map<std::string, Claim> &
    {
        static const std::map<std::string, Claim> registry{
            {"smallDg",
                {"D_g(m, n) <= floor(isqrt(g(m)) / 2) on [mu_g(k), (f_g)_k(mu))", {"g", "k"},
                    [](const Global &, const ClaimParams & p) {
                        auto g = BoundFn::parse(p.g);
                        auto c = cg_coloring(g, p.k);
                        auto & s = c->metric();
                        ClaimOutcome out;
                        Nat max_d = 0;
                        std::uint64_t pairs = 0;
                        json violation = nullptr;
                        for (Nat m = s.mu(); m < s.end() && violation.is_null(); ++m)
                            for (Nat n = m + 1; n < s.end(); ++n) {
                                ++pairs;
                                auto [level, dist] = s.i_and_d(m, n);
                                max_d = std::max(max_d, dist);
                                if (dist > isqrt(g(m)) / 2) {
                                    violation = {{"m", m}, {"n", n}, {"I", level}, {"D", dist}, {"bound", isqrt(g(m)) / 2}};
                                    break;
                                }
                            }
                        out.verdict = violation.is_null() ? Verdict::pass : Verdict::fail;
                        out.details = {{"mu", s.mu()}, {"end", s.end()}, {"pairs_checked", pairs}, {"max_D", max_d},
                            {"violation", violation}};
                        out.summary = std::to_string(pairs) + " pairs on [" + std::to_string(s.mu()) + ", " +
                            std::to_string(s.end()) + "), max D = " + std::to_string(max_d);
                        return out;
                    }}},
            {"g-regressive",
                {"c_g(m, n) <= g(m) on [mu_g(k), (f_g)_k(mu))", {"g", "k"},
                    [](const Global &, const ClaimParams & p) {
                        auto g = BoundFn::parse(p.g);
                        auto c = cg_coloring(g, p.k);
                        auto r = verify_regressive(*c, g);
                        ClaimOutcome out;
                        out.verdict = r.pass() ? Verdict::pass : Verdict::fail;
                        out.details = {{"domain", {c->domain().lo, c->domain().hi}}, {"pairs_checked", r.pairs_checked},
                            {"max_color", r.max_color}};
                        if (r.violation)
                            out.details["violation"] = {{"m", r.violation->m}, {"n", r.violation->n},
                                {"color", r.violation->color}, {"bound", r.violation->bound}};
                        out.summary = std::to_string(r.pairs_checked) + " pairs, max color " + std::to_string(r.max_color);
                        return out;
                    }}},
            {"noMinHom",
                {"no min-homogeneous (k+1)-set for c_g on [mu_g(k), (f_g)_k(mu))", {"g", "k"},
                    [](const Global & gl, const ClaimParams & p) {
                        auto c = cg_coloring(BoundFn::parse(p.g), p.k);
                        auto o = max_min_homogeneous(*c, c->domain(), p.k + 1, gl.budget());
                        ClaimOutcome out;
                        out.verdict = search_verdict(o);
                        out.details = outcome_to_json(o);
                        out.summary = "size " + std::to_string(p.k + 1) + " on [" + std::to_string(c->domain().lo) + ", " +
                            std::to_string(c->domain().hi) + "): " + out.details["result"].get<std::string>();
                        return out;
                    }}},
            {"observ-svalues",
                {"every homogeneous (s+1)-set of the base-s coloring spans two log blocks, on [1, hi)", {"s", "hi"},
                    [](const Global & gl, const ClaimParams & p) {
                        Nat hi = p.hi ? p.hi : 10'001;
                        auto c = base_s_coloring(p.s, hi);
                        ClaimOutcome out;
                        out.verdict = Verdict::pass;
                        json blocks = json::array();
                        for (Nat lo = 1; lo < hi; lo *= p.s) {
                            Interval block{lo, std::min(hi, lo * p.s)};
                            auto m = largest_homogeneous(*c, block, gl.budget());
                            blocks.push_back({{"block", {block.lo, block.hi}}, {"largest", m.size}, {"exhaustive", m.exhaustive}});
                            if (m.size > p.s) {
                                out.verdict = Verdict::fail;
                                out.details["counterexample"] = witness_elements(m.witness);
                                break;
                            }
                            if (! m.exhaustive)
                                out.verdict = Verdict::indeterminate;
                        }
                        out.details["blocks"] = blocks;
                        out.summary = std::to_string(blocks.size()) + " log blocks below " + std::to_string(hi);
                        return out;
                    }}},
            {"base-s-nohom",
                {"no homogeneous (2s+1)-set for the base-s coloring on [1, hi)", {"s", "hi"},
                    [](const Global & gl, const ClaimParams & p) {
                        Nat hi = p.hi ? p.hi : 10'001;
                        auto c = base_s_coloring(p.s, hi);
                        auto o = max_homogeneous(*c, c->domain(), 2 * p.s + 1, gl.budget());
                        ClaimOutcome out;
                        out.verdict = search_verdict(o);
                        out.details = outcome_to_json(o);
                        out.summary = "size " + std::to_string(2 * p.s + 1) + " on [1, " + std::to_string(hi) +
                            "): " + out.details["result"].get<std::string>();
                        return out;
                    }}},
            {"obs-prei1",
                {"(f_t)_k(n) >= n + iroot(n, t)^(k-1)", {"t", "k", "n"},
                    [](const Global & gl, const ClaimParams & p) {
                        return inequality_outcome(check_lower_level_growth(p.t, static_cast<unsigned>(p.k), p.n, gl.eval_context()));
                    }}},
            {"obs-i1",
                {"(f_{t+1})_{2t+3}(n^2) > n^2 + 2n + 1 for n > 2^t", {"t", "n"},
                    [](const Global & gl, const ClaimParams & p) {
                        if (p.t >= 64 || p.n <= (Nat{1} << p.t))
                            throw UsageError("obs-i1 needs n > 2^t");
                        return inequality_outcome(check_base_case(p.t, p.n, gl.eval_context()));
                    }}},
            {"induction-step",
                {"(f_{t+1})_{i+2t+2}(n^2) > ((f_t)_i(n))^2 for n > 2^t", {"t", "i", "n"},
                    [](const Global & gl, const ClaimParams & p) {
                        if (p.t >= 64 || p.n <= (Nat{1} << p.t))
                            throw UsageError("induction-step needs n > 2^t");
                        return inequality_outcome(check_induction_step(p.t, p.i, p.n, gl.eval_context()));
                    }}},
            {"growth",
                {"all growth inequalities at (t, i, n)", {"t", "i", "n"},
                    [](const Global & gl, const ClaimParams & p) {
                        auto r = check_growth_inequalities(p.t, p.i, p.n, gl.eval_context());
                        ClaimOutcome out;
                        out.verdict = Verdict::pass;
                        out.details["checks"] = json::array();
                        for (auto & c : r.checks) {
                            auto one = inequality_outcome(c);
                            one.details["verdict"] = status_of(c.verdict);
                            out.details["checks"].push_back(one.details);
                            if (c.verdict == Verdict::fail)
                                out.verdict = Verdict::fail;
                            else if (c.verdict == Verdict::indeterminate && out.verdict == Verdict::pass)
                                out.verdict = Verdict::indeterminate;
                        }
                        out.summary = std::to_string(r.checks.size()) + " inequalities";
                        return out;
                    }}},
            {"base10-nominhom",
                {"exact maximum min-homogeneous size of the base-10 coloring on [43, 10^4), compared with target", {"target"},
                    [](const Global & gl, const ClaimParams & p) {
                        Nat target = p.target ? p.target : 6;
                        auto c = base10_coloring();
                        auto m = largest_min_homogeneous(*c, base10_domain, gl.budget());
                        ClaimOutcome out;
                        out.details = maximum_to_json(m);
                        out.details["target"] = target;
                        if (m.size >= target)
                            out.verdict = Verdict::fail;
                        else
                            out.verdict = m.exhaustive ? Verdict::pass : Verdict::indeterminate;
                        out.summary = std::string(m.exhaustive ? "exact maximum " : "largest found ") +
                            std::to_string(m.size) + ", target " + std::to_string(target);
                        return out;
                    }}},
            {"graph-nohom",
                {"the 42-vertex graph has no homogeneous set of size target (default 5)", {"target", "graph"},
                    [](const Global & gl, const ClaimParams & p) {
                        Nat target = p.target ? p.target : 5;
                        auto c = graph_coloring(load_graph(p.graph));
                        auto o = max_homogeneous(*c, c->domain(), target, gl.budget());
                        ClaimOutcome out;
                        out.verdict = search_verdict(o);
                        out.details = outcome_to_json(o);
                        out.summary = "size " + std::to_string(target) + ": " + out.details["result"].get<std::string>();
                        return out;
                    }}},
            {"small-nohom",
                {"the [0, 43) coloring has no homogeneous set of size target (default 5)", {"target", "graph"},
                    [](const Global & gl, const ClaimParams & p) {
                        Nat target = p.target ? p.target : 5;
                        auto c = small_interval_coloring(load_graph(p.graph));
                        auto o = max_homogeneous(*c, c->domain(), target, gl.budget());
                        ClaimOutcome out;
                        out.verdict = search_verdict(o);
                        out.details = outcome_to_json(o);
                        out.summary = "size " + std::to_string(target) + ": " + out.details["result"].get<std::string>();
                        return out;
                    }}},
            {"small-nominhom",
                {"exact maximum min-homogeneous size of the [0, 43) coloring, compared with target (default 11)",
                    {"target", "graph"},
                    [](const Global & gl, const ClaimParams & p) {
                        Nat target = p.target ? p.target : 11;
                        auto c = small_interval_coloring(load_graph(p.graph));
                        auto m = largest_min_homogeneous(*c, c->domain(), gl.budget());
                        ClaimOutcome out;
                        out.details = maximum_to_json(m);
                        out.details["target"] = target;
                        out.verdict = m.size >= target ? Verdict::fail
                                                       : (m.exhaustive ? Verdict::pass : Verdict::indeterminate);
                        out.summary = std::string(m.exhaustive ? "exact maximum " : "largest found ") +
                            std::to_string(m.size) + ", target " + std::to_string(target);
                        return out;
                    }}},
            {"stitched-regressive",
                {"the stitched coloring is regressive for n -> iroot(n, beta(n))", {"schedule", "graph"},
                    [](const Global &, const ClaimParams & p) {
                        auto s = load_schedule(p.schedule);
                        ColoringArgs a;
                        a.construction = "stitched";
                        a.schedule = p.schedule;
                        a.graph = p.graph;
                        auto c = make_coloring(a);
                        auto r = verify_regressive(*c, BoundFn::schedule_root(s, p.schedule.empty() ? "" : "@" + p.schedule));
                        ClaimOutcome out;
                        out.verdict = r.pass() ? Verdict::pass : Verdict::fail;
                        out.details = {{"pairs_checked", r.pairs_checked}, {"max_color", r.max_color}};
                        if (r.violation) {
                            out.details["violation"] = {{"m", r.violation->m}, {"n", r.violation->n},
                                {"color", r.violation->color}, {"bound", r.violation->bound}};
                            out.summary = "c(" + std::to_string(r.violation->m) + ", " + std::to_string(r.violation->n) +
                                ") = " + std::to_string(r.violation->color) + " > g = " + std::to_string(r.violation->bound);
                        }
                        else
                            out.summary = std::to_string(r.pairs_checked) + " pairs";
                        return out;
                    }}},
            {"greedy-minhom",
                {"greedy_min_hom finds k elements in random C-colorings of [0, C^k)", {"C", "k", "trials", "seed"},
                    [](const Global &, const ClaimParams & p) {
                        auto N = checked_pow(p.C, static_cast<unsigned>(p.k));
                        if (! N || *N > 1'000'000)
                            throw UsageError("C^k too large");
                        ClaimOutcome out;
                        out.verdict = Verdict::pass;
                        Nat smallest = *N;
                        for (Nat trial = 0; trial < p.trials; ++trial) {
                            auto t = TableColoring::random({0, *N}, p.C, p.seed + trial);
                            auto w = greedy_min_hom(*t, *N, p.C);
                            smallest = std::min<Nat>(smallest, w.elements.size());
                            if (w.elements.size() < p.k) {
                                out.verdict = Verdict::fail;
                                out.details["counterexample_seed"] = p.seed + trial;
                                break;
                            }
                        }
                        out.details.update({{"N", *N}, {"trials", p.trials}, {"smallest", smallest}});
                        out.summary = "N = " + std::to_string(*N) + ", smallest greedy set " + std::to_string(smallest);
                        return out;
                    }}},
            {"greedy-hom",
                {"greedy_homogeneous finds k elements in random C-colorings of [0, C^(kC))", {"C", "k", "trials", "seed"},
                    [](const Global &, const ClaimParams & p) {
                        auto N = checked_pow(p.C, static_cast<unsigned>(p.k * p.C));
                        if (! N || *N > 1'000'000)
                            throw UsageError("C^(kC) too large");
                        ClaimOutcome out;
                        out.verdict = Verdict::pass;
                        Nat smallest = *N;
                        for (Nat trial = 0; trial < p.trials; ++trial) {
                            auto t = TableColoring::random({0, *N}, p.C, p.seed + trial);
                            auto w = greedy_homogeneous(*t, *N, p.C);
                            smallest = std::min<Nat>(smallest, w.elements.size());
                            if (w.elements.size() < p.k) {
                                out.verdict = Verdict::fail;
                                out.details["counterexample_seed"] = p.seed + trial;
                                break;
                            }
                        }
                        out.details.update({{"N", *N}, {"trials", p.trials}, {"smallest", smallest}});
                        out.summary = "N = " + std::to_string(*N) + ", smallest greedy set " + std::to_string(smallest);
                        return out;
                    }}},
        };
        return registry;
    }

    struct VerifyArgs
    {
        std::string claim;
        std::string from_file;
        bool list = false;
        ClaimParams params;
    };

    auto execute(const std::vector<std::string> & args, std::ostream & out, std::ostream & err, Run & run) -> int;

    // strips fields that legitimately differ between identical runs
    auto without_timing(json j) -> json
    {
        if (j.is_object()) {
            j.erase("wall_time_ms");
            j.erase("nodes_explored");
            for (auto & [key, value] : j.items())
                value = without_timing(value);
        }
        else if (j.is_array())
            for (auto & value : j)
                value = without_timing(value);
        return j;
    }

    auto verify_from_file(const std::string & path, Run & run) -> void
    {
        auto doc = read_json_file(path);
        if (doc.value("tool", "") != "regramsey")
            throw UsageError(path + " is not a regramsey result document");
        run.config["from_file"] = path;
        std::ostringstream text;
        bool ok = true;
        auto command = doc.at("command").get<std::string>();

        // independent re-checks of stored certificates
        if (command == "search" && doc["result"].contains("elements")) {
            auto c = make_coloring(ColoringArgs::from_json(doc["config"]["coloring"]));
            auto w = witness_from_json(doc["result"]);
            bool good = verify_witness(*c, w);
            ok = ok && good;
            text << "stored witness " << (good ? "re-verified" : "FAILS re-verification") << "\n";
        }
        if (command == "nu") {
            auto rows = doc["result"].contains("rows") ? doc["result"]["rows"] : json::array({doc["result"]});
            auto g = BoundFn::parse(doc["config"]["g"].get<std::string>());
            for (auto & row : rows) {
                if (row["bad_coloring"].is_null())
                    continue;
                BadColoring b;
                b.N = row["bad_coloring"]["N"];
                b.colors = row["bad_coloring"]["colors"].get<std::vector<std::vector<Nat>>>();
                Nat k = row["k"];
                bool regressive = verify_regressive(*b.to_table(), g).pass();
                bool good = regressive && ! has_min_homogeneous_set(b, k);
                ok = ok && good;
                text << "stored bad coloring for k = " << k << " on [0, " << b.N << ") "
                     << (good ? "re-verified" : "FAILS re-verification") << "\n";
            }
        }

        // re-run the recorded command line
        std::vector<std::string> argv = doc.at("argv").get<std::vector<std::string>>();
        std::vector<std::string> clean;
        for (std::size_t i = 0; i < argv.size(); ++i) {
            if (argv[i] == "--output" || argv[i] == "--format" || argv[i] == "--checkpoint") {
                ++i;
                continue;
            }
            if (argv[i].rfind("--output=", 0) == 0 || argv[i].rfind("--format=", 0) == 0 || argv[i].rfind("--checkpoint=", 0) == 0)
                continue;
            clean.push_back(argv[i]);
        }
        Run again;
        std::ostringstream sink;
        int code = execute(clean, sink, sink, again);
        if (code == exit_usage)
            throw UsageError("stored command line no longer parses: " + sink.str());
        bool same = again.status == doc["status"] && without_timing(again.result) == without_timing(doc["result"]);
        ok = ok && same;
        text << "re-run of '" << command << "' " << (same ? "reproduces" : "DIFFERS from") << " the stored result";
        run.result = {{"file", path}, {"command", command}, {"stored_status", doc["status"]}, {"rerun_status", again.status},
            {"reproduced", same}};
        if (! same)
            run.result["rerun_result"] = again.result;
        run.status = ok ? "PASS" : "FAIL";
        run.text = text.str();
    }

    auto cmd_verify(const Global & gl, const VerifyArgs & a, Run & run) -> void
    {
        auto & registry = claim_registry();
        if (a.list) {
            std::ostringstream text;
            json claims = json::object();
            for (auto & [name, claim] : registry) {
                text << name << ": " << claim.description << "\n";
                claims[name] = {{"description", claim.description}, {"parameters", claim.params}};
            }
            run.result["claims"] = claims;
            run.text = text.str();
            run.text.pop_back();
            return;
        }
        if (! a.from_file.empty()) {
            verify_from_file(a.from_file, run);
            return;
        }
        if (a.claim.empty())
            throw UsageError("verify needs a claim id, --from-file or --list");
        auto it = registry.find(a.claim);
        if (it == registry.end())
            throw UsageError("unknown claim '" + a.claim + "' (see verify --list)");

        json used = json::object();
        auto all = a.params.to_json();
        for (auto & name : it->second.params)
            used[name] = all[name];
        run.config.update({{"claim", a.claim}, {"parameters", used}});

        auto outcome = it->second.run(gl, a.params);
        run.status = status_of(outcome.verdict);
        run.result = {{"claim", a.claim}, {"verdict", run.status}, {"details", outcome.details}};
        run.text = run.status + " " + a.claim + ": " + outcome.summary;
    }

    // ---- export ----

    struct ExportArgs
    {
        ColoringArgs coloring;
        std::string out;
        std::string encoding;
        std::string bound;
        std::string g = "id";
        Nat k = 3;
        Nat N = 0;
        Nat max_N = 64;
        std::uint64_t max_clauses = 50'000'000;
    };

    auto cmd_export_coloring(const Global &, const ExportArgs & a, Run & run) -> void
    {
        auto c = make_coloring(a.coloring);
        auto enc = a.encoding.empty() || a.encoding == "csv" ? ExportEncoding::csv : ExportEncoding::binary;
        if (! a.encoding.empty() && a.encoding != "csv" && a.encoding != "binary")
            throw UsageError("coloring encoding must be csv or binary");
        run.config.update({{"coloring", a.coloring.to_json()}, {"out", a.out}, {"encoding", enc == ExportEncoding::csv ? "csv" : "binary"},
            {"bound", a.bound}});
        auto header = export_coloring(*c, a.out, enc, a.bound);
        run.result = header;
        run.text = "wrote " + a.out + ".json and " + header["data"].get<std::string>() + " (" +
            std::to_string(header["pairs"].get<std::size_t>()) + " pairs)";
    }

    auto cmd_export_cnf(const Global &, const ExportArgs & a, Run & run) -> void
    {
        auto g = BoundFn::parse(a.g);
        CnfOptions opt;
        if (a.encoding.empty() || a.encoding == "direct")
            opt.encoding = CnfEncoding::direct;
        else if (a.encoding == "equality")
            opt.encoding = CnfEncoding::equality;
        else
            throw UsageError("CNF encoding must be direct or equality");
        opt.max_N = a.max_N;
        opt.max_clauses = a.max_clauses;
        run.config.update({{"g", g.descriptor()}, {"k", a.k}, {"N", a.N}, {"out", a.out},
            {"encoding", opt.encoding == CnfEncoding::direct ? "direct" : "equality"}, {"max_N", a.max_N},
            {"max_clauses", a.max_clauses}});
        Cnf cnf;
        try {
            cnf = export_cnf(g, a.k, a.N, opt);
        }
        catch (const std::length_error & e) {
            throw UsageError(e.what());
        }
        write_text_file(a.out, cnf.to_dimacs());
        run.result = {{"variables", cnf.variables}, {"clauses", cnf.clauses.size()}, {"file", a.out}};
        run.text = "wrote " + a.out + ": " + std::to_string(cnf.variables) + " variables, " +
            std::to_string(cnf.clauses.size()) + " clauses";
    }

    // ---- driver ----

    auto execute(const std::vector<std::string> & args, std::ostream & out, std::ostream & err, Run & run) -> int
    {
        CLI::App app{"regramsey: regressive Ramsey numbers, hierarchies, colorings and searches", "regramsey"};
        app.require_subcommand(1);
    app.fallthrough();
        Global gl;
        app.add_option("--cap", gl.cap_text, "saturation cap, e.g. 2^256 (default: $REGRAMSEY_CAP or 2^256)");
        app.add_option("--jobs", gl.jobs, "worker threads for searches (default: all)");
        app.add_option("--max-nodes", gl.max_nodes, "search node budget (0 = unlimited)");
        app.add_option("--time-limit-ms", gl.time_limit_ms, "search time budget in ms (0 = unlimited)");
        app.add_option("--max-iterations", gl.max_iterations, "hierarchy evaluation budget");
        app.add_option("--output", gl.output, "also write the JSON result document to this path");
        app.add_option("--format", gl.format, "stdout format")->check(CLI::IsMember({"text", "json", "csv"}));

        EvalArgs eval_args;
        auto eval = app.add_subcommand("eval", "evaluate level i of a hierarchy at n");
        eval->add_option("spec", eval_args.spec, "ack | ft:t=T | fg:g=BOUND")->required();
        eval->add_option("i", eval_args.level, "level")->required();
        eval->add_option("n", eval_args.n, "argument (decimal or b^e)")->required();

        ColorArgs color_args;
        auto color = app.add_subcommand("color", "query or summarize a coloring");
        add_coloring_options(color, color_args.coloring);
        color->add_option("--pair", color_args.pair, "print c(m, n)")->expected(2);
        color->add_option("--check-g", color_args.check_g, "also verify regressivity against this bound");

        SearchArgs search_args;
        auto search = app.add_subcommand("search", "exact min-homogeneous / homogeneous search");
        add_coloring_options(search, search_args.coloring);
        search->add_option("--mode", search_args.mode, "min-homogeneous | homogeneous")
            ->check(CLI::IsMember({"min-homogeneous", "homogeneous", "minhom", "hom"}));
        search->add_option("--target", search_args.target, "look for a set of this size (default: find the maximum)");

        NuArgs nu_args;
        auto nu = app.add_subcommand("nu", "exact nu_g(k) by backtracking");
        nu->add_option("--g", nu_args.g, "bound g")->required();
        nu->add_option("--k", nu_args.k, "k (>= 2)")->required();
        nu->add_option("--k-max", nu_args.k_max, "sweep k .. k-max (CSV friendly)");
        nu->add_option("--limit", nu_args.limit, "largest N to try (exact search supports N <= 64)");
        nu->add_option("--checkpoint", nu_args.checkpoint, "progress file; resumed when present");

        VerifyArgs verify_args;
        auto verify = app.add_subcommand("verify", "run a registered claim check, or re-check a result document");
        verify->add_option("claim", verify_args.claim, "claim id (see --list)");
        verify->add_option("--from-file", verify_args.from_file, "re-verify a stored result document");
        verify->add_flag("--list", verify_args.list, "list claim ids");
        auto & p = verify_args.params;
        verify->add_option("--g", p.g, "bound g");
        verify->add_option("--k", p.k, "k");
        verify->add_option("--t", p.t, "t");
        verify->add_option("--i", p.i, "i");
        verify->add_option("--n", p.n, "n");
        verify->add_option("--s", p.s, "base s");
        verify->add_option("--hi", p.hi, "exclusive upper end");
        verify->add_option("--target", p.target, "target size");
        verify->add_option("--C", p.C, "number of colors");
        verify->add_option("--trials", p.trials, "random trials");
        verify->add_option("--seed", p.seed, "first seed");
        verify->add_option("--graph", p.graph, "graph file");
        verify->add_option("--schedule", p.schedule, "schedule JSON");

        ExportArgs export_args;
        auto exp = app.add_subcommand("export", "write a coloring table or a CNF instance");
        exp->require_subcommand(1);
        auto exp_coloring = exp->add_subcommand("coloring", "coloring table plus JSON header");
        add_coloring_options(exp_coloring, export_args.coloring);
        exp_coloring->add_option("--out", export_args.out, "output stem")->required();
        exp_coloring->add_option("--encoding", export_args.encoding, "csv | binary");
        exp_coloring->add_option("--bound", export_args.bound, "bound descriptor recorded in the header");
        auto exp_cnf = exp->add_subcommand("cnf", "DIMACS instance: a g-regressive coloring of [0, N) without a min-homogeneous k-set");
        exp_cnf->add_option("--g", export_args.g, "bound g")->required();
        exp_cnf->add_option("--k", export_args.k, "k")->required();
        exp_cnf->add_option("--N", export_args.N, "N")->required();
        exp_cnf->add_option("--out", export_args.out, "output file")->required();
        exp_cnf->add_option("--encoding", export_args.encoding, "direct | equality");
        exp_cnf->add_option("--max-N", export_args.max_N, "refuse larger N");
        exp_cnf->add_option("--max-clauses", export_args.max_clauses, "refuse larger instances");

        try {
            std::vector<std::string> reversed(args.rbegin(), args.rend());
            app.parse(reversed);
        }
        catch (const CLI::ParseError & e) {
            int code = app.exit(e, out, err);
            return code == 0 ? exit_pass : exit_usage;
        }

        run.argv = args;
        try {
            gl.resolve();
            run.config = gl.to_json();
            if (eval->parsed()) {
                run.command = "eval";
                cmd_eval(gl, eval_args, run);
            }
            else if (color->parsed()) {
                run.command = "color";
                cmd_color(gl, color_args, run);
            }
            else if (search->parsed()) {
                run.command = "search";
                cmd_search(gl, search_args, run);
            }
            else if (nu->parsed()) {
                run.command = "nu";
                cmd_nu(gl, nu_args, run);
            }
            else if (verify->parsed()) {
                run.command = "verify";
                cmd_verify(gl, verify_args, run);
            }
            else if (exp_coloring->parsed()) {
                run.command = "export";
                cmd_export_coloring(gl, export_args, run);
            }
            else if (exp_cnf->parsed()) {
                run.command = "export";
                cmd_export_cnf(gl, export_args, run);
            }
        }
        // every failure here is bad input: arguments, files or parameters out of range
        catch (const json::exception & e) {
            err << "error: malformed JSON: " << e.what() << "\n";
            return exit_usage;
        }
        catch (const std::exception & e) {
            err << "error: " << e.what() << "\n";
            return exit_usage;
        }

        auto doc = run.document();
        if (! gl.output.empty()) {
            try {
                write_text_file(gl.output, doc.dump(2) + "\n");
            }
            catch (const std::exception & e) {
                err << "error: " << e.what() << "\n";
                return exit_usage;
            }
        }
        if (gl.format == "json")
            out << doc.dump(2) << "\n";
        else if (gl.format == "csv" && ! run.csv.empty())
            out << run.csv;
        else
            out << run.text << "\n";
        return run.exit_code();
    }
}

auto run_cli(const std::vector<std::string> & args, std::ostream & out, std::ostream & err) -> int
{
    Run run;
    return execute(args, out, err, run);
}

} // namespace regramsey
