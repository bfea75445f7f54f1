#include <regramsey/search.hpp>

#include <algorithm>
#include <bit>
#include <stdexcept>

// Exact nu_g(k) by backtracking over g-regressive colorings of [0, N).
//
// Pairs are filled column by column (n ascending, then m ascending), so when
// c(m, n) is set every pair below column n and every (x, n) with x < m is
// known. A min-homogeneous k-set that becomes fully colored at this moment
// has n as its largest and m as its second largest element, which keeps the
// check local. Colors of a row appear in ascending order of first use.

namespace regramsey {

namespace {
    using Mask = std::uint64_t;
    using Clock = std::chrono::steady_clock;

    auto below(Nat x) -> Mask { return x >= 64 ? ~Mask{0} : (Mask{1} << x) - 1; }
    auto above(Nat x) -> Mask { return x >= 63 ? 0 : ~((Mask{2} << x) - 1); }

    class Backtracker
    {
    public:
        Backtracker(const BoundFn & g, Nat k, Nat N, const SearchBudget & budget) :
            _k(k), _n(N), _budget(budget), _start(Clock::now())
        {
            _cap.resize(N);
            for (Nat m = 0; m < N; ++m)
                _cap[m] = std::min<Nat>(g(m), N);
            _color.assign(N, std::vector<Nat>(N, 0));
            _rowmask.assign(N, std::vector<Mask>(N + 1, 0));
            _rowmax.assign(N, -1);
            for (Nat n = 1; n < N; ++n)
                for (Nat m = 0; m < n; ++m)
                    _cells.emplace_back(m, n);
        }

        // true: bad coloring found; false: none; nullopt: budget
        auto run() -> std::optional<bool>
        {
            bool found = dfs(0);
            if (_aborted)
                return std::nullopt;
            return found;
        }

        auto coloring() const -> BadColoring
        {
            BadColoring b;
            b.N = _n;
            b.colors.resize(_n);
            for (Nat n = 0; n < _n; ++n)
                for (Nat m = 0; m < n; ++m)
                    b.colors[n].push_back(_color[m][n]);
            return b;
        }

        auto nodes() const -> std::uint64_t { return _nodes; }

    private:
        auto out_of_budget() -> bool
        {
            ++_nodes;
            if (_budget.max_nodes && _nodes > _budget.max_nodes)
                _aborted = true;
            else if ((_nodes & 0x3ff) == 0) {
                if (_budget.stop.stop_requested())
                    _aborted = true;
                else if (_budget.time_limit.count() && Clock::now() - _start > _budget.time_limit)
                    _aborted = true;
            }
            return _aborted;
        }

        auto dfs(std::size_t at) -> bool
        {
            if (at == _cells.size())
                return true;
            if (out_of_budget())
                return false;
            auto [m, n] = _cells[at];
            long limit = std::min<long>(static_cast<long>(_cap[m]), _rowmax[m] + 1);
            for (long q = 0; q <= limit; ++q) {
                _color[m][n] = static_cast<Nat>(q);
                _rowmask[m][q] |= Mask{1} << n;
                long saved = _rowmax[m];
                _rowmax[m] = std::max(saved, q);
                if (! closes_set(m, n) && dfs(at + 1))
                    return true;
                _rowmax[m] = saved;
                _rowmask[m][q] &= ~(Mask{1} << n);
                if (_aborted)
                    return false;
            }
            return false;
        }

        // Is there a min-homogeneous k-set {x_1 < ... < x_{k-2} < m < n}?
        auto closes_set(Nat m, Nat n) const -> bool
        {
            if (_k <= 2)
                return true;
            Mask cand = 0;
            for (Nat x = 0; x < m; ++x)
                if (_rowmask[x][_color[x][n]] >> m & 1)
                    cand |= Mask{1} << x;
            return extend(cand, _k - 2, n);
        }

        auto extend(Mask cand, Nat need, Nat n) const -> bool
        {
            if (need == 0)
                return true;
            while (static_cast<Nat>(std::popcount(cand)) >= need) {
                Nat x = static_cast<Nat>(std::countr_zero(cand));
                cand &= cand - 1;
                if (extend(cand & _rowmask[x][_color[x][n]] & above(x), need - 1, n))
                    return true;
            }
            return false;
        }

        Nat _k, _n;
        const SearchBudget & _budget;
        Clock::time_point _start;
        std::vector<Nat> _cap;
        std::vector<std::vector<Nat>> _color;      // _color[m][n]
        std::vector<std::vector<Mask>> _rowmask;   // _rowmask[x][q]: y > x with c(x, y) = q
        std::vector<long> _rowmax;
        std::vector<std::pair<Nat, Nat>> _cells;
        std::uint64_t _nodes = 0;
        bool _aborted = false;
    };

    auto trivially_bad(Nat N) -> BadColoring
    {
        BadColoring b;
        b.N = N;
        b.colors.resize(N);
        for (Nat n = 0; n < N; ++n)
            b.colors[n].assign(n, 0);
        return b;
    }
}

auto to_string(NuStatus s) -> std::string_view
{
    switch (s) {
    case NuStatus::found: return "found";
    case NuStatus::not_found_below_limit: return "not_found_below_limit";
    case NuStatus::budget_exhausted: return "budget_exhausted";
    }
    return "?";
}

auto BadColoring::to_table() const -> std::shared_ptr<TableColoring>
{
    auto table = std::make_shared<TableColoring>(Interval{0, N}, std::vector<std::uint32_t>(pair_count(N), 0), "nu-bad");
    for (Nat n = 0; n < N; ++n)
        for (Nat m = 0; m < n; ++m)
            table->set(m, n, static_cast<std::uint32_t>(color(m, n)));
    return table;
}

auto NuCheckpoint::to_json() const -> nlohmann::json
{
    nlohmann::json j{{"g", g}, {"k", k}, {"proven_bad_up_to", proven_bad_up_to}};
    if (bad_coloring)
        j["bad_coloring"] = {{"N", bad_coloring->N}, {"colors", bad_coloring->colors}};
    else
        j["bad_coloring"] = nullptr;
    return j;
}

auto NuCheckpoint::from_json(const nlohmann::json & j) -> NuCheckpoint
{
    NuCheckpoint c;
    c.g = j.at("g").get<std::string>();
    c.k = j.at("k").get<Nat>();
    c.proven_bad_up_to = j.at("proven_bad_up_to").get<Nat>();
    if (j.contains("bad_coloring") && ! j["bad_coloring"].is_null()) {
        BadColoring b;
        b.N = j["bad_coloring"].at("N").get<Nat>();
        b.colors = j["bad_coloring"].at("colors").get<std::vector<std::vector<Nat>>>();
        if (b.colors.size() != b.N)
            throw std::invalid_argument("checkpoint coloring has the wrong shape");
        for (Nat n = 0; n < b.N; ++n)
            if (b.colors[n].size() != n)
                throw std::invalid_argument("checkpoint coloring has the wrong shape");
        c.bad_coloring = std::move(b);
    }
    return c;
}

auto has_min_homogeneous_set(const BadColoring & coloring, Nat k) -> bool
{
    Nat N = coloring.N;
    if (k == 0)
        return true;
    if (k > N)
        return false;
    if (N > nu_max_N)
        throw std::length_error("has_min_homogeneous_set supports N <= 64");
    Nat colors = 0;
    for (auto & column : coloring.colors)
        for (auto c : column)
            colors = std::max(colors, c + 1);
    std::vector<std::vector<Mask>> rowmask(N, std::vector<Mask>(colors, 0));
    for (Nat n = 0; n < N; ++n)
        for (Nat m = 0; m < n; ++m)
            rowmask[m][coloring.color(m, n)] |= Mask{1} << n;

    auto search = [&](auto & self, Mask cand, Nat need) -> bool {
        if (need == 0)
            return true;
        while (static_cast<Nat>(std::popcount(cand)) >= need) {
            Nat x = static_cast<Nat>(std::countr_zero(cand));
            cand &= cand - 1;
            if (need == 1)
                return true;
            for (Nat q = 0; q < colors; ++q) {
                Mask next = cand & rowmask[x][q];
                if (static_cast<Nat>(std::popcount(next)) + 1 >= need && self(self, next, need - 1))
                    return true;
            }
        }
        return false;
    };
    return search(search, below(N), k);
}

auto bad_coloring_exists(const BoundFn & g, Nat k, Nat N, const SearchBudget & budget, std::uint64_t * nodes)
    -> std::optional<std::optional<BadColoring>>
{
    if (k < 2)
        throw std::invalid_argument("nu needs k >= 2");
    if (N > nu_max_N)
        throw std::length_error("exact search supports N <= " + std::to_string(nu_max_N));
    if (N < k)
        return std::optional<BadColoring>{trivially_bad(N)};
    Backtracker bt{g, k, N, budget};
    auto result = bt.run();
    if (nodes)
        *nodes += bt.nodes();
    if (! result)
        return std::nullopt;
    if (! *result)
        return std::optional<BadColoring>{};
    auto bad = bt.coloring();
    if (has_min_homogeneous_set(bad, k))
        throw std::logic_error("backtracker returned a coloring with a min-homogeneous set");
    return std::optional<BadColoring>{std::move(bad)};
}

auto nu_exact(const BoundFn & g, Nat k, Nat limit, const SearchBudget & budget, const std::optional<NuCheckpoint> & resume,
    const std::function<void(const NuCheckpoint &)> & on_progress) -> NuResult
{
    if (k < 2)
        throw std::invalid_argument("nu needs k >= 2");
    NuResult result;
    result.progress.g = g.descriptor();
    result.progress.k = k;
    result.progress.proven_bad_up_to = k - 1;
    result.progress.bad_coloring = trivially_bad(k - 1);
    if (resume) {
        if (resume->g != result.progress.g || resume->k != k)
            throw std::invalid_argument("checkpoint is for g = " + resume->g + ", k = " + std::to_string(resume->k));
        if (resume->proven_bad_up_to >= result.progress.proven_bad_up_to)
            result.progress = *resume;
    }

    auto start = Clock::now();
    for (Nat N = result.progress.proven_bad_up_to + 1; N <= limit; ++N) {
        if (N > nu_max_N) {
            result.status = NuStatus::budget_exhausted;
            return result;
        }
        SearchBudget left = budget;
        if (budget.time_limit.count()) {
            auto used = std::chrono::duration_cast<std::chrono::milliseconds>(Clock::now() - start);
            if (used >= budget.time_limit) {
                result.status = NuStatus::budget_exhausted;
                return result;
            }
            left.time_limit = budget.time_limit - used;
        }
        if (budget.max_nodes) {
            if (result.nodes_explored >= budget.max_nodes) {
                result.status = NuStatus::budget_exhausted;
                return result;
            }
            left.max_nodes = budget.max_nodes - result.nodes_explored;
        }

        auto outcome = bad_coloring_exists(g, k, N, left, &result.nodes_explored);
        if (! outcome) {
            result.status = NuStatus::budget_exhausted;
            return result;
        }
        if (! *outcome) {
            result.status = NuStatus::found;
            result.value = N;
            return result;
        }
        result.progress.proven_bad_up_to = N;
        result.progress.bad_coloring = std::move(**outcome);
        if (on_progress)
            on_progress(result.progress);
    }
    result.status = NuStatus::not_found_below_limit;
    return result;
}

} // namespace regramsey
