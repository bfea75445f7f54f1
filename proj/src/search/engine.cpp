#include <regramsey/search.hpp>

#include <omp.h>

#include <algorithm>
#include <atomic>
#include <limits>
#include <stdexcept>

// Exact maximum min-homogeneous / homogeneous search.
//
// The engine keeps, for every level v and start y, T[v][y] = the least
// possible last element of a v-element set starting at y with the required
// property (INF if none). Level v only reads levels < v, so the starts of a
// level are independent and run in parallel. T is also a strong bound for
// the inner branch-and-bound: a chain restricted to a candidate set can never
// end before the unrestricted one.

namespace regramsey {

namespace {
    using Index = std::uint32_t;
    constexpr Index INF = std::numeric_limits<Index>::max();
    using Clock = std::chrono::steady_clock;

    class Guard
    {
    public:
        explicit Guard(const SearchBudget & budget) : _budget(budget), _start(Clock::now()) {}

        auto charge(std::uint64_t n) -> bool
        {
            auto total = _nodes.fetch_add(n, std::memory_order_relaxed) + n;
            if (_budget.max_nodes && total > _budget.max_nodes)
                _aborted.store(true, std::memory_order_relaxed);
            else if (_budget.time_limit.count() && Clock::now() - _start > _budget.time_limit)
                _aborted.store(true, std::memory_order_relaxed);
            else if (_budget.stop.stop_requested())
                _aborted.store(true, std::memory_order_relaxed);
            return ! aborted();
        }

        auto aborted() const -> bool { return _aborted.load(std::memory_order_relaxed); }
        auto nodes() const -> std::uint64_t { return _nodes.load(std::memory_order_relaxed); }
        auto elapsed_ms() const -> double
        {
            return std::chrono::duration<double, std::milli>(Clock::now() - _start).count();
        }

    private:
        const SearchBudget & _budget;
        Clock::time_point _start;
        std::atomic<std::uint64_t> _nodes{0};
        std::atomic<bool> _aborted{false};
    };

    // Per-thread node counting so the shared atomic is touched rarely.
    struct LocalCounter
    {
        Guard & guard;
        std::uint64_t pending = 0;

        auto tick() -> bool
        {
            if (++pending >= 4096) {
                guard.charge(pending);
                pending = 0;
            }
            return ! guard.aborted();
        }

        ~LocalCounter()
        {
            if (pending)
                guard.charge(pending);
        }
    };

    template <class Color>
    struct Matrix
    {
        Index n = 0;
        std::vector<Color> data;
        std::vector<std::size_t> row_base;
        std::uint64_t max_color = 0;

        // row(y)[z] is c(y, z) for z > y
        auto row(Index y) const -> const Color * { return data.data() + row_base[y]; }
    };

    template <class Color>
    auto build_matrix(const TableColoring & table) -> Matrix<Color>
    {
        Matrix<Color> m;
        m.n = static_cast<Index>(table.domain().size());
        m.data.resize(table.packed().size());
        m.row_base.resize(m.n);
        for (Index y = 0; y < m.n; ++y)
            m.row_base[y] = table.offset(y, y + 1) - (y + 1);
        std::uint64_t max_color = 0;
        for (std::size_t i = 0; i < m.data.size(); ++i) {
            m.data[i] = static_cast<Color>(table.packed()[i]);
            max_color = std::max<std::uint64_t>(max_color, table.packed()[i]);
        }
        m.max_color = max_color;
        return m;
    }

    auto check_interval(const Coloring & coloring, Interval interval) -> void
    {
        if (! coloring.domain().contains(interval))
            throw std::out_of_range("search interval [" + std::to_string(interval.lo) + ", " +
                std::to_string(interval.hi) + ") is not inside the coloring's domain");
        if (interval.size() >= INF)
            throw std::length_error("search interval too large");
    }

    auto set_threads(const SearchBudget & budget) -> int
    {
        return budget.parallelism ? static_cast<int>(budget.parallelism) : omp_get_max_threads();
    }

    // Groups the elements of `in` by their color in `row`, keeping ascending
    // order inside a group and first-appearance order between groups.
    template <class Color>
    struct Grouper
    {
        std::vector<Index> out;
        std::vector<std::pair<Index, Index>> groups;   // (begin, size) in out
        std::vector<Color> group_color;
        std::vector<Index> slot_of_color;              // color -> group slot, INF when unused
        std::vector<Color> touched;

        explicit Grouper(std::uint64_t max_color) : slot_of_color(max_color + 1, INF) {}

        auto run(const Color * row, const Index * in, std::size_t count) -> void
        {
            groups.clear();
            group_color.clear();
            touched.clear();
            std::vector<Index> & sizes = scratch_sizes;
            sizes.clear();
            for (std::size_t i = 0; i < count; ++i) {
                Color c = row[in[i]];
                if (slot_of_color[c] == INF) {
                    slot_of_color[c] = static_cast<Index>(sizes.size());
                    sizes.push_back(0);
                    touched.push_back(c);
                }
                ++sizes[slot_of_color[c]];
            }
            Index at = 0;
            for (std::size_t s = 0; s < sizes.size(); ++s) {
                groups.emplace_back(at, 0);
                group_color.push_back(touched[s]);
                at += sizes[s];
            }
            out.resize(count);
            for (std::size_t i = 0; i < count; ++i) {
                auto & g = groups[slot_of_color[row[in[i]]]];
                out[g.first + g.second++] = in[i];
            }
            for (auto c : touched)
                slot_of_color[c] = INF;
        }

        std::vector<Index> scratch_sizes;
    };

    template <class Color>
    class MinHomEngine
    {
    public:
        MinHomEngine(const Matrix<Color> & m, Guard & guard, int threads) : _m(m), _guard(guard), _threads(threads) {}

        // Computes levels until `target` (or until a level is empty when
        // target is 0). Returns the highest non-empty level.
        auto run(Nat target) -> Index
        {
            Index n = _m.n;
            if (n == 0)
                return 0;
            _t.assign(3, std::vector<Index>(n, INF));
            for (Index y = 0; y < n; ++y) {
                _t[1][y] = y;
                _t[2][y] = y + 1 < n ? y + 1 : INF;
            }
            Index top = n >= 2 ? 2 : 1;
            if (target && top >= target)
                return std::min<Index>(top, static_cast<Index>(target));

            for (Index v = 3; target == 0 || v <= target; ++v) {
                _t.emplace_back(n, INF);
                compute_level(v);
                if (_guard.aborted()) {
                    _t.pop_back();
                    _complete = false;
                    break;
                }
                if (std::all_of(_t[v].begin(), _t[v].end(), [](Index e) { return e == INF; })) {
                    _t.pop_back();
                    break;
                }
                top = v;
            }
            return top;
        }

        auto complete() const -> bool { return _complete; }

        auto witness(Index v) const -> std::vector<Index>
        {
            auto & level = _t.at(v);
            auto y = static_cast<Index>(std::find_if(level.begin(), level.end(), [](Index e) { return e != INF; }) - level.begin());
            if (v == 1)
                return {y};
            Grouper<Color> grouper{_m.max_color};
            std::vector<Index> rest(_m.n - y - 1);
            for (Index z = y + 1; z < _m.n; ++z)
                rest[z - y - 1] = z;
            grouper.run(_m.row(y), rest.data(), rest.size());
            auto local = grouper;
            for (auto [begin, size] : local.groups) {
                if (size + 1 < v)
                    continue;
                std::vector<Index> group(local.out.begin() + begin, local.out.begin() + begin + size);
                std::vector<Index> chain;
                if (find_chain(v - 1, group, chain)) {
                    chain.insert(chain.begin(), y);
                    return chain;
                }
            }
            throw std::logic_error("witness reconstruction failed");
        }

    private:
        auto compute_level(Index v) -> void
        {
            const Index n = _m.n;
#pragma omp parallel num_threads(_threads)
            {
                LocalCounter counter{_guard};
                std::vector<Grouper<Color>> scratch;
                for (Index d = 0; d <= v; ++d)
                    scratch.emplace_back(_m.max_color);
                std::vector<Index> rest;

#pragma omp for schedule(dynamic, 1)
                for (Index y = 0; y < n; ++y) {
                    if (_guard.aborted() || _t[v - 1][y] == INF)
                        continue;
                    rest.resize(n - y - 1);
                    for (Index z = y + 1; z < n; ++z)
                        rest[z - y - 1] = z;
                    auto & top = scratch[0];
                    top.run(_m.row(y), rest.data(), rest.size());
                    Index best = INF;
                    for (auto [begin, size] : top.groups) {
                        if (size + 1 < v || top.out[begin + v - 2] >= best)
                            continue;
                        Index e = best_end(v - 1, top.out.data() + begin, size, best, scratch, 1, counter);
                        best = std::min(best, e);
                    }
                    _t[v][y] = best;
                }
            }
        }

        // least last element < limit of an r-chain inside s[0..count), else INF
        auto best_end(Index r, const Index * s, std::size_t count, Index limit, std::vector<Grouper<Color>> & scratch,
            Index depth, LocalCounter & counter) const -> Index
        {
            if (r == 1)
                return count && s[0] < limit ? s[0] : INF;
            if (r == 2)
                return count >= 2 && s[1] < limit ? s[1] : INF;

            // no chain inside s can end after its last element
            const Index cap = std::min<Index>(limit, s[count - 1] + 1);
            Index best = cap;
            auto & mine = scratch[depth];
            for (std::size_t idx = 0; idx + r <= count; ++idx) {
                if (s[idx + r - 1] >= best)
                    break;
                Index z = s[idx];
                if (_t[r][z] >= best)
                    continue;
                if (! counter.tick())
                    break;
                mine.run(_m.row(z), s + idx + 1, count - idx - 1);
                for (std::size_t g = 0; g < mine.groups.size(); ++g) {
                    auto [begin, size] = mine.groups[g];
                    if (size + 1 < r || mine.out[begin + r - 2] >= best)
                        continue;
                    Index e = best_end(r - 1, mine.out.data() + begin, size, best, scratch, depth + 1, counter);
                    best = std::min(best, e);
                }
            }
            return best < cap ? best : INF;
        }

        auto find_chain(Index r, const std::vector<Index> & s, std::vector<Index> & chain) const -> bool
        {
            for (std::size_t idx = 0; idx + r <= s.size(); ++idx) {
                Index z = s[idx];
                if (_t[r][z] == INF)
                    continue;
                if (r == 1) {
                    chain = {z};
                    return true;
                }
                if (r == 2) {
                    chain = {z, s[idx + 1]};
                    return true;
                }
                Grouper<Color> grouper{_m.max_color};
                grouper.run(_m.row(z), s.data() + idx + 1, s.size() - idx - 1);
                for (auto [begin, size] : grouper.groups) {
                    if (size + 1 < r)
                        continue;
                    std::vector<Index> group(grouper.out.begin() + begin, grouper.out.begin() + begin + size);
                    if (find_chain(r - 1, group, chain)) {
                        chain.insert(chain.begin(), z);
                        return true;
                    }
                }
            }
            return false;
        }

        const Matrix<Color> & _m;
        Guard & _guard;
        int _threads;
        std::vector<std::vector<Index>> _t;
        bool _complete = true;
    };

    template <class Color>
    class HomEngine
    {
    public:
        HomEngine(const Matrix<Color> & m, Color q, Guard & guard, int threads) :
            _m(m), _q(q), _guard(guard), _threads(threads)
        {
        }

        auto run(Nat target) -> Index
        {
            Index n = _m.n;
            if (n == 0)
                return 0;
            _t.assign(2, std::vector<Index>(n, INF));
            for (Index y = 0; y < n; ++y)
                _t[1][y] = y;
            Index top = 1;
            for (Index v = 2; target == 0 || v <= target; ++v) {
                _t.emplace_back(n, INF);
                compute_level(v);
                if (_guard.aborted()) {
                    _t.pop_back();
                    _complete = false;
                    break;
                }
                if (std::all_of(_t[v].begin(), _t[v].end(), [](Index e) { return e == INF; })) {
                    _t.pop_back();
                    break;
                }
                top = v;
            }
            return top;
        }

        auto complete() const -> bool { return _complete; }

        auto witness(Index v) const -> std::vector<Index>
        {
            auto & level = _t.at(v);
            auto y = static_cast<Index>(std::find_if(level.begin(), level.end(), [](Index e) { return e != INF; }) - level.begin());
            std::vector<Index> s = neighbours(y, nullptr, 0);
            std::vector<Index> chain;
            if (v == 1 || find_clique(v - 1, s, chain)) {
                chain.insert(chain.begin(), y);
                return chain;
            }
            throw std::logic_error("witness reconstruction failed");
        }

    private:
        auto neighbours(Index y, const Index * s, std::size_t count) const -> std::vector<Index>
        {
            std::vector<Index> out;
            auto row = _m.row(y);
            if (! s) {
                for (Index z = y + 1; z < _m.n; ++z)
                    if (row[z] == _q)
                        out.push_back(z);
            }
            else {
                for (std::size_t i = 0; i < count; ++i)
                    if (row[s[i]] == _q)
                        out.push_back(s[i]);
            }
            return out;
        }

        auto compute_level(Index v) -> void
        {
            const Index n = _m.n;
#pragma omp parallel num_threads(_threads)
            {
                LocalCounter counter{_guard};
                std::vector<std::vector<Index>> scratch(v + 1);
#pragma omp for schedule(dynamic, 1)
                for (Index y = 0; y < n; ++y) {
                    if (_guard.aborted() || _t[v - 1][y] == INF)
                        continue;
                    auto & s = scratch[0];
                    s.clear();
                    auto row = _m.row(y);
                    for (Index z = y + 1; z < n; ++z)
                        if (row[z] == _q)
                            s.push_back(z);
                    _t[v][y] = best_end(v - 1, s.data(), s.size(), INF, scratch, 1, counter);
                }
            }
        }

        auto best_end(Index r, const Index * s, std::size_t count, Index limit, std::vector<std::vector<Index>> & scratch,
            Index depth, LocalCounter & counter) const -> Index
        {
            if (r == 1)
                return count && s[0] < limit ? s[0] : INF;
            if (count < r)
                return INF;
            const Index cap = std::min<Index>(limit, s[count - 1] + 1);
            Index best = cap;
            auto & next = scratch[depth];
            for (std::size_t idx = 0; idx + r <= count; ++idx) {
                if (s[idx + r - 1] >= best)
                    break;
                Index z = s[idx];
                if (_t[r][z] >= best)
                    continue;
                if (! counter.tick())
                    break;
                next.clear();
                auto row = _m.row(z);
                for (std::size_t i = idx + 1; i < count; ++i)
                    if (row[s[i]] == _q)
                        next.push_back(s[i]);
                if (next.size() + 1 < r || next[r - 2] >= best)
                    continue;
                best = std::min(best, best_end(r - 1, next.data(), next.size(), best, scratch, depth + 1, counter));
            }
            return best < cap ? best : INF;
        }

        auto find_clique(Index r, const std::vector<Index> & s, std::vector<Index> & chain) const -> bool
        {
            for (std::size_t idx = 0; idx + r <= s.size(); ++idx) {
                Index z = s[idx];
                if (_t[r][z] == INF)
                    continue;
                if (r == 1) {
                    chain = {z};
                    return true;
                }
                auto next = neighbours(z, s.data() + idx + 1, s.size() - idx - 1);
                if (find_clique(r - 1, next, chain)) {
                    chain.insert(chain.begin(), z);
                    return true;
                }
            }
            return false;
        }

        const Matrix<Color> & _m;
        Color _q;
        Guard & _guard;
        int _threads;
        std::vector<std::vector<Index>> _t;
        bool _complete = true;
    };

    struct RawResult
    {
        Index size = 0;
        std::vector<Index> witness;
        bool complete = true;
    };

    template <class Color>
    auto run_min_hom(const TableColoring & table, Nat target, Guard & guard, int threads) -> RawResult
    {
        auto m = build_matrix<Color>(table);
        MinHomEngine<Color> engine{m, guard, threads};
        RawResult r;
        r.size = engine.run(target);
        r.complete = engine.complete();
        if (r.size)
            r.witness = engine.witness(r.size);
        return r;
    }

    template <class Color>
    auto run_hom(const TableColoring & table, Nat target, Guard & guard, int threads) -> RawResult
    {
        auto m = build_matrix<Color>(table);
        RawResult best;
        if (m.n == 0)
            return best;
        std::vector<bool> present(m.max_color + 1, false);
        for (auto c : m.data)
            present[c] = true;
        best.size = 1;
        best.witness = {0};
        for (std::uint64_t q = 0; q <= m.max_color; ++q) {
            if (! present[q])
                continue;
            HomEngine<Color> engine{m, static_cast<Color>(q), guard, threads};
            Index size = engine.run(target);
            if (! engine.complete())
                best.complete = false;
            if (size > best.size) {
                best.size = size;
                best.witness = engine.witness(size);
            }
            if (guard.aborted() || (target && best.size >= target))
                break;
        }
        return best;
    }

    auto dispatch(const Coloring & coloring, Interval interval, Nat target, const SearchBudget & budget, SearchMode mode,
        Guard & guard) -> RawResult
    {
        check_interval(coloring, interval);
        auto table = TableColoring::materialize(*restrict_coloring(
            std::shared_ptr<const Coloring>(&coloring, [](const Coloring *) {}), interval));
        std::uint64_t max_color = 0;
        for (auto c : table->packed())
            max_color = std::max<std::uint64_t>(max_color, c);
        int threads = set_threads(budget);

        auto run = [&]<class Color>() {
            return mode == SearchMode::min_homogeneous ? run_min_hom<Color>(*table, target, guard, threads)
                                                       : run_hom<Color>(*table, target, guard, threads);
        };
        if (max_color <= 0xff)
            return run.template operator()<std::uint8_t>();
        if (max_color <= 0xffff)
            return run.template operator()<std::uint16_t>();
        return run.template operator()<std::uint32_t>();
    }

    auto make_witness(const Coloring & coloring, Interval interval, const std::vector<Index> & local, SearchMode mode) -> Witness
    {
        Witness w;
        w.mode = mode;
        w.coloring = coloring.describe();
        for (auto i : local)
            w.elements.push_back(interval.lo + i);
        if (! verify_witness(coloring, w))
            throw std::logic_error("search produced a witness that fails re-verification");
        return w;
    }

    auto search_target(const Coloring & coloring, Interval interval, Nat target, const SearchBudget & budget, SearchMode mode)
        -> SearchOutcome
    {
        Guard guard{budget};
        SearchOutcome out;
        out.target = target;
        if (target == 0) {
            out.witness = Witness{{}, mode, coloring.describe()};
            out.exhaustive = true;
            return out;
        }
        auto raw = dispatch(coloring, interval, target, budget, mode, guard);
        if (raw.size >= target) {
            raw.witness.resize(target);
            out.witness = make_witness(coloring, interval, raw.witness, mode);
        }
        out.exhaustive = raw.complete;
        out.nodes_explored = guard.nodes();
        out.wall_time_ms = guard.elapsed_ms();
        return out;
    }

    auto search_max(const Coloring & coloring, Interval interval, const SearchBudget & budget, SearchMode mode) -> MaximumOutcome
    {
        Guard guard{budget};
        auto raw = dispatch(coloring, interval, 0, budget, mode, guard);
        MaximumOutcome out;
        out.size = raw.size;
        if (raw.size)
            out.witness = make_witness(coloring, interval, raw.witness, mode);
        out.exhaustive = raw.complete;
        out.nodes_explored = guard.nodes();
        out.wall_time_ms = guard.elapsed_ms();
        return out;
    }

    // ---- serial reference ----

    class Reference
    {
    public:
        Reference(const TableColoring & table, SearchMode mode, Guard & guard) : _table(table), _mode(mode), _guard(guard) {}

        auto run() -> void
        {
            std::vector<Index> all(_table.domain().size());
            for (Index i = 0; i < all.size(); ++i)
                all[i] = i;
            if (_mode == SearchMode::min_homogeneous)
                min_hom(all);
            else {
                std::vector<bool> present;
                for (auto c : _table.packed()) {
                    if (c >= present.size())
                        present.resize(c + 1, false);
                    present[c] = true;
                }
                if (! all.empty())
                    record();
                for (std::uint32_t q = 0; q < present.size() && ! _guard.aborted(); ++q)
                    if (present[q])
                        clique(all, q);
            }
        }

        std::vector<Index> best_chain;
        std::vector<Index> chain;

    private:
        auto color(Index a, Index b) const -> std::uint32_t
        {
            return _table.packed()[_table.offset(a, b)];
        }

        auto record() -> void
        {
            if (chain.size() > best_chain.size() || (best_chain.empty() && ! chain.empty()))
                best_chain = chain;
            if (chain.empty() && best_chain.empty() && _table.domain().size())
                best_chain = {0};
        }

        auto min_hom(const std::vector<Index> & cand) -> void
        {
            for (std::size_t idx = 0; idx < cand.size(); ++idx) {
                if (chain.size() + (cand.size() - idx) <= best_chain.size())
                    break;
                if (! _guard.charge(1))
                    return;
                Index z = cand[idx];
                // color classes above z, largest first, smallest color on ties
                std::vector<std::pair<std::uint32_t, std::vector<Index>>> classes;
                for (std::size_t j = idx + 1; j < cand.size(); ++j) {
                    auto c = color(z, cand[j]);
                    auto it = std::find_if(classes.begin(), classes.end(), [c](auto & p) { return p.first == c; });
                    if (it == classes.end())
                        classes.push_back({c, {cand[j]}});
                    else
                        it->second.push_back(cand[j]);
                }
                std::stable_sort(classes.begin(), classes.end(), [](auto & a, auto & b) {
                    return a.second.size() != b.second.size() ? a.second.size() > b.second.size() : a.first < b.first;
                });
                chain.push_back(z);
                record();
                for (auto & [c, members] : classes) {
                    if (chain.size() + members.size() <= best_chain.size())
                        break;
                    min_hom(members);
                }
                chain.pop_back();
            }
        }

        auto clique(const std::vector<Index> & cand, std::uint32_t q) -> void
        {
            for (std::size_t idx = 0; idx < cand.size(); ++idx) {
                if (chain.size() + (cand.size() - idx) <= best_chain.size())
                    break;
                if (! _guard.charge(1))
                    return;
                Index z = cand[idx];
                std::vector<Index> next;
                for (std::size_t j = idx + 1; j < cand.size(); ++j)
                    if (color(z, cand[j]) == q)
                        next.push_back(cand[j]);
                chain.push_back(z);
                record();
                clique(next, q);
                chain.pop_back();
            }
        }

        const TableColoring & _table;
        SearchMode _mode;
        Guard & _guard;
    };

    auto reference_max(const Coloring & coloring, Interval interval, const SearchBudget & budget, SearchMode mode) -> MaximumOutcome
    {
        check_interval(coloring, interval);
        Guard guard{budget};
        auto table = TableColoring::materialize(*restrict_coloring(
            std::shared_ptr<const Coloring>(&coloring, [](const Coloring *) {}), interval));
        Reference ref{*table, mode, guard};
        ref.run();
        MaximumOutcome out;
        out.size = ref.best_chain.size();
        if (out.size)
            out.witness = make_witness(coloring, interval, ref.best_chain, mode);
        out.exhaustive = ! guard.aborted();
        out.nodes_explored = guard.nodes();
        out.wall_time_ms = guard.elapsed_ms();
        return out;
    }
}

auto to_string(SearchMode mode) -> std::string_view
{
    return mode == SearchMode::min_homogeneous ? "min-homogeneous" : "homogeneous";
}

auto parse_search_mode(std::string_view text) -> SearchMode
{
    if (text == "min-homogeneous" || text == "minhom")
        return SearchMode::min_homogeneous;
    if (text == "homogeneous" || text == "hom")
        return SearchMode::homogeneous;
    throw std::invalid_argument("unknown search mode '" + std::string(text) + "'");
}

auto verify_witness(const Coloring & coloring, const Witness & witness) -> bool
{
    return witness.mode == SearchMode::homogeneous ? is_homogeneous(coloring, witness.elements)
                                                   : is_min_homogeneous(coloring, witness.elements);
}

auto max_min_homogeneous(const Coloring & coloring, Interval interval, Nat target, const SearchBudget & budget) -> SearchOutcome
{
    return search_target(coloring, interval, target, budget, SearchMode::min_homogeneous);
}

auto max_homogeneous(const Coloring & coloring, Interval interval, Nat target, const SearchBudget & budget) -> SearchOutcome
{
    return search_target(coloring, interval, target, budget, SearchMode::homogeneous);
}

auto largest_min_homogeneous(const Coloring & coloring, Interval interval, const SearchBudget & budget) -> MaximumOutcome
{
    return search_max(coloring, interval, budget, SearchMode::min_homogeneous);
}

auto largest_homogeneous(const Coloring & coloring, Interval interval, const SearchBudget & budget) -> MaximumOutcome
{
    return search_max(coloring, interval, budget, SearchMode::homogeneous);
}

auto largest_min_homogeneous_reference(const Coloring & coloring, Interval interval, const SearchBudget & budget) -> MaximumOutcome
{
    return reference_max(coloring, interval, budget, SearchMode::min_homogeneous);
}

auto largest_homogeneous_reference(const Coloring & coloring, Interval interval, const SearchBudget & budget) -> MaximumOutcome
{
    return reference_max(coloring, interval, budget, SearchMode::homogeneous);
}

} // namespace regramsey
