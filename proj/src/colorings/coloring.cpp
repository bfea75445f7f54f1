#include <regramsey/colorings.hpp>

#include <boost/crc.hpp>

#include <random>
#include <stdexcept>

namespace regramsey {

auto crc32(const void * data, std::size_t length) -> std::uint32_t
{
    boost::crc_32_type crc;
    crc.process_bytes(data, length);
    return crc.checksum();
}

auto pair_count(Nat size) -> std::size_t
{
    return size < 2 ? 0 : size * (size - 1) / 2;
}

auto Coloring::color_of(Nat m, Nat n) const -> Nat
{
    if (m >= n)
        throw std::invalid_argument("color_of needs m < n, got (" + std::to_string(m) + ", " + std::to_string(n) + ")");
    auto d = domain();
    if (! d.contains(m) || ! d.contains(n))
        throw std::out_of_range("pair (" + std::to_string(m) + ", " + std::to_string(n) + ") outside [" +
            std::to_string(d.lo) + ", " + std::to_string(d.hi) + ")");
    return color_unchecked(m, n);
}

auto Coloring::describe() const -> nlohmann::json
{
    auto d = domain();
    return {{"construction", name()}, {"domain", {d.lo, d.hi}}, {"parameters", parameters()}};
}

namespace {
    class ConstantColoring : public Coloring
    {
    public:
        ConstantColoring(Interval domain, Nat color) : _domain(domain), _color(color) {}

        auto domain() const -> Interval override { return _domain; }
        auto name() const -> std::string override { return "constant"; }
        auto parameters() const -> nlohmann::json override { return {{"color", _color}}; }
        auto color_unchecked(Nat, Nat) const -> Nat override { return _color; }

    private:
        Interval _domain;
        Nat _color;
    };

    class StitchedColoring : public Coloring
    {
    public:
        StitchedColoring(Schedule schedule, std::vector<ColoringPtr> parts) :
            _schedule(std::move(schedule)), _parts(std::move(parts))
        {
            _schedule.validate();
            if (_parts.size() != _schedule.intervals())
                throw std::invalid_argument("stitched coloring needs one coloring per schedule interval");
            for (std::size_t t = 0; t < _parts.size(); ++t) {
                Interval want{_schedule.mu[t], _schedule.mu[t + 1]};
                if (! _parts[t] || ! _parts[t]->domain().contains(want))
                    throw std::invalid_argument("interval coloring " + std::to_string(t + 1) + " does not cover [" +
                        std::to_string(want.lo) + ", " + std::to_string(want.hi) + ")");
            }
        }

        auto domain() const -> Interval override { return {0, _schedule.end()}; }
        auto name() const -> std::string override { return "stitched"; }
        auto parameters() const -> nlohmann::json override
        {
            auto parts = nlohmann::json::array();
            for (auto & p : _parts)
                parts.push_back(p->describe());
            return {{"schedule", {{"mu", _schedule.mu}, {"k", _schedule.k}}}, {"intervals", parts}};
        }

        auto color_unchecked(Nat m, Nat n) const -> Nat override
        {
            auto t = beta_of(_schedule, m);
            if (beta_of(_schedule, n) != t)
                return 0;
            return _parts[t - 1]->color_unchecked(m, n);
        }

    private:
        Schedule _schedule;
        std::vector<ColoringPtr> _parts;
    };

    class ZeroPadded : public Coloring
    {
    public:
        ZeroPadded(ColoringPtr inner, Nat lo) : _inner(std::move(inner)), _lo(lo)
        {
            if (_lo > _inner->domain().lo)
                throw std::invalid_argument("padding must extend the domain downwards");
        }

        auto domain() const -> Interval override { return {_lo, _inner->domain().hi}; }
        auto name() const -> std::string override { return "zero-padded"; }
        auto parameters() const -> nlohmann::json override { return {{"inner", _inner->describe()}}; }
        auto color_unchecked(Nat m, Nat n) const -> Nat override
        {
            return m < _inner->domain().lo ? 0 : _inner->color_unchecked(m, n);
        }

    private:
        ColoringPtr _inner;
        Nat _lo;
    };

    class Restricted : public Coloring
    {
    public:
        Restricted(ColoringPtr inner, Interval domain) : _inner(std::move(inner)), _domain(domain)
        {
            if (! _inner->domain().contains(_domain))
                throw std::invalid_argument("restriction must lie inside the original domain");
        }

        auto domain() const -> Interval override { return _domain; }
        auto name() const -> std::string override { return _inner->name(); }
        auto parameters() const -> nlohmann::json override
        {
            auto p = _inner->parameters();
            auto d = _inner->domain();
            p["restricted_from"] = {d.lo, d.hi};
            return p;
        }
        auto color_unchecked(Nat m, Nat n) const -> Nat override { return _inner->color_unchecked(m, n); }

    private:
        ColoringPtr _inner;
        Interval _domain;
    };

    auto first_violation_in_row(const Coloring & c, const BoundFn & g, Nat m, Nat hi, Nat & max_color)
        -> std::optional<RegressivityViolation>
    {
        Nat bound = g(m);
        for (Nat n = m + 1; n < hi; ++n) {
            Nat color = c.color_unchecked(m, n);
            max_color = std::max(max_color, color);
            if (color > bound)
                return RegressivityViolation{m, n, color, bound};
        }
        return std::nullopt;
    }
}

auto constant_coloring(Interval domain, Nat color) -> ColoringPtr
{
    return std::make_shared<ConstantColoring>(domain, color);
}

auto stitched_coloring(Schedule schedule, std::vector<ColoringPtr> per_interval) -> ColoringPtr
{
    return std::make_shared<StitchedColoring>(std::move(schedule), std::move(per_interval));
}

auto zero_padded_coloring(ColoringPtr inner, Nat lo) -> ColoringPtr
{
    return std::make_shared<ZeroPadded>(std::move(inner), lo);
}

auto restrict_coloring(ColoringPtr inner, Interval domain) -> ColoringPtr
{
    return std::make_shared<Restricted>(std::move(inner), domain);
}

TableColoring::TableColoring(Interval domain, std::vector<std::uint32_t> packed, std::string label, nlohmann::json params) :
    _domain(domain), _packed(std::move(packed)), _label(std::move(label)), _params(std::move(params))
{
    if (_packed.size() != pair_count(_domain.size()))
        throw std::invalid_argument("table size does not match its domain");
}

auto TableColoring::materialize(const Coloring & source) -> std::shared_ptr<TableColoring>
{
    auto d = source.domain();
    std::vector<std::uint32_t> packed(pair_count(d.size()));
    bool overflow = false;
    const auto size = static_cast<std::int64_t>(d.size());

#pragma omp parallel for schedule(dynamic, 16) reduction(|| : overflow)
    for (std::int64_t i = 0; i < size; ++i) {
        std::size_t at = static_cast<std::size_t>(i) * d.size() - static_cast<std::size_t>(i) * (i + 1) / 2;
        for (Nat j = i + 1; j < d.size(); ++j) {
            Nat c = source.color_unchecked(d.lo + i, d.lo + j);
            overflow = overflow || c > UINT32_MAX;
            packed[at++] = static_cast<std::uint32_t>(c);
        }
    }
    if (overflow)
        throw std::overflow_error("color does not fit in 32 bits");
    return std::make_shared<TableColoring>(d, std::move(packed), source.name(), source.parameters());
}

auto TableColoring::random(Interval domain, Nat colors, std::uint64_t seed, const BoundFn * g) -> std::shared_ptr<TableColoring>
{
    if (colors == 0)
        throw std::invalid_argument("random coloring needs at least one color");
    std::mt19937_64 rng{seed};
    std::vector<std::uint32_t> packed;
    packed.reserve(pair_count(domain.size()));
    for (Nat m = domain.lo; m < domain.hi; ++m) {
        Nat top = colors - 1;
        if (g)
            top = std::min(top, (*g)(m));
        for (Nat n = m + 1; n < domain.hi; ++n)
            packed.push_back(static_cast<std::uint32_t>(rng() % (top + 1)));
    }
    nlohmann::json params{{"colors", colors}, {"seed", seed}};
    if (g)
        params["bound"] = g->descriptor();
    return std::make_shared<TableColoring>(domain, std::move(packed), "random", params);
}

auto verify_regressive_serial(const Coloring & coloring, const BoundFn & g) -> RegressivityReport
{
    auto d = coloring.domain();
    RegressivityReport report;
    for (Nat m = d.lo; m < d.hi; ++m) {
        report.violation = first_violation_in_row(coloring, g, m, d.hi, report.max_color);
        if (report.violation) {
            report.pairs_checked += report.violation->n - m;
            return report;
        }
        report.pairs_checked += d.hi - m - 1;
    }
    return report;
}

auto verify_regressive(const Coloring & coloring, const BoundFn & g) -> RegressivityReport
{
    auto d = coloring.domain();
    const auto rows = static_cast<std::int64_t>(d.size());
    std::vector<std::optional<RegressivityViolation>> found(rows);
    std::vector<Nat> max_colors(rows, 0);

    // every row is scanned independently; the first violating row wins, and
    // the counters are then recomputed as the serial scan would report them
#pragma omp parallel for schedule(dynamic, 8)
    for (std::int64_t r = 0; r < rows; ++r)
        found[r] = first_violation_in_row(coloring, g, d.lo + r, d.hi, max_colors[r]);

    RegressivityReport report;
    for (std::int64_t r = 0; r < rows; ++r) {
        Nat m = d.lo + r;
        report.max_color = std::max(report.max_color, max_colors[r]);
        if (found[r]) {
            report.violation = found[r];
            report.pairs_checked += found[r]->n - m;
            return report;
        }
        report.pairs_checked += d.hi - m - 1;
    }
    return report;
}

auto is_min_homogeneous(const Coloring & coloring, const std::vector<Nat> & elements) -> bool
{
    auto d = coloring.domain();
    for (std::size_t a = 0; a < elements.size(); ++a) {
        if (! d.contains(elements[a]) || (a > 0 && elements[a - 1] >= elements[a]))
            return false;
        for (std::size_t b = a + 2; b < elements.size(); ++b)
            if (coloring.color_unchecked(elements[a], elements[b]) != coloring.color_unchecked(elements[a], elements[a + 1]))
                return false;
    }
    return true;
}

auto is_homogeneous(const Coloring & coloring, const std::vector<Nat> & elements) -> bool
{
    if (! is_min_homogeneous(coloring, elements))
        return false;
    if (elements.size() < 3)
        return true;
    Nat color = coloring.color_unchecked(elements[0], elements[1]);
    for (std::size_t a = 1; a + 1 < elements.size(); ++a)
        if (coloring.color_unchecked(elements[a], elements[a + 1]) != color)
            return false;
    return true;
}

} // namespace regramsey
