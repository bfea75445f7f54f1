#pragma once

#include <regramsey/bound_fn.hpp>
#include <regramsey/capped_nat.hpp>
#include <regramsey/hierarchy.hpp>
#include <regramsey/schedule.hpp>

#include <json.hpp>

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace regramsey {

/// Half-open interval [lo, hi) of naturals.
struct Interval
{
    Nat lo = 0;
    Nat hi = 0;

    [[nodiscard]] auto size() const -> Nat { return hi > lo ? hi - lo : 0; }
    [[nodiscard]] auto contains(Nat x) const -> bool { return lo <= x && x < hi; }
    [[nodiscard]] auto contains(const Interval & other) const -> bool { return lo <= other.lo && other.hi <= hi; }
    auto operator==(const Interval &) const -> bool = default;
};

/// A pair coloring on a finite domain. Implementations are immutable after
/// construction, so color queries may run concurrently.
class Coloring
{
public:
    virtual ~Coloring() = default;

    [[nodiscard]] virtual auto domain() const -> Interval = 0;
    [[nodiscard]] virtual auto name() const -> std::string = 0;
    [[nodiscard]] virtual auto parameters() const -> nlohmann::json { return nlohmann::json::object(); }

    /// Color of {m, n} for m < n in the domain, without argument checks.
    [[nodiscard]] virtual auto color_unchecked(Nat m, Nat n) const -> Nat = 0;

    /// Checked query; throws std::out_of_range or std::invalid_argument.
    [[nodiscard]] auto color_of(Nat m, Nat n) const -> Nat;

    [[nodiscard]] auto describe() const -> nlohmann::json;
};

using ColoringPtr = std::shared_ptr<const Coloring>;

/// Every pair gets the same color.
auto constant_coloring(Interval domain, Nat color) -> ColoringPtr;

/// Explicit table on a domain, stored as a packed upper triangle.
class TableColoring : public Coloring
{
public:
    TableColoring(Interval domain, std::vector<std::uint32_t> packed, std::string label = "table",
        nlohmann::json params = nlohmann::json::object());

    /// Copies another coloring's colors (OpenMP over rows).
    static auto materialize(const Coloring & source) -> std::shared_ptr<TableColoring>;

    /// Colors drawn uniformly from {0, ..., min(colors - 1, g(m))} with a
    /// fixed-seed 64-bit Mersenne twister, so tables are reproducible.
    static auto random(Interval domain, Nat colors, std::uint64_t seed, const BoundFn * g = nullptr)
        -> std::shared_ptr<TableColoring>;

    [[nodiscard]] auto domain() const -> Interval override { return _domain; }
    [[nodiscard]] auto name() const -> std::string override { return _label; }
    [[nodiscard]] auto parameters() const -> nlohmann::json override { return _params; }
    [[nodiscard]] auto color_unchecked(Nat m, Nat n) const -> Nat override
    {
        return _packed[offset(m - _domain.lo, n - _domain.lo)];
    }

    auto set(Nat m, Nat n, std::uint32_t color) -> void { _packed[offset(m - _domain.lo, n - _domain.lo)] = color; }
    [[nodiscard]] auto packed() const -> const std::vector<std::uint32_t> & { return _packed; }

    [[nodiscard]] auto offset(Nat i, Nat j) const -> std::size_t
    {
        Nat size = _domain.size();
        return i * size - i * (i + 1) / 2 + (j - i - 1);
    }

private:
    Interval _domain;
    std::vector<std::uint32_t> _packed;
    std::string _label;
    nlohmann::json _params;
};

auto pair_count(Nat size) -> std::size_t;

/// Orbits of a hierarchy from a base point, cached level by level up to a
/// working end, answering the semi-metrics d_i and the I/D statistics.
class SemiMetric
{
public:
    /// Throws if some orbit stalls (a zero step) inside [mu, end].
    SemiMetric(HierarchySpec spec, Nat mu, Nat end);

    [[nodiscard]] auto mu() const -> Nat { return _mu; }
    [[nodiscard]] auto end() const -> Nat { return _end; }
    [[nodiscard]] auto spec() const -> const HierarchySpec & { return _spec; }

    /// Levels 1..top_level() may have orbit points above mu inside the
    /// working interval; every higher level has none.
    [[nodiscard]] auto top_level() const -> unsigned { return static_cast<unsigned>(_orbits.size()) + 1; }

    /// Orbit points of level i >= 2 that are <= end, starting with mu.
    [[nodiscard]] auto orbit(unsigned i) const -> const std::vector<Nat> &;

    /// |{l : m < f_i^(l)(mu) <= n}| for mu <= m <= n <= end.
    [[nodiscard]] auto d(unsigned i, Nat m, Nat n) const -> Nat;

    /// (I, D) for mu <= m < n <= end.
    [[nodiscard]] auto i_and_d(Nat m, Nat n) const -> std::pair<Nat, Nat>;

private:
    auto check_range(Nat m, Nat n) const -> void;

    HierarchySpec _spec;
    Nat _mu;
    Nat _end;
    std::vector<std::vector<Nat>> _orbits; // _orbits[i - 2] is level i
};

/// c_g(m, n) = Pr(I(m, n), D(m, n)) on [mu, end).
class CgColoring : public Coloring
{
public:
    CgColoring(std::shared_ptr<const SemiMetric> metric, std::string bound_descriptor);

    [[nodiscard]] auto domain() const -> Interval override { return {_metric->mu(), _metric->end()}; }
    [[nodiscard]] auto name() const -> std::string override { return "cg"; }
    [[nodiscard]] auto parameters() const -> nlohmann::json override;
    [[nodiscard]] auto color_unchecked(Nat m, Nat n) const -> Nat override;
    [[nodiscard]] auto metric() const -> const SemiMetric & { return *_metric; }

private:
    std::shared_ptr<const SemiMetric> _metric;
    std::string _bound;
};

/// Parameters of the toy lower-bound coloring for g and k:
/// mu = mu_g(k) and end = (f_g)_k(mu).
struct CgInterval
{
    Nat mu;
    Nat end;
};

auto cg_interval(const BoundFn & g, Nat k, Nat search_limit = 100'000'000, const EvalContext & ctx = {}) -> CgInterval;

/// c_g over [mu_g(k), (f_g)_k(mu_g(k))).
auto cg_coloring(const BoundFn & g, Nat k, Nat search_limit = 100'000'000) -> std::shared_ptr<const CgColoring>;

/// Decimal coloring on [43, 10^4): with |n - m| = x, d1 is the largest p in
/// {0..3} with 10^p < x (0 when x = 1), d2 is the decimal digit of x at
/// position d1, and the color is Pr(d1, d2 + 1).
auto base10_color(Nat m, Nat n) -> Nat;
auto base10_coloring() -> ColoringPtr;
inline constexpr Interval base10_domain{43, 10'000};

/// The shipped 42-vertex 2-coloring of K_42 without a monochromatic K_5.
class RamseyGraph
{
public:
    static constexpr unsigned vertices = 42;

    /// Parses the documented hex format and checks its CRC-32.
    static auto parse(const std::string & text) -> RamseyGraph;
    static auto from_file(const std::string & path) -> RamseyGraph;
    /// The copy compiled into the library.
    static auto shipped() -> const RamseyGraph &;

    [[nodiscard]] auto edge(unsigned u, unsigned v) const -> bool { return (_rows[u] >> v) & 1; }
    [[nodiscard]] auto to_text() const -> std::string;
    [[nodiscard]] auto checksum() const -> std::uint32_t;

private:
    std::vector<std::uint64_t> _rows;
};

/// Colors [0, 43): pairs with m < 2 get 0, otherwise the edge color of
/// graph vertices m - 1 and n - 1.
auto small_interval_coloring(const RamseyGraph & graph = RamseyGraph::shipped()) -> ColoringPtr;

/// The graph itself as a coloring of [0, 42): c(u, v) = edge color of {u, v}.
auto graph_coloring(const RamseyGraph & graph = RamseyGraph::shipped()) -> ColoringPtr;

/// Base-s digit coloring on [1, hi): floor(log_s m) when the two logs
/// differ, otherwise the least-significant-first index of the first
/// differing base-s digit.
auto base_s_color(Nat s, Nat m, Nat n) -> Nat;
auto base_s_coloring(Nat s, Nat hi) -> ColoringPtr;

/// Delegates to the interval coloring when both points share an interval
/// of the schedule, otherwise 0.
auto stitched_coloring(Schedule schedule, std::vector<ColoringPtr> per_interval) -> ColoringPtr;

/// Extends a coloring down to [lo, inner.hi) by giving color 0 to every
/// pair whose minimum lies below the inner domain.
auto zero_padded_coloring(ColoringPtr inner, Nat lo) -> ColoringPtr;

/// Restriction of a coloring to a sub-interval.
auto restrict_coloring(ColoringPtr inner, Interval domain) -> ColoringPtr;

struct RegressivityViolation
{
    Nat m;
    Nat n;
    Nat color;
    Nat bound;
};

struct RegressivityReport
{
    std::optional<RegressivityViolation> violation;   ///< lexicographically first
    std::uint64_t pairs_checked = 0;
    Nat max_color = 0;

    [[nodiscard]] auto pass() const -> bool { return ! violation; }
};

/// Checks color(m, n) <= g(m) on every domain pair. The parallel version
/// reports the same first violation as the serial one.
auto verify_regressive(const Coloring & coloring, const BoundFn & g) -> RegressivityReport;
auto verify_regressive_serial(const Coloring & coloring, const BoundFn & g) -> RegressivityReport;

auto is_min_homogeneous(const Coloring & coloring, const std::vector<Nat> & elements) -> bool;
auto is_homogeneous(const Coloring & coloring, const std::vector<Nat> & elements) -> bool;

enum class ExportEncoding
{
    csv,
    binary
};

/// Writes `<stem>.json` (header) and `<stem>.csv` or `<stem>.bin` (colors).
/// Returns the header.
auto export_coloring(const Coloring & coloring, const std::string & stem, ExportEncoding encoding,
    const std::string & bound_descriptor = "") -> nlohmann::json;

/// Loads an exported coloring from its header file, re-checking the CRC-32.
auto import_coloring(const std::string & header_path) -> std::shared_ptr<TableColoring>;

auto crc32(const void * data, std::size_t length) -> std::uint32_t;

} // namespace regramsey
