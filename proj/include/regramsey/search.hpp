#pragma once

#include <regramsey/bound_fn.hpp>
#include <regramsey/colorings.hpp>
#include <regramsey/schedule.hpp>

#include <json.hpp>

#include <chrono>
#include <functional>
#include <cstdint>
#include <optional>
#include <stop_token>
#include <string>
#include <vector>

namespace regramsey {

enum class SearchMode
{
    min_homogeneous,
    homogeneous
};

auto to_string(SearchMode mode) -> std::string_view;
auto parse_search_mode(std::string_view text) -> SearchMode;

struct Witness
{
    std::vector<Nat> elements;
    SearchMode mode = SearchMode::min_homogeneous;
    nlohmann::json coloring = nlohmann::json::object();
};

/// Re-checks every pair of the witness against the coloring.
auto verify_witness(const Coloring & coloring, const Witness & witness) -> bool;

struct SearchBudget
{
    std::uint64_t max_nodes = 0;                    ///< 0 means unlimited
    std::chrono::milliseconds time_limit{0};        ///< 0 means unlimited
    unsigned parallelism = 0;                       ///< 0 means the OpenMP default
    std::stop_token stop = {};
};

/// Either a witness of the requested size or a certificate that none
/// exists. A certificate only counts when `exhaustive` is set.
struct SearchOutcome
{
    std::optional<Witness> witness;
    Nat target = 0;
    bool exhaustive = false;
    std::uint64_t nodes_explored = 0;
    double wall_time_ms = 0;
};

/// Size of the largest set found. When `exhaustive`, it is the maximum.
struct MaximumOutcome
{
    Nat size = 0;
    std::optional<Witness> witness;
    bool exhaustive = false;
    std::uint64_t nodes_explored = 0;
    double wall_time_ms = 0;
};

/// Witness of size >= target inside `interval`, or an exhaustive refusal.
auto max_min_homogeneous(const Coloring & coloring, Interval interval, Nat target, const SearchBudget & budget = {})
    -> SearchOutcome;
auto max_homogeneous(const Coloring & coloring, Interval interval, Nat target, const SearchBudget & budget = {})
    -> SearchOutcome;

/// Exact maximum size (and a witness) inside `interval`.
auto largest_min_homogeneous(const Coloring & coloring, Interval interval, const SearchBudget & budget = {})
    -> MaximumOutcome;
auto largest_homogeneous(const Coloring & coloring, Interval interval, const SearchBudget & budget = {})
    -> MaximumOutcome;

/// The plain serial branch-and-bound (ascending elements, colors by
/// descending class size, cut when chain + candidates cannot beat the
/// best). Kept as the reference the fast engine is tested against.
auto largest_min_homogeneous_reference(const Coloring & coloring, Interval interval, const SearchBudget & budget = {})
    -> MaximumOutcome;
auto largest_homogeneous_reference(const Coloring & coloring, Interval interval, const SearchBudget & budget = {})
    -> MaximumOutcome;

/// Greedy chain on [lo, lo + N): take the least remaining element, keep
/// the largest color class above it (smallest color on ties), repeat.
/// Throws std::invalid_argument if some chosen row uses more than C colors.
auto greedy_min_hom(const Coloring & coloring, Nat N, Nat C) -> Witness;

/// Same chain, then the most frequent recorded color (smallest on ties)
/// plus the final element gives a homogeneous set.
auto greedy_homogeneous(const Coloring & coloring, Nat N, Nat C) -> Witness;

/// Length the greedy chain is guaranteed to reach on N elements and C colors:
/// r_0 = N, r_j = ceil((r_{j-1} - 1) / C), counting steps until r = 0.
auto greedy_chain_guarantee(Nat N, Nat C) -> Nat;
/// Homogeneous size guaranteed by greedy_homogeneous: ceil((L - 1) / C) + 1.
auto greedy_homogeneous_guarantee(Nat N, Nat C) -> Nat;

struct UpperBoundReport
{
    std::optional<Nat> N;               ///< beta^{-1}(k), if found below the limit
    Nat colors = 0;                     ///< g(N) + 1, the number of colors 0..g(N)
    bool textbook_condition = false;    ///< g(N)^k <= N
    bool greedy_guarantee = false;      ///< greedy chain on N elements with g(N)+1 colors reaches k
    std::optional<Nat> precondition_violation;  ///< sampled n with g(n) > iroot(n, beta(n))
};

/// N = beta^{-1}(k), with a sampled check of g(n) <= iroot(n, beta(n)) and
/// of monotonicity, over n = 0 .. min(limit, N) in `samples` evenly spaced points.
auto upper_bound_N(const BoundFn & g, const MonotoneFn & beta, Nat k, Nat limit, Nat samples = 1000) -> UpperBoundReport;

enum class NuStatus
{
    found,
    not_found_below_limit,
    budget_exhausted
};

auto to_string(NuStatus s) -> std::string_view;

/// A bad coloring: g-regressive on [0, N) with no min-homogeneous k-set.
/// colors[n][m] is c(m, n) for m < n.
struct BadColoring
{
    Nat N = 0;
    std::vector<std::vector<Nat>> colors;

    [[nodiscard]] auto color(Nat m, Nat n) const -> Nat { return colors[n][m]; }
    [[nodiscard]] auto to_table() const -> std::shared_ptr<TableColoring>;
};

struct NuCheckpoint
{
    std::string g;
    Nat k = 0;
    Nat proven_bad_up_to = 0;               ///< a bad coloring of [0, this) is known
    std::optional<BadColoring> bad_coloring;

    [[nodiscard]] auto to_json() const -> nlohmann::json;
    static auto from_json(const nlohmann::json & j) -> NuCheckpoint;
};

struct NuResult
{
    NuStatus status = NuStatus::budget_exhausted;
    std::optional<Nat> value;               ///< nu_g(k) when status == found
    NuCheckpoint progress;
    std::uint64_t nodes_explored = 0;
};

/// Largest N supported by the exact backtracker.
inline constexpr Nat nu_max_N = 64;

/// nu_g(k): least N such that every g-regressive coloring of [0, N) has a
/// min-homogeneous k-set. Searches N = k, k+1, ..., limit. An optional
/// checkpoint resumes from its proven bound; `on_progress` is called each
/// time a new bad coloring is found.
auto nu_exact(const BoundFn & g, Nat k, Nat limit, const SearchBudget & budget = {},
    const std::optional<NuCheckpoint> & resume = std::nullopt,
    const std::function<void(const NuCheckpoint &)> & on_progress = {}) -> NuResult;

/// Whether some g-regressive coloring of [0, N) has no min-homogeneous k-set.
/// nullopt when the budget runs out.
auto bad_coloring_exists(const BoundFn & g, Nat k, Nat N, const SearchBudget & budget = {}, std::uint64_t * nodes = nullptr)
    -> std::optional<std::optional<BadColoring>>;

/// Does the coloring have a min-homogeneous k-set? (Exhaustive, tiny N.)
auto has_min_homogeneous_set(const BadColoring & coloring, Nat k) -> bool;

enum class CnfEncoding
{
    direct,     ///< one blocking clause per k-subset and color pattern
    equality    ///< auxiliary equal-color variables, one clause per k-subset
};

struct CnfOptions
{
    CnfEncoding encoding = CnfEncoding::direct;
    Nat max_N = 64;
    std::uint64_t max_clauses = 50'000'000;
};

struct Cnf
{
    std::uint32_t variables = 0;
    std::vector<std::vector<std::int32_t>> clauses;
    std::vector<std::string> comments;
    /// color_var[n][m][q] is the variable "c(m, n) = q"
    std::vector<std::vector<std::vector<std::int32_t>>> color_var;
    /// aux_equal[m][a][b] is "c(m, a) = c(m, b)" (equality encoding only)
    std::vector<std::vector<std::vector<std::int32_t>>> aux_equal;

    [[nodiscard]] auto to_dimacs() const -> std::string;
    /// Reads a coloring back from a model (the set of true variables).
    [[nodiscard]] auto decode(const std::vector<std::int32_t> & model) const -> BadColoring;
    /// Assignment of the color variables (and auxiliaries) for a coloring.
    [[nodiscard]] auto encode(const BadColoring & coloring) const -> std::vector<std::int32_t>;
};

/// Estimated clause count, used by the size guard.
auto estimate_cnf_clauses(const BoundFn & g, Nat k, Nat N, CnfEncoding encoding) -> BigNat;

/// CNF satisfiable iff a g-regressive coloring of [0, N) without a
/// min-homogeneous k-set exists. Row m uses colors 0..min(g(m), N-m-2): a
/// row with L entries needs at most L colors, so this loses no solutions.
/// Throws std::length_error when N or the estimate exceed the options.
auto export_cnf(const BoundFn & g, Nat k, Nat N, const CnfOptions & options = {}) -> Cnf;

auto satisfies(const Cnf & cnf, const std::vector<std::int32_t> & assignment) -> bool;

auto witness_to_json(const Witness & w) -> nlohmann::json;
auto witness_from_json(const nlohmann::json & j) -> Witness;
auto outcome_to_json(const SearchOutcome & o) -> nlohmann::json;
auto maximum_to_json(const MaximumOutcome & o) -> nlohmann::json;

} // namespace regramsey
