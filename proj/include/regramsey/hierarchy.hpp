#pragma once

#include <regramsey/bound_fn.hpp>
#include <regramsey/capped_nat.hpp>

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <stop_token>
#include <string>
#include <variant>
#include <vector>

namespace regramsey {

/// A fast-growing hierarchy whose level 1 is the successor and whose level
/// i+1 at n iterates level i step(n) times starting from n.
class HierarchySpec
{
public:
    struct AckermannStep {};                 ///< step(n) = n
    struct RootStep { unsigned t; };         ///< step(n) = iroot(n, t)
    struct GStep { BoundFn g; };             ///< step(n) = floor(isqrt(g(n)) / 2)
    using Rule = std::variant<AckermannStep, RootStep, GStep>;

    static auto ackermann() -> HierarchySpec { return HierarchySpec{AckermannStep{}}; }
    static auto root(unsigned t) -> HierarchySpec;
    static auto g_step(BoundFn g) -> HierarchySpec { return HierarchySpec{GStep{std::move(g)}}; }

    /// "ack", "ft:t=2", "fg:g=id" (any bound descriptor after g=).
    static auto parse(std::string_view text) -> HierarchySpec;

    [[nodiscard]] auto step(const BigNat & n) const -> BigNat;
    [[nodiscard]] auto step(Nat n) const -> Nat;
    [[nodiscard]] auto describe() const -> std::string;
    [[nodiscard]] auto rule() const -> const Rule & { return _rule; }

private:
    explicit HierarchySpec(Rule r) : _rule(std::move(r)) {}
    Rule _rule;
};

/// Saturation ceiling, work budget and cooperative cancellation for one evaluation.
struct EvalContext
{
    BigNat cap = default_cap();
    std::uint64_t max_iterations = 20'000'000;
    std::stop_token stop = {};
    /// Stop early once the running value exceeds this; the result is then
    /// an incomplete evaluation whose lower bound is already above it.
    std::optional<BigNat> stop_above = std::nullopt;
};

/// Outcome of an evaluation. Every hierarchy function is inflationary, so
/// the running value of an interrupted evaluation is a certified lower
/// bound on the true result. A lower bound above the cap yields TOP.
struct Evaluation
{
    CappedNat value;
    bool complete;
    std::uint64_t iterations;
};

auto evaluate(const HierarchySpec & spec, unsigned level, const BigNat & n, const EvalContext & ctx) -> Evaluation;

/// f^{(count)}(x) for f = level `level` of `spec`.
auto iterate(const HierarchySpec & spec, unsigned level, const BigNat & count, const BigNat & x,
    const EvalContext & ctx) -> Evaluation;

class IncompleteEvaluation : public std::runtime_error
{
public:
    IncompleteEvaluation(const std::string & what, BigNat lower_bound) :
        std::runtime_error(what), lower_bound(std::move(lower_bound)) {}
    BigNat lower_bound;
};

/// A_i(n). Throws IncompleteEvaluation if the budget runs out before the
/// value is known exactly or known to exceed the cap.
auto ack_approx(unsigned i, Nat n, const EvalContext & ctx = {}) -> CappedNat;
/// (f_t)_i(n) with step iroot(n, t).
auto ft_eval(unsigned t, unsigned i, Nat n, const EvalContext & ctx = {}) -> CappedNat;
/// (f_g)_i(n) with step floor(isqrt(g(n)) / 2).
auto fg_eval(const BoundFn & g, unsigned i, Nat n, const EvalContext & ctx = {}) -> CappedNat;

/// Least t <= limit with k <= floor(isqrt(g(t)) / 2).
auto mu_g(const BoundFn & g, Nat k, Nat limit) -> std::optional<Nat>;

enum class Verdict
{
    pass,
    fail,
    indeterminate
};

auto to_string(Verdict v) -> std::string_view;

/// One inequality lhs > rhs (strict) or lhs >= rhs, both sides evaluated under the cap.
struct InequalityCheck
{
    std::string name;
    std::string statement;
    Evaluation lhs;
    Evaluation rhs;
    bool strict;
    Verdict verdict;
};

struct GrowthReport
{
    unsigned t;
    unsigned i;
    Nat n;
    std::vector<InequalityCheck> checks;

    [[nodiscard]] auto any_fail() const -> bool;
};

/// Evaluates, for the given parameters,
///  - lower-level growth: (f_t)_i(n) >= n + iroot(n, t)^(i-1)
///  - base case:          (f_{t+1})_{2t+3}(n^2) > n^2 + 2n + 1          (n > 2^t)
///  - induction step:     (f_{t+1})_{i+2t+2}(n^2) > ((f_t)_i(n))^2       (n > 2^t)
/// Checks whose hypothesis n > 2^t fails are omitted. A check is
/// INDETERMINATE when either side saturates or an unfinished left side
/// has not yet passed the right side.
auto check_growth_inequalities(unsigned t, unsigned i, Nat n, const EvalContext & ctx = {}) -> GrowthReport;

auto check_lower_level_growth(unsigned t, unsigned k, Nat n, const EvalContext & ctx = {}) -> InequalityCheck;
auto check_base_case(unsigned t, Nat n, const EvalContext & ctx = {}) -> InequalityCheck;
auto check_induction_step(unsigned t, unsigned i, Nat n, const EvalContext & ctx = {}) -> InequalityCheck;

} // namespace regramsey
