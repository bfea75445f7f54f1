#pragma once

#include <regramsey/capped_nat.hpp>
#include <regramsey/schedule.hpp>

#include <memory>
#include <string>
#include <string_view>
#include <variant>

namespace regramsey {

/// Symbolic regressiveness bound g. Every kind is total on the naturals;
/// real-valued forms are floored exactly.
class BoundFn
{
public:
    struct Constant { Nat value; };
    struct Identity {};
    struct RootPower { unsigned t; };            ///< n -> iroot(n, t)
    struct Power { unsigned j; };                ///< n -> n^j
    struct LogStar {};
    struct ConstDivisor { Nat value; };
    using Divisor = std::variant<LogStar, ConstDivisor>;
    /// n -> floor(lg n / (f(n) * floor(lg lg n))) for n >= 4, else 0
    struct LogQuotient { Divisor f; };
    /// n -> iroot(n, beta(n)) for the schedule's beta
    struct ScheduleRoot
    {
        std::shared_ptr<const Schedule> schedule;
        std::string source;   ///< "@path" when loaded from a file
    };

    using Kind = std::variant<Constant, Identity, RootPower, Power, LogQuotient, ScheduleRoot>;

    explicit BoundFn(Kind kind);

    static auto constant(Nat c) -> BoundFn { return BoundFn{Constant{c}}; }
    static auto identity() -> BoundFn { return BoundFn{Identity{}}; }
    static auto root(unsigned t) -> BoundFn;
    static auto power(unsigned j) -> BoundFn { return BoundFn{Power{j}}; }
    static auto log_quotient(Divisor f) -> BoundFn { return BoundFn{LogQuotient{f}}; }
    static auto schedule_root(Schedule schedule, std::string source = "") -> BoundFn;

    /// Parses the flag mini-language: const:C, id, root:t, pow:j,
    /// logq:f=logstar, logq:f=const:C, sched:@file.json, sched:0,43,10000.
    static auto parse(std::string_view text) -> BoundFn;

    /// Value at n; saturates at 2^64 - 1 where the exact value is larger.
    auto operator()(Nat n) const -> Nat;
    auto operator()(const BigNat & n) const -> BigNat;

    [[nodiscard]] auto descriptor() const -> std::string;
    [[nodiscard]] auto kind() const -> const Kind & { return _kind; }

private:
    Kind _kind;
};

/// Iterated binary logarithm with floors: 0 for n <= 1, else 1 + logstar(ilog2 n).
auto log_star(Nat n) -> Nat;

} // namespace regramsey
