#pragma once

#include <regramsey/capped_nat.hpp>

#include <functional>
#include <optional>
#include <string>
#include <vector>

namespace regramsey {

/// Interval schedule mu_0 = 0 < mu_1 < ... < mu_T together with the
/// per-interval forbidden sizes k_1 .. k_T. The level function is
/// beta(n) = t + 1 on [mu_t, mu_{t+1}).
struct Schedule
{
    std::vector<Nat> mu;
    std::vector<Nat> k;

    /// Throws std::invalid_argument unless mu starts at 0, is strictly
    /// increasing, and k has one entry per interval.
    auto validate() const -> void;

    [[nodiscard]] auto intervals() const -> std::size_t { return mu.empty() ? 0 : mu.size() - 1; }
    [[nodiscard]] auto end() const -> Nat { return mu.back(); }

    static auto from_json_text(const std::string & text) -> Schedule;
    static auto from_file(const std::string & path) -> Schedule;
    [[nodiscard]] auto to_json_text() const -> std::string;
};

/// beta(n) for the schedule; std::out_of_range if n >= last mu.
auto beta_of(const Schedule & schedule, Nat n) -> Nat;

using MonotoneFn = std::function<Nat(Nat)>;

/// Least n <= limit with beta(n) >= t, or nullopt.
auto beta_inverse(const MonotoneFn & beta, Nat t, Nat limit) -> std::optional<Nat>;

/// The schedule used for the Ackermannian coloring: mu_1 = 10^4, k_1 = 18 and
/// for t > 1, mu_t = A_{t+3}(t+3), k_t = floor(iroot(mu_{t-1}, 2(t-1)) / 2).
/// Values are produced while they stay under the cap.
struct GeneratedSchedule
{
    Schedule schedule;                      ///< finite prefix
    std::vector<Nat> pending_k;             ///< k_t known although mu_t saturated
    std::optional<unsigned> saturated_at;   ///< first t whose mu_t is TOP
};

auto ackermann_schedule(unsigned intervals, const BigNat & cap = default_cap()) -> GeneratedSchedule;

} // namespace regramsey
