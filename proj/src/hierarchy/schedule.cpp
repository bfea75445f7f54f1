#include <regramsey/arith.hpp>
#include <regramsey/hierarchy.hpp>
#include <regramsey/schedule.hpp>

#include <json.hpp>

#include <algorithm>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace regramsey {

auto Schedule::validate() const -> void
{
    if (mu.size() < 2)
        throw std::invalid_argument("schedule needs at least one interval");
    if (mu.front() != 0)
        throw std::invalid_argument("schedule must start at mu_0 = 0");
    if (std::adjacent_find(mu.begin(), mu.end(), std::greater_equal<>{}) != mu.end())
        throw std::invalid_argument("schedule mu must be strictly increasing");
    if (k.size() != mu.size() - 1)
        throw std::invalid_argument("schedule needs exactly one k per interval");
}

auto Schedule::from_json_text(const std::string & text) -> Schedule
{
    auto doc = nlohmann::json::parse(text);
    Schedule s;
    s.mu = doc.at("mu").get<std::vector<Nat>>();
    if (doc.contains("k"))
        s.k = doc.at("k").get<std::vector<Nat>>();
    else
        s.k.assign(s.mu.empty() ? 0 : s.mu.size() - 1, 0);
    s.validate();
    return s;
}

auto Schedule::from_file(const std::string & path) -> Schedule
{
    std::ifstream in{path};
    if (! in)
        throw std::runtime_error("cannot open schedule file " + path);
    std::stringstream buffer;
    buffer << in.rdbuf();
    return from_json_text(buffer.str());
}

auto Schedule::to_json_text() const -> std::string
{
    return nlohmann::json{{"mu", mu}, {"k", k}}.dump();
}

auto beta_of(const Schedule & schedule, Nat n) -> Nat
{
    if (schedule.mu.size() < 2 || n >= schedule.mu.back())
        throw std::out_of_range("beta_of: " + std::to_string(n) + " is beyond the schedule");
    // first mu strictly greater than n closes the interval containing n
    auto it = std::upper_bound(schedule.mu.begin(), schedule.mu.end(), n);
    return static_cast<Nat>(it - schedule.mu.begin());
}

auto beta_inverse(const MonotoneFn & beta, Nat t, Nat limit) -> std::optional<Nat>
{
    // beta is weakly increasing, so {n : beta(n) >= t} is an up-set: bisect
    if (beta(limit) < t)
        return std::nullopt;
    Nat lo = 0, hi = limit;
    while (lo < hi) {
        Nat mid = lo + (hi - lo) / 2;
        if (beta(mid) >= t)
            hi = mid;
        else
            lo = mid + 1;
    }
    return lo;
}

auto ackermann_schedule(unsigned intervals, const BigNat & cap) -> GeneratedSchedule
{
    GeneratedSchedule out;
    out.schedule.mu = {0};
    if (intervals == 0)
        return out;

    out.schedule.mu.push_back(10'000);
    out.schedule.k.push_back(18);

    for (unsigned t = 2; t <= intervals; ++t) {
        Nat previous = out.schedule.mu.back();
        Nat k_t = iroot(previous, 2 * (t - 1)) / 2;

        EvalContext ctx{cap};
        auto mu_t = evaluate(HierarchySpec::ackermann(), t + 3, BigNat{t + 3}, ctx);
        auto finite = mu_t.complete ? mu_t.value.as_u64() : std::nullopt;
        if (! finite) {
            out.pending_k.push_back(k_t);
            out.saturated_at = t;
            break;
        }
        out.schedule.mu.push_back(*finite);
        out.schedule.k.push_back(k_t);
    }
    return out;
}

} // namespace regramsey
