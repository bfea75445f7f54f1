#include <regramsey/arith.hpp>
#include <regramsey/bound_fn.hpp>

#include <charconv>
#include <limits>
#include <sstream>
#include <stdexcept>

namespace regramsey {

namespace {
    template <class... Ts>
    struct overloaded : Ts...
    {
        using Ts::operator()...;
    };

    constexpr auto u64_max = std::numeric_limits<Nat>::max();

    auto parse_u64(std::string_view text, std::string_view what) -> Nat
    {
        Nat value = 0;
        auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
        if (ec != std::errc{} || ptr != text.data() + text.size())
            throw std::invalid_argument("bad " + std::string(what) + " '" + std::string(text) + "'");
        return value;
    }

    auto parse_mu_list(std::string_view text) -> Schedule
    {
        Schedule s;
        while (! text.empty()) {
            auto comma = text.find(',');
            s.mu.push_back(parse_u64(text.substr(0, comma), "schedule entry"));
            text = comma == std::string_view::npos ? std::string_view{} : text.substr(comma + 1);
        }
        s.k.assign(s.mu.empty() ? 0 : s.mu.size() - 1, 0);
        s.validate();
        return s;
    }

    auto divisor_value(const BoundFn::Divisor & f, Nat log_star_n) -> Nat
    {
        if (auto * c = std::get_if<BoundFn::ConstDivisor>(&f))
            return c->value;
        return std::max<Nat>(1, log_star_n);
    }

    // floor(lg n / (f(n) floor(lg lg n))) from lg = floor(lg n) >= 2, using
    // floor(x / D) = floor(floor(x) / D) for a positive integer D
    auto log_quotient_value(const BoundFn::LogQuotient & q, unsigned lg, Nat log_star_n) -> Nat
    {
        Nat d = divisor_value(q.f, log_star_n) * ilog(Nat{lg}, 2);
        return Nat{lg} / d;
    }
}

auto log_star(Nat n) -> Nat
{
    Nat count = 0;
    while (n > 1) {
        n = ilog(n, 2);
        ++count;
    }
    return count;
}

BoundFn::BoundFn(Kind kind) :
    _kind(std::move(kind))
{
    if (auto * r = std::get_if<RootPower>(&_kind); r && r->t == 0)
        throw std::invalid_argument("root:t needs t >= 1");
    if (auto * q = std::get_if<LogQuotient>(&_kind))
        if (auto * c = std::get_if<ConstDivisor>(&q->f); c && c->value == 0)
            throw std::invalid_argument("logq divisor must be positive");
    if (auto * s = std::get_if<ScheduleRoot>(&_kind)) {
        if (! s->schedule)
            throw std::invalid_argument("sched: missing schedule");
        s->schedule->validate();
    }
}

auto BoundFn::root(unsigned t) -> BoundFn
{
    return BoundFn{RootPower{t}};
}

auto BoundFn::schedule_root(Schedule schedule, std::string source) -> BoundFn
{
    return BoundFn{ScheduleRoot{std::make_shared<const Schedule>(std::move(schedule)), std::move(source)}};
}

auto BoundFn::parse(std::string_view text) -> BoundFn
{
    auto colon = text.find(':');
    auto head = text.substr(0, colon);
    auto arg = colon == std::string_view::npos ? std::string_view{} : text.substr(colon + 1);

    if (head == "id" && arg.empty())
        return identity();
    if (head == "const")
        return constant(parse_u64(arg, "constant"));
    if (head == "root")
        return root(static_cast<unsigned>(parse_u64(arg, "root index")));
    if (head == "pow")
        return power(static_cast<unsigned>(parse_u64(arg, "power")));
    if (head == "logq") {
        if (arg == "f=logstar")
            return log_quotient(LogStar{});
        if (arg.starts_with("f=const:"))
            return log_quotient(ConstDivisor{parse_u64(arg.substr(8), "divisor")});
        throw std::invalid_argument("logq expects f=logstar or f=const:C");
    }
    if (head == "sched") {
        if (arg.starts_with("@"))
            return schedule_root(Schedule::from_file(std::string(arg.substr(1))), std::string(arg));
        return schedule_root(parse_mu_list(arg));
    }
    throw std::invalid_argument("unknown bound '" + std::string(text) + "'");
}

auto BoundFn::operator()(Nat n) const -> Nat
{
    return std::visit(overloaded{
                          [&](const Constant & c) { return c.value; },
                          [&](const Identity &) { return n; },
                          [&](const RootPower & r) { return iroot(n, r.t); },
                          [&](const Power & p) { return checked_pow(n, p.j).value_or(u64_max); },
                          [&](const LogQuotient & q) -> Nat { return n < 4 ? 0 : log_quotient_value(q, ilog(n, 2), log_star(n)); },
                          [&](const ScheduleRoot & s) {
                              return iroot(n, static_cast<unsigned>(beta_of(*s.schedule, n)));
                          },
                      },
        _kind);
}

auto BoundFn::operator()(const BigNat & n) const -> BigNat
{
    if (n <= u64_max && ! std::holds_alternative<Power>(_kind))
        return BigNat{(*this)(n.convert_to<Nat>())};

    return std::visit(overloaded{
                          [&](const Constant & c) { return BigNat{c.value}; },
                          [&](const Identity &) { return n; },
                          [&](const RootPower & r) { return iroot(n, r.t); },
                          [&](const Power & p) { return BigNat{boost::multiprecision::pow(n, p.j)}; },
                          [&](const LogQuotient & q) -> BigNat {
                              // n exceeds 64 bits here; log*(n) = 1 + log*(floor(lg n))
                              unsigned lg = ilog(n, 2);
                              return BigNat{log_quotient_value(q, lg, 1 + log_star(lg))};
                          },
                          [&](const ScheduleRoot & s) -> BigNat {
                              throw std::out_of_range("sched bound evaluated beyond schedule end " +
                                  std::to_string(s.schedule->end()));
                          },
                      },
        _kind);
}

auto BoundFn::descriptor() const -> std::string
{
    return std::visit(overloaded{
                          [](const Constant & c) { return "const:" + std::to_string(c.value); },
                          [](const Identity &) { return std::string{"id"}; },
                          [](const RootPower & r) { return "root:" + std::to_string(r.t); },
                          [](const Power & p) { return "pow:" + std::to_string(p.j); },
                          [](const LogQuotient & q) {
                              return std::holds_alternative<LogStar>(q.f)
                                  ? std::string{"logq:f=logstar"}
                                  : "logq:f=const:" + std::to_string(std::get<ConstDivisor>(q.f).value);
                          },
                          [](const ScheduleRoot & s) {
                              if (! s.source.empty())
                                  return "sched:" + s.source;
                              std::ostringstream out;
                              out << "sched:";
                              for (std::size_t i = 0; i < s.schedule->mu.size(); ++i)
                                  out << (i ? "," : "") << s.schedule->mu[i];
                              return out.str();
                          },
                      },
        _kind);
}

} // namespace regramsey
