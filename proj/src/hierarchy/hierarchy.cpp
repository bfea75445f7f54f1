#include <regramsey/arith.hpp>
#include <regramsey/hierarchy.hpp>

#include <sstream>
#include <stdexcept>

namespace regramsey {

namespace {
    template <class... Ts>
    struct overloaded : Ts...
    {
        using Ts::operator()...;
    };

    // Walks the recursion with the running value threaded by reference. Every
    // level is inflationary, so whatever x holds when we bail out is a lower
    // bound on the true result.
    class Evaluator
    {
    public:
        enum class State
        {
            running,
            saturated,
            budget,
            threshold
        };

        Evaluator(const HierarchySpec & spec, const EvalContext & ctx) :
            _spec(spec), _ctx(ctx)
        {
        }

        auto apply(unsigned level, BigNat & x) -> void
        {
            if (level == 1) {
                ++x;
                tick();
                check(x);
                return;
            }
            BigNat count = _spec.step(x);
            run(level - 1, count, x);
        }

        auto run(unsigned level, const BigNat & count, BigNat & x) -> void
        {
            if (count == 0)
                return;
            if (count > _ctx.cap) {
                _state = State::saturated;
                return;
            }
            if (level == 1) {
                x += count;
                tick();
                check(x);
                return;
            }
            for (BigNat j = 0; j < count; ++j) {
                if (! tick())
                    return;
                BigNat before = x;
                apply(level, x);
                if (_state != State::running)
                    return;
                // step(x) == 0 makes every further application the identity
                if (x == before)
                    return;
            }
        }

        auto result(const BigNat & x) const -> Evaluation
        {
            switch (_state) {
                case State::running: return Evaluation{CappedNat{x, _ctx.cap}, true, _iterations};
                case State::saturated: return Evaluation{CappedNat::top(_ctx.cap), true, _iterations};
                case State::budget:
                case State::threshold: return Evaluation{CappedNat{x, _ctx.cap}, false, _iterations};
            }
            throw std::logic_error("unreachable evaluator state");
        }

    private:
        auto tick() -> bool
        {
            if (_state != State::running)
                return false;
            ++_iterations;
            if (_iterations > _ctx.max_iterations)
                _state = State::budget;
            else if ((_iterations & 0x3ff) == 0 && _ctx.stop.stop_requested())
                _state = State::budget;
            return _state == State::running;
        }

        auto check(const BigNat & x) -> void
        {
            if (x > _ctx.cap)
                _state = State::saturated;
            else if (_ctx.stop_above && x > *_ctx.stop_above && _state == State::running)
                _state = State::threshold;
        }

        const HierarchySpec & _spec;
        const EvalContext & _ctx;
        std::uint64_t _iterations = 0;
        State _state = State::running;
    };

    auto require_positive(unsigned value, const char * what) -> void
    {
        if (value == 0)
            throw std::invalid_argument(std::string(what) + " must be >= 1");
    }

    auto exact_or_throw(const Evaluation & e, const std::string & what) -> CappedNat
    {
        if (! e.complete)
            throw IncompleteEvaluation(what + " did not finish within the iteration budget", e.value.is_top() ? BigNat{0} : e.value.value());
        return e.value;
    }

    auto decide(const Evaluation & lhs, const Evaluation & rhs, bool strict) -> Verdict
    {
        if (! rhs.complete || rhs.value.is_top() || lhs.value.is_top())
            return Verdict::indeterminate;
        bool holds = strict ? lhs.value.value() > rhs.value.value() : lhs.value.value() >= rhs.value.value();
        if (lhs.complete)
            return holds ? Verdict::pass : Verdict::fail;
        return holds ? Verdict::pass : Verdict::indeterminate;
    }

    auto exact(const BigNat & v, const EvalContext & ctx) -> Evaluation
    {
        return Evaluation{CappedNat{v, ctx.cap}, true, 0};
    }

    auto with_threshold(const EvalContext & ctx, const Evaluation & rhs) -> EvalContext
    {
        EvalContext out = ctx;
        if (rhs.complete && ! rhs.value.is_top())
            out.stop_above = rhs.value.value();
        return out;
    }
}

auto HierarchySpec::root(unsigned t) -> HierarchySpec
{
    require_positive(t, "root step t");
    return HierarchySpec{RootStep{t}};
}

auto HierarchySpec::parse(std::string_view text) -> HierarchySpec
{
    if (text == "ack")
        return ackermann();
    if (text.starts_with("ft:t=")) {
        std::string digits{text.substr(5)};
        if (digits.empty() || digits.find_first_not_of("0123456789") != std::string::npos)
            throw std::invalid_argument("bad hierarchy '" + std::string(text) + "'");
        return root(static_cast<unsigned>(std::stoul(digits)));
    }
    if (text.starts_with("fg:g="))
        return g_step(BoundFn::parse(text.substr(5)));
    throw std::invalid_argument("unknown hierarchy '" + std::string(text) + "' (expected ack, ft:t=T or fg:g=BOUND)");
}

auto HierarchySpec::step(const BigNat & n) const -> BigNat
{
    return std::visit(overloaded{
                          [&](const AckermannStep &) { return n; },
                          [&](const RootStep & r) { return iroot(n, r.t); },
                          [&](const GStep & g) -> BigNat { return isqrt(g.g(n)) / 2; },
                      },
        _rule);
}

auto HierarchySpec::step(Nat n) const -> Nat
{
    return std::visit(overloaded{
                          [&](const AckermannStep &) { return n; },
                          [&](const RootStep & r) { return iroot(n, r.t); },
                          [&](const GStep & g) -> Nat { return isqrt(g.g(n)) / 2; },
                      },
        _rule);
}

auto HierarchySpec::describe() const -> std::string
{
    return std::visit(overloaded{
                          [](const AckermannStep &) { return std::string{"ack"}; },
                          [](const RootStep & r) { return "ft:t=" + std::to_string(r.t); },
                          [](const GStep & g) { return "fg:g=" + g.g.descriptor(); },
                      },
        _rule);
}

auto evaluate(const HierarchySpec & spec, unsigned level, const BigNat & n, const EvalContext & ctx) -> Evaluation
{
    require_positive(level, "hierarchy level");
    Evaluator ev{spec, ctx};
    BigNat x = n;
    if (x > ctx.cap)
        return Evaluation{CappedNat::top(ctx.cap), true, 0};
    ev.apply(level, x);
    return ev.result(x);
}

auto iterate(const HierarchySpec & spec, unsigned level, const BigNat & count, const BigNat & x0,
    const EvalContext & ctx) -> Evaluation
{
    require_positive(level, "hierarchy level");
    Evaluator ev{spec, ctx};
    BigNat x = x0;
    if (x > ctx.cap)
        return Evaluation{CappedNat::top(ctx.cap), true, 0};
    ev.run(level, count, x);
    return ev.result(x);
}

auto ack_approx(unsigned i, Nat n, const EvalContext & ctx) -> CappedNat
{
    require_positive(i, "Ackermann level");
    return exact_or_throw(evaluate(HierarchySpec::ackermann(), i, BigNat{n}, ctx),
        "A_" + std::to_string(i) + "(" + std::to_string(n) + ")");
}

auto ft_eval(unsigned t, unsigned i, Nat n, const EvalContext & ctx) -> CappedNat
{
    return exact_or_throw(evaluate(HierarchySpec::root(t), i, BigNat{n}, ctx),
        "(f_" + std::to_string(t) + ")_" + std::to_string(i) + "(" + std::to_string(n) + ")");
}

auto fg_eval(const BoundFn & g, unsigned i, Nat n, const EvalContext & ctx) -> CappedNat
{
    return exact_or_throw(evaluate(HierarchySpec::g_step(g), i, BigNat{n}, ctx),
        "(f_g)_" + std::to_string(i) + "(" + std::to_string(n) + ") for g=" + g.descriptor());
}

auto mu_g(const BoundFn & g, Nat k, Nat limit) -> std::optional<Nat>
{
    // g need not be monotone (schedule roots drop at interval boundaries), so scan
    for (Nat t = 0; t <= limit; ++t) {
        if (k <= isqrt(g(t)) / 2)
            return t;
        if (t == limit)
            break;
    }
    return std::nullopt;
}

auto to_string(Verdict v) -> std::string_view
{
    switch (v) {
        case Verdict::pass: return "PASS";
        case Verdict::fail: return "FAIL";
        case Verdict::indeterminate: return "INDETERMINATE";
    }
    return "?";
}

auto GrowthReport::any_fail() const -> bool
{
    for (auto & c : checks)
        if (c.verdict == Verdict::fail)
            return true;
    return false;
}

auto check_lower_level_growth(unsigned t, unsigned k, Nat n, const EvalContext & ctx) -> InequalityCheck
{
    require_positive(t, "t");
    require_positive(k, "k");
    BigNat rhs_value = BigNat{n} + boost::multiprecision::pow(BigNat{iroot(n, t)}, k - 1);
    auto rhs = exact(rhs_value, ctx);
    auto lhs = evaluate(HierarchySpec::root(t), k, BigNat{n}, with_threshold(ctx, rhs));

    std::ostringstream s;
    s << "(f_" << t << ")_" << k << "(" << n << ") >= " << n << " + iroot(" << n << "," << t << ")^" << (k - 1);
    return InequalityCheck{"obs-prei1", s.str(), lhs, rhs, false, decide(lhs, rhs, false)};
}

auto check_base_case(unsigned t, Nat n, const EvalContext & ctx) -> InequalityCheck
{
    require_positive(t, "t");
    BigNat n2 = BigNat{n} * n;
    auto rhs = exact(n2 + 2 * BigNat{n} + 1, ctx);
    auto lhs = evaluate(HierarchySpec::root(t + 1), 2 * t + 3, n2, with_threshold(ctx, rhs));

    std::ostringstream s;
    s << "(f_" << t + 1 << ")_" << 2 * t + 3 << "(" << n2 << ") > " << n2 << " + 2*" << n << " + 1";
    return InequalityCheck{"obs-i1", s.str(), lhs, rhs, true, decide(lhs, rhs, true)};
}

auto check_induction_step(unsigned t, unsigned i, Nat n, const EvalContext & ctx) -> InequalityCheck
{
    require_positive(t, "t");
    require_positive(i, "i");
    BigNat n2 = BigNat{n} * n;
    auto inner = evaluate(HierarchySpec::root(t), i, BigNat{n}, ctx);
    Evaluation rhs = inner;
    if (! inner.value.is_top())
        rhs.value = inner.value * inner.value;
    auto lhs = evaluate(HierarchySpec::root(t + 1), i + 2 * t + 2, n2, with_threshold(ctx, rhs));

    std::ostringstream s;
    s << "(f_" << t + 1 << ")_" << i + 2 * t + 2 << "(" << n2 << ") > ((f_" << t << ")_" << i << "(" << n << "))^2";
    return InequalityCheck{"induction-step", s.str(), lhs, rhs, true, decide(lhs, rhs, true)};
}

auto check_growth_inequalities(unsigned t, unsigned i, Nat n, const EvalContext & ctx) -> GrowthReport
{
    GrowthReport report{t, i, n, {}};
    report.checks.push_back(check_lower_level_growth(t, i, n, ctx));
    bool hypothesis = t < 64 && n > (Nat{1} << t);
    if (hypothesis) {
        report.checks.push_back(check_base_case(t, n, ctx));
        report.checks.push_back(check_induction_step(t, i, n, ctx));
    }
    return report;
}

} // namespace regramsey
