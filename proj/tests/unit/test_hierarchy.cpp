#include <regramsey/arith.hpp>
#include <regramsey/hierarchy.hpp>
#include <regramsey/schedule.hpp>

#include <doctest.h>

#include <functional>

using namespace regramsey;

namespace {
    // Literal recursion on 64-bit values; returns nullopt past `limit`.
    auto naive_level(const std::function<Nat(Nat)> & step, unsigned i, Nat n, Nat limit) -> std::optional<Nat>
    {
        if (i == 1)
            return n + 1 <= limit ? std::optional{n + 1} : std::nullopt;
        Nat x = n;
        for (Nat j = 0, c = step(n); j < c; ++j) {
            auto next = naive_level(step, i - 1, x, limit);
            if (! next)
                return std::nullopt;
            x = *next;
        }
        return x;
    }

    auto naive_ack(unsigned i, Nat n) { return naive_level([](Nat x) { return x; }, i, n, 1'000'000); }

    auto naive_ft(unsigned t, unsigned i, Nat n, Nat limit = 10'000'000)
    {
        return naive_level([t](Nat x) {
            Nat r = 0;
            while (boost::multiprecision::pow(BigNat{r + 1}, t) <= x)
                ++r;
            return r;
        },
            i, n, limit);
    }
}

TEST_CASE("Ackermann approximations")
{
    CHECK(ack_approx(1, 5).value() == 6);
    CHECK(ack_approx(2, 3).value() == 6);
    CHECK(ack_approx(3, 2).value() == 8);
    CHECK(ack_approx(4, 2).value() == 2048);
    CHECK(ack_approx(4, 3).is_top());
    CHECK(ack_approx(5, 5).is_top());
    CHECK_THROWS_AS(ack_approx(0, 3), std::invalid_argument);

    for (unsigned i = 1; i <= 3; ++i)
        for (Nat n = 0; n <= 12; ++n) {
            auto oracle = naive_ack(i, n);
            if (oracle)
                REQUIRE(ack_approx(i, n).value() == *oracle);
        }
}

TEST_CASE("A_3 closed form")
{
    // A_2(n) = 2n and A_3(n) = n 2^n
    for (Nat n = 0; n <= 200; ++n)
        REQUIRE(ack_approx(3, n).value() == BigNat{n} << n);
}

TEST_CASE("ft hierarchy")
{
    CHECK(ft_eval(2, 1, 9).value() == 10);
    CHECK(ft_eval(2, 2, 9).value() == 12);
    CHECK(ft_eval(2, 3, 16).value() == 33);
    CHECK(ft_eval(2, 2, 9).value() == 12);
    CHECK(ft_eval(2, 3, 9).value() == 18);
    CHECK(ft_eval(2, 4, 9).value() == 76);
    CHECK_THROWS_AS(ft_eval(0, 2, 9), std::invalid_argument);

    for (unsigned t = 1; t <= 3; ++t)
        for (unsigned i = 1; i <= 4; ++i)
            for (Nat n = 0; n <= 60; ++n) {
                auto oracle = naive_ft(t, i, n);
                if (oracle)
                    REQUIRE(ft_eval(t, i, n).value() == *oracle);
            }
}

TEST_CASE("ft with t = 1 is the Ackermann hierarchy")
{
    for (unsigned i = 1; i <= 3; ++i)
        for (Nat n = 0; n <= 30; ++n)
            REQUIRE(compare(ft_eval(1, i, n), ack_approx(i, n)) == Comparison::equal);
}

TEST_CASE("fg hierarchy")
{
    auto id = BoundFn::identity();
    CHECK(fg_eval(id, 1, 16).value() == 17);
    CHECK(fg_eval(id, 2, 16).value() == 18);
    CHECK(fg_eval(id, 2, 3).value() == 3);
    CHECK(fg_eval(id, 3, 36).value() == 45);
    CHECK(fg_eval(id, 4, 64).value() == 140);
    // g = n^2 steps by floor(n/2)
    CHECK(fg_eval(BoundFn::power(2), 2, 10).value() == 15);
    // g = 0 never moves past level 1
    CHECK(fg_eval(BoundFn::constant(0), 5, 10).value() == 10);
}

TEST_CASE("level monotonicity and monotonicity in n")
{
    EvalContext ctx;
    ctx.max_iterations = 2'000'000;
    for (unsigned t = 1; t <= 3; ++t) {
        auto spec = HierarchySpec::root(t);
        for (unsigned i = 1; i <= 4; ++i) {
            std::optional<BigNat> previous_n;
            for (Nat n = 1; n <= 200; ++n) {
                auto here = evaluate(spec, i, BigNat{n}, ctx);
                auto above = evaluate(spec, i + 1, BigNat{n}, ctx);
                if (! here.complete || here.value.is_top()) {
                    previous_n.reset();
                    continue;
                }
                if (above.complete && ! above.value.is_top())
                    REQUIRE(above.value.value() >= here.value.value());
                if (previous_n)
                    REQUIRE(here.value.value() >= *previous_n);
                previous_n = here.value.value();
            }
        }
    }
}

TEST_CASE("zero iterations are the identity")
{
    for (auto spec : {HierarchySpec::ackermann(), HierarchySpec::root(2), HierarchySpec::g_step(BoundFn::identity())})
        for (unsigned level = 1; level <= 4; ++level)
            for (Nat n : {0, 1, 7, 1000}) {
                auto e = iterate(spec, level, 0, BigNat{n}, {});
                REQUIRE(e.complete);
                REQUIRE(e.value.value() == n);
            }
}

TEST_CASE("iterate agrees with repeated evaluation")
{
    auto spec = HierarchySpec::root(2);
    BigNat x = 20;
    for (int j = 0; j < 5; ++j)
        x = evaluate(spec, 3, x, {}).value.value();
    CHECK(iterate(spec, 3, 5, 20, {}).value.value() == x);
}

TEST_CASE("saturation and budget")
{
    EvalContext small;
    small.cap = 1000;
    auto e = evaluate(HierarchySpec::ackermann(), 3, 10, small);
    CHECK(e.complete);
    CHECK(e.value.is_top());

    EvalContext tight;
    tight.max_iterations = 50;
    auto partial = evaluate(HierarchySpec::root(2), 5, 9, tight);
    CHECK_FALSE(partial.complete);
    CHECK(partial.value.value() >= 9);
    CHECK_THROWS_AS(ft_eval(2, 5, 9, tight), IncompleteEvaluation);

    std::stop_source source;
    source.request_stop();
    EvalContext cancelled;
    cancelled.stop = source.get_token();
    auto stopped = evaluate(HierarchySpec::root(2), 6, 9, cancelled);
    CHECK_FALSE(stopped.complete);
}

TEST_CASE("lower bounds from interrupted evaluations are sound")
{
    for (std::uint64_t budget : {1, 5, 20, 100, 500}) {
        EvalContext ctx;
        ctx.max_iterations = budget;
        auto partial = evaluate(HierarchySpec::root(2), 4, 9, ctx);
        REQUIRE(partial.value.value() <= 76);
    }
}

TEST_CASE("mu_g")
{
    CHECK(mu_g(BoundFn::identity(), 3, 1000) == 36);
    CHECK(mu_g(BoundFn::identity(), 4, 1000) == 64);
    CHECK(mu_g(BoundFn::identity(), 0, 1000) == 0);
    CHECK(mu_g(BoundFn::power(2), 3, 1000) == 6);
    CHECK(mu_g(BoundFn::constant(3), 2, 1000) == std::nullopt);
    CHECK(mu_g(BoundFn::identity(), 3, 35) == std::nullopt);
}

TEST_CASE("hierarchy spec parsing")
{
    CHECK(HierarchySpec::parse("ack").describe() == "ack");
    CHECK(HierarchySpec::parse("ft:t=2").describe() == "ft:t=2");
    CHECK(HierarchySpec::parse("fg:g=id").describe() == "fg:g=id");
    CHECK(HierarchySpec::parse("fg:g=const:1").describe() == "fg:g=const:1");
    CHECK_THROWS(HierarchySpec::parse("ft:t="));
    CHECK_THROWS(HierarchySpec::parse("ft:t=0"));
    CHECK_THROWS(HierarchySpec::parse("bogus"));
}

TEST_CASE("growth inequality examples")
{
    auto prei1 = check_lower_level_growth(2, 3, 16);
    CHECK(prei1.verdict == Verdict::pass);
    CHECK(prei1.lhs.value.value() == 33);
    CHECK(prei1.rhs.value.value() == 32);

    auto equality = check_lower_level_growth(1, 1, 7);
    CHECK(equality.verdict == Verdict::pass);
    CHECK(equality.lhs.value.value() == 8);

    auto step = check_induction_step(1, 1, 3);
    CHECK(step.verdict == Verdict::pass);
    CHECK(step.rhs.value.value() == 16);
    CHECK(step.lhs.value.value() > 16);

    // the base case needs n > 2^t; at n = 1 the inequality is false
    auto outside = check_base_case(1, 1);
    CHECK(outside.verdict == Verdict::fail);
    CHECK(check_growth_inequalities(1, 1, 1).checks.size() == 1);
    CHECK(check_growth_inequalities(1, 1, 3).checks.size() == 3);
}

TEST_CASE("growth inequalities with a tiny cap are indeterminate, not failures")
{
    EvalContext ctx;
    ctx.cap = 20;
    auto report = check_growth_inequalities(1, 2, 5, ctx);
    for (auto & c : report.checks)
        CHECK(c.verdict != Verdict::fail);
    CHECK(check_induction_step(1, 2, 5, ctx).verdict == Verdict::indeterminate);
}

TEST_CASE("schedules")
{
    Schedule s{{0, 10, 100}, {0, 0}};
    CHECK(beta_of(s, 0) == 1);
    CHECK(beta_of(s, 10) == 2);
    CHECK(beta_of(s, 99) == 2);
    CHECK_THROWS_AS(beta_of(s, 100), std::out_of_range);

    MonotoneFn beta = [&](Nat n) { return n < 100 ? beta_of(s, n) : Nat{3}; };
    CHECK(beta_inverse(beta, 1, 1000) == 0);
    CHECK(beta_inverse(beta, 2, 1000) == 10);
    CHECK(beta_inverse([](Nat) { return Nat{0}; }, 1, 50) == std::nullopt);

    for (Nat t = 0; t <= 3; ++t)
        if (auto n = beta_inverse(beta, t, 1000); n && *n < 100)
            REQUIRE(beta_of(s, *n) >= t);

    CHECK_THROWS(Schedule({1, 10}, {0}).validate());
    CHECK_THROWS(Schedule({0, 10, 10}, {0, 0}).validate());
    CHECK_THROWS(Schedule({0, 10}, {0, 0}).validate());

    auto round = Schedule::from_json_text(s.to_json_text());
    CHECK(round.mu == s.mu);
    CHECK(round.k == s.k);
    CHECK(Schedule::from_json_text(R"({"mu":[0,43,10000]})").k == std::vector<Nat>{0, 0});
}

TEST_CASE("Ackermannian schedule generator fails fast")
{
    auto g = ackermann_schedule(3);
    CHECK(g.schedule.mu == std::vector<Nat>{0, 10'000});
    CHECK(g.schedule.k == std::vector<Nat>{18});
    REQUIRE(g.saturated_at);
    CHECK(*g.saturated_at == 2);
    // k_2 = floor(iroot(10^4, 2) / 2)
    CHECK(g.pending_k == std::vector<Nat>{50});
}
