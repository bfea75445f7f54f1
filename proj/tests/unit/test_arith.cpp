#include <regramsey/arith.hpp>
#include <regramsey/capped_nat.hpp>

#include <doctest.h>

#include <map>
#include <random>

using namespace regramsey;

namespace {
    // enumerate pairs diagonal by diagonal (m+n = s, n ascending), which is the
    // ordering the pairing is supposed to number consecutively
    auto diagonal_table(Nat count) -> std::vector<std::pair<Nat, Nat>>
    {
        std::vector<std::pair<Nat, Nat>> out;
        for (Nat s = 0; out.size() < count; ++s)
            for (Nat n = 0; n <= s && out.size() < count; ++n)
                out.emplace_back(s - n, n);
        return out;
    }

    auto slow_root(Nat n, unsigned t) -> Nat
    {
        Nat r = 0;
        auto fits = [&](Nat c) {
            BigNat p = 1;
            for (unsigned i = 0; i < t; ++i)
                p *= c;
            return p <= n;
        };
        while (fits(r + 1))
            ++r;
        return r;
    }
}

TEST_CASE("pair_encode small values")
{
    CHECK(pair_encode(0, 0) == 0);
    CHECK(pair_encode(1, 0) == 1);
    CHECK(pair_encode(0, 1) == 2);
    // C(7,2) + 3 = 21 + 3
    CHECK(pair_encode(3, 3) == 24);
    CHECK(pair_encode(1, 1) == 4);
    CHECK(pair_encode(0, 2) == 5);
    CHECK(pair_encode(2, 1) == 7);
    CHECK(pair_encode(1, 2) == 8);
    CHECK(pair_encode(1, 6) == 34);
    CHECK(pair_encode(3, 10) == 101);
}

TEST_CASE("pair_encode agrees with diagonal enumeration")
{
    auto table = diagonal_table(20'000);
    for (Nat p = 0; p < table.size(); ++p) {
        auto [m, n] = table[p];
        REQUIRE(pair_encode(m, n) == p);
        REQUIRE(pair_decode(p) == table[p]);
    }
}

TEST_CASE("pair_decode examples")
{
    CHECK(pair_decode(0) == std::pair<Nat, Nat>{0, 0});
    CHECK(pair_decode(2) == std::pair<Nat, Nat>{0, 1});
    CHECK(pair_decode(1) == std::pair<Nat, Nat>{1, 0});
}

TEST_CASE("pairing is a bijection on the tested ranges")
{
    for (Nat p = 0; p < 1'000'000; ++p) {
        auto [m, n] = pair_decode(p);
        REQUIRE(pair_encode(m, n) == p);
    }
    for (Nat m = 0; m < 1000; ++m)
        for (Nat n = 0; n < 1000; ++n)
            REQUIRE(pair_decode(pair_encode(m, n)) == std::pair{m, n});
}

TEST_CASE("pairing is strictly monotone in each argument")
{
    for (Nat m = 0; m < 200; ++m)
        for (Nat n = 0; n < 200; ++n) {
            REQUIRE(pair_encode(m + 1, n) > pair_encode(m, n));
            REQUIRE(pair_encode(m, n + 1) > pair_encode(m, n));
        }
}

TEST_CASE("pairing overflow and saturation")
{
    Nat big = Nat{1} << 40;
    CHECK_THROWS_AS(pair_encode(big, big), std::overflow_error);
    auto top = pair_encode(CappedNat{BigNat{100}, 1000}, CappedNat{BigNat{100}, 1000});
    CHECK(top.is_top());
    auto fine = pair_encode(CappedNat{BigNat{3}, 1000}, CappedNat{BigNat{3}, 1000});
    CHECK(fine.value() == 24);
    // decode near the top of the 64-bit range stays exact
    Nat p = std::numeric_limits<Nat>::max() - 5;
    auto [m, n] = pair_decode(p);
    CHECK(pair_encode(m, n) == p);
}

TEST_CASE("iroot examples and exactness")
{
    CHECK(iroot(16, 2) == 4);
    CHECK(iroot(15, 2) == 3);
    CHECK(iroot(10'000, 8) == 3);
    CHECK(iroot(0, 5) == 0);
    CHECK(iroot(1, 64) == 1);
    CHECK_THROWS_AS(iroot(5, 0), std::invalid_argument);

    for (Nat n = 0; n < 100'000; ++n)
        for (unsigned t = 1; t <= 10; ++t) {
            Nat r = iroot(n, t);
            REQUIRE(boost::multiprecision::pow(BigNat{r}, t) <= n);
            REQUIRE(boost::multiprecision::pow(BigNat{r + 1}, t) > n);
        }
    for (Nat n : {Nat{0}, Nat{7}, Nat{4096}, Nat{99'999}})
        for (unsigned t = 1; t <= 6; ++t)
            CHECK(iroot(n, t) == slow_root(n, t));
}

TEST_CASE("iroot on 64-bit extremes and big naturals")
{
    Nat max = std::numeric_limits<Nat>::max();
    CHECK(iroot(max, 2) == 4'294'967'295ull);
    CHECK(iroot(max, 64) == 1);
    CHECK(iroot(max, 63) == 2);

    BigNat huge = boost::multiprecision::pow(BigNat{12345}, 20);
    CHECK(iroot(huge, 20) == 12345);
    CHECK(iroot(huge - 1, 20) == 12344);
    CHECK(isqrt(huge) == boost::multiprecision::pow(BigNat{12345}, 10));
}

TEST_CASE("halved-root identity used by the g-step hierarchy")
{
    // floor(sqrt(x)/2) == floor(isqrt(x)/2): compare against r with 4r^2 <= x < 4(r+1)^2
    for (Nat x = 0; x < 100'000; ++x) {
        Nat r = 0;
        while (4 * (r + 1) * (r + 1) <= x)
            ++r;
        REQUIRE(isqrt(x) / 2 == r);
    }
}

TEST_CASE("ilog")
{
    CHECK(ilog(Nat{1}, 2) == 0);
    CHECK(ilog(Nat{5}, 2) == 2);
    CHECK(ilog(Nat{9}, 3) == 2);
    CHECK(ilog(Nat{9999}, 10) == 3);
    CHECK(ilog(Nat{10'000}, 10) == 4);
    CHECK(ilog(std::numeric_limits<Nat>::max(), 2) == 63);
    CHECK(ilog(BigNat{1} << 300, 2) == 300);
    CHECK_THROWS_AS(ilog(Nat{0}, 2), std::invalid_argument);
    CHECK_THROWS_AS(ilog(Nat{5}, 1), std::invalid_argument);
}

TEST_CASE("binomial and checked_pow")
{
    CHECK(binomial(7, 2) == 21);
    CHECK(binomial(5, 7) == 0);
    CHECK(binomial(60, 30) == BigNat{"118264581564861424"});
    CHECK(checked_pow(2, 63) == (Nat{1} << 63));
    CHECK(! checked_pow(2, 64));
    CHECK(checked_pow(0, 0) == 1);
}

TEST_CASE("pairing bound on squares")
{
    for (Nat l = 3; l <= 200; ++l)
        for (Nat m = 0; m <= l; ++m)
            for (Nat n = 0; n <= l; ++n)
                REQUIRE(pair_encode(m, n) < 4 * l * l);
}

TEST_CASE("CappedNat saturation and comparison")
{
    CappedNat a{BigNat{10}, 100};
    CappedNat b{BigNat{20}, 100};
    CHECK((a + b).value() == 30);
    CHECK((a * b).is_top());
    CHECK(pow(a, 2).value() == 100);
    CHECK(pow(a, 3).is_top());
    CHECK(CappedNat{BigNat{101}, 100}.is_top());

    auto top = CappedNat::top(100);
    CHECK((top + a).is_top());
    CHECK((top * CappedNat{BigNat{0}, 100}).is_top());
    CHECK(compare(top, a) == Comparison::greater);
    CHECK(compare(a, top) == Comparison::less);
    CHECK(compare(top, top) == Comparison::indeterminate);
    CHECK(compare(a, CappedNat{BigNat{10}, 100}) == Comparison::equal);
    CHECK(top.to_string() == "TOP");
    CHECK_THROWS_AS((void)top.value(), std::logic_error);

    // mixed caps take the smaller one
    CappedNat wide{BigNat{60}, 1000};
    CHECK((wide + b).is_top() == false);
    CHECK((wide + CappedNat{BigNat{50}, 100}).is_top());
}

TEST_CASE("CappedNat finite results match unbounded arithmetic")
{
    std::mt19937_64 rng{12345};
    BigNat cap = BigNat{1} << 64;
    for (int trial = 0; trial < 5000; ++trial) {
        Nat x = rng() % 1'000'000, y = rng() % 1'000'000, z = rng() % 50;
        unsigned e = static_cast<unsigned>(rng() % 5);
        CappedNat cx{BigNat{x}, cap}, cy{BigNat{y}, cap}, cz{BigNat{z}, cap};
        auto capped = pow(cx * cy + cz, e);
        BigNat exact = boost::multiprecision::pow(BigNat{x} * y + z, e);
        if (capped.is_top())
            REQUIRE(exact > cap);
        else
            REQUIRE(capped.value() == exact);
    }
}

TEST_CASE("parse_natural")
{
    CHECK(parse_natural("2^256") == default_cap());
    CHECK(parse_natural("10^4") == 10'000);
    CHECK(parse_natural("42") == 42);
    CHECK_THROWS(parse_natural("4x"));
    CHECK_THROWS(parse_natural(""));
}
