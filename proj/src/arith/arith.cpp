#include <regramsey/arith.hpp>

#include <bit>
#include <limits>
#include <stdexcept>

namespace regramsey {

namespace {
    using u128 = unsigned __int128;

    constexpr auto u64_max = std::numeric_limits<Nat>::max();

    // r^t <= n, evaluated without overflow
    auto pow_at_most(Nat r, unsigned t, Nat n) -> bool
    {
        u128 acc = 1;
        for (unsigned i = 0; i < t; ++i) {
            acc *= r;
            if (acc > n)
                return false;
        }
        return true;
    }

    auto pow_at_most(const BigNat & r, unsigned t, const BigNat & n) -> bool
    {
        BigNat acc{1};
        for (unsigned i = 0; i < t; ++i) {
            acc *= r;
            if (acc > n)
                return false;
        }
        return true;
    }

    auto require_root_index(unsigned t) -> void
    {
        if (t == 0)
            throw std::invalid_argument("iroot: index t must be positive");
    }
}

auto pair_encode(Nat m, Nat n) -> Nat
{
    // C(s+1, 2) = s (s+1) / 2 with s = m + n
    u128 s = u128{m} + n;
    u128 p = s * (s + 1) / 2 + n;
    if (p > u64_max)
        throw std::overflow_error("pair_encode: result exceeds 64 bits");
    return static_cast<Nat>(p);
}

auto pair_encode(const CappedNat & m, const CappedNat & n) -> CappedNat
{
    const auto & cap = std::min(m.cap(), n.cap());
    if (m.is_top() || n.is_top())
        return CappedNat::top(cap);
    BigNat s = m.value() + n.value();
    return CappedNat{s * (s + 1) / 2 + n.value(), cap};
}

auto pair_decode(Nat p) -> std::pair<Nat, Nat>
{
    // the diagonal index s is the largest s with s (s+1) / 2 <= p
    BigNat disc = BigNat{p} * 8 + 1;
    Nat s = ((isqrt(disc) - 1) / 2).convert_to<Nat>();
    Nat n = static_cast<Nat>(u128{p} - u128{s} * (s + 1) / 2);
    return {s - n, n};
}

auto iroot(Nat n, unsigned t) -> Nat
{
    require_root_index(t);
    if (t == 1 || n < 2)
        return n;
    if (t >= 64)
        return 1;

    // r < 2^(ceil(bits/t)), binary search on that range
    unsigned bits = std::bit_width(n);
    Nat lo = 1, hi = Nat{1} << ((bits + t - 1) / t);
    while (hi - lo > 1) {
        Nat mid = lo + (hi - lo) / 2;
        if (pow_at_most(mid, t, n))
            lo = mid;
        else
            hi = mid;
    }
    return lo;
}

auto iroot(const BigNat & n, unsigned t) -> BigNat
{
    require_root_index(t);
    if (n < 0)
        throw std::invalid_argument("iroot: negative argument");
    if (t == 1 || n < 2)
        return n;
    if (n <= u64_max)
        return BigNat{iroot(n.convert_to<Nat>(), t)};

    auto bits = static_cast<unsigned>(boost::multiprecision::msb(n)) + 1;
    if (t >= bits)
        return BigNat{1};

    BigNat lo{1};
    BigNat hi = BigNat{1} << ((bits + t - 1) / t);
    while (hi - lo > 1) {
        BigNat mid = (lo + hi) >> 1;
        if (pow_at_most(mid, t, n))
            lo = mid;
        else
            hi = mid;
    }
    return lo;
}

auto isqrt(Nat n) -> Nat
{
    return iroot(n, 2);
}

auto isqrt(const BigNat & n) -> BigNat
{
    if (n < 0)
        throw std::invalid_argument("isqrt: negative argument");
    return boost::multiprecision::sqrt(n);
}

auto ilog(Nat n, Nat base) -> unsigned
{
    if (n == 0)
        throw std::invalid_argument("ilog: argument must be positive");
    if (base < 2)
        throw std::invalid_argument("ilog: base must be at least 2");
    unsigned e = 0;
    while (n >= base) {
        n /= base;
        ++e;
    }
    return e;
}

auto ilog(const BigNat & n, Nat base) -> unsigned
{
    if (n <= 0)
        throw std::invalid_argument("ilog: argument must be positive");
    if (base < 2)
        throw std::invalid_argument("ilog: base must be at least 2");
    if (n <= u64_max)
        return ilog(n.convert_to<Nat>(), base);
    if (base == 2)
        return static_cast<unsigned>(boost::multiprecision::msb(n));
    unsigned e = 0;
    BigNat x = n;
    while (x >= base) {
        x /= base;
        ++e;
    }
    return e;
}

auto binomial(Nat n, Nat k) -> BigNat
{
    if (k > n)
        return 0;
    k = std::min(k, n - k);
    BigNat acc{1};
    for (Nat i = 1; i <= k; ++i) {
        acc *= n - k + i;
        acc /= i;
    }
    return acc;
}

auto checked_pow(Nat base, unsigned exponent) -> std::optional<Nat>
{
    u128 acc = 1;
    for (unsigned i = 0; i < exponent; ++i) {
        acc *= base;
        if (acc > u64_max)
            return std::nullopt;
        if (acc == 0)
            return Nat{0};
    }
    return static_cast<Nat>(acc);
}

} // namespace regramsey
