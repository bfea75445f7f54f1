#include <regramsey/capped_nat.hpp>

#include <algorithm>
#include <cctype>
#include <stdexcept>

namespace regramsey {

auto default_cap() -> const BigNat &
{
    static const BigNat cap = BigNat{1} << 256;
    return cap;
}

namespace {
    auto parse_digits(std::string_view text) -> BigNat
    {
        if (text.empty() || ! std::all_of(text.begin(), text.end(), [](unsigned char c) { return std::isdigit(c); }))
            throw std::invalid_argument("not a natural number: '" + std::string(text) + "'");
        return BigNat{std::string(text)};
    }

    auto saturate(BigNat v, const BigNat & cap) -> CappedNat
    {
        if (v > cap)
            return CappedNat::top(cap);
        return CappedNat{std::move(v), cap};
    }
}

auto parse_natural(std::string_view text) -> BigNat
{
    auto caret = text.find('^');
    if (caret == std::string_view::npos)
        return parse_digits(text);

    auto base = parse_digits(text.substr(0, caret));
    auto exponent = parse_digits(text.substr(caret + 1));
    if (exponent > 1'000'000)
        throw std::invalid_argument("exponent too large in '" + std::string(text) + "'");
    return boost::multiprecision::pow(base, exponent.convert_to<unsigned>());
}

auto to_string(Comparison c) -> std::string_view
{
    switch (c) {
    case Comparison::less: return "less";
    case Comparison::equal: return "equal";
    case Comparison::greater: return "greater";
    case Comparison::indeterminate: return "indeterminate";
    }
    return "?";
}

CappedNat::CappedNat(BigNat value, BigNat cap) :
    _cap(std::move(cap))
{
    if (value < 0 || _cap < 0)
        throw std::invalid_argument("CappedNat holds naturals only");
    if (value <= _cap)
        _value = std::move(value);
}

auto CappedNat::top(BigNat cap) -> CappedNat
{
    CappedNat result{BigNat{0}, std::move(cap)};
    result._value.reset();
    return result;
}

auto CappedNat::value() const -> const BigNat &
{
    if (! _value)
        throw std::logic_error("value() on a saturated CappedNat");
    return *_value;
}

auto CappedNat::as_u64() const -> std::optional<Nat>
{
    if (! _value || *_value > std::numeric_limits<Nat>::max())
        return std::nullopt;
    return _value->convert_to<Nat>();
}

auto CappedNat::to_string() const -> std::string
{
    return _value ? _value->str() : std::string{"TOP"};
}

auto operator+(const CappedNat & a, const CappedNat & b) -> CappedNat
{
    const auto & cap = std::min(a._cap, b._cap);
    if (a.is_top() || b.is_top())
        return CappedNat::top(cap);
    return saturate(*a._value + *b._value, cap);
}

auto operator*(const CappedNat & a, const CappedNat & b) -> CappedNat
{
    const auto & cap = std::min(a._cap, b._cap);
    // 0 * TOP is left as TOP: TOP is absorbing for every monotone operation.
    if (a.is_top() || b.is_top())
        return CappedNat::top(cap);
    return saturate(*a._value * *b._value, cap);
}

auto pow(const CappedNat & base, Nat exponent) -> CappedNat
{
    if (base.is_top())
        return CappedNat::top(base._cap);
    if (exponent == 0)
        return CappedNat{BigNat{1}, base._cap};

    const auto & b = *base._value;
    if (b <= 1)
        return CappedNat{b, base._cap};

    BigNat acc{1};
    for (Nat i = 0; i < exponent; ++i) {
        acc *= b;
        if (acc > base._cap)
            return CappedNat::top(base._cap);
    }
    return CappedNat{std::move(acc), base._cap};
}

auto compare(const CappedNat & a, const CappedNat & b) -> Comparison
{
    if (a.is_top() && b.is_top())
        return Comparison::indeterminate;
    if (a.is_top())
        return Comparison::greater;
    if (b.is_top())
        return Comparison::less;
    if (*a._value < *b._value)
        return Comparison::less;
    if (*a._value > *b._value)
        return Comparison::greater;
    return Comparison::equal;
}

} // namespace regramsey
