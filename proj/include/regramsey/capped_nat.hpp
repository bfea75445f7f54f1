#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

namespace regramsey {

using BigNat = boost::multiprecision::cpp_int;
using Nat = std::uint64_t;

/// 2^256, the ceiling used when a caller does not supply one.
auto default_cap() -> const BigNat &;

/// Parses "123", "2^256" or "10^4" into a natural number.
auto parse_natural(std::string_view text) -> BigNat;

/// Result of comparing two capped values. Two saturated values carry no
/// ordering information, so that case is reported separately.
enum class Comparison
{
    less,
    equal,
    greater,
    indeterminate
};

auto to_string(Comparison c) -> std::string_view;

/// A natural number that saturates to an absorbing TOP once it would exceed
/// its cap. Arithmetic between two capped values uses the smaller cap.
class CappedNat
{
public:
    explicit CappedNat(BigNat value, BigNat cap = default_cap());
    CappedNat(Nat value) : CappedNat(BigNat{value}) {}

    static auto top(BigNat cap = default_cap()) -> CappedNat;

    [[nodiscard]] auto is_top() const -> bool { return ! _value.has_value(); }
    [[nodiscard]] auto cap() const -> const BigNat & { return _cap; }

    /// Finite value; throws std::logic_error on TOP.
    [[nodiscard]] auto value() const -> const BigNat &;
    [[nodiscard]] auto as_u64() const -> std::optional<Nat>;

    [[nodiscard]] auto to_string() const -> std::string;

    friend auto operator+(const CappedNat & a, const CappedNat & b) -> CappedNat;
    friend auto operator*(const CappedNat & a, const CappedNat & b) -> CappedNat;
    friend auto pow(const CappedNat & base, Nat exponent) -> CappedNat;
    friend auto compare(const CappedNat & a, const CappedNat & b) -> Comparison;

private:
    std::optional<BigNat> _value;
    BigNat _cap;
};

auto pow(const CappedNat & base, Nat exponent) -> CappedNat;
auto compare(const CappedNat & a, const CappedNat & b) -> Comparison;

} // namespace regramsey
