#pragma once

#include <regramsey/capped_nat.hpp>

#include <utility>

namespace regramsey {

/// Cantor-style pairing Pr(m, n) = C(m+n+1, 2) + n. Throws
/// std::overflow_error when the result does not fit in 64 bits.
auto pair_encode(Nat m, Nat n) -> Nat;

/// Pairing on capped values; saturates to TOP above the cap.
auto pair_encode(const CappedNat & m, const CappedNat & n) -> CappedNat;

/// Inverse of pair_encode.
auto pair_decode(Nat p) -> std::pair<Nat, Nat>;

/// Largest r with r^t <= n. t == 0 is a contract violation (std::invalid_argument).
auto iroot(Nat n, unsigned t) -> Nat;
auto iroot(const BigNat & n, unsigned t) -> BigNat;

auto isqrt(Nat n) -> Nat;
auto isqrt(const BigNat & n) -> BigNat;

/// Largest e with base^e <= n. Requires n >= 1 and base >= 2.
auto ilog(Nat n, Nat base) -> unsigned;
auto ilog(const BigNat & n, Nat base) -> unsigned;

/// Exact binomial coefficient.
auto binomial(Nat n, Nat k) -> BigNat;

/// base^exponent if it fits in 64 bits, otherwise std::nullopt.
auto checked_pow(Nat base, unsigned exponent) -> std::optional<Nat>;

} // namespace regramsey
