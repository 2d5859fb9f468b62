#pragma once

#include <cstdint>
#include <limits>

namespace rtkit {

// Distances and edge weights are non-negative 64-bit integers. kInf is the
// unreachable sentinel; additions saturate at kInf and comparisons treat it
// as the maximum value, so min-updates against unreachable entries just work.
using Weight = std::uint64_t;
using Dist = std::uint64_t;

inline constexpr Dist kInf = std::numeric_limits<std::uint64_t>::max();

inline constexpr bool is_inf(Dist d) { return d == kInf; }

inline constexpr Dist sat_add(Dist a, Dist b) {
    if (a == kInf || b == kInf) return kInf;
    Dist s = a + b;
    return s < a ? kInf : s;
}

inline constexpr Dist sat_add(Dist a, Dist b, Dist c) { return sat_add(sat_add(a, b), c); }

// Roundtrip distance d(u <=> v) = d(u,v) + d(v,u).
inline constexpr Dist roundtrip(Dist uv, Dist vu) { return sat_add(uv, vu); }

namespace detail {

using u128 = unsigned __int128;
using i128 = __int128;

// Lift a distance into 128-bit space where kInf maps to a value that
// dominates any finite combination with coefficients up to 4 and up to
// 8 terms (4 * 2^64 * 8 < 2^70 << 2^96). Monotone, so strict/non-strict
// comparisons of linear forms keep their meaning in the presence of
// unreachable vertices.
inline constexpr u128 lift(Dist d) {
    if (d == kInf) return static_cast<u128>(1) << 96;
    return static_cast<u128>(d);
}

inline constexpr i128 lift_signed(Dist d) {
    if (d == kInf) return static_cast<i128>(1) << 96;
    return static_cast<i128>(d);
}

} // namespace detail

} // namespace rtkit
