#pragma once

#include "rtkit/distance.hpp"

namespace rtkit {

// Edge-removal rule shared by the spanner and emulator sparsification scans:
// the sampled out-neighbor s of x eliminates the edge (x, y) when
//     2 d(x,s) + d(s,y) <= 2 wt(x,y) + d(y,s).
// The left side must be finite: a witness cycle through s has to exist before
// (x, y) may go. An unreachable d(y,s) only weakens the right side.
inline bool edge_eliminated(Dist d_xs, Dist d_sy, Weight w_xy, Dist d_ys) {
    if (is_inf(d_xs) || is_inf(d_sy)) return false;
    if (is_inf(d_ys)) return true;
    using detail::u128;
    return 2 * static_cast<u128>(d_xs) + d_sy <= 2 * static_cast<u128>(w_xy) + d_ys;
}

} // namespace rtkit
