// SPDX-License-Identifier: Apache-2.0
//
// Exact-rational geometry of the numerical walls for a fixed Mukai vector in
// the (s, t) upper half-plane of stability parameters.

#pragma once

#include "mukai/types.hpp"

namespace mukai {

// Raised when two vectors do not define a wall (they are proportional).
class DegenerateWallError : public DomainError {
public:
    using DomainError::DomainError;
};

struct Wall {
    enum class Kind { semicircle, vertical };

    Kind kind = Kind::semicircle;
    Rational center;     // semicircle only
    Rational radius_sq;  // semicircle only
    Rational s0;         // vertical only

    friend bool operator==(const Wall&, const Wall&) = default;
};

// The numerical wall of v defined by v1.  A vertical line when r1 d = r d1,
// otherwise a semicircle centred on the s-axis.
Wall wall_between(const K3Context& ctx, const MukaiVector& v, const MukaiVector& v1);

// t^2 where the wall meets s = 0:  (a1 d - a d1) / (n (r1 d - r d1)).
// Throws DomainError for vertical walls.
Rational height_at_s_zero_sq(const K3Context& ctx, const MukaiVector& v, const MukaiVector& v1);

// Height squared at s = 0 of the wall induced by O_X[1], namely 1/n.
Rational ox1_wall_height_sq(const K3Context& ctx);

enum class WallPosition { below, equal, above };

// Position of the wall of v1 relative to the O_X[1] wall, decided by
// comparing k = a1 d - a d1 with m = r1 d - r d1.
// Requires the wall to cross s = 0 (k / m > 0).
WallPosition is_at_or_above_ox1(const K3Context& ctx, const MukaiVector& v, const MukaiVector& v1);

// Orders the walls of v1 and v2 (for the same v).  Walls crossing s = 0 are
// ordered by height there; equal means the identical circle.  When both
// walls are vertical they are ordered by their s-coordinate.  A mixed
// vertical/semicircle comparison is not meaningful and throws DomainError.
std::strong_ordering compare_walls(const K3Context& ctx, const MukaiVector& v, const MukaiVector& v1,
                                   const MukaiVector& v2);

const char* to_string(WallPosition p);

}  // namespace mukai
