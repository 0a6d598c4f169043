// SPDX-License-Identifier: Apache-2.0
//
// Exact arithmetic on the algebraic Mukai lattice of a Picard-rank-one K3
// surface.  All operations are pure and allocation-light.

#pragma once

#include "mukai/types.hpp"

namespace mukai {

// <(r,d,a),(r',d',a')> = 2n d d' - r a' - r' a.
Int pairing(const K3Context& ctx, const MukaiVector& u, const MukaiVector& v);

// v^2 = 2n d^2 - 2 r a.
Int square(const K3Context& ctx, const MukaiVector& v);

// rho_u(v) = v + <v,u> u.  Throws DomainError unless u^2 = -2.
MukaiVector reflect(const K3Context& ctx, const MukaiVector& v, const MukaiVector& u);

// Multiplication by the Chern character of O(pH):
// (r, d + r p, a + 2 n d p + r n p^2).
MukaiVector twist(const K3Context& ctx, const MukaiVector& v, const Int& p);

// (r, d, a) -> (r, -d, a).
MukaiVector dual(const MukaiVector& v);

bool is_spherical(const K3Context& ctx, const MukaiVector& v);
bool is_isotropic(const K3Context& ctx, const MukaiVector& v);

// gcd(r, d, a) == 1.
bool is_primitive(const MukaiVector& v);

// gcd(|r|, |d|, |a|); zero only for the zero vector.
Int content(const MukaiVector& v);

// Primitive with v^2 >= -2 and one of: r > 0; r = 0, d > 0, a != 0;
// r = d = 0, a > 0.
bool is_positive(const K3Context& ctx, const MukaiVector& v);

// chi = r + a.
Int euler_char(const MukaiVector& v);

// Mukai vector of the line bundle O(pH): (1, p, n p^2 + 1).
MukaiVector line_bundle(const K3Context& ctx, const Int& p);

}  // namespace mukai
