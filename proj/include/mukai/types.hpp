// SPDX-License-Identifier: Apache-2.0
//
// Core value types shared by every module: exact integers and rationals,
// the surface context and the Mukai vector triple.

#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <compare>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace mukai {

using Int = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

// Raised when an input lies outside the domain of an operation.
class DomainError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Raised when two independent derivations of the same quantity disagree or
// an internal invariant is violated.  Never expected in a correct build.
class InternalError : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

// A K3 surface with Picard group generated by H, H^2 = 2n.
class K3Context {
public:
    explicit K3Context(Int n);
    explicit K3Context(std::int64_t n) : K3Context(Int(n)) {}

    const Int& n() const noexcept { return n_; }

private:
    Int n_;
};

// The Mukai vector (r, dH, a); d is the coefficient of H.
struct MukaiVector {
    Int r;
    Int d;
    Int a;

    MukaiVector() = default;
    MukaiVector(Int r_, Int d_, Int a_) : r(std::move(r_)), d(std::move(d_)), a(std::move(a_)) {}
    MukaiVector(std::int64_t r_, std::int64_t d_, std::int64_t a_) : r(r_), d(d_), a(a_) {}

    friend bool operator==(const MukaiVector&, const MukaiVector&) = default;
    friend std::strong_ordering operator<=>(const MukaiVector& x, const MukaiVector& y);

    MukaiVector operator+(const MukaiVector& o) const { return {r + o.r, d + o.d, a + o.a}; }
    MukaiVector operator-(const MukaiVector& o) const { return {r - o.r, d - o.d, a - o.a}; }
    MukaiVector operator-() const { return {-r, -d, -a}; }
    friend MukaiVector operator*(const Int& c, const MukaiVector& v) { return {c * v.r, c * v.d, c * v.a}; }

    std::string str() const;
};

// Three-way comparison of exact integers as a standard ordering.
std::strong_ordering compare(const Int& x, const Int& y);
std::strong_ordering compare(const Rational& x, const Rational& y);

// Floor division rounding towards negative infinity.
Int floor_div(const Int& num, const Int& den);
// Ceiling division rounding towards positive infinity.
Int ceil_div(const Int& num, const Int& den);

// The reduced fraction num/den; throws DomainError when den == 0.  The
// denominator is made positive first: the two-argument constructor of
// cpp_rational rejects negative denominators on some Boost releases.
Rational ratio(const Int& num, const Int& den);

// Narrowing conversion that refuses to lose information.
std::int64_t to_i64(const Int& x);

}  // namespace mukai
