// SPDX-License-Identifier: Apache-2.0

#include "mukai/types.hpp"

#include <limits>

namespace mukai {

K3Context::K3Context(Int n) : n_(std::move(n)) {
    if (n_ < 1) {
        throw DomainError("surface parameter n must be >= 1, got " + n_.str());
    }
}

std::strong_ordering compare(const Int& x, const Int& y) {
    const int c = x.compare(y);
    if (c < 0) return std::strong_ordering::less;
    if (c > 0) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
}

std::strong_ordering compare(const Rational& x, const Rational& y) {
    if (x < y) return std::strong_ordering::less;
    if (x > y) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
}

std::strong_ordering operator<=>(const MukaiVector& x, const MukaiVector& y) {
    if (auto c = compare(x.r, y.r); c != 0) return c;
    if (auto c = compare(x.d, y.d); c != 0) return c;
    return compare(x.a, y.a);
}

std::string MukaiVector::str() const {
    return "(" + r.str() + "," + d.str() + "," + a.str() + ")";
}

Int floor_div(const Int& num, const Int& den) {
    if (den == 0) throw DomainError("division by zero");
    Int q = num / den;  // truncates towards zero
    if ((num % den != 0) && ((num < 0) != (den < 0))) --q;
    return q;
}

Int ceil_div(const Int& num, const Int& den) {
    return -floor_div(-num, den);
}

Rational ratio(const Int& num, const Int& den) {
    if (den == 0) throw DomainError("zero denominator in " + num.str() + "/0");
    return den > 0 ? Rational(num, den) : Rational(Int(-num), Int(-den));
}

std::int64_t to_i64(const Int& x) {
    if (x > std::numeric_limits<std::int64_t>::max() || x < std::numeric_limits<std::int64_t>::min()) {
        throw DomainError("integer " + x.str() + " does not fit in 64 bits");
    }
    return x.convert_to<std::int64_t>();
}

}  // namespace mukai
