#pragma once

#include <cmath>

namespace betaturan::detail {

// Double-double arithmetic (Dekker/Knuth two-double representation, products
// via fma).  Roughly 32 significant digits; used where convolution
// cancellation exceeds what double can certify.  Requires the default
// rounding mode and no fast-math reassociation.
struct dd {
    double hi = 0.0;
    double lo = 0.0;

    dd() = default;
    constexpr dd(double h, double l) : hi(h), lo(l) {}
    constexpr dd(double v) : hi(v), lo(0.0) {}  // NOLINT(google-explicit-constructor)

    explicit dd(long double v)
        : hi(static_cast<double>(v)),
          lo(static_cast<double>(v - static_cast<long double>(static_cast<double>(v)))) {}

    double to_double() const { return hi + lo; }
};

inline dd two_sum(double a, double b) {
    double s = a + b;
    double bb = s - a;
    double err = (a - (s - bb)) + (b - bb);
    return {s, err};
}

inline dd quick_two_sum(double a, double b) {
    double s = a + b;
    return {s, b - (s - a)};
}

inline dd two_prod(double a, double b) {
    double p = a * b;
    return {p, std::fma(a, b, -p)};
}

inline dd operator+(const dd& x, const dd& y) {
    dd s = two_sum(x.hi, y.hi);
    return quick_two_sum(s.hi, s.lo + x.lo + y.lo);
}

inline dd operator-(const dd& x) { return {-x.hi, -x.lo}; }

inline dd operator-(const dd& x, const dd& y) { return x + (-y); }

inline dd operator*(const dd& x, const dd& y) {
    dd p = two_prod(x.hi, y.hi);
    return quick_two_sum(p.hi, p.lo + x.hi * y.lo + x.lo * y.hi);
}

inline dd operator/(const dd& x, const dd& y) {
    double q1 = x.hi / y.hi;
    dd r = x - y * dd(q1);
    double q2 = (r.hi + r.lo) / y.hi;
    return quick_two_sum(q1, q2);
}

inline dd& operator+=(dd& x, const dd& y) { return x = x + y; }
inline dd& operator-=(dd& x, const dd& y) { return x = x - y; }

inline dd abs(const dd& x) { return x.hi < 0.0 ? -x : x; }

inline bool operator<(const dd& x, const dd& y) {
    return x.hi < y.hi || (x.hi == y.hi && x.lo < y.lo);
}

}  // namespace betaturan::detail
