#pragma once

#include <cmath>

namespace ibx::detail {

// Unevaluated double-double sum hi + lo, |lo| <= 0.5 ulp(hi).  The ascending
// Bessel/Struve series suffer cancellation: at x ~ 40 the largest term is
// ~1e16 times the result, which wipes out plain double accumulation.  Keeping
// both the terms and the running sum in double-double leaves ~1e-15 absolute
// error at the switch point to the asymptotic branch.
struct dd {
    double hi = 0.0;
    double lo = 0.0;
};

inline dd two_sum(double a, double b) {
    double s = a + b;
    double bb = s - a;
    return {s, (a - (s - bb)) + (b - bb)};
}

// Requires |a| >= |b| or a == 0.
inline dd quick_two_sum(double a, double b) {
    double s = a + b;
    return {s, b - (s - a)};
}

inline dd two_prod(double a, double b) {
    double p = a * b;
    return {p, std::fma(a, b, -p)};
}

inline dd dd_from(double x) { return {x, 0.0}; }

inline dd dd_add(dd a, dd b) {
    dd s = two_sum(a.hi, b.hi);
    return quick_two_sum(s.hi, s.lo + a.lo + b.lo);
}

inline dd dd_add(dd a, double b) {
    dd s = two_sum(a.hi, b);
    return quick_two_sum(s.hi, s.lo + a.lo);
}

inline dd dd_mul(dd a, dd b) {
    dd p = two_prod(a.hi, b.hi);
    return quick_two_sum(p.hi, p.lo + a.hi * b.lo + a.lo * b.hi);
}

inline dd dd_mul(dd a, double b) {
    dd p = two_prod(a.hi, b);
    return quick_two_sum(p.hi, p.lo + a.lo * b);
}

inline dd dd_div(dd a, double b) {
    double q1 = a.hi / b;
    dd p = two_prod(q1, b);
    double q2 = (((a.hi - p.hi) - p.lo) + a.lo) / b;
    return quick_two_sum(q1, q2);
}

inline dd dd_div(dd a, dd b) {
    double q1 = a.hi / b.hi;
    dd r = dd_add(a, dd_mul(b, -q1));
    double q2 = r.hi / b.hi;
    r = dd_add(r, dd_mul(b, -q2));
    double q3 = r.hi / b.hi;
    dd q = quick_two_sum(q1, q2);
    return dd_add(q, q3);
}

inline dd dd_neg(dd a) { return {-a.hi, -a.lo}; }

inline double dd_value(dd a) { return a.hi + a.lo; }

// Splits a long double constant into a double-double pair.
inline dd dd_split(long double x) {
    double hi = static_cast<double>(x);
    return {hi, static_cast<double>(x - static_cast<long double>(hi))};
}

}  // namespace ibx::detail
