#include "ibx/specfun.hpp"

#include <cmath>
#include <limits>

#include "ibx/errors.hpp"
#include "dd.hpp"

namespace ibx::specfun {

using detail::dd;
using detail::dd_add;
using detail::dd_div;
using detail::dd_from;
using detail::dd_mul;
using detail::dd_split;
using detail::dd_value;
using detail::two_prod;

namespace {

constexpr double kPi = 3.14159265358979323846;
const dd kTwoOverPi = dd_div(dd_from(2.0), dd_add(two_prod(kPi, 1.0), 1.2246467991473531772e-16));
constexpr long double kPiL = 3.14159265358979323846264338327950288L;
constexpr long double kGammaL = 0.577215664901532860606512090082L;

constexpr int kMaxSeriesTerms = 400;

void set_diag(EvalDiagnostics* diag, Branch b, int terms, double err) {
    if (diag) {
        diag->branch_used = b;
        diag->terms_used = terms < 1 ? 1 : terms;
        diag->estimated_abs_error = err;
    }
}

// Hankel amplitude/phase pieces for J0 and Y0:
//   J0 ~ sqrt(2/(pi x)) (P cos chi - Q sin chi),  chi = x - pi/4,
//   Y0 ~ sqrt(2/(pi x)) (P sin chi + Q cos chi),
// with P = 1 - 9/(128 x^2) + ...,  Q = -1/(8x) + 75/(1024 x^3) - ...
// The series is summed to its smallest term.
struct HankelPQ {
    double p, q;
    int terms;
    double est_error;
};

HankelPQ hankel_pq(double x) {
    double h = 1.0;  // h_k, k = 0
    double p = 1.0;
    double q = 0.0;
    double last = 1.0;
    int k = 0;
    int sign_p = -1, sign_q = -1;
    while (k < 60) {
        double next = h * (2.0 * k + 1.0) * (2.0 * k + 1.0) / (8.0 * (k + 1.0) * x);
        if (next >= last) break;  // past the smallest term
        h = next;
        last = next;
        ++k;
        if (k % 2 == 1) {
            q += sign_q * h;
            sign_q = -sign_q;
        } else {
            p += sign_p * h;
            sign_p = -sign_p;
        }
    }
    return {p, q, k + 1, h};
}

struct AscendingSums {
    dd j0;      // sum (-1)^k u_k
    dd ysum;    // sum_{k>=1} (-1)^{k+1} h_k u_k
    dd habs;    // sum |u_k| (for error bookkeeping)
    int terms;
};

// u_k = (x^2/4)^k / (k!)^2, summed in double-double.
AscendingSums bessel_ascending_sums(double x) {
    dd q = dd_div(two_prod(x, x), 4.0);
    dd u = dd_from(1.0);
    dd j0 = dd_from(1.0);
    dd ysum = dd_from(0.0);
    dd harmonic = dd_from(0.0);
    dd habs = dd_from(1.0);
    int sign = -1;
    int k = 1;
    for (; k < kMaxSeriesTerms; ++k) {
        u = dd_div(dd_mul(u, q), static_cast<double>(k) * static_cast<double>(k));
        harmonic = dd_add(harmonic, dd_div(dd_from(1.0), static_cast<double>(k)));
        j0 = dd_add(j0, sign > 0 ? u : detail::dd_neg(u));
        dd hu = dd_mul(u, harmonic);
        ysum = dd_add(ysum, sign > 0 ? detail::dd_neg(hu) : hu);
        habs = dd_add(habs, dd_mul(u, harmonic.hi + 1.0));
        if (u.hi < 1e-20 * (std::fabs(j0.hi) + 1e-300) && u.hi < 1e-17) break;
        sign = -sign;
    }
    return {j0, ysum, habs, k};
}

dd log_half_x_plus_gamma(double x) {
    long double v = std::log(static_cast<long double>(x) / 2.0L) + kGammaL;
    return dd_split(v);
}

// Struve H0 ascending series in double-double:
//   H0(x) = (2/pi) sum_{k>=0} (-1)^k x^{2k+1} / ((2k+1)!!)^2.
struct StruveSum {
    dd s;
    dd sabs;
    int terms;
};

StruveSum struve_ascending_sum(double x) {
    dd x2 = two_prod(x, x);
    dd t = dd_from(x);
    dd s = t;
    dd sabs = t;
    int sign = -1;
    int k = 1;
    for (; k < kMaxSeriesTerms; ++k) {
        double odd = 2.0 * k + 1.0;
        t = dd_div(dd_mul(t, x2), odd * odd);
        s = dd_add(s, sign > 0 ? t : detail::dd_neg(t));
        sabs = dd_add(sabs, t);
        if (t.hi < 1e-20 * (std::fabs(s.hi) + 1e-300) && t.hi < 1e-17) break;
        sign = -sign;
    }
    return {s, sabs, k};
}

double hankel_amplitude(double x) { return std::sqrt(2.0 / (kPi * x)); }

void sincos_chi(double x, double& s, double& c) {
    long double chi = static_cast<long double>(x) - kPiL / 4.0L;
    s = static_cast<double>(sinl(chi));
    c = static_cast<double>(cosl(chi));
}

}  // namespace

namespace internal {

double j0_ascending(double x, EvalDiagnostics* diag) {
    AscendingSums sums = bessel_ascending_sums(x);
    // double-double roundoff is ~2^-104 per operation times the term magnitude
    double err = 2e-30 * dd_value(sums.habs) + 1e-18;
    set_diag(diag, Branch::ascending_series, sums.terms, err);
    return dd_value(sums.j0);
}

double j0_asymptotic(double x, EvalDiagnostics* diag) {
    HankelPQ pq = hankel_pq(x);
    double a = hankel_amplitude(x);
    double s, c;
    sincos_chi(x, s, c);
    set_diag(diag, Branch::asymptotic_expansion, pq.terms, a * pq.est_error);
    return a * (pq.p * c - pq.q * s);
}

double y0_ascending(double x, EvalDiagnostics* diag) {
    AscendingSums sums = bessel_ascending_sums(x);
    dd lg = log_half_x_plus_gamma(x);
    dd y = dd_mul(kTwoOverPi, dd_add(dd_mul(lg, sums.j0), sums.ysum));
    double err = 2e-30 * (std::fabs(lg.hi) + 2.0) * dd_value(sums.habs) + 1e-18;
    set_diag(diag, Branch::ascending_series, sums.terms, err);
    return dd_value(y);
}

double y0_asymptotic(double x, EvalDiagnostics* diag) {
    HankelPQ pq = hankel_pq(x);
    double a = hankel_amplitude(x);
    double s, c;
    sincos_chi(x, s, c);
    set_diag(diag, Branch::asymptotic_expansion, pq.terms, a * pq.est_error);
    return a * (pq.p * s + pq.q * c);
}

double h0_ascending(double x, EvalDiagnostics* diag) {
    StruveSum st = struve_ascending_sum(x);
    dd h = dd_mul(kTwoOverPi, st.s);
    double err = 2e-30 * dd_value(st.sabs) + 1e-18;
    set_diag(diag, Branch::ascending_series, st.terms, err);
    return dd_value(h);
}

double h0_minus_y0_asymptotic(double x, EvalDiagnostics* diag) {
    // H0(x) - Y0(x) ~ (2/(pi x)) sum_k (-1)^k ((2k-1)!!)^2 / x^{2k},
    // summed to the smallest term.
    double inv_x2 = 1.0 / (x * x);
    double t = 1.0;
    double s = 1.0;
    double last = 1.0;
    int k = 0;
    int sign = -1;
    while (k < 80) {
        double next = t * (2.0 * k + 1.0) * (2.0 * k + 1.0) * inv_x2;
        if (next >= last) break;
        t = next;
        last = next;
        ++k;
        s += sign * t;
        sign = -sign;
    }
    double lead = 2.0 / (kPi * x);
    set_diag(diag, Branch::asymptotic_expansion, k + 1, lead * t);
    return lead * s;
}

}  // namespace internal

double bessel_j0(double x) {
    if (x < 0.0) throw DomainError("bessel_j0: requires x >= 0");
    if (x <= kBesselAsymptoticSwitch) return internal::j0_ascending(x);
    return internal::j0_asymptotic(x);
}

double bessel_y0(double x, EvalDiagnostics& diag) {
    if (!(x > 0.0)) throw DomainError("bessel_y0: requires x > 0");
    if (x <= kBesselAsymptoticSwitch) return internal::y0_ascending(x, &diag);
    return internal::y0_asymptotic(x, &diag);
}

double bessel_y0(double x) {
    EvalDiagnostics diag;
    return bessel_y0(x, diag);
}

double struve_h0(double x, EvalDiagnostics& diag) {
    if (x < 0.0) throw DomainError("struve_h0: requires x >= 0");
    if (x <= kDifferenceAsymptoticSwitch) return internal::h0_ascending(x, &diag);
    // Beyond the cancellation switch the ascending sum is no longer accurate
    // enough; recover H0 = Y0 + (H0 - Y0) from the two asymptotic branches.
    EvalDiagnostics d2;
    double y = internal::y0_asymptotic(x, &d2);
    double k0 = internal::h0_minus_y0_asymptotic(x, &diag);
    diag.estimated_abs_error += d2.estimated_abs_error;
    return y + k0;
}

double struve_h0(double x) {
    EvalDiagnostics diag;
    return struve_h0(x, diag);
}

double struve_minus_y0(double x, EvalDiagnostics& diag) {
    if (!(x > 0.0)) throw DomainError("struve_minus_y0: requires x > 0");
    if (x > kDifferenceAsymptoticSwitch) return internal::h0_minus_y0_asymptotic(x, &diag);
    EvalDiagnostics dh, dy;
    double h0 = internal::h0_ascending(x, &dh);
    double y0 = x <= kBesselAsymptoticSwitch ? internal::y0_ascending(x, &dy)
                                             : internal::y0_asymptotic(x, &dy);
    diag.branch_used = Branch::ascending_series;
    diag.terms_used = dh.terms_used + dy.terms_used;
    diag.estimated_abs_error = dh.estimated_abs_error + dy.estimated_abs_error;
    return h0 - y0;
}

double struve_minus_y0(double x) {
    EvalDiagnostics diag;
    return struve_minus_y0(x, diag);
}

}  // namespace ibx::specfun
