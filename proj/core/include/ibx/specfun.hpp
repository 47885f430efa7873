#pragma once

namespace ibx::specfun {

enum class Branch { ascending_series, asymptotic_expansion };

struct EvalDiagnostics {
    Branch branch_used = Branch::ascending_series;
    int terms_used = 1;
    double estimated_abs_error = 0.0;
};

// Euler-Mascheroni constant, 20 digits.
inline constexpr double kEulerGamma = 0.57721566490153286061;

// Switch from the ascending series to the Hankel expansion for J0/Y0.  At
// x = 17 both branches are below ~2e-14 absolute.
inline constexpr double kBesselAsymptoticSwitch = 17.0;

// H0(x) - Y0(x) ~ 2/(pi x) while the individual functions are ~sqrt(2/(pi x)),
// so the terms exceed the difference by sqrt(pi x / 2).  Once that ratio
// exceeds kCancellationFactor the difference is evaluated by its own
// asymptotic series instead of subtracting the two branches.
inline constexpr double kCancellationFactor = 8.0;
// = 2 * kCancellationFactor^2 / pi
inline constexpr double kDifferenceAsymptoticSwitch = 40.743665431525205;

// Bessel functions of the first and second kind, order zero.
// bessel_y0 requires x > 0 and holds an absolute error <= 1e-12 on
// [1e-8, 1e4]; callers handle r = 0 separately.
double bessel_j0(double x);
double bessel_y0(double x);
double bessel_y0(double x, EvalDiagnostics& diag);

// Struve function H0, x >= 0, absolute error <= 1e-12 on [0, 1e4].
double struve_h0(double x);
double struve_h0(double x, EvalDiagnostics& diag);

// H0(x) - Y0(x) for x > 0, evaluated without catastrophic cancellation at
// large x.  Strictly positive and strictly decreasing.
double struve_minus_y0(double x);
double struve_minus_y0(double x, EvalDiagnostics& diag);

// Individual branches, exposed so tests can check agreement across the
// switch points.  Arguments are not range-checked beyond positivity.
namespace internal {
double j0_ascending(double x, EvalDiagnostics* diag = nullptr);
double j0_asymptotic(double x, EvalDiagnostics* diag = nullptr);
double y0_ascending(double x, EvalDiagnostics* diag = nullptr);
double y0_asymptotic(double x, EvalDiagnostics* diag = nullptr);
double h0_ascending(double x, EvalDiagnostics* diag = nullptr);
// Asymptotic series of the difference H0 - Y0 directly.
double h0_minus_y0_asymptotic(double x, EvalDiagnostics* diag = nullptr);
}  // namespace internal

}  // namespace ibx::specfun
