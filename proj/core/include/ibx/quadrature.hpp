#pragma once

#include <cstddef>
#include <functional>
#include <utility>
#include <vector>

#include "ibx/errors.hpp"

namespace ibx {

class RadialPotential;

struct QuadratureConfig {
    double rel_tol = 1e-10;
    int max_levels = 12;
    // Split point of the radial integral between the double-exponential head
    // (which absorbs the origin singularity) and the transformed tail.
    static constexpr const char* split_scale_rule = "split = min(scale, 1/sqrt(c))";
};

struct QuadResult {
    double value = 0.0;
    double est_error = 0.0;
    int levels = 0;
    // Estimate after each doubling; used to monitor refinement behaviour.
    std::vector<double> level_estimates;
};

// Tanh-sinh rule on [a, b].  The integrand is called as f(x, u) where u is
// the distance from x to the nearer endpoint, computed without cancellation;
// integrands with endpoint singularities (log at r = 0) should use u.
QuadResult tanh_sinh(const std::function<double(double, double)>& f, double a, double b,
                     const QuadratureConfig& cfg = {});

// Semi-infinite tail of a radial integrand: int_split^inf g(r) dr via the
// substitution r = split * e^t.  g must decay fast enough for the trapezoid
// sums in t to converge (a Gaussian factor suffices).
QuadResult exp_tail(const std::function<double(double)>& g, double split,
                    const QuadratureConfig& cfg = {});

// Raw weighted moment int_0^inf W(r) e^{-c r^2} r^p dr for p in {0, 1, 2}.
double radial_integral_raw(const RadialPotential& W, double c, int p,
                           const QuadratureConfig& cfg = {});

// Normalized Gaussian expectation of a radial profile,
//   rho_d(c, W) = (c/pi)^{d/2} int_{R^d} W(|u|) e^{-c|u|^2} du
//              = 2 sqrt(c/pi) int_0^inf W e^{-c r^2} dr          (d = 1)
//              = 2 c          int_0^inf W e^{-c r^2} r dr        (d = 2).
double radial_moment(const RadialPotential& W, double c, int d,
                     const QuadratureConfig& cfg = {});

// Gauss-Legendre nodes and weights on [-1, 1]; results are cached per n.
const std::pair<std::vector<double>, std::vector<double>>& gauss_legendre(int n);

// Brute-force tensor-product Gauss-Legendre cubature over a box; accuracy is
// reported by the caller's own convergence study, not guaranteed here.  Test
// oracle; degrades near interior singularities.
template <class F>
double tensor_oracle(F&& f, const std::vector<std::pair<double, double>>& box,
                     int points_per_axis) {
    const auto& [xs, ws] = gauss_legendre(points_per_axis);
    const std::size_t dim = box.size();
    std::vector<std::size_t> idx(dim, 0);
    std::vector<double> coord(dim);
    double total = 0.0;
    for (;;) {
        double w = 1.0;
        for (std::size_t k = 0; k < dim; ++k) {
            double half = 0.5 * (box[k].second - box[k].first);
            double mid = 0.5 * (box[k].second + box[k].first);
            coord[k] = mid + half * xs[idx[k]];
            w *= half * ws[idx[k]];
        }
        total += w * f(coord);
        std::size_t k = 0;
        while (k < dim && ++idx[k] == static_cast<std::size_t>(points_per_axis)) {
            idx[k] = 0;
            ++k;
        }
        if (k == dim) break;
    }
    return total;
}

}  // namespace ibx
