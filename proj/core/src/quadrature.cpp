#include "ibx/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>
#include <mutex>
#include <sstream>

#include "ibx/potentials.hpp"

namespace ibx {

namespace {

constexpr double kPi = 3.14159265358979323846;
// |t| beyond which the tanh-sinh weight underflows for double precision.
constexpr double kTsCutoff = 6.56;

struct TsNode {
    double u;       // distance from the nearer endpoint, in units of (b-a)
    double weight;  // dx/dt in units of (b-a)
    bool left;      // true if nearer to a
};

// Node of the transformation x = (a+b)/2 + (b-a)/2 tanh((pi/2) sinh t).
TsNode ts_node(double t) {
    double s = 0.5 * kPi * std::sinh(t);
    double es = std::exp(-2.0 * std::fabs(s));
    double u = es / (1.0 + es);                       // min(x-a, b-x)/(b-a) = 1/(1+e^{2|s|})
    double sech2 = 4.0 * es / ((1.0 + es) * (1.0 + es));
    double w = 0.25 * kPi * std::cosh(t) * sech2;
    return {u, w, t < 0.0};
}

[[noreturn]] void fail_convergence(const char* what, double prev, double last) {
    std::ostringstream os;
    os << what << ": did not converge; last two estimates " << prev << " and " << last;
    throw NumericalError(os.str());
}

}  // namespace

QuadResult tanh_sinh(const std::function<double(double, double)>& f, double a, double b,
                     const QuadratureConfig& cfg) {
    if (!(b > a)) throw DomainError("tanh_sinh: requires b > a");
    if (cfg.max_levels < 2) throw ConfigError("tanh_sinh: max_levels must be >= 2");
    const double len = b - a;

    auto eval_at = [&](double t) -> double {
        TsNode n = ts_node(t);
        if (n.weight == 0.0 || n.u == 0.0) return 0.0;
        double u = n.u * len;
        double x = n.left ? a + u : b - u;
        return n.weight * f(x, u);
    };

    QuadResult res;
    double h = 1.0;
    // Level 0: h = 1 over the full window.
    double sum = eval_at(0.0);
    int jmax = static_cast<int>(kTsCutoff / h);
    for (int j = 1; j <= jmax; ++j) sum += eval_at(j * h) + eval_at(-j * h);
    double estimate = sum * h * len;
    res.level_estimates.push_back(estimate);

    double prev = estimate;
    for (int level = 1; level <= cfg.max_levels; ++level) {
        h *= 0.5;
        jmax = static_cast<int>(kTsCutoff / h);
        double add = 0.0;
        for (int j = 1; j <= jmax; j += 2) add += eval_at(j * h) + eval_at(-j * h);
        sum += add;
        estimate = sum * h * len;
        res.level_estimates.push_back(estimate);
        res.levels = level;
        double diff = std::fabs(estimate - prev);
        res.est_error = diff;
        double scale = std::max(std::fabs(estimate), std::fabs(prev));
        if (level >= 2 && diff <= cfg.rel_tol * scale) {
            res.value = estimate;
            return res;
        }
        if (level >= 2 && scale == 0.0) {  // identically zero integrand
            res.value = 0.0;
            return res;
        }
        prev = estimate;
    }
    fail_convergence("tanh_sinh", res.level_estimates[res.level_estimates.size() - 2], estimate);
}

QuadResult exp_tail(const std::function<double(double)>& g, double split,
                    const QuadratureConfig& cfg) {
    if (!(split > 0.0)) throw DomainError("exp_tail: requires split > 0");
    // F(t) = g(split e^t) split e^t, integrated over t in [0, inf) by
    // trapezoid sums; the Gaussian factor in g makes F superexponentially
    // small, so extending until F is negligible and halving h converges fast.
    auto F = [&](double t) -> double {
        double r = split * std::exp(t);
        return g(r) * r;
    };

    QuadResult res;
    double h = 0.5;
    const double t_hard_cap = 40.0;

    auto level_sum = [&](double step) -> double {
        double sum = 0.5 * F(0.0);
        int quiet = 0;
        for (int j = 1; j * step <= t_hard_cap; ++j) {
            double v = F(j * step);
            sum += v;
            if (std::fabs(v) <= 1e-4 * cfg.rel_tol * (std::fabs(sum) + 1e-300)) {
                if (++quiet >= 3) break;
            } else {
                quiet = 0;
            }
        }
        return sum * step;
    };

    double prev = level_sum(h);
    res.level_estimates.push_back(prev);
    for (int level = 1; level <= cfg.max_levels; ++level) {
        h *= 0.5;
        double estimate = level_sum(h);
        res.level_estimates.push_back(estimate);
        res.levels = level;
        double diff = std::fabs(estimate - prev);
        res.est_error = diff;
        double scale = std::max(std::fabs(estimate), std::fabs(prev));
        if (diff <= cfg.rel_tol * scale || scale == 0.0) {
            res.value = estimate;
            return res;
        }
        prev = estimate;
    }
    fail_convergence("exp_tail", res.level_estimates[res.level_estimates.size() - 2],
                     res.level_estimates.back());
}

double radial_integral_raw(const RadialPotential& W, double c, int p,
                           const QuadratureConfig& cfg) {
    if (!(c > 0.0)) throw DomainError("radial_integral_raw: requires c > 0");
    if (p < 0 || p > 2) throw DomainError("radial_integral_raw: p must be 0, 1 or 2");

    // For the [0, split] piece the node radius is produced as 0 + u with u the
    // stable endpoint distance, so log-divergent profiles see the true tiny r.
    auto g = [&](double r, double) -> double {
        double pw = p == 0 ? 1.0 : (p == 1 ? r : r * r);
        return W.evaluate(r) * std::exp(-c * r * r) * pw;
    };
    auto g_tail = [&](double r) -> double { return g(r, r); };

    double upper = std::numeric_limits<double>::infinity();
    if (W.decay_kind().tag == DecayTag::compact_support) upper = W.decay_kind().param;

    double split = std::min(W.scale(), 1.0 / std::sqrt(c));
    split = std::min(split, upper);

    double total = tanh_sinh(g, 0.0, split, cfg).value;
    if (std::isfinite(upper)) {
        if (upper > split * (1.0 + 1e-14)) total += tanh_sinh(g, split, upper, cfg).value;
    } else {
        total += exp_tail(g_tail, split, cfg).value;
    }
    return total;
}

double radial_moment(const RadialPotential& W, double c, int d, const QuadratureConfig& cfg) {
    if (d != 1 && d != 2) throw DomainError("radial_moment: d must be 1 or 2");
    if (d == 1) return 2.0 * std::sqrt(c / kPi) * radial_integral_raw(W, c, 0, cfg);
    return 2.0 * c * radial_integral_raw(W, c, 1, cfg);
}

const std::pair<std::vector<double>, std::vector<double>>& gauss_legendre(int n) {
    if (n < 1) throw DomainError("gauss_legendre: n >= 1");
    static std::mutex mu;
    static std::map<int, std::pair<std::vector<double>, std::vector<double>>> cache;
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(n);
    if (it != cache.end()) return it->second;

    std::vector<double> x(n), w(n);
    int m = (n + 1) / 2;
    for (int i = 0; i < m; ++i) {
        // Chebyshev-based initial guess, then Newton on P_n.
        double z = std::cos(kPi * (i + 0.75) / (n + 0.5));
        double pp = 0.0;
        for (int it2 = 0; it2 < 100; ++it2) {
            double p0 = 1.0, p1 = 0.0;
            for (int j = 0; j < n; ++j) {
                double p2 = p1;
                p1 = p0;
                p0 = ((2.0 * j + 1.0) * z * p1 - j * p2) / (j + 1.0);
            }
            pp = n * (z * p0 - p1) / (z * z - 1.0);
            double dz = p0 / pp;
            z -= dz;
            if (std::fabs(dz) < 1e-15) break;
        }
        x[i] = -z;
        x[n - 1 - i] = z;
        w[i] = 2.0 / ((1.0 - z * z) * pp * pp);
        w[n - 1 - i] = w[i];
    }
    auto [ins, ok] = cache.emplace(n, std::make_pair(std::move(x), std::move(w)));
    (void)ok;
    return ins->second;
}

}  // namespace ibx
