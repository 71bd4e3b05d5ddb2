#pragma once

#include <cmath>
#include <functional>
#include <optional>
#include <stdexcept>
#include <vector>

namespace graphpoly {

/// Gauss-Legendre nodes/weights on [-1,1] by Newton iteration on P_n.
struct GaussLegendre {
    std::vector<double> nodes, weights;
};

inline GaussLegendre gauss_legendre(int n) {
    GaussLegendre out;
    out.nodes.resize(static_cast<size_t>(n));
    out.weights.resize(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i) {
        // Chebyshev-based initial guess, then Newton on the recurrence.
        double x = std::cos(M_PI * (i + 0.75) / (n + 0.5));
        double dp = 0.0;
        for (int it = 0; it < 100; ++it) {
            double p0 = 1.0, p1 = x;
            for (int k = 2; k <= n; ++k) {
                double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
                p0 = p1;
                p1 = p2;
            }
            dp = n * (x * p1 - p0) / (x * x - 1.0);
            double step = p1 / dp;
            x -= step;
            if (std::abs(step) < 1e-15) break;
        }
        out.nodes[static_cast<size_t>(i)] = x;
        out.weights[static_cast<size_t>(i)] = 2.0 / ((1.0 - x * x) * dp * dp);
    }
    return out;
}

/// Kesten-McKay density d sqrt(4(d-1)-t^2) / (2 pi (d^2-t^2)) on (-omega, omega),
/// omega = 2 sqrt(d-1); zero outside the support.
inline double km_density(int d, double t) {
    if (d < 2) throw std::invalid_argument("km_density: need d >= 2");
    double om2 = 4.0 * (d - 1.0);
    if (t * t >= om2) return 0.0;
    return d * std::sqrt(om2 - t * t) / (2.0 * M_PI * (static_cast<double>(d) * d - t * t));
}

/// Quadrature for integrals against the Kesten-McKay measure. The
/// substitution t = omega sin(theta) removes the square-root endpoint
/// singularity; the transformed integrand is smooth in theta.
struct KMQuadrature {
    int d = 0;
    std::vector<double> nodes, weights;

    static KMQuadrature make(int d, int order) {
        if (d < 2) throw std::invalid_argument("KMQuadrature: need d >= 2");
        KMQuadrature q;
        q.d = d;
        double omega = 2.0 * std::sqrt(d - 1.0);
        GaussLegendre gl = gauss_legendre(order);
        q.nodes.resize(gl.nodes.size());
        q.weights.resize(gl.nodes.size());
        for (size_t i = 0; i < gl.nodes.size(); ++i) {
            double theta = 0.5 * M_PI * gl.nodes[i];
            double c = std::cos(theta);
            double t = omega * std::sin(theta);
            q.nodes[i] = t;
            q.weights[i] = gl.weights[i] * d * omega * omega * c * c /
                           (4.0 * (static_cast<double>(d) * d - t * t));
        }
        return q;
    }

    double weight_sum() const {
        double s = 0.0;
        for (double w : weights) s += w;
        return s;
    }

    template <class F>
    double integrate(F f) const {
        double s = 0.0;
        for (size_t i = 0; i < nodes.size(); ++i) s += weights[i] * f(nodes[i]);
        return s;
    }
};

/// Adaptive node doubling until two consecutive orders agree to `tol`.
template <class F>
double km_integrate(int d, F f, double tol = 1e-10) {
    double prev = KMQuadrature::make(d, 32).integrate(f);
    for (int order = 64; order <= 16384; order *= 2) {
        double cur = KMQuadrature::make(d, order).integrate(f);
        if (std::abs(cur - prev) <= tol * std::max(1.0, std::abs(cur))) return cur;
        prev = cur;
    }
    return prev;
}

/// k-th moment of the Kesten-McKay measure; matches the closed-walk counts of
/// the infinite d-regular tree.
inline double km_moment(int d, int k) {
    if (k < 0) throw std::invalid_argument("km_moment: need k >= 0");
    return km_integrate(d, [k](double t) { return std::pow(t, k); });
}

/// The limit value t_d(x): two branches split at x = d-1. The optional y is
/// accepted and ignored on [0,1] (the limit does not depend on it there).
inline double t_d(int d, double x, std::optional<double> y = std::nullopt) {
    if (d < 2) throw std::invalid_argument("t_d: need d >= 2");
    if (x < 0) throw std::invalid_argument("t_d: need x >= 0");
    if (y && (*y < 0.0 || *y > 1.0))
        throw std::invalid_argument("t_d: y outside [0,1] is not covered");
    if (d == 2) return x <= 1.0 ? 1.0 : x;  // includes t_2(1) = 1
    double dm1 = d - 1.0;
    if (x <= dm1) return dm1 * std::pow(dm1 * dm1 / (dm1 * dm1 - x), d / 2.0 - 1.0);
    return x * std::pow(1.0 + 1.0 / (x - 1.0), d / 2.0 - 1.0);
}

/// One evaluated point of the limit curve.
struct LimitPoint {
    int d = 0;
    double x = 0.0;
    double value = 0.0;
    bool supercritical = false;  // x > d-1 branch
};

inline std::vector<LimitPoint> limit_grid(int d, double from, double to, double step) {
    if (step <= 0) throw std::invalid_argument("limit_grid: need step > 0");
    std::vector<LimitPoint> out;
    for (double x = from; x <= to + 1e-12; x += step)
        out.push_back({d, x, t_d(d, x), x > d - 1.0});
    return out;
}

/// McKay's closed form for int ln(1 - gamma t) d rho_KM(t), |gamma| < 1/omega.
inline double mckay_log_integral(int d, double gamma) {
    if (d < 2) throw std::invalid_argument("mckay_log_integral: need d >= 2");
    double omega = 2.0 * std::sqrt(d - 1.0);
    if (std::abs(gamma) >= 1.0 / omega)
        throw std::invalid_argument("mckay_log_integral: need |gamma| < 1/omega");
    if (gamma == 0.0) return 0.0;
    double g2 = gamma * gamma;
    double eta = (1.0 - std::sqrt(1.0 - 4.0 * (d - 1.0) * g2)) / (2.0 * (d - 1.0) * g2);
    return std::log((1.0 / eta) * std::pow((d - 1.0) / (d - eta), d / 2.0 - 1.0));
}

struct IntegralEvaluation {
    double quadrature;
    double closed_form;
};

/// Both routes of sqrt(z) exp(int ln((d+z-1)/sqrt(z) - t) d rho_KM): direct
/// quadrature and the two-branch closed form. At z = d-1 the integrand's
/// argument touches the support endpoint; the closed-form branch value is
/// returned for both (the identity extends there by continuity).
inline IntegralEvaluation integral_evaluation_check(int d, double z) {
    if (d < 2) throw std::invalid_argument("integral_evaluation_check: need d >= 2");
    if (z <= 0)
        throw std::invalid_argument("integral_evaluation_check: need z > 0 (sqrt(z) substitution)");
    double closed = t_d(d, z);
    if (std::abs(z - (d - 1.0)) < 1e-12) return {closed, closed};
    double u = (d + z - 1.0) / std::sqrt(z);
    double quad = std::sqrt(z) * std::exp(km_integrate(d, [u](double t) { return std::log(u - t); }));
    return {quad, closed};
}

}  // namespace graphpoly
