#pragma once

#include <cmath>
#include <functional>
#include <limits>
#include <numbers>

namespace abelforge {

struct QuadratureResult {
    double value = 0.0;
    double error = 0.0;  // difference between the last two refinement levels
    int level = 0;
    bool converged = false;
};

struct TanhSinhOptions {
    double absTol = 1e-13;
    double relTol = 1e-13;
    int maxLevel = 12;
    double tMax = 4.5;
};

/// Double-exponential (tanh-sinh) quadrature on [a, b].
///
/// The integrand is called as f(x, dLeft, dRight) where dLeft = x - a and
/// dRight = b - x are computed from the node complement without cancellation,
/// so integrands with algebraic endpoint singularities (1/sqrt(b - x)) can be
/// written in terms of the distance, which is never zero.
namespace detail {

template <class F>
QuadratureResult tanhSinhOrdered(F& f, double a, double b, const TanhSinhOptions& opt) {
    QuadratureResult out;

    constexpr double halfPi = std::numbers::pi / 2.0;
    const double half = 0.5 * (b - a);
    const double mid = a + half;

    auto node = [&](double t) -> double {
        const double s = halfPi * std::sinh(t);
        const double cs = std::cosh(s);
        const double w = halfPi * std::cosh(t) / (cs * cs);
        if (!(w > 0.0)) return 0.0;
        if (t == 0.0) return w * f(mid, half, half);
        const double complement = half * std::exp(-std::abs(s)) / cs;
        if (!(complement > 0.0)) return 0.0;
        // x may round onto the endpoint; the integrand sees the exact distance.
        if (t > 0.0) return w * f(b - complement, (b - a) - complement, complement);
        return w * f(a + complement, complement, (b - a) - complement);
    };

    double h = 1.0;
    double sum = node(0.0);
    for (int j = 1; j * h <= opt.tMax; ++j) sum += node(j * h) + node(-j * h);
    double estimate = h * half * sum;

    for (int level = 1; level <= opt.maxLevel; ++level) {
        h *= 0.5;
        for (int j = 1; j * h <= opt.tMax; j += 2) sum += node(j * h) + node(-j * h);
        const double next = h * half * sum;
        out.value = next;
        out.error = std::abs(next - estimate);
        out.level = level;
        if (!std::isfinite(next)) return out;
        if (level >= 2 && out.error <= std::max(opt.absTol, opt.relTol * std::abs(next))) {
            out.converged = true;
            return out;
        }
        estimate = next;
    }
    return out;
}

}  // namespace detail

template <class F>
QuadratureResult tanhSinh(F&& f, double a, double b, const TanhSinhOptions& opt = {}) {
    if (a == b) {
        QuadratureResult out;
        out.converged = true;
        return out;
    }
    if (b < a) {
        auto flipped = [&f](double x, double dl, double dr) { return f(x, dr, dl); };
        auto out = detail::tanhSinhOrdered(flipped, b, a, opt);
        out.value = -out.value;
        return out;
    }
    return detail::tanhSinhOrdered(f, a, b, opt);
}

/// Adaptive Gauss-Kronrod (7/15) on [a, b]; throws QuadratureFailure when the
/// error estimate stays above max(absTol, relTol*|I|) or the integrand fails.
double adaptiveGaussKronrod(const std::function<double(double)>& f, double a, double b,
                            double absTol = 1e-13, double relTol = 1e-12);

}  // namespace abelforge
