#include "abelforge/special.hpp"

#include <boost/math/special_functions/ellint_rf.hpp>
#include <boost/math/tools/roots.hpp>
#include <cmath>
#include <limits>
#include <numbers>
#include <string>

#include "abelforge/errors.hpp"
#include "abelforge/quadrature.hpp"

namespace abelforge::special {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kHalfPi = kPi / 2.0;

// Quadrature and inversion targets are fixed so results are reproducible.
constexpr double kQuadratureTol = 1e-13;

double carlsonRF(double x, double y, double z) { return boost::math::ellint_rf(x, y, z); }

// F(phi | m) for |phi| <= pi/2 and m <= 1 (|phi| < pi/2 when m == 1).
double carlsonF(double phi, double m) {
    const double s = std::sin(phi);
    const double c = std::cos(phi);
    return s * carlsonRF(c * c, 1.0 - m * s * s, 1.0);
}

// F(phi | m) for m > 1 and 0 <= phi < asin(1/sqrt m). The integrand is written
// as 1/sqrt(m sin(a - t) sin(a + t)), a = asin(1/sqrt m), which keeps the
// distance to the branch point exact near the upper end.
double superUnitF(double phi, double m) {
    const double a = std::asin(1.0 / std::sqrt(m));
    const double gap = a - phi;
    auto integrand = [&](double t, double, double dRight) {
        const double toBranch = gap + dRight;
        return 1.0 / std::sqrt(m * std::sin(toBranch) * std::sin(a + t));
    };
    TanhSinhOptions opt;
    opt.absTol = kQuadratureTol;
    opt.relTol = kQuadratureTol;
    const auto r = tanhSinh(integrand, 0.0, phi, opt);
    if (!r.converged && !(r.error <= 1e-12 * std::abs(r.value))) {
        throw DomainError("elliptic integral quadrature did not converge for m = " +
                          std::to_string(m));
    }
    return r.value;
}

}  // namespace

double ellipticK(double m) {
    if (!(m < 1.0)) throw DomainError("K(m) requires m < 1");
    return carlsonRF(0.0, 1.0 - m, 1.0);
}

double amplitudeLimit(double m) {
    if (m > 1.0) return std::asin(1.0 / std::sqrt(m));
    if (m == 1.0) return kHalfPi;
    return std::numeric_limits<double>::infinity();
}

double amplitudeReach(double m) {
    if (m < 1.0) return std::numeric_limits<double>::infinity();
    if (m == 1.0) return std::numeric_limits<double>::infinity();
    return superUnitF(amplitudeLimit(m), m);
}

double ellipticF(double phi, double m) {
    if (!std::isfinite(phi) || !std::isfinite(m)) throw DomainError("non-finite argument");
    if (phi == 0.0) return 0.0;
    if (phi < 0.0) return -ellipticF(-phi, m);
    if (m == 0.0) return phi;
    if (m > 1.0) {
        if (!(phi < amplitudeLimit(m)))
            throw DomainError("F(phi|m): m sin^2 reaches 1 on [0, phi] (m = " + std::to_string(m) +
                              ")");
        return superUnitF(phi, m);
    }
    if (m == 1.0) {
        if (!(phi < kHalfPi)) throw DomainError("F(phi|1) diverges at phi = pi/2");
        return carlsonF(phi, m);
    }
    if (phi <= kHalfPi) return carlsonF(phi, m);
    // Quasi-periodicity: F(phi + n pi) = F(phi) + 2 n K.
    const double n = std::round(phi / kPi);
    const double reduced = phi - n * kPi;
    return 2.0 * n * ellipticK(m) + (reduced < 0.0 ? -carlsonF(-reduced, m) : carlsonF(reduced, m));
}

double gudermann(double x) { return std::atan(std::sinh(x)); }

double jacobiAm(double zeta, double m) {
    if (!std::isfinite(zeta) || !std::isfinite(m)) throw DomainError("non-finite argument");
    if (zeta == 0.0) return 0.0;
    if (zeta < 0.0) return -jacobiAm(-zeta, m);
    if (m == 0.0) return zeta;
    if (m == 1.0) return gudermann(zeta);

    double shift = 0.0;
    double target = zeta;
    double hi = kHalfPi;
    if (m < 1.0) {
        const double period = 2.0 * ellipticK(m);
        const double n = std::round(zeta / period);
        target = zeta - n * period;
        shift = n * kPi;
    } else {
        const double reach = amplitudeReach(m);
        if (!(zeta < reach))
            throw DomainError("am(zeta|m): |zeta| beyond the reach " + std::to_string(reach) +
                              " of F for m = " + std::to_string(m));
        hi = amplitudeLimit(m);
    }
    if (target == 0.0) return shift;
    const double sign = target < 0.0 ? -1.0 : 1.0;
    target = std::abs(target);

    // F is increasing in phi; bracketed Newton on [0, hi).
    const double lo = 0.0;
    const double hiBracket = std::nextafter(hi, 0.0);
    auto fn = [&](double phi) {
        const double s = std::sin(phi);
        const double slope = 1.0 / std::sqrt(std::max(1.0 - m * s * s, 1e-300));
        return std::make_pair(ellipticF(phi, m) - target, slope);
    };
    const double scale = m < 1.0 ? kHalfPi / ellipticK(m) : hi / amplitudeReach(m);
    const double guess = std::min(target * scale, hiBracket);
    std::uintmax_t iterations = 200;
    const double phi = boost::math::tools::newton_raphson_iterate(
        fn, guess, lo, hiBracket, std::numeric_limits<double>::digits - 3, iterations);
    return shift + sign * phi;
}

JacobiTriple jacobiSnCnDn(double zeta, double m) {
    const double phi = jacobiAm(zeta, m);
    const double sn = std::sin(phi);
    const double cn = std::cos(phi);
    const double dn = std::sqrt(std::max(0.0, 1.0 - m * sn * sn));
    return {sn, cn, dn};
}

}  // namespace abelforge::special
