#include "abelforge/quadrature.hpp"

#include <boost/math/quadrature/gauss_kronrod.hpp>
#include <string>

#include "abelforge/errors.hpp"

namespace abelforge {

double adaptiveGaussKronrod(const std::function<double(double)>& f, double a, double b,
                            double absTol, double relTol) {
    if (a == b) return 0.0;
    double error = 0.0;
    double value = 0.0;
    try {
        value = boost::math::quadrature::gauss_kronrod<double, 15>::integrate(f, a, b, 20, relTol,
                                                                              &error);
    } catch (const DomainError& e) {
        throw QuadratureFailure(std::string("integrand failed: ") + e.what());
    } catch (const std::exception& e) {
        throw QuadratureFailure(std::string("quadrature failed: ") + e.what());
    }
    if (!std::isfinite(value) || error > std::max(absTol, relTol * std::abs(value)) * 100.0) {
        throw QuadratureFailure("adaptive quadrature did not converge on [" + std::to_string(a) +
                                ", " + std::to_string(b) + "]");
    }
    return value;
}

}  // namespace abelforge
