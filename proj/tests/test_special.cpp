#include <boost/math/quadrature/gauss_kronrod.hpp>
#include <cmath>
#include <numbers>
#include <vector>

#include "doctest.h"

#include "abelforge/errors.hpp"
#include "abelforge/special.hpp"

using namespace abelforge;
using namespace abelforge::special;
using std::numbers::pi;

namespace {

// Direct quadrature of the defining integral.
double oracleF(double phi, double m) {
    auto f = [m](double t) { return 1.0 / std::sqrt(1.0 - m * std::sin(t) * std::sin(t)); };
    return boost::math::quadrature::gauss_kronrod<double, 61>::integrate(f, 0.0, phi, 15, 1e-15);
}

// Bisection on the quadrature oracle, then Newton (dF/dphi is the integrand).
double oracleAm(double zeta, double m) {
    double lo = -std::abs(zeta) - 1.0;
    double hi = std::abs(zeta) + 1.0;
    if (m > 1.0) hi = std::nextafter(std::asin(1.0 / std::sqrt(m)), 0.0), lo = -hi;
    for (int i = 0; i < 60; ++i) {
        const double mid = 0.5 * (lo + hi);
        (oracleF(mid, m) < zeta ? lo : hi) = mid;
    }
    double phi = 0.5 * (lo + hi);
    for (int i = 0; i < 5; ++i) {
        const double step = (oracleF(phi, m) - zeta) * std::sqrt(1.0 - m * std::sin(phi) * std::sin(phi));
        phi -= step;
        if (std::abs(step) < 1e-15) break;
    }
    return phi;
}

std::vector<double> admissiblePhis(double m) {
    const double limit = m > 1.0 ? std::asin(1.0 / std::sqrt(m)) : (m == 1.0 ? pi / 2 : 3.0);
    std::vector<double> out;
    for (int i = -40; i <= 40; ++i) out.push_back(0.98 * limit * i / 40.0);
    return out;
}

}  // namespace

TEST_SUITE("special") {

TEST_CASE("elliptic F trivial values") {
    for (double m : {-1.0, 0.0, 0.5, 2.0}) CHECK(ellipticF(0.0, m) == 0.0);
    for (double phi : {-2.0, 0.3, 7.0}) CHECK(ellipticF(phi, 0.0) == doctest::Approx(phi).epsilon(1e-15));
}

TEST_CASE("elliptic F matches direct quadrature") {
    const double value = ellipticF(pi / 6, 2.0);
    CHECK(std::abs(value - oracleF(pi / 6, 2.0)) <= 1e-12 * std::abs(value));
    for (double m : {-3.0, 0.0, 0.5, 8.0 / 9.0, 1.0, 2.0, 4.0}) {
        for (double phi : admissiblePhis(m)) {
            CAPTURE(m);
            CAPTURE(phi);
            const double expect = oracleF(phi, m);
            CHECK(std::abs(ellipticF(phi, m) - expect) <= 1e-12 * (1.0 + std::abs(expect)));
        }
    }
}

TEST_CASE("elliptic F is odd and rejects inadmissible amplitudes") {
    for (double m : {0.5, 2.0})
        for (double phi : admissiblePhis(m)) CHECK(ellipticF(-phi, m) == -ellipticF(phi, m));
    CHECK_THROWS_AS(ellipticF(pi / 4, 2.0), DomainError);
    CHECK_THROWS_AS(ellipticF(1.0, 2.0), DomainError);
    CHECK_THROWS_AS(ellipticF(pi / 2, 1.0), DomainError);
    CHECK_NOTHROW(ellipticF(pi / 4 - 1e-9, 2.0));
}

TEST_CASE("complete integral and reach") {
    CHECK(ellipticK(0.0) == doctest::Approx(pi / 2).epsilon(1e-15));
    CHECK(std::abs(ellipticK(0.5) - oracleF(pi / 2, 0.5)) < 1e-13);
    CHECK(amplitudeLimit(2.0) == doctest::Approx(pi / 4).epsilon(1e-15));
    CHECK(amplitudeLimit(1.0) == doctest::Approx(pi / 2).epsilon(1e-15));
    // F(pi/4 | 2) = K(1/2) / sqrt(2) by the reciprocal-parameter transformation.
    CHECK(std::abs(amplitudeReach(2.0) - oracleF(pi / 2, 0.5) / std::sqrt(2.0)) < 1e-12);
}

TEST_CASE("amplitude inverts F") {
    CHECK(jacobiAm(0.0, 2.0) == 0.0);
    CHECK(std::abs(jacobiAm(ellipticF(0.3, 0.5), 0.5) - 0.3) <= 1e-10);
    CHECK(std::abs(jacobiAm(1.0, 2.0) - oracleAm(1.0, 2.0)) <= 1e-10);
    for (double m : {0.0, 0.5, 8.0 / 9.0, 1.0, 2.0}) {
        for (double phi : admissiblePhis(m)) {
            CAPTURE(m);
            CAPTURE(phi);
            CHECK(std::abs(jacobiAm(ellipticF(phi, m), m) - phi) <= 1e-9);
        }
    }
    for (double zeta : {-3.0, -0.5, 0.7, 2.5}) CHECK(std::abs(ellipticF(jacobiAm(zeta, 0.5), 0.5) - zeta) <= 1e-10);
    CHECK_THROWS_AS(jacobiAm(amplitudeReach(2.0) + 1e-6, 2.0), DomainError);
}

TEST_CASE("amplitude is unbounded and increasing below m = 1") {
    double previous = jacobiAm(-20.0, 8.0 / 9.0);
    for (int i = -199; i <= 200; ++i) {
        const double value = jacobiAm(i / 10.0, 8.0 / 9.0);
        CHECK(value > previous);
        previous = value;
    }
    CHECK(previous > 2.0 * pi);
}

TEST_CASE("sn cn dn") {
    const auto origin = jacobiSnCnDn(0.0, 0.7);
    CHECK(origin.sn == 0.0);
    CHECK(origin.cn == 1.0);
    CHECK(origin.dn == 1.0);
    for (double z : {-2.0, 0.4, 5.0}) {
        const auto t = jacobiSnCnDn(z, 0.0);
        CHECK(t.sn == doctest::Approx(std::sin(z)).epsilon(1e-14));
        CHECK(t.cn == doctest::Approx(std::cos(z)).epsilon(1e-14));
        CHECK(t.dn == 1.0);
    }
    const auto t = jacobiSnCnDn(0.4, 2.0);
    const double phi = oracleAm(0.4, 2.0);
    CHECK(std::abs(t.sn - std::sin(phi)) < 1e-10);
    CHECK(std::abs(t.cn - std::cos(phi)) < 1e-10);
    CHECK(std::abs(t.dn - std::sqrt(1.0 - 2.0 * std::sin(phi) * std::sin(phi))) < 1e-10);
    for (double m : {0.0, 0.5, 8.0 / 9.0, 1.0, 2.0}) {
        for (double phi : admissiblePhis(m)) {
            const auto s = jacobiSnCnDn(ellipticF(phi, m), m);
            CHECK(std::abs(s.sn * s.sn + s.cn * s.cn - 1.0) <= 1e-12);
            CHECK(std::abs(s.dn * s.dn + m * s.sn * s.sn - 1.0) <= 1e-12);
        }
    }
}

TEST_CASE("gudermannian and the m = 1 integral") {
    CHECK(gudermann(0.0) == 0.0);
    CHECK(gudermann(20.0) > 1.5707);
    CHECK(gudermann(-1.3) == -gudermann(1.3));
    for (int i = -30; i <= 30; ++i) {
        const double x = i / 10.0;
        CHECK(std::abs(ellipticF(gudermann(x), 1.0) - x) <= 1e-9);
    }
    for (int i = -14; i <= 14; ++i) {
        const double phi = i / 10.0;
        const double closed = std::log(std::abs(1.0 / std::cos(phi) + std::tan(phi)));
        CHECK(std::abs(ellipticF(phi, 1.0) - closed) <= 1e-9);
    }
}

}  // TEST_SUITE
