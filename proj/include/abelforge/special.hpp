#pragma once

// Incomplete elliptic integral of the first kind and the Jacobi amplitude in
// the parameter convention
//
//     F(phi | m) = integral_0^phi dtheta / sqrt(1 - m sin^2 theta),
//
// with m allowed to exceed 1. For m > 1 the integrand is real only while
// |phi| < asin(1/sqrt(m)), so F has a finite reach and am(zeta | m) is defined
// only for |zeta| below it.

namespace abelforge::special {

/// Throws DomainError when the path [0, phi] meets m sin^2 >= 1.
double ellipticF(double phi, double m);

/// Complete integral K(m) for m < 1.
double ellipticK(double m);

/// Largest admissible amplitude: asin(1/sqrt(m)) for m > 1, pi/2 for m == 1,
/// +infinity for m < 1.
double amplitudeLimit(double m);

/// sup |F(phi | m)| over admissible phi: F(asin(1/sqrt m) | m) for m > 1,
/// +infinity otherwise.
double amplitudeReach(double m);

/// Inverse of ellipticF in phi. Throws DomainError for |zeta| >= reach.
double jacobiAm(double zeta, double m);

struct JacobiTriple {
    double sn;
    double cn;
    double dn;
};

JacobiTriple jacobiSnCnDn(double zeta, double m);

/// arcsin(tanh(x)).
double gudermann(double x);

}  // namespace abelforge::special
