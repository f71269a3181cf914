#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "abelforge/scalar_field.hpp"

namespace abelforge {

struct Interval {
    double lo = 0.0;
    double hi = 1.0;

    double length() const noexcept { return hi - lo; }
    bool contains(double u) const noexcept { return lo <= u && u <= hi; }
};

/// u'' + g(u) u' + h(u) = 0 in the travelling coordinate zeta.
struct DissipativeOde {
    ScalarField g;
    ScalarField h;
};

/// eta eta' + g(u) eta + h(u) = 0, with du/dzeta = eta(u).
struct AbelSecondKind {
    ScalarField g;
    ScalarField h;
};

/// dy/du = cubic(u) y^3 + quadratic(u) y^2, obtained from eta = 1/y.
struct AbelFirstKind {
    ScalarField cubic;
    ScalarField quadratic;
};

enum class Verdict { Integrable, NotIntegrable, Indeterminate };
enum class RootChoice { Plus, Minus };
enum class Sign { Plus, Minus };
enum class Provenance { Lemma2, FromG, FromH };

const char* toString(Verdict v) noexcept;
const char* toString(Provenance p) noexcept;

struct ChielliniReport {
    double k = 0.0;
    double residual = 0.0;  // max |k(u) - k| / (1 + |k|) over the points used
    Verdict verdict = Verdict::Indeterminate;
    std::vector<double> ckRoots;
    std::vector<double> gridUsed;
};

inline constexpr double kIntegrableTolerance = 1e-8;
inline constexpr double kNotIntegrableTolerance = 1e-4;

/// A solution eta(u) of the second-kind Abel equation together with the (g, h)
/// pair it solves.
struct EtaField {
    ScalarField eta;
    Provenance provenance = Provenance::Lemma2;
    std::map<std::string, double> constants;  // k, ck, and c0 or c1
    DissipativeOde ode;
    /// Sub-interval of the working interval on which eta is real.
    std::optional<Interval> admissible;
};

AbelSecondKind reduceToAbel(const DissipativeOde& ode);
AbelFirstKind toFirstKind(const AbelSecondKind& abel);

/// Chebyshev-Gauss nodes on the interval, ascending.
std::vector<double> chebyshevGrid(Interval interval, std::size_t n);
/// n equally spaced points including both ends.
std::vector<double> uniformGrid(Interval interval, std::size_t n);

/// Estimates the constant k in (h/g)' = k g from the symbolic derivative of
/// h/g. Throws AllPointsSingular when g vanishes (or h/g fails) everywhere.
ChielliniReport classifyChiellini(const DissipativeOde& ode, Interval interval, std::size_t n);

/// Real roots of k c^2 + c + 1 = 0 (c + 1 = 0 when k == 0), Minus root first.
std::vector<double> ckRoots(double k);
/// Throws NoRealRoot for k > 1/4.
double ckRoot(double k, RootChoice choice);

/// eta = ck h/g for a Chiellini-integrable pair with constant k.
EtaField lemma2Eta(const DissipativeOde& ode, double k, RootChoice choice = RootChoice::Minus);

/// eta = ck (c0 + k G) with G an antiderivative of g; companion h = g (c0 + k G).
EtaField etaFromG(const ScalarField& g, double k = -2.0, double c0 = 0.0,
                  RootChoice choice = RootChoice::Minus, Interval working = {0.0, 1.0});

/// eta = +-ck sqrt(c1 + 2k H) with H an antiderivative of h; companion
/// g = +-h / sqrt(c1 + 2k H). Throws EmptyDomain when the radicand is negative
/// over the whole working interval.
EtaField etaFromH(const ScalarField& h, double k = -2.0, double c1 = 0.0,
                  RootChoice choice = RootChoice::Minus, Sign sign = Sign::Plus,
                  Interval working = {0.0, 1.0});

/// Closed-form antiderivative for linear combinations of polynomials and
/// sin/cos/exp of affine arguments; nullopt otherwise.
std::optional<Expr> closedFormAntiderivative(const Expr& f);
/// closedFormAntiderivative, falling back to a quadrature node based at `base`.
Expr antiderivative(const Expr& f, double base);

/// |eta eta' + g eta + h| / (1 + |h|) at u.
double abelResidual(const EtaField& eta, double u);
/// Max of abelResidual over the grid points where every term evaluates.
double maxAbelResidual(const EtaField& eta, std::span<const double> grid);

/// Antiderivative of 1/(z (z^2 + z + k)) by partial fractions. Throws
/// PoleError at z = 0 and at real roots of z^2 + z + k.
double abelImplicitAntiderivative(double z, double k);

/// L(z) - (1/k) ln|h/g| - branchConstant; vanishes along solutions of the
/// separated z-equation. Throws DomainError for k == 0 or hOverG == 0.
double abelImplicitResidual(double z, double k, double hOverG, double branchConstant);

/// Right-hand side (g^2/h)(z^3 + z^2 + k z) of the z-equation, z = y h/g.
double zFlowRhs(double z, double k, double g, double h);

/// Factoring functions of [d - phi2][d - phi1] u = 0: phi1 = eta/u, phi2 = h/eta.
struct Factorization {
    ScalarField phi1;
    ScalarField phi2;
};

Factorization factorize(const DissipativeOde& ode, const EtaField& eta);

struct FactorizationCheck {
    double product = 0.0;    // max |phi1 phi2 - h/u|
    double sum = 0.0;        // max |phi1 + phi2 + phi1' u + g|
    double factorEq = 0.0;   // max |phi1 (phi1 + phi1' u) + g phi1 + h/u|
    double etaIdentity = 0.0;  // max |u phi1 - eta|
    std::size_t points = 0;
};

/// Evaluates the factorization conditions on the grid. At u = 0, where phi1 =
/// eta/u is 0/0 when eta and h both vanish, the two-sided limit is used.
FactorizationCheck verifyFactorization(const Factorization& f, const DissipativeOde& ode,
                                       const EtaField& eta, std::span<const double> grid);

/// Value at u, or the symmetric two-sided limit when u is a removable
/// singularity. Rethrows DomainError when the limit does not exist.
double evaluateWithLimit(const Expr& e, double u);

}  // namespace abelforge
