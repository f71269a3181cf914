#pragma once

#include <span>
#include <vector>

#include "abelforge/abel.hpp"

namespace abelforge {

struct CurveSample {
    double zeta;
    double u;
    double uPrime;
};

enum class EventKind { TurningPoint, DomainEdge, Truncated };
const char* toString(EventKind kind) noexcept;

struct CurveEvent {
    double zeta;
    EventKind kind;
    double u;
};

struct SolutionCurve {
    std::vector<CurveSample> samples;  // zeta strictly increasing
    std::vector<CurveEvent> events;    // sorted by zeta
    double baseZeta = 0.0;
    double baseU = 0.0;
};

struct ZetaPoint {
    double u;
    double zeta;
};

/// zeta(u) = integral_{u0}^{u} dr / eta(r) for each grid point. eta may have a
/// square-root zero at the ends of the hull of {u0} and the grid but must not
/// vanish or change sign inside it (InteriorZero).
std::vector<ZetaPoint> quadratureMap(const EtaField& eta, double u0, std::span<const double> uGrid);

/// Output abscissae: span.lo + i*step for i = 0..floor(length/step); empty when
/// the span has zero length.
std::vector<double> sampleGrid(Interval span, double step);

struct InvertOptions {
    /// Branch switches allowed in each direction away from zeta0.
    int maxTurningPoints = 8;
};

/// u(zeta) from zeta - zeta0 = integral_{u0}^{u} dr/eta(r), starting on the
/// branch u' = +eta(u0). At a zero ub of eta the curve reflects (TurningPoint)
/// when h(ub) != 0 and otherwise stops at the equilibrium (DomainEdge).
SolutionCurve invert(const EtaField& eta, double zeta0, double u0, Interval span, double step,
                     const InvertOptions& options = {});

/// Classical fixed-step RK4 on u' = v, v' = -g(u) v - h(u), sampled on
/// sampleGrid(span, step).
SolutionCurve rk4Reference(const DissipativeOde& ode, double zeta0, double u0, double uPrime0,
                           Interval span, double step);

}  // namespace abelforge
