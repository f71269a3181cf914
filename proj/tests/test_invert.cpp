#include <cmath>
#include <numbers>
#include <vector>

#include "doctest.h"

#include "abelforge/abel.hpp"
#include "abelforge/catalog.hpp"
#include "abelforge/errors.hpp"
#include "abelforge/invert.hpp"
#include "abelforge/special.hpp"

using namespace abelforge;
using std::numbers::pi;

namespace {

EtaField constantEta(double value) {
    EtaField e;
    e.eta = ScalarField(num(value));
    e.ode = {ScalarField(num(0.0)), ScalarField(num(0.0))};
    return e;
}

// Inverse of the dark soliton 1 - (3/2) sech^2(zeta/sqrt 2) on zeta >= 0.
double solitonZeta(double u) { return std::sqrt(2.0) * std::acosh(std::sqrt(1.5 / (1.0 - u))); }

double maxGap(const SolutionCurve& curve, auto exact) {
    double worst = 0.0;
    for (const auto& s : curve.samples) worst = std::max(worst, std::abs(s.u - exact(s.zeta)));
    return worst;
}

// eta at a sample; on a rim the radicand may round below zero, where eta is 0.
double etaAt(const EtaField& f, double u) {
    try {
        return f.eta(u);
    } catch (const DomainError&) {
        return 0.0;
    }
}

std::vector<CurveEvent> eventsOf(const SolutionCurve& c, EventKind kind) {
    std::vector<CurveEvent> out;
    for (const auto& e : c.events)
        if (e.kind == kind) out.push_back(e);
    return out;
}

}  // namespace

TEST_SUITE("invert") {

TEST_CASE("sample grid") {
    CHECK(sampleGrid({0.0, 1.0}, 0.25) == std::vector<double>{0.0, 0.25, 0.5, 0.75, 1.0});
    CHECK(sampleGrid({0.0, 0.3}, 0.1).size() == 4);
    CHECK(sampleGrid({2.0, 2.0}, 0.1).empty());
    CHECK_THROWS_AS(sampleGrid({0.0, 1.0}, 0.0), std::invalid_argument);
}

TEST_CASE("quadrature map") {
    const std::vector<double> grid{1.0, 2.0};
    const auto unit = quadratureMap(constantEta(1.0), 0.0, grid);
    REQUIRE(unit.size() == 2);
    CHECK(unit[0].zeta == doctest::Approx(1.0).epsilon(1e-14));
    CHECK(unit[1].zeta == doctest::Approx(2.0).epsilon(1e-14));

    const auto sine = catalog::sinePendulum(2.0);
    std::vector<double> us;
    for (int i = -29; i <= 29; ++i) us.push_back(i / 10.0);
    for (const auto& p : quadratureMap(sine.eta, 0.0, us)) CHECK(std::abs(p.zeta - 0.5 * std::tan(p.u / 2)) <= 1e-10);

    // Toward the square-root zero at u = -1/2, including the rim itself.
    const auto fisher = catalog::fisher(0.5);
    const std::vector<double> rim{-0.5, -0.4999999, -0.499, -0.45, 0.0, 0.9};
    for (const auto& p : quadratureMap(fisher.eta, -0.49, rim)) {
        CAPTURE(p.u);
        CHECK(std::isfinite(p.zeta));
        CHECK(std::abs(p.zeta - (solitonZeta(p.u) - solitonZeta(-0.49))) <= 1e-10);
    }

    EtaField linear = constantEta(0.0);
    linear.eta = ScalarField::parse("u");
    const std::vector<double> across{1.0};
    CHECK_THROWS_AS(quadratureMap(linear, -1.0, across), InteriorZero);
}

TEST_CASE("linear flow") {
    const auto curve = invert(constantEta(1.0), 0.5, 2.0, {0.0, 3.0}, 0.5);
    REQUIRE(curve.samples.size() == 7);
    for (const auto& s : curve.samples) {
        CHECK(s.u == doctest::Approx(2.0 + s.zeta - 0.5).epsilon(1e-14));
        CHECK(s.uPrime == 1.0);
    }
    CHECK(curve.events.empty());
    CHECK(curve.baseZeta == 0.5);
    CHECK(curve.baseU == 2.0);
}

TEST_CASE("dark soliton from its minimum") {
    const auto fisher = catalog::fisher(0.5);
    const auto curve = invert(fisher.eta, 0.0, -0.5, {-6.0, 6.0}, 0.01);
    REQUIRE(curve.samples.size() == 1201);
    CHECK(maxGap(curve, [](double z) { return 1.0 - 1.5 * std::pow(1.0 / std::cosh(z / std::sqrt(2.0)), 2); }) <= 5e-7);
    for (const auto& s : curve.samples) CHECK(std::abs(std::abs(s.uPrime) - std::abs(etaAt(fisher.eta, s.u))) <= 1e-8);
}

TEST_CASE("dark soliton started just above its minimum") {
    // u0 = -1/2 + 1e-9 sits a finite zeta past the minimum; the curve is the
    // soliton shifted by that amount.
    const auto fisher = catalog::fisher(0.5);
    const double u0 = -0.5 + 1e-9;
    const double offset = solitonZeta(u0);
    CHECK(offset > 1e-5);
    const auto curve = invert(fisher.eta, 0.0, u0, {-6.0, 6.0}, 0.01);
    CHECK(maxGap(curve, [&](double z) {
              return 1.0 - 1.5 * std::pow(1.0 / std::cosh((z + offset) / std::sqrt(2.0)), 2);
          }) <= 5e-7);
}

TEST_CASE("sn-type Fisher orbit over one period") {
    const auto fisher = catalog::fisher(0.25);
    const double e1 = 0.5 * (1.0 - std::sqrt(3.0));
    const double lambda = std::pow(3.0, -0.25);
    const double half = special::ellipticK(0.5) / lambda;
    const auto exact = [&](double z) {
        const double sn = special::jacobiSnCnDn(lambda * z, 0.5).sn;
        return e1 + 0.5 * std::sqrt(3.0) * sn * sn;
    };
    const auto curve = invert(fisher.eta, 0.0, e1, {0.0, 2.0 * half}, 0.01);
    CHECK(maxGap(curve, exact) <= 1e-6);

    const auto turns = eventsOf(curve, EventKind::TurningPoint);
    REQUIRE(turns.size() >= 1);
    CHECK(turns[0].zeta == doctest::Approx(half).epsilon(1e-9));
    CHECK(turns[0].u == doctest::Approx(0.5).epsilon(1e-9));
    if (turns.size() > 1) CHECK(turns[1].zeta == doctest::Approx(2.0 * half).epsilon(1e-9));

    for (const auto& s : curve.samples) {
        CHECK(std::abs(std::abs(s.uPrime) - std::abs(etaAt(fisher.eta, s.u))) <= 1e-8);
        CHECK((s.zeta < half ? s.uPrime >= 0.0 : s.uPrime <= 0.0));
    }
}

TEST_CASE("pendulum turning points and branch limit") {
    const auto pend = catalog::pendulum(2.0);
    const double reach = special::amplitudeReach(2.0);
    const auto curve = invert(pend.eta, 0.0, 0.0, {-3.0 * reach, 3.0 * reach}, 0.01);
    const auto turns = eventsOf(curve, EventKind::TurningPoint);
    REQUIRE(turns.size() >= 2);
    bool sawForward = false;
    for (const auto& t : turns) {
        CHECK(std::abs(std::abs(t.u) - pi / 2) <= 1e-9);
        if (std::abs(t.zeta - reach) <= 1e-9) sawForward = true;
    }
    CHECK(sawForward);
    double worst = 0.0;
    for (const auto& s : curve.samples)
        if (std::abs(s.zeta) < 0.999 * reach) worst = std::max(worst, std::abs(s.u - 2.0 * special::jacobiAm(s.zeta, 2.0)));
    CHECK(worst <= 1e-8);

    InvertOptions limited;
    limited.maxTurningPoints = 1;
    const auto cut = invert(pend.eta, 0.0, 0.0, {0.0, 20.0}, 0.05, limited);
    REQUIRE_FALSE(cut.events.empty());
    CHECK((cut.events.back().kind == EventKind::Truncated));
    CHECK(eventsOf(cut, EventKind::TurningPoint).size() == 1);
    CHECK(cut.samples.back().zeta < 20.0);
}

TEST_CASE("equilibrium tail stops with a domain edge") {
    const auto bh = catalog::burgersHuxley(1.0, 1.0);
    const auto curve = invert(bh.eta, 0.0, 0.0, {0.0, 30.0}, 0.05);
    const auto edges = eventsOf(curve, EventKind::DomainEdge);
    REQUIRE(edges.size() == 1);
    CHECK(std::abs(edges[0].u - 1.0) <= 1e-9);
    CHECK(maxGap(curve, [](double z) { return std::tanh(z); }) <= 1e-8);
}

TEST_CASE("shift covariance") {
    const auto pend = catalog::pendulum(1.0);
    const double s = 0.375;
    const auto base = invert(pend.eta, 0.0, 0.25, {-1.0, 2.0}, 1.0 / 64);
    const auto moved = invert(pend.eta, s, 0.25, {-1.0 + s, 2.0 + s}, 1.0 / 64);
    REQUIRE(base.samples.size() == moved.samples.size());
    for (std::size_t i = 0; i < base.samples.size(); ++i) {
        CHECK(moved.samples[i].zeta == base.samples[i].zeta + s);
        CHECK(moved.samples[i].u == base.samples[i].u);
    }
}

TEST_CASE("second differences satisfy the ODE") {
    for (const auto& entry : {catalog::pendulum(2.0), catalog::fisher(0.25), catalog::sinePendulum(1.0)}) {
        CAPTURE(entry.name);
        const double h = 1e-3;
        const auto curve = invert(entry.eta, entry.scenario.zeta0, entry.scenario.u0, entry.scenario.span, h);
        double worst = 0.0;
        for (std::size_t i = 1; i + 1 < curve.samples.size(); ++i) {
            const auto& s = curve.samples[i];
            const double upp = (curve.samples[i + 1].u - 2 * s.u + curve.samples[i - 1].u) / (h * h);
            worst = std::max(worst, std::abs(upp + entry.ode.g(s.u) * s.uPrime + entry.ode.h(s.u)));
        }
        CHECK(worst <= 1e-4);
    }
}

TEST_CASE("RK4 reference") {
    DissipativeOde free{ScalarField(num(0.0)), ScalarField(num(0.0))};
    const auto line = rk4Reference(free, 0.0, 1.0, 1.0, {0.0, 2.0}, 0.1);
    for (const auto& s : line.samples) CHECK(s.u == doctest::Approx(1.0 + s.zeta).epsilon(1e-13));

    const auto pend = catalog::pendulum(1.0);
    const auto swing = rk4Reference(pend.ode, 0.0, 0.0, std::sqrt(8.0), {-3.0, 3.0}, 1e-3);
    CHECK(swing.samples.front().zeta == doctest::Approx(-3.0));
    CHECK(maxGap(swing, [](double z) { return 2.0 * std::asin(std::tanh(std::sqrt(2.0) * z)); }) <= 1e-6);

    const auto bh = catalog::burgersHuxley(1.0, 1.0);
    const auto front = rk4Reference(bh.ode, 0.0, 0.0, 1.0, {-4.0, 4.0}, 1e-3);
    CHECK(maxGap(front, [](double z) { return std::tanh(z); }) <= 1e-6);

    const auto bad = DissipativeOde{ScalarField::parse("ln(u)"), ScalarField(num(0.0))};
    CHECK_THROWS_AS(rk4Reference(bad, 0.0, 0.5, -1.0, {0.0, 2.0}, 0.01), DomainError);
}

TEST_CASE("inversion agrees with RK4 on every catalog scenario") {
    for (const auto& doc : catalog::entries()) {
        const auto entry = catalog::make(doc.name, {});
        CAPTURE(entry.name);
        const auto& sc = entry.scenario;
        const auto a = invert(entry.eta, sc.zeta0, sc.u0, sc.span, 1e-3);
        const auto b = rk4Reference(entry.ode, sc.zeta0, sc.u0, entry.eta.eta(sc.u0), sc.span, 1e-3);
        REQUIRE(a.samples.size() == b.samples.size());
        double worst = 0.0;
        for (std::size_t i = 0; i < a.samples.size(); ++i)
            worst = std::max(worst, std::abs(a.samples[i].u - b.samples[i].u));
        CHECK(worst <= 1e-5);
    }
}

}  // TEST_SUITE
