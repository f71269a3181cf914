#include <cmath>
#include <numbers>
#include <stdexcept>
#include <vector>

#include "doctest.h"

#include "abelforge/abel.hpp"
#include "abelforge/catalog.hpp"
#include "abelforge/errors.hpp"
#include "abelforge/special.hpp"

using namespace abelforge;
using std::numbers::pi;

namespace {

std::vector<catalog::CatalogEntry> sweep() {
    std::vector<catalog::CatalogEntry> out;
    for (double c2 : {0.5, 0.25, 0.1, 0.4}) out.push_back(catalog::fisher(c2));
    for (double m : {2.0, 1.0, 8.0 / 9.0, 0.5, 3.0}) out.push_back(catalog::pendulum(m));
    for (double c0 : {2.0, -2.0, 1.0, -1.5, 3.0, -3.0}) out.push_back(catalog::sinePendulum(c0));
    for (auto [mu, c0] : {std::pair{1.0, 1.0}, {4.0, 1.0}, {1.0, 0.0}, {1.0, -1.0}, {-2.0, -1.0}, {2.0, -3.0}})
        out.push_back(catalog::burgersHuxley(mu, c0));
    return out;
}

std::vector<double> windowPoints(const Interval& w, std::size_t n) { return uniformGrid(w, n); }

}  // namespace

TEST_SUITE("catalog") {

TEST_CASE("listing and construction") {
    const auto& docs = catalog::entries();
    REQUIRE(docs.size() == 4);
    CHECK(docs[0].name == "fisher");
    CHECK(docs[1].name == "pendulum");
    CHECK(docs[2].name == "sine-pendulum");
    CHECK(docs[3].name == "burgers-huxley");
    CHECK(docs[0].parameters.at(0).name == "c2");
    CHECK(docs[0].closedForms.size() == 2);

    CHECK(catalog::make("fisher", {}).parameters.at("c2") == 0.5);
    CHECK(catalog::make("burgers-huxley", {{"mu", 4.0}}).parameters.at("mu") == 4.0);
    CHECK_THROWS_AS(catalog::make("duffing", {}), std::invalid_argument);
    CHECK_THROWS_AS(catalog::make("fisher", {{"c3", 1.0}}), std::invalid_argument);
    CHECK_THROWS_AS(catalog::pendulum(0.0), DomainError);
    CHECK_THROWS_AS(catalog::burgersHuxley(0.0, 1.0), DomainError);
}

TEST_CASE("closed-form values") {
    CHECK(catalog::fisher(0.5).closedForm->u(0.0) == doctest::Approx(-0.5).epsilon(1e-15));
    CHECK(catalog::fisher(0.25).closedForm->u(0.0) == doctest::Approx(0.5 * (1 - std::sqrt(3.0))).epsilon(1e-15));

    const auto m2 = catalog::pendulum(2.0);
    for (double z : {-1.2, 0.3, 1.0}) CHECK(m2.closedForm->u(z) == doctest::Approx(2 * special::jacobiAm(z, 2.0)));
    CHECK(m2.closedForm->validity.hi == doctest::Approx(special::amplitudeReach(2.0)));
    const auto m1 = catalog::pendulum(1.0);
    CHECK(m1.closedForm->u(0.0) == 0.0);
    for (double z : {0.2, 1.1, 2.5}) {
        CHECK(m1.closedForm->u(-z) == doctest::Approx(-m1.closedForm->u(z)).epsilon(1e-14));
        CHECK(m1.closedForm->u(z) == doctest::Approx(2 * std::asin(std::tanh(std::sqrt(2.0) * z))).epsilon(1e-12));
    }
    const auto m89 = catalog::pendulum(8.0 / 9.0);
    for (double z : {-2.0, 0.7}) CHECK(m89.closedForm->u(z) == doctest::Approx(2 * special::jacobiAm(1.5 * z, 8.0 / 9.0)));

    CHECK(catalog::sinePendulum(2.0).closedForm->u(0.5) == doctest::Approx(pi / 2).epsilon(1e-15));
    const auto s1 = catalog::sinePendulum(1.0);
    CHECK(s1.closedForm->u(0.8) ==
          doctest::Approx(2 * std::atan(3 * std::tanh(std::sqrt(3.0) * 0.8 / 2) / std::sqrt(3.0))).epsilon(1e-15));
    CHECK(std::isfinite(catalog::sinePendulum(3.0).closedForm->validity.hi));
    CHECK_FALSE(catalog::sinePendulum(3.0).printedForm.has_value());

    const auto bh = catalog::burgersHuxley(1.0, 1.0);
    for (double z : {-2.0, 0.5}) CHECK(bh.closedForm->u(z) == doctest::Approx(std::tanh(z)).epsilon(1e-15));
    const auto bh4 = catalog::burgersHuxley(4.0, 1.0);
    CHECK(bh4.closedForm->u(40.0) == doctest::Approx(0.5).epsilon(1e-15));
    const auto bh0 = catalog::burgersHuxley(1.0, 0.0);
    CHECK(bh0.closedForm->u(2.0) == 0.5);
    CHECK(bh0.closedForm->validity.lo == 0.0);
}

TEST_CASE("figure references") {
    CHECK(catalog::fisher(0.5).figureRef == "Fig. 1");
    CHECK(catalog::fisher(0.25).figureRef == "Fig. 2");
    CHECK(catalog::pendulum(2.0).figureRef == "Fig. 3");
    CHECK(catalog::pendulum(1.0).figureRef == "Fig. 4");
    CHECK(catalog::pendulum(8.0 / 9.0).figureRef == "Fig. 5");
    CHECK(catalog::sinePendulum(1.0).figureRef == "Fig. 6");
    CHECK(catalog::sinePendulum(3.0).figureRef == "Fig. 7");
}

TEST_CASE("every entry is Chiellini-integrable at k = -2") {
    for (const auto& e : sweep()) {
        CAPTURE(e.name);
        const auto report = classifyChiellini(e.ode, e.working, 64);
        CHECK((report.verdict == Verdict::Integrable));
        CHECK(report.k == doctest::Approx(-2.0).epsilon(1e-10));
        CHECK(maxAbelResidual(e.eta, uniformGrid(e.working, 101)) <= 1e-10);
    }
    REQUIRE(catalog::fisher(0.5).convectiveTuning.has_value());
    const auto f = catalog::fisher(0.5);
    CHECK(f.convectiveTuning->value(0.2) * f.eta.eta(0.2) == doctest::Approx(0.8));
}

TEST_CASE("closed forms solve their ODE") {
    int checked = 0;
    for (const auto& e : sweep()) {
        if (!e.closedForm) continue;  // Fisher away from c2 = 1/2, 1/4
        ++checked;
        const auto& cf = *e.closedForm;
        CAPTURE(e.name);
        CAPTURE(cf.formula);
        double residual = 0.0;
        double derivativeGap = 0.0;
        for (double z : windowPoints(cf.sampleWindow, 200)) {
            const double u = cf.u(z);
            residual = std::max(residual, std::abs(cf.d2u(z) + e.ode.g(u) * cf.du(z) + e.ode.h(u)));
            // The stated derivatives against a five-point stencil of u itself.
            const double h = 1e-4;
            const double fd = (-cf.u(z + 2 * h) + 8 * cf.u(z + h) - 8 * cf.u(z - h) + cf.u(z - 2 * h)) / (12 * h);
            derivativeGap = std::max(derivativeGap, std::abs(fd - cf.du(z)) / (1.0 + std::abs(fd)));
        }
        CHECK(residual <= 1e-6);
        CHECK(derivativeGap <= 1e-7);
    }
    CHECK(checked == 19);
}

TEST_CASE("scenarios start on the closed form") {
    for (const auto& e : sweep()) {
        CAPTURE(e.name);
        const auto& sc = e.scenario;
        CHECK(sc.span.lo <= sc.zeta0);
        CHECK(sc.span.hi > sc.span.lo);
        if (e.closedForm && e.closedForm->validity.contains(sc.zeta0))
            CHECK(sc.u0 == doctest::Approx(e.closedForm->u(sc.zeta0)).epsilon(1e-12));
    }
}

}  // TEST_SUITE
