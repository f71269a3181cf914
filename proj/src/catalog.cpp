#include "abelforge/catalog.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>
#include <string>

#include "abelforge/errors.hpp"
#include "abelforge/invert.hpp"
#include "abelforge/special.hpp"

namespace abelforge::catalog {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kInf = std::numeric_limits<double>::infinity();
constexpr double kK = -2.0;  // every family uses k = -2, ck = 1

double sech(double x) { return 1.0 / std::cosh(x); }

// Second derivative of 2 arctan(y(zeta)) from y, y', y''.
double atanSecond(double y, double y1, double y2) {
    const double q = 1.0 + y * y;
    return 2.0 * y2 / q - 4.0 * y * y1 * y1 / (q * q);
}

/// Span on which the inversion stays on its first monotone stretch: up to 90%
/// of the way to the first event, capped at maxLength.
Scenario monotoneScenario(const EtaField& eta, double zeta0, double u0, double maxLength) {
    const auto probe = invert(eta, zeta0, u0, {zeta0, zeta0 + maxLength}, maxLength / 200.0);
    double hi = zeta0 + maxLength;
    if (!probe.events.empty()) hi = zeta0 + 0.9 * (probe.events.front().zeta - zeta0);
    return {zeta0, u0, {zeta0, hi}};
}

Interval shrink(Interval i, double fraction) {
    const double pad = fraction * i.length();
    return {i.lo + pad, i.hi - pad};
}

}  // namespace

CatalogEntry fisher(double c2) {
    const double c1 = 4.0 * c2 / 3.0;
    CatalogEntry e;
    e.name = "fisher";
    e.parameters = {{"c2", c2}};
    e.eta = etaFromH(ScalarField::parse("u*(1-u)"), kK, c1, RootChoice::Minus, Sign::Plus, {-1.0, 1.2});
    e.ode = e.eta.ode;
    e.working = shrink(*e.eta.admissible, 0.02);
    e.convectiveTuning = ScalarField(parse("1-u") / e.eta.eta.expr());

    if (c2 == 0.5) {
        // Dark soliton: u rises from its minimum -1/2 at zeta = 0 to 1.
        const double s = std::sqrt(2.0);
        e.closedForm = ClosedForm{
            "1 - (3/2) sech^2(zeta/sqrt(2))",
            [s](double z) { return 1.0 - 1.5 * std::pow(sech(z / s), 2); },
            [s](double z) { return 3.0 / s * std::pow(sech(z / s), 2) * std::tanh(z / s); },
            [s](double z) {
                const double S = sech(z / s), T = std::tanh(z / s);
                return 3.0 / (s * s) * S * S * (S * S - 2.0 * T * T);
            },
            {0.0, kInf},
            {0.05, 12.0}};
        e.printedForm = PrintedForm{"1 - (3/2) sech^2(zeta/2)",
                                    [](double z) { return 1.0 - 1.5 * std::pow(sech(z / 2.0), 2); },
                                    {0.05, 12.0}};
        e.scenario = {1.0, e.closedForm->u(1.0), {1.0, 8.0}};
        e.figureRef = "Fig. 1";
    } else if (c2 == 0.25) {
        // Cubic roots e1 < e2 < e3 of u^3 - 3/2 u^2 + 1/4; u climbs from e1 to e2.
        const double e1 = 0.5 * (1.0 - std::sqrt(3.0));
        const double amp = 0.5 * std::sqrt(3.0);
        const double lambda = std::pow(3.0, -0.25);
        const double half = special::ellipticK(0.5) / lambda;
        e.closedForm = ClosedForm{
            "(1 - sqrt(3))/2 + (sqrt(3)/2) sn^2(zeta/3^(1/4) | 1/2)",
            [=](double z) {
                const double sn = special::jacobiSnCnDn(lambda * z, 0.5).sn;
                return e1 + amp * sn * sn;
            },
            [=](double z) {
                const auto t = special::jacobiSnCnDn(lambda * z, 0.5);
                return 2.0 * amp * lambda * t.sn * t.cn * t.dn;
            },
            [=](double z) {
                const auto t = special::jacobiSnCnDn(lambda * z, 0.5);
                const double sn2 = t.sn * t.sn, cn2 = t.cn * t.cn, dn2 = t.dn * t.dn;
                return 2.0 * amp * lambda * lambda * (cn2 * dn2 - sn2 * dn2 - 0.5 * sn2 * cn2);
            },
            {0.0, half},
            {0.02 * half, 0.98 * half}};
        const double printedReach = special::amplitudeReach(2.0) / lambda;
        e.printedForm = PrintedForm{
            "(1 - sqrt(3))/2 + sqrt(3) sn^2(zeta/3^(1/4) | 2)",
            [=](double z) {
                const double sn = special::jacobiSnCnDn(lambda * z, 2.0).sn;
                return e1 + 2.0 * amp * sn * sn;
            },
            {0.02 * printedReach, 0.98 * printedReach}};
        e.scenario = {0.5, e.closedForm->u(0.5), {0.5, 0.9 * half}};
        e.figureRef = "Fig. 2";
    } else {
        const auto run = *e.eta.admissible;
        const double u0 = run.contains(0.0) && e.eta.eta.value(0.0) > 1e-3
                              ? 0.0
                              : 0.5 * (run.lo + run.hi);
        e.scenario = monotoneScenario(e.eta, 0.0, u0, 4.0);
    }
    return e;
}

CatalogEntry pendulum(double m) {
    if (!(m > 0.0)) throw DomainError("pendulum requires m > 0");
    const double c3 = 8.0 / m - 4.0;
    CatalogEntry e;
    e.name = "pendulum";
    e.parameters = {{"m", m}};
    e.eta = etaFromH(ScalarField::parse("sin(u)"), kK, c3, RootChoice::Minus, Sign::Plus,
                     {-kPi, kPi});
    e.ode = e.eta.ode;
    e.working = m > 1.0 ? shrink(*e.eta.admissible, 0.05) : Interval{-3.0, 3.0};

    // u = 2 am(scale*zeta | m), from zeta = sqrt(m/2) F(u/2 | m).
    const double scale = std::sqrt(2.0 / m);
    const double reach = m > 1.0 ? special::amplitudeReach(m) / scale : kInf;
    const double window = std::isfinite(reach) ? 0.95 * reach : 3.0;
    e.closedForm = ClosedForm{
        "2 am(zeta*sqrt(2/m) | m)",
        [=](double z) { return 2.0 * special::jacobiAm(scale * z, m); },
        [=](double z) {
            const double s = std::sin(special::jacobiAm(scale * z, m));
            return 2.0 * scale * std::sqrt(std::max(0.0, 1.0 - m * s * s));
        },
        [=](double z) {
            const double phi = special::jacobiAm(scale * z, m);
            return -2.0 * m * scale * scale * std::sin(phi) * std::cos(phi);
        },
        {-reach, reach},
        {-window, window}};

    if (m == 2.0) {
        e.printedForm = PrintedForm{"am(zeta | 2)",
                                    [](double z) { return special::jacobiAm(z, 2.0); },
                                    {-0.95 * special::amplitudeReach(2.0), 0.95 * special::amplitudeReach(2.0)}};
        e.figureRef = "Fig. 3";
    } else if (m == 1.0) {
        e.printedForm = PrintedForm{"arcsin(tanh(sqrt(2) zeta))",
                                    [](double z) { return std::asin(std::tanh(std::sqrt(2.0) * z)); },
                                    {-3.0, 3.0}};
        e.figureRef = "Fig. 4";
    } else if (std::abs(m - 8.0 / 9.0) < 1e-15) {
        e.printedForm = PrintedForm{"am(3 zeta/2 | 8/9)",
                                    [](double z) { return special::jacobiAm(1.5 * z, 8.0 / 9.0); },
                                    {-3.0, 3.0}};
        e.figureRef = "Fig. 5";
    }
    e.scenario = {0.0, 0.0, {0.0, m > 1.0 ? 0.9 * reach : 3.0}};
    return e;
}

CatalogEntry sinePendulum(double c0) {
    CatalogEntry e;
    e.name = "sine-pendulum";
    e.parameters = {{"c0", c0}};
    e.eta = etaFromG(ScalarField::parse("sin(u)"), kK, c0, RootChoice::Minus, {0.1, 3.0});
    e.ode = e.eta.ode;
    e.working = {0.1, 3.0};

    // With t = tan(u/2): t' = ((2 + c0) + (c0 - 2) t^2) / 2.
    if (c0 == 2.0) {
        e.closedForm = ClosedForm{"2 arctan(2 zeta)",
                                  [](double z) { return 2.0 * std::atan(2.0 * z); },
                                  [](double z) { return 4.0 / (1.0 + 4.0 * z * z); },
                                  [](double z) { return -32.0 * z / std::pow(1.0 + 4.0 * z * z, 2); },
                                  {-kInf, kInf},
                                  {-5.0, 5.0}};
        e.printedForm = PrintedForm{"2 arctan(2 zeta)", e.closedForm->u, {-5.0, 5.0}};
    } else if (c0 == -2.0) {
        e.closedForm = ClosedForm{"2 arccot(2 zeta)",
                                  [](double z) { return kPi - 2.0 * std::atan(2.0 * z); },
                                  [](double z) { return -4.0 / (1.0 + 4.0 * z * z); },
                                  [](double z) { return 32.0 * z / std::pow(1.0 + 4.0 * z * z, 2); },
                                  {-kInf, kInf},
                                  {-5.0, 5.0}};
        e.printedForm = PrintedForm{"2 arccot(2 zeta)", e.closedForm->u, {-5.0, 5.0}};
    } else if (std::abs(c0) < 2.0) {
        const double w = std::sqrt(4.0 - c0 * c0);
        const double a = (2.0 + c0) / w;
        auto u = [=](double z) { return 2.0 * std::atan(a * std::tanh(0.5 * w * z)); };
        e.closedForm = ClosedForm{
            "2 arctan((2 + c0) tanh(sqrt(4 - c0^2) zeta/2) / sqrt(4 - c0^2))", u,
            [=](double z) {
                const double t = a * std::tanh(0.5 * w * z);
                return a * w * std::pow(sech(0.5 * w * z), 2) / (1.0 + t * t);
            },
            [=](double z) {
                const double k = 0.5 * w, S2 = std::pow(sech(k * z), 2), T = std::tanh(k * z);
                const double y = a * T, y1 = a * k * S2, y2 = -2.0 * a * k * k * S2 * T;
                return atanSecond(y, y1, y2);
            },
            {-kInf, kInf},
            {-5.0, 5.0}};
        e.printedForm = PrintedForm{e.closedForm->formula, u, {-5.0, 5.0}};
    } else {
        // |c0| > 2. The published form keeps sqrt(4 - c0^2), which is not real
        // here, so there is no printed counterpart to evaluate.
        const double w = std::sqrt(c0 * c0 - 4.0);
        const double a = (2.0 + c0) / w;
        const double reach = kPi / w;
        e.closedForm = ClosedForm{
            "2 arctan((2 + c0) tan(sqrt(c0^2 - 4) zeta/2) / sqrt(c0^2 - 4))",
            [=](double z) { return 2.0 * std::atan(a * std::tan(0.5 * w * z)); },
            [=](double z) {
                const double t = a * std::tan(0.5 * w * z);
                return a * w / std::pow(std::cos(0.5 * w * z), 2) / (1.0 + t * t);
            },
            [=](double z) {
                const double k = 0.5 * w, C2 = 1.0 / std::pow(std::cos(k * z), 2), T = std::tan(k * z);
                const double y = a * T, y1 = a * k * C2, y2 = 2.0 * a * k * k * C2 * T;
                return atanSecond(y, y1, y2);
            },
            {-reach, reach},
            {-0.95 * reach, 0.95 * reach}};
    }
    if (c0 == 1.0) e.figureRef = "Fig. 6";
    if (c0 == 3.0) e.figureRef = "Fig. 7";
    const double span = std::isfinite(e.closedForm->validity.hi) ? 0.9 * e.closedForm->validity.hi : 4.0;
    e.scenario = {0.0, e.closedForm->u(0.0), {0.0, span}};
    return e;
}

CatalogEntry burgersHuxley(double mu, double c0) {
    if (mu == 0.0) throw DomainError("Burgers-Huxley entry requires mu != 0");
    CatalogEntry e;
    e.name = "burgers-huxley";
    e.parameters = {{"mu", mu}, {"c0", c0}};
    e.eta = etaFromG(ScalarField(num(mu) * var()), kK, c0, RootChoice::Minus, {-2.0, 2.0});
    e.ode = e.eta.ode;
    e.working = {0.1, 2.0};

    const double ratio = c0 / mu;
    if (ratio > 0.0) {
        const double a = std::sqrt(ratio);
        const double b = std::copysign(std::sqrt(mu * c0), c0);
        e.closedForm = ClosedForm{"sqrt(c0/mu) tanh(sign(c0) sqrt(mu c0) zeta)",
                                  [=](double z) { return a * std::tanh(b * z); },
                                  [=](double z) { return a * b * std::pow(sech(b * z), 2); },
                                  [=](double z) {
                                      return -2.0 * a * b * b * std::pow(sech(b * z), 2) * std::tanh(b * z);
                                  },
                                  {-kInf, kInf},
                                  {-5.0, 5.0}};
        const double bp = std::sqrt(mu * c0);
        e.printedForm = PrintedForm{"sqrt(c0/mu) tanh(sqrt(mu c0) zeta)",
                                    [=](double z) { return a * std::tanh(bp * z); },
                                    {-5.0, 5.0}};
        e.scenario = {0.0, 0.0, {0.0, 4.0}};
    } else if (c0 == 0.0) {
        e.closedForm = ClosedForm{"1/(mu zeta)",
                                  [=](double z) { return 1.0 / (mu * z); },
                                  [=](double z) { return -1.0 / (mu * z * z); },
                                  [=](double z) { return 2.0 / (mu * z * z * z); },
                                  {0.0, kInf},
                                  {0.5, 5.0}};
        e.printedForm = PrintedForm{"1/(mu zeta)", e.closedForm->u, {0.5, 5.0}};
        e.scenario = {1.0, 1.0 / mu, {1.0, 5.0}};
    } else {
        const double a = std::sqrt(-ratio);
        const double b = std::copysign(std::sqrt(-mu * c0), c0);
        const double reach = kPi / (2.0 * std::abs(b));
        e.closedForm = ClosedForm{"sqrt(-c0/mu) tan(sign(c0) sqrt(-mu c0) zeta)",
                                  [=](double z) { return a * std::tan(b * z); },
                                  [=](double z) { return a * b / std::pow(std::cos(b * z), 2); },
                                  [=](double z) {
                                      return 2.0 * a * b * b * std::tan(b * z) / std::pow(std::cos(b * z), 2);
                                  },
                                  {-reach, reach},
                                  {-0.95 * reach, 0.95 * reach}};
        const double bp = std::sqrt(-mu * c0);
        e.printedForm = PrintedForm{"sqrt(-c0/mu) tan(sqrt(-mu c0) zeta)",
                                    [=](double z) { return a * std::tan(bp * z); },
                                    {-0.95 * reach, 0.95 * reach}};
        e.scenario = {0.0, 0.0, {0.0, 0.9 * reach}};
    }
    return e;
}

const std::vector<EntryDoc>& entries() {
    static const std::vector<EntryDoc> docs = {
        {"fisher",
         "u'' + u(1-u)/sqrt(c1 - 2u^2 + 4u^3/3) u' + u(1-u) = 0, c1 = 4 c2/3",
         {{"c2", "integration constant, c1 = 4 c2 / 3", 0.5}},
         {"c2 = 1/2: 1 - (3/2) sech^2(zeta/sqrt(2)) (dark soliton)",
          "c2 = 1/4: (1 - sqrt(3))/2 + (sqrt(3)/2) sn^2(zeta/3^(1/4) | 1/2)"},
         {"Fig. 1 (c2 = 1/2)", "Fig. 2 (c2 = 1/4)"}},
        {"pendulum",
         "u'' + sin(u)/sqrt(c3 + 4 cos u) u' + sin(u) = 0, c3 = 8/m - 4",
         {{"m", "elliptic parameter, m > 0", 2.0}},
         {"2 am(zeta sqrt(2/m) | m)"},
         {"Fig. 3 (m = 2)", "Fig. 4 (m = 1)", "Fig. 5 (m = 8/9)"}},
        {"sine-pendulum",
         "u'' + sin(u) u' + c0 sin(u) + sin(2u) = 0",
         {{"c0", "integration constant", 1.0}},
         {"c0 = 2: 2 arctan(2 zeta)", "c0 = -2: 2 arccot(2 zeta)",
          "|c0| < 2: 2 arctan((2 + c0) tanh(sqrt(4 - c0^2) zeta/2) / sqrt(4 - c0^2))",
          "|c0| > 2: 2 arctan((2 + c0) tan(sqrt(c0^2 - 4) zeta/2) / sqrt(c0^2 - 4))"},
         {"Fig. 6 (c0 = 1)", "Fig. 7 (c0 = 3)"}},
        {"burgers-huxley",
         "u'' + mu u u' + mu^2 u (c0/mu - u^2) = 0",
         {{"mu", "convection strength, mu != 0", 1.0}, {"c0", "integration constant", 1.0}},
         {"c0/mu > 0: sqrt(c0/mu) tanh(sign(c0) sqrt(mu c0) zeta)", "c0 = 0: 1/(mu zeta)",
          "c0/mu < 0: sqrt(-c0/mu) tan(sign(c0) sqrt(-mu c0) zeta)"},
         {}},
    };
    return docs;
}

CatalogEntry make(const std::string& name, const std::map<std::string, double>& params) {
    const EntryDoc* doc = nullptr;
    for (const auto& d : entries())
        if (d.name == name) doc = &d;
    if (!doc) throw std::invalid_argument("unknown catalog entry '" + name + "'");

    std::map<std::string, double> values;
    for (const auto& p : doc->parameters) values[p.name] = p.defaultValue;
    for (const auto& [key, value] : params) {
        if (!values.count(key))
            throw std::invalid_argument("entry '" + name + "' has no parameter '" + key + "'");
        values[key] = value;
    }
    if (name == "fisher") return fisher(values["c2"]);
    if (name == "pendulum") return pendulum(values["m"]);
    if (name == "sine-pendulum") return sinePendulum(values["c0"]);
    return burgersHuxley(values["mu"], values["c0"]);
}

}  // namespace abelforge::catalog
