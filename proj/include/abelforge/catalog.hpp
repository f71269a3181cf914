#pragma once

// The four Chiellini-integrable families (k = -2, ck = 1): dissipative Fisher,
// dissipative pendulum, sine-dissipation pendulum, and Burgers-Huxley type.
// Each entry carries its ODE, the Abel solution eta, and where one exists an
// exact travelling solution u(zeta) on the branch u' = +eta(u).

#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "abelforge/abel.hpp"

namespace abelforge::catalog {

struct ClosedForm {
    std::string formula;
    std::function<double(double)> u;
    /// Exact first and second derivatives in zeta.
    std::function<double(double)> du;
    std::function<double(double)> d2u;
    /// Open zeta interval on which the formula solves the ODE; may be infinite.
    Interval validity;
    /// Finite window inside `validity` used for residual checks.
    Interval sampleWindow;
};

/// The formula as published alongside the family. Kept for comparison only;
/// it is not assumed to solve the ODE.
struct PrintedForm {
    std::string formula;
    std::function<double(double)> u;
    Interval sampleWindow;
};

/// Initial point and span for the invert vs RK4 comparison, on a monotone
/// branch away from turning points.
struct Scenario {
    double zeta0;
    double u0;
    Interval span;
};

struct CatalogEntry {
    std::string name;
    std::map<std::string, double> parameters;
    DissipativeOde ode;
    EtaField eta;
    /// Interval used for Chiellini classification.
    Interval working;
    std::optional<ClosedForm> closedForm;
    std::optional<PrintedForm> printedForm;
    Scenario scenario;
    std::string figureRef;
    /// Fisher only: mu(u) with g(u) = mu(u) u.
    std::optional<ScalarField> convectiveTuning;
};

CatalogEntry fisher(double c2);
/// Throws DomainError for m <= 0.
CatalogEntry pendulum(double m);
CatalogEntry sinePendulum(double c0);
/// Throws DomainError for mu == 0.
CatalogEntry burgersHuxley(double mu, double c0);

struct ParameterDoc {
    std::string name;
    std::string description;
    double defaultValue;
};

struct EntryDoc {
    std::string name;
    std::string equation;
    std::vector<ParameterDoc> parameters;
    std::vector<std::string> closedForms;
    std::vector<std::string> figures;
};

const std::vector<EntryDoc>& entries();

/// Builds an entry by name from a parameter map; missing parameters take their
/// documented defaults. Throws std::invalid_argument for unknown names or
/// parameters.
CatalogEntry make(const std::string& name, const std::map<std::string, double>& params);

}  // namespace abelforge::catalog
