#include "abelforge/abel.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

#include "abelforge/errors.hpp"
#include "abelforge/kernels.hpp"

namespace abelforge {

const char* toString(Verdict v) noexcept {
    switch (v) {
        case Verdict::Integrable: return "Integrable";
        case Verdict::NotIntegrable: return "NotIntegrable";
        case Verdict::Indeterminate: return "Indeterminate";
    }
    return "?";
}

const char* toString(Provenance p) noexcept {
    switch (p) {
        case Provenance::Lemma2: return "Lemma2";
        case Provenance::FromG: return "FromG";
        case Provenance::FromH: return "FromH";
    }
    return "?";
}

AbelSecondKind reduceToAbel(const DissipativeOde& ode) { return {ode.g, ode.h}; }

AbelFirstKind toFirstKind(const AbelSecondKind& abel) { return {abel.h, abel.g}; }

std::vector<double> chebyshevGrid(Interval interval, std::size_t n) {
    std::vector<double> grid(n);
    const double mid = 0.5 * (interval.lo + interval.hi);
    const double half = 0.5 * (interval.hi - interval.lo);
    for (std::size_t i = 0; i < n; ++i) {
        // Descending cosines give ascending nodes.
        const double theta = std::numbers::pi * (2.0 * double(n - 1 - i) + 1.0) / (2.0 * double(n));
        grid[i] = mid + half * std::cos(theta);
    }
    return grid;
}

std::vector<double> uniformGrid(Interval interval, std::size_t n) {
    std::vector<double> grid(n);
    if (n == 1) {
        grid[0] = interval.lo;
        return grid;
    }
    for (std::size_t i = 0; i < n; ++i)
        grid[i] = interval.lo + (interval.hi - interval.lo) * double(i) / double(n - 1);
    grid.back() = interval.hi;
    return grid;
}

// ---------------------------------------------------------------------------
// Chiellini classification

ChielliniReport classifyChiellini(const DissipativeOde& ode, Interval interval, std::size_t n) {
    if (n < 16) throw std::invalid_argument("classification grid needs at least 16 points");
    if (!(interval.hi > interval.lo)) throw std::invalid_argument("interval must have positive length");

    const auto grid = chebyshevGrid(interval, n);
    const Expr ratio = Expr::binary(BinaryOp::Div, ode.h.expr(), ode.g.expr());
    const Expr ratioSlope = differentiate(ratio);

    const auto gv = kernels::evaluate(ode.g.expr(), grid);
    const auto dv = kernels::evaluate(ratioSlope, grid);
    const double epsG = 1e-9 * (1.0 + kernels::maxAbs(gv.values, gv.ok));

    ChielliniReport report;
    std::vector<double> pointwise;
    for (std::size_t i = 0; i < grid.size(); ++i) {
        if (!gv.ok[i] || !dv.ok[i] || std::abs(gv.values[i]) < epsG) continue;
        const double k = dv.values[i] / gv.values[i];
        if (!std::isfinite(k)) continue;
        pointwise.push_back(k);
        report.gridUsed.push_back(grid[i]);
    }
    if (pointwise.empty())
        throw AllPointsSingular("g vanishes or h/g is singular at every grid point");

    std::vector<double> sorted = pointwise;
    const std::size_t half = sorted.size() / 2;
    std::nth_element(sorted.begin(), sorted.begin() + half, sorted.end());
    double median = sorted[half];
    if (sorted.size() % 2 == 0) {
        const double below = *std::max_element(sorted.begin(), sorted.begin() + half);
        median = 0.5 * (below + median);
    }
    report.k = median;
    for (double k : pointwise)
        report.residual = std::max(report.residual, std::abs(k - median) / (1.0 + std::abs(median)));

    if (report.residual <= kIntegrableTolerance)
        report.verdict = Verdict::Integrable;
    else if (report.residual > kNotIntegrableTolerance)
        report.verdict = Verdict::NotIntegrable;
    else
        report.verdict = Verdict::Indeterminate;
    report.ckRoots = ckRoots(report.k);
    return report;
}

std::vector<double> ckRoots(double k) {
    if (k == 0.0) return {-1.0};
    const double disc = 1.0 - 4.0 * k;
    if (disc < 0.0) return {};
    if (disc == 0.0) return {-2.0};
    // q = -(1 + sqrt(disc))/2 avoids cancellation: roots are q/k and 1/q.
    const double q = -0.5 * (1.0 + std::sqrt(disc));
    return {q / k, 1.0 / q};
}

double ckRoot(double k, RootChoice choice) {
    const auto roots = ckRoots(k);
    if (roots.empty())
        throw NoRealRoot("k c^2 + c + 1 = 0 has no real root for k = " + std::to_string(k) +
                         " > 1/4");
    if (roots.size() == 1) return roots.front();
    return choice == RootChoice::Minus ? roots[0] : roots[1];
}

EtaField lemma2Eta(const DissipativeOde& ode, double k, RootChoice choice) {
    const double ck = ckRoot(k, choice);
    EtaField out;
    out.eta = ScalarField(num(ck) * (ode.h.expr() / ode.g.expr()));
    out.provenance = Provenance::Lemma2;
    out.constants = {{"k", k}, {"ck", ck}};
    out.ode = ode;
    return out;
}

// ---------------------------------------------------------------------------
// Antiderivatives

namespace {

using Poly = std::vector<double>;
constexpr std::size_t kMaxDegree = 64;

void trim(Poly& p) {
    while (p.size() > 1 && p.back() == 0.0) p.pop_back();
}

Poly addPoly(const Poly& a, const Poly& b, double sb) {
    Poly r(std::max(a.size(), b.size()), 0.0);
    for (std::size_t i = 0; i < a.size(); ++i) r[i] += a[i];
    for (std::size_t i = 0; i < b.size(); ++i) r[i] += sb * b[i];
    trim(r);
    return r;
}

std::optional<Poly> mulPoly(const Poly& a, const Poly& b) {
    if (a.size() + b.size() - 1 > kMaxDegree + 1) return std::nullopt;
    Poly r(a.size() + b.size() - 1, 0.0);
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
    trim(r);
    return r;
}

std::optional<Poly> asPolynomial(const Expr& e) {
    if (!e.dependsOnU()) {
        try {
            return Poly{evaluate(e, 0.0)};
        } catch (const Error&) {
            return std::nullopt;
        }
    }
    const auto& d = e.node().data;
    if (std::holds_alternative<ast::Var>(d)) return Poly{0.0, 1.0};
    if (const auto* n = std::get_if<ast::Neg>(&d)) {
        auto p = asPolynomial(n->operand);
        if (p)
            for (double& c : *p) c = -c;
        return p;
    }
    const auto* b = std::get_if<ast::Binary>(&d);
    if (!b) return std::nullopt;
    auto lhs = asPolynomial(b->lhs);
    if (!lhs) return std::nullopt;
    switch (b->op) {
        case BinaryOp::Add:
        case BinaryOp::Sub: {
            auto rhs = asPolynomial(b->rhs);
            if (!rhs) return std::nullopt;
            return addPoly(*lhs, *rhs, b->op == BinaryOp::Add ? 1.0 : -1.0);
        }
        case BinaryOp::Mul: {
            auto rhs = asPolynomial(b->rhs);
            if (!rhs) return std::nullopt;
            return mulPoly(*lhs, *rhs);
        }
        case BinaryOp::Div: {
            auto rhs = asPolynomial(b->rhs);
            if (!rhs || rhs->size() != 1 || (*rhs)[0] == 0.0) return std::nullopt;
            for (double& c : *lhs) c /= (*rhs)[0];
            return lhs;
        }
        case BinaryOp::Pow: {
            const auto ex = b->rhs.numberValue();
            if (!ex || *ex < 0.0 || *ex != std::trunc(*ex) || *ex > double(kMaxDegree))
                return std::nullopt;
            Poly r{1.0};
            for (int i = 0; i < int(*ex); ++i) {
                auto next = mulPoly(r, *lhs);
                if (!next) return std::nullopt;
                r = std::move(*next);
            }
            return r;
        }
    }
    return std::nullopt;
}

Expr polyToExpr(const Poly& p) {
    Expr acc;
    bool first = true;
    for (std::size_t i = 0; i < p.size(); ++i) {
        const double c = p[i];
        if (c == 0.0) continue;
        const Expr mono = i == 0 ? num(1.0) : (i == 1 ? var() : pow(var(), num(double(i))));
        if (first) {
            acc = num(c) * mono;
            first = false;
        } else if (c < 0.0) {
            acc = acc - num(-c) * mono;
        } else {
            acc = acc + num(c) * mono;
        }
    }
    return acc;
}

Poly integratePoly(const Poly& p) {
    Poly r(p.size() + 1, 0.0);
    for (std::size_t i = 0; i < p.size(); ++i) r[i + 1] = p[i] / double(i + 1);
    trim(r);
    return r;
}

/// Collapses an expression to canonical polynomial form when it is one.
Expr tidy(const Expr& e) {
    if (const auto p = asPolynomial(e)) return polyToExpr(*p);
    return e;
}

}  // namespace

std::optional<Expr> closedFormAntiderivative(const Expr& f) {
    if (const auto p = asPolynomial(f)) return polyToExpr(integratePoly(*p));
    const auto& d = f.node().data;
    if (const auto* n = std::get_if<ast::Neg>(&d)) {
        if (auto inner = closedFormAntiderivative(n->operand)) return -*inner;
        return std::nullopt;
    }
    if (const auto* b = std::get_if<ast::Binary>(&d)) {
        switch (b->op) {
            case BinaryOp::Add:
            case BinaryOp::Sub: {
                auto l = closedFormAntiderivative(b->lhs);
                auto r = closedFormAntiderivative(b->rhs);
                if (!l || !r) return std::nullopt;
                return b->op == BinaryOp::Add ? *l + *r : *l - *r;
            }
            case BinaryOp::Mul:
                if (!b->lhs.dependsOnU()) {
                    if (auto r = closedFormAntiderivative(b->rhs)) return b->lhs * *r;
                } else if (!b->rhs.dependsOnU()) {
                    if (auto l = closedFormAntiderivative(b->lhs)) return b->rhs * *l;
                }
                return std::nullopt;
            case BinaryOp::Div:
                if (!b->rhs.dependsOnU()) {
                    if (auto l = closedFormAntiderivative(b->lhs)) return *l / b->rhs;
                }
                return std::nullopt;
            case BinaryOp::Pow: return std::nullopt;
        }
    }
    if (const auto* c = std::get_if<ast::Call>(&d)) {
        const auto arg = asPolynomial(c->arg);
        if (!arg || arg->size() != 2 || (*arg)[1] == 0.0) return std::nullopt;
        const Expr slope = num((*arg)[1]);
        switch (c->fn) {
            case Func::Sin: return -(apply(Func::Cos, c->arg) / slope);
            case Func::Cos: return apply(Func::Sin, c->arg) / slope;
            case Func::Exp: return apply(Func::Exp, c->arg) / slope;
            default: return std::nullopt;
        }
    }
    return std::nullopt;
}

Expr antiderivative(const Expr& f, double base) {
    if (auto closed = closedFormAntiderivative(f)) return *closed;
    return Expr::antiderivative(f, base);
}

// ---------------------------------------------------------------------------
// Theorem constructions

EtaField etaFromG(const ScalarField& g, double k, double c0, RootChoice choice, Interval working) {
    const double ck = ckRoot(k, choice);
    const Expr G = antiderivative(g.expr(), working.lo);
    const Expr hOverG = tidy(num(c0) + num(k) * G);

    EtaField out;
    out.eta = ScalarField(tidy(num(ck) * hOverG));
    out.provenance = Provenance::FromG;
    out.constants = {{"k", k}, {"ck", ck}, {"c0", c0}};
    out.ode = DissipativeOde{g, ScalarField(g.expr() * hOverG)};
    out.admissible = working;
    return out;
}

namespace {

// Largest contiguous run of grid points where pred holds, with its ends refined
// by bisection against the neighbouring failing points.
template <class Pred>
std::optional<Interval> admissibleRun(Pred&& pred, Interval working, std::size_t n) {
    const auto grid = uniformGrid(working, n);
    std::vector<unsigned char> ok(grid.size());
    for (std::size_t i = 0; i < grid.size(); ++i) ok[i] = pred(grid[i]) ? 1 : 0;

    std::size_t bestStart = 0, bestLen = 0;
    for (std::size_t i = 0; i < grid.size();) {
        if (!ok[i]) {
            ++i;
            continue;
        }
        std::size_t j = i;
        while (j < grid.size() && ok[j]) ++j;
        if (j - i > bestLen) {
            bestStart = i;
            bestLen = j - i;
        }
        i = j;
    }
    if (bestLen == 0) return std::nullopt;

    auto refine = [&](double good, double bad) {
        for (int it = 0; it < 200; ++it) {
            const double mid = 0.5 * (good + bad);
            if (mid == good || mid == bad) break;
            (pred(mid) ? good : bad) = mid;
        }
        return good;
    };
    const std::size_t last = bestStart + bestLen - 1;
    Interval run{grid[bestStart], grid[last]};
    if (bestStart > 0) run.lo = refine(grid[bestStart], grid[bestStart - 1]);
    if (last + 1 < grid.size()) run.hi = refine(grid[last], grid[last + 1]);
    return run;
}

}  // namespace

EtaField etaFromH(const ScalarField& h, double k, double c1, RootChoice choice, Sign sign,
                  Interval working) {
    const double ck = ckRoot(k, choice);
    const double s = sign == Sign::Plus ? 1.0 : -1.0;
    const Expr H = antiderivative(h.expr(), working.lo);
    const Expr radicand = tidy(num(c1) + num(2.0 * k) * H);

    auto nonNegative = [&](double u) {
        try {
            return evaluate(radicand, u) >= 0.0;
        } catch (const Error&) {
            return false;
        }
    };
    const auto run = admissibleRun(nonNegative, working, 1025);
    if (!run)
        throw EmptyDomain("c1 + 2k*integral(h) is negative on the whole working interval [" +
                          std::to_string(working.lo) + ", " + std::to_string(working.hi) + "]");

    const Expr root = apply(Func::Sqrt, radicand);
    EtaField out;
    out.eta = ScalarField(num(s * ck) * root);
    out.provenance = Provenance::FromH;
    out.constants = {{"k", k}, {"ck", ck}, {"c1", c1}, {"sign", s}};
    out.ode = DissipativeOde{ScalarField(s > 0 ? h.expr() / root : -(h.expr() / root)), h};
    out.admissible = *run;
    return out;
}

// ---------------------------------------------------------------------------
// Residuals

double abelResidual(const EtaField& f, double u) {
    const double eta = f.eta.value(u);
    const double slope = f.eta.slope(u);
    const double g = f.ode.g.value(u);
    const double h = f.ode.h.value(u);
    return std::abs(eta * slope + g * eta + h) / (1.0 + std::abs(h));
}

double maxAbelResidual(const EtaField& f, std::span<const double> grid) {
    const auto eta = kernels::evaluate(f.eta.expr(), grid);
    const auto slope = kernels::evaluate(f.eta.derivative(), grid);
    const auto g = kernels::evaluate(f.ode.g.expr(), grid);
    const auto h = kernels::evaluate(f.ode.h.expr(), grid);
    double worst = 0.0;
    for (std::size_t i = 0; i < grid.size(); ++i) {
        if (!(eta.ok[i] && slope.ok[i] && g.ok[i] && h.ok[i])) continue;
        const double r = std::abs(eta.values[i] * slope.values[i] + g.values[i] * eta.values[i] +
                                  h.values[i]) /
                         (1.0 + std::abs(h.values[i]));
        worst = std::max(worst, r);
    }
    return worst;
}

// ---------------------------------------------------------------------------
// Separated z-equation

double abelImplicitAntiderivative(double z, double k) {
    if (z == 0.0) throw PoleError("pole of 1/(z(z^2+z+k)) at z = 0");
    if (k == 0.0) {
        // 1/(z^2 (z+1)) = -1/z + 1/z^2 + 1/(z+1)
        if (z == -1.0) throw PoleError("pole of 1/(z^2(z+1)) at z = -1");
        return -std::log(std::abs(z)) - 1.0 / z + std::log(std::abs(z + 1.0));
    }
    if (k == 0.25) {
        // 1/(z (z+1/2)^2) = 4/z - 4/(z+1/2) - 2/(z+1/2)^2
        const double w = z + 0.5;
        if (w == 0.0) throw PoleError("double pole at z = -1/2");
        return 4.0 * std::log(std::abs(z)) - 4.0 * std::log(std::abs(w)) + 2.0 / w;
    }
    if (k < 0.25) {
        const double s = std::sqrt(1.0 - 4.0 * k);
        const double z1 = 0.5 * (-1.0 + s);
        const double z2 = 0.5 * (-1.0 - s);
        if (z == z1 || z == z2)
            throw PoleError("pole at a real root of z^2 + z + k (k = " + std::to_string(k) + ")");
        const double a = 1.0 / k;
        const double b = 1.0 / (z1 * (z1 - z2));
        const double c = 1.0 / (z2 * (z2 - z1));
        return a * std::log(std::abs(z)) + b * std::log(std::abs(z - z1)) +
               c * std::log(std::abs(z - z2));
    }
    const double r = std::sqrt(4.0 * k - 1.0);
    const double q = z * z + z + k;
    return (std::log(std::abs(z) / std::sqrt(q)) - std::atan((2.0 * z + 1.0) / r) / r) / k;
}

double abelImplicitResidual(double z, double k, double hOverG, double branchConstant) {
    if (k == 0.0) throw DomainError("the logarithmic right-hand side needs k != 0");
    if (hOverG == 0.0) throw DomainError("h/g must be non-zero");
    return abelImplicitAntiderivative(z, k) - std::log(std::abs(hOverG)) / k - branchConstant;
}

double zFlowRhs(double z, double k, double g, double h) {
    if (h == 0.0) throw DomainError("z-equation is singular where h = 0");
    return (g * g / h) * (z * z * z + z * z + k * z);
}

// ---------------------------------------------------------------------------
// Factorization

Factorization factorize(const DissipativeOde& ode, const EtaField& eta) {
    return {ScalarField(Expr::binary(BinaryOp::Div, eta.eta.expr(), var())),
            ScalarField(Expr::binary(BinaryOp::Div, ode.h.expr(), eta.eta.expr()))};
}

double evaluateWithLimit(const Expr& e, double u) {
    try {
        return evaluate(e, u);
    } catch (const DomainError&) {
        const double delta = 1e-6 * (1.0 + std::abs(u));
        const double left = evaluate(e, u - delta);
        const double right = evaluate(e, u + delta);
        if (std::abs(left - right) > 1e-4 * (1.0 + std::abs(left) + std::abs(right))) throw;
        return 0.5 * (left + right);
    }
}

FactorizationCheck verifyFactorization(const Factorization& f, const DissipativeOde& ode,
                                       const EtaField& eta, std::span<const double> grid) {
    FactorizationCheck out;
    const Expr hOverU = Expr::binary(BinaryOp::Div, ode.h.expr(), var());
    for (double u : grid) {
        try {
            const double p1 = evaluateWithLimit(f.phi1.expr(), u);
            const double dp1 = evaluateWithLimit(f.phi1.derivative(), u);
            const double p2 = evaluateWithLimit(f.phi2.expr(), u);
            const double g = ode.g.value(u);
            const double hu = evaluateWithLimit(hOverU, u);
            const double e = eta.eta.value(u);
            out.product = std::max(out.product, std::abs(p1 * p2 - hu));
            out.sum = std::max(out.sum, std::abs(p1 + p2 + dp1 * u + g));
            out.factorEq = std::max(out.factorEq, std::abs(p1 * (p1 + dp1 * u) + g * p1 + hu));
            out.etaIdentity = std::max(out.etaIdentity, std::abs(u * p1 - e));
            ++out.points;
        } catch (const DomainError&) {
        }
    }
    return out;
}

}  // namespace abelforge
