#include "abelforge/invert.hpp"

#include <algorithm>
#include <boost/math/tools/roots.hpp>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

#include "abelforge/errors.hpp"
#include "abelforge/quadrature.hpp"

namespace abelforge {

const char* toString(EventKind kind) noexcept {
    switch (kind) {
        case EventKind::TurningPoint: return "TurningPoint";
        case EventKind::DomainEdge: return "DomainEdge";
        case EventKind::Truncated: return "Truncated";
    }
    return "?";
}

namespace {

constexpr double kQuadTol = 1e-13;
// |eta| below this fraction of the segment's eta scale counts as a zero of eta.
constexpr double kZeroEta = 1e-6;
// |h| above this at a zero of eta makes it a turning point.
constexpr double kTurningH = 1e-6;
constexpr double kEquilibrium = 1e-12;
constexpr double kMaxStepU = 0.05;
constexpr std::size_t kMaxNodes = 2'000'000;

double sgn(double x) { return x < 0.0 ? -1.0 : 1.0; }

std::optional<double> tryEta(const EtaField& f, double u) {
    try {
        const double v = f.eta.value(u);
        if (std::isfinite(v)) return v;
    } catch (const DomainError&) {
    }
    return std::nullopt;
}

/// A zero of eta at an end of a monotone stretch. Close to it eta is replaced
/// by its square-root model, since eta itself loses relative accuracy there.
struct ZeroEnd {
    double u;
    double inward;  // direction from u into the region where eta is real
    double refEta;  // eta at u + inward*ref
    double ref;
};

ZeroEnd makeZeroEnd(const EtaField& f, double u, double inward) {
    const double ref = 1e-9 * (1.0 + std::abs(u));
    const auto e = tryEta(f, u + inward * ref);
    if (!e || *e == 0.0)
        throw QuadratureFailure("eta is not evaluable next to its zero at u = " + std::to_string(u));
    return {u, inward, *e, ref};
}

/// A simple zero of eta with h = 0 there. Close to it eta = s1 x (1 + c x)
/// with x = r - u, and 1/eta is integrated from that model in closed form;
/// quadrature cannot resolve the log singularity once eta is mostly roundoff.
struct Equilibrium {
    double u;
    double s1;
    double c;
    double near;
};

std::optional<Equilibrium> makeEquilibrium(const EtaField& f, double u) {
    try {
        const double s1 = f.eta.slope(u);
        const double s2 = evaluate(differentiate(f.eta.derivative()), u);
        if (s1 == 0.0 || !std::isfinite(s1) || !std::isfinite(s2)) return std::nullopt;
        return Equilibrium{u, s1, s2 / (2.0 * s1), 1e-6 * (1.0 + std::abs(u))};
    } catch (const DomainError&) {
        return std::nullopt;
    }
}

/// integral_a^b dr / (sigma eta(r)).
double integrateSegment(const EtaField& f, double sigma, double a, double b,
                        const std::vector<ZeroEnd>& zeros, const std::optional<Equilibrium>& eq = {}) {
    if (a == b) return 0.0;
    if (eq && std::abs(a - eq->u) <= eq->near && std::abs(b - eq->u) <= eq->near) {
        const double xa = a - eq->u, xb = b - eq->u;
        return (std::log(std::abs(xb / xa)) - eq->c * (xb - xa)) / (sigma * eq->s1);
    }
    auto integrand = [&](double x, double dl, double dr) {
        for (const auto& z : zeros) {
            double dist;
            if (z.u == a)
                dist = dl;
            else if (z.u == b)
                dist = dr;
            else
                dist = std::abs(x - z.u);
            if (dist < z.ref) return 1.0 / (sigma * z.refEta * std::sqrt(dist / z.ref));
        }
        const auto e = tryEta(f, x);
        if (!e || *e == 0.0)
            throw QuadratureFailure("eta vanishes or fails inside the integration range at u = " +
                                    std::to_string(x));
        return 1.0 / (sigma * *e);
    };
    TanhSinhOptions opt;
    opt.absTol = kQuadTol;
    opt.relTol = kQuadTol;
    const auto r = tanhSinh(integrand, a, b, opt);
    if (!std::isfinite(r.value) || (!r.converged && r.error > 1e-10))
        throw QuadratureFailure("integral of 1/eta over [" + std::to_string(std::min(a, b)) + ", " +
                                std::to_string(std::max(a, b)) + "] did not converge");
    return r.value;
}

struct DirectionResult {
    std::vector<CurveSample> samples;  // zeta here is the elapsed time t >= 0
    std::vector<CurveEvent> events;
};

/// Integrates du/dt = sigma eta(u) for t >= 0 from u0 and samples it at the
/// ascending targets.
class Marcher {
public:
    Marcher(const EtaField& f, double u0, double sigma, int maxTurning)
        : f_(f), maxTurning_(maxTurning) {
        // A u0 on the rim of the admissible set may round to just outside it;
        // startAtZero rejects it unless eta is real right next to it.
        const auto e0 = tryEta(f, u0);
        if (!e0 || std::abs(*e0) <= kZeroEta) {
            startAtZero(u0);
        } else {
            scale_ = std::max(1.0, std::abs(*e0));
            sigma_ = sigma;
            d_ = sgn(sigma * *e0);
            etaSign_ = sgn(*e0);
        }
        nodes_.push_back({u0, 0.0});
        base_ = nodes_.front();
    }

    DirectionResult run(const std::vector<double>& targets) {
        DirectionResult out;
        if (constant_) {
            for (double t : targets) out.samples.push_back({t, nodes_.front().u, 0.0});
            return out;
        }
        std::size_t i = 0;
        while (i < targets.size()) {
            const double t = targets[i];
            while (!ended_ && nodes_.back().t < t) advance(out);
            if (nodes_.back().t >= t) {
                out.samples.push_back(solve(t));
                ++i;
                continue;
            }
            // The segment ended before t.
            if (end_ == End::Turning) {
                out.events.push_back({nodes_.back().t, EventKind::TurningPoint, nodes_.back().u});
                if (++turns_ > maxTurning_) {
                    out.events.back().kind = EventKind::Truncated;
                    break;
                }
                reflect();
                continue;
            }
            out.events.push_back({nodes_.back().t, end_ == End::Truncated ? EventKind::Truncated
                                                                          : EventKind::DomainEdge,
                                  nodes_.back().u});
            break;
        }
        return out;
    }

private:
    struct Node {
        double u;
        double t;
    };
    enum class End { None, Turning, Edge, Truncated };

    const EtaField& f_;
    int maxTurning_;
    double sigma_ = 1.0;
    double d_ = 1.0;        // direction of motion in u on the current stretch
    double etaSign_ = 1.0;  // sign of eta on the current stretch
    double scale_ = 1.0;
    bool constant_ = false;
    std::vector<ZeroEnd> zeros_;
    std::vector<Node> nodes_;
    std::size_t nodeIndex_ = 0;  // interval [nodes_[k], nodes_[k+1]] holding base_
    Node base_{};
    bool ended_ = false;
    End end_ = End::None;
    std::optional<double> equilibrium_;
    std::optional<Equilibrium> model_;
    int turns_ = 0;
    double lastDu_ = kMaxStepU;

    bool admissible(double u) const {
        const auto e = tryEta(f_, u);
        return e && *e != 0.0 && sgn(*e) == etaSign_;
    }

    // d|eta|/du along the direction of motion.
    std::optional<double> growth(double u) const {
        try {
            const double s = f_.eta.slope(u);
            if (std::isfinite(s)) return etaSign_ * s * d_;
        } catch (const DomainError&) {
        }
        return std::nullopt;
    }

    void startAtZero(double u0) {
        const double probe = 1e-6 * (1.0 + std::abs(u0));
        const auto right = tryEta(f_, u0 + probe);
        const auto left = tryEta(f_, u0 - probe);
        const bool rightOk = right && *right != 0.0;
        const bool leftOk = left && *left != 0.0;
        if (!rightOk && !leftOk) throw DomainError("u0 is outside the admissible domain of eta");
        double hAbs = std::abs(f_.ode.h.value(u0));
        if (hAbs <= kTurningH) {
            // Equilibrium: the solution through u0 with u' = 0 is constant.
            constant_ = true;
            return;
        }
        // Leave on the side that keeps u' = +eta when both are available.
        if (rightOk && (*right > 0.0 || !leftOk))
            d_ = 1.0;
        else
            d_ = -1.0;
        const double e = d_ > 0 ? *right : *left;
        etaSign_ = sgn(e);
        sigma_ = d_ * etaSign_;
        zeros_.push_back(makeZeroEnd(f_, u0, d_));
    }

    void reflect() {
        const Node turn = nodes_.back();
        sigma_ = -sigma_;
        d_ = -d_;
        zeros_.clear();
        zeros_.push_back(makeZeroEnd(f_, turn.u, d_));
        nodes_.assign(1, turn);
        nodeIndex_ = 0;
        base_ = turn;
        ended_ = false;
        end_ = End::None;
        lastDu_ = kMaxStepU;
    }

    void addNode(double u) {
        const Node& last = nodes_.back();
        const double t = last.t + integrateSegment(f_, sigma_, last.u, u, zeros_, model_);
        nodes_.push_back({u, t});
        if (nodes_.size() > kMaxNodes || std::abs(u) > 1e15) {
            ended_ = true;
            end_ = End::Truncated;
        }
    }

    // Boundary between a good point and a bad one, to machine precision.
    template <class Bad>
    double bisect(double good, double bad, Bad&& isBad) const {
        for (int it = 0; it < 200; ++it) {
            const double mid = 0.5 * (good + bad);
            if (mid == good || mid == bad) break;
            (isBad(mid) ? bad : good) = mid;
        }
        return good;
    }

    void advance(DirectionResult& out) {
        (void)out;
        const double u = nodes_.back().u;
        // Only a zero end (turning point or rim start) can fail to evaluate.
        const double eta = tryEta(f_, u).value_or(0.0);
        if (equilibrium_ && std::abs(eta) < kEquilibrium && std::abs(f_.ode.h.value(u)) < kEquilibrium) {
            ended_ = true;
            end_ = End::Edge;
            return;
        }
        const auto gr = growth(u);
        double du = kMaxStepU * (1.0 + std::abs(u));
        if (!gr)
            du = std::min(du, 0.5 * lastDu_);
        else if (*gr < 0.0)
            du = std::min(du, 1.5 * std::abs(eta / *gr));
        if (equilibrium_) du = std::min(du, 0.5 * std::abs(*equilibrium_ - u));
        lastDu_ = du;
        const double un = u + d_ * du;
        if (un == u) {
            ended_ = true;
            end_ = End::Edge;
            return;
        }
        if (equilibrium_) {
            addNode(un);
            return;
        }

        const bool grOk = gr.has_value();
        auto isBad = [&](double x) {
            if (!admissible(x)) return true;
            if (!grOk || *gr >= 0.0) return false;
            const auto g2 = growth(x);
            return g2 && *g2 > 0.0;
        };
        if (!isBad(un)) {
            scale_ = std::max(scale_, std::abs(eta));
            addNode(un);
            return;
        }
        const double ub = bisect(u, un, isBad);
        const double etaB = tryEta(f_, ub).value_or(0.0);
        const bool zero = std::abs(etaB) <= kZeroEta * scale_;
        if (!zero) {
            if (admissible(un)) {
                // A dip of |eta| that does not reach zero.
                addNode(un);
                return;
            }
            // eta stops being real or changes sign without vanishing.
            if (ub != u) addNode(ub);
            ended_ = true;
            end_ = End::Edge;
            return;
        }
        if (std::abs(f_.ode.h.value(ub)) > kTurningH) {
            zeros_.push_back(makeZeroEnd(f_, ub, -d_));
            addNode(ub);
            ended_ = true;
            end_ = End::Turning;
            return;
        }
        // Equilibrium: approached only asymptotically.
        equilibrium_ = ub;
        model_ = makeEquilibrium(f_, ub);
    }

    CurveSample solve(double t) {
        while (nodes_[nodeIndex_ + 1].t < t) {
            ++nodeIndex_;
            base_ = nodes_[nodeIndex_];
        }
        const Node& hiNode = nodes_[nodeIndex_ + 1];
        double u;
        if (t == hiNode.t) {
            u = hiNode.u;
        } else if (t == base_.t) {
            u = base_.u;
        } else {
            const double lo = std::min(base_.u, hiNode.u);
            const double hi = std::max(base_.u, hiNode.u);
            const Node b = base_;
            auto fn = [&](double x) {
                const double value = b.t + integrateSegment(f_, sigma_, b.u, x, zeros_, model_) - t;
                const auto e = tryEta(f_, x);
                const double slope = e && *e != 0.0 ? 1.0 / (sigma_ * *e) : 0.0;
                return std::make_pair(value, slope);
            };
            // Linear guess from the bracket, kept strictly inside.
            const double frac = (t - b.t) / (hiNode.t - b.t);
            const double guess = std::clamp(b.u + frac * (hiNode.u - b.u), lo, hi);
            std::uintmax_t iterations = 100;
            u = boost::math::tools::newton_raphson_iterate(fn, guess, lo, hi, 40, iterations);
            if (iterations >= 100 || !(u >= lo && u <= hi))
                throw BracketFailure("inversion did not converge at zeta offset " + std::to_string(t));
        }
        base_ = {u, t};
        const auto e = tryEta(f_, u);
        return {t, u, sigma_ * (e ? *e : 0.0)};
    }
};

}  // namespace

std::vector<ZetaPoint> quadratureMap(const EtaField& f, double u0, std::span<const double> uGrid) {
    double lo = u0, hi = u0;
    for (double u : uGrid) {
        lo = std::min(lo, u);
        hi = std::max(hi, u);
    }
    std::vector<ZetaPoint> out;
    out.reserve(uGrid.size());
    if (lo == hi) {
        for (double u : uGrid) out.push_back({u, 0.0});
        return out;
    }

    // eta must be real, non-zero and single-signed strictly inside the hull.
    const auto inside = uniformGrid({lo, hi}, 1025);
    double sign = 0.0;
    for (std::size_t i = 1; i + 1 < inside.size(); ++i) {
        const auto e = tryEta(f, inside[i]);
        if (!e || *e == 0.0 || (sign != 0.0 && sgn(*e) != sign))
            throw InteriorZero("eta vanishes or changes sign inside [" + std::to_string(lo) + ", " +
                               std::to_string(hi) + "] near u = " + std::to_string(inside[i]));
        sign = sgn(*e);
    }
    const double scale = std::max(1.0, std::abs(f.eta.value(inside[inside.size() / 2])));
    std::vector<ZeroEnd> zeros;
    for (const auto& [end, inward] : {std::pair{lo, 1.0}, std::pair{hi, -1.0}}) {
        const auto e = tryEta(f, end);
        if (!e || std::abs(*e) <= kZeroEta * scale) zeros.push_back(makeZeroEnd(f, end, inward));
    }

    // Accumulate outward from u0 on each side.
    std::vector<std::size_t> order(uGrid.size());
    for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
    std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
        return std::abs(uGrid[a] - u0) < std::abs(uGrid[b] - u0);
    });
    std::vector<double> zeta(uGrid.size());
    double upU = u0, upZ = 0.0, downU = u0, downZ = 0.0;
    for (std::size_t idx : order) {
        const double u = uGrid[idx];
        double& fromU = u >= u0 ? upU : downU;
        double& fromZ = u >= u0 ? upZ : downZ;
        fromZ += integrateSegment(f, 1.0, fromU, u, zeros);
        fromU = u;
        zeta[idx] = fromZ;
    }
    for (std::size_t i = 0; i < uGrid.size(); ++i) out.push_back({uGrid[i], zeta[i]});
    return out;
}

std::vector<double> sampleGrid(Interval span, double step) {
    if (!(step > 0.0)) throw std::invalid_argument("step must be positive");
    std::vector<double> grid;
    const double len = span.hi - span.lo;
    if (!(len > 0.0)) return grid;
    // Allow for rounding in len/step so that an exact multiple includes hi.
    const auto n = static_cast<std::size_t>(std::floor(len / step * (1.0 + 1e-12)));
    grid.reserve(n + 1);
    for (std::size_t i = 0; i <= n; ++i) grid.push_back(span.lo + double(i) * step);
    return grid;
}

SolutionCurve invert(const EtaField& f, double zeta0, double u0, Interval span, double step,
                     const InvertOptions& options) {
    const auto grid = sampleGrid(span, step);
    std::vector<double> ahead, behind;
    for (double z : grid) {
        if (z >= zeta0)
            ahead.push_back(z - zeta0);
        else
            behind.push_back(zeta0 - z);
    }
    std::reverse(behind.begin(), behind.end());

    SolutionCurve curve;
    curve.baseZeta = zeta0;
    curve.baseU = u0;

    // Backward in zeta is forward in t = zeta0 - zeta with the branch sign flipped.
    if (!behind.empty()) {
        Marcher back(f, u0, -1.0, options.maxTurningPoints);
        auto res = back.run(behind);
        for (auto it = res.samples.rbegin(); it != res.samples.rend(); ++it)
            curve.samples.push_back({zeta0 - it->zeta, it->u, -it->uPrime});
        for (auto it = res.events.rbegin(); it != res.events.rend(); ++it)
            curve.events.push_back({zeta0 - it->zeta, it->kind, it->u});
    }
    if (!ahead.empty()) {
        Marcher fwd(f, u0, 1.0, options.maxTurningPoints);
        auto res = fwd.run(ahead);
        for (const auto& s : res.samples) curve.samples.push_back({zeta0 + s.zeta, s.u, s.uPrime});
        for (const auto& e : res.events) curve.events.push_back({zeta0 + e.zeta, e.kind, e.u});
    }
    return curve;
}

SolutionCurve rk4Reference(const DissipativeOde& ode, double zeta0, double u0, double uPrime0,
                           Interval span, double step) {
    if (!(step > 0.0)) throw std::invalid_argument("step must be positive");
    const auto grid = sampleGrid(span, step);
    SolutionCurve curve;
    curve.baseZeta = zeta0;
    curve.baseU = u0;

    auto accel = [&](double u, double v) { return -ode.g.value(u) * v - ode.h.value(u); };
    auto integrate = [&](double& z, double& u, double& v, double target) {
        const double len = target - z;
        if (len == 0.0) return;
        const auto n = static_cast<long>(std::ceil(std::abs(len) / step * (1.0 - 1e-12)));
        const double h = len / double(std::max(n, 1L));
        for (long i = 0; i < std::max(n, 1L); ++i) {
            const double k1u = v, k1v = accel(u, v);
            const double k2u = v + 0.5 * h * k1v, k2v = accel(u + 0.5 * h * k1u, v + 0.5 * h * k1v);
            const double k3u = v + 0.5 * h * k2v, k3v = accel(u + 0.5 * h * k2u, v + 0.5 * h * k2v);
            const double k4u = v + h * k3v, k4v = accel(u + h * k3u, v + h * k3v);
            u += h / 6.0 * (k1u + 2.0 * k2u + 2.0 * k3u + k4u);
            v += h / 6.0 * (k1v + 2.0 * k2v + 2.0 * k3v + k4v);
            if (!std::isfinite(u) || !std::isfinite(v))
                throw DomainError("RK4 state became non-finite near zeta = " + std::to_string(z));
        }
        z = target;
    };

    std::vector<CurveSample> behind;
    {
        double z = zeta0, u = u0, v = uPrime0;
        for (auto it = grid.rbegin(); it != grid.rend(); ++it) {
            if (*it >= zeta0) continue;
            integrate(z, u, v, *it);
            behind.push_back({*it, u, v});
        }
    }
    curve.samples.assign(behind.rbegin(), behind.rend());
    double z = zeta0, u = u0, v = uPrime0;
    for (double target : grid) {
        if (target < zeta0) continue;
        integrate(z, u, v, target);
        curve.samples.push_back({target, u, v});
    }
    return curve;
}

}  // namespace abelforge
