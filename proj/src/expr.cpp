#include "abelforge/expr.hpp"

#include <array>
#include <cmath>
#include <utility>

#include "abelforge/errors.hpp"
#include "abelforge/quadrature.hpp"

namespace abelforge {

namespace {

constexpr std::array<std::pair<Func, std::string_view>, 9> kFunctionNames{{
    {Func::Sin, "sin"},
    {Func::Cos, "cos"},
    {Func::Tan, "tan"},
    {Func::Sqrt, "sqrt"},
    {Func::Exp, "exp"},
    {Func::Ln, "ln"},
    {Func::Abs, "abs"},
    {Func::Sech, "sech"},
    {Func::Tanh, "tanh"},
}};

template <class... Ts>
struct Overloaded : Ts... {
    using Ts::operator()...;
};
template <class... Ts>
Overloaded(Ts...) -> Overloaded<Ts...>;

std::shared_ptr<const Node> makeNode(auto data, bool hasVar) {
    return std::make_shared<const Node>(Node{std::move(data), hasVar});
}

[[noreturn]] void domainError(const std::string& what, const Expr& at) {
    throw DomainError(what + " in " + describe(at), describe(at));
}

double checked(double value, const Expr& at) {
    if (!std::isfinite(value)) domainError("non-finite value", at);
    return value;
}

double applyFunc(Func fn, double x, const Expr& at) {
    switch (fn) {
        case Func::Sin: return std::sin(x);
        case Func::Cos: return std::cos(x);
        case Func::Tan: return checked(std::tan(x), at);
        case Func::Sqrt:
            if (x < 0.0) domainError("sqrt of negative", at);
            return std::sqrt(x);
        case Func::Exp: return checked(std::exp(x), at);
        case Func::Ln:
            if (x <= 0.0) domainError("ln of non-positive", at);
            return std::log(x);
        case Func::Abs: return std::abs(x);
        case Func::Sech: return 1.0 / std::cosh(x);
        case Func::Tanh: return std::tanh(x);
    }
    return 0.0;
}

double applyBinary(BinaryOp op, double a, double b, const Expr& at) {
    switch (op) {
        case BinaryOp::Add: return checked(a + b, at);
        case BinaryOp::Sub: return checked(a - b, at);
        case BinaryOp::Mul: return checked(a * b, at);
        case BinaryOp::Div:
            if (b == 0.0) domainError("division by zero", at);
            return checked(a / b, at);
        case BinaryOp::Pow:
            if (a < 0.0 && b != std::trunc(b)) domainError("non-integer power of negative", at);
            if (a == 0.0 && b < 0.0) domainError("negative power of zero", at);
            return checked(std::pow(a, b), at);
    }
    return 0.0;
}

}  // namespace

std::string_view functionName(Func fn) noexcept {
    for (const auto& [f, name] : kFunctionNames)
        if (f == fn) return name;
    return "?";
}

std::optional<Func> functionFromName(std::string_view name) noexcept {
    for (const auto& [f, n] : kFunctionNames)
        if (n == name) return f;
    return std::nullopt;
}

Expr::Expr() : node_(makeNode(ast::Number{0.0}, false)) {}

Expr Expr::number(double value) { return Expr(makeNode(ast::Number{value}, false)); }

Expr Expr::variable() { return Expr(makeNode(ast::Var{}, true)); }

Expr Expr::negate(Expr operand) {
    if (auto v = operand.numberValue()) return number(-*v);
    const bool hv = operand.dependsOnU();
    return Expr(makeNode(ast::Neg{std::move(operand)}, hv));
}

Expr Expr::binary(BinaryOp op, Expr lhs, Expr rhs) {
    const bool hv = lhs.dependsOnU() || rhs.dependsOnU();
    return Expr(makeNode(ast::Binary{op, std::move(lhs), std::move(rhs)}, hv));
}

Expr Expr::call(Func fn, Expr arg) {
    const bool hv = arg.dependsOnU();
    return Expr(makeNode(ast::Call{fn, std::move(arg)}, hv));
}

Expr Expr::antiderivative(Expr integrand, double base) {
    return Expr(makeNode(ast::Antiderivative{std::move(integrand), base}, true));
}

bool Expr::dependsOnU() const noexcept { return node_->hasVar; }

std::optional<double> Expr::numberValue() const noexcept {
    if (const auto* n = std::get_if<ast::Number>(&node_->data)) return n->value;
    return std::nullopt;
}

bool Expr::isNumber(double value) const noexcept {
    const auto v = numberValue();
    return v && *v == value;
}

bool operator==(const Expr& a, const Expr& b) noexcept {
    if (a.node_ == b.node_) return true;
    const auto& da = a.node_->data;
    const auto& db = b.node_->data;
    if (da.index() != db.index()) return false;
    return std::visit(
        Overloaded{
            [&](const ast::Number& x) { return x.value == std::get<ast::Number>(db).value; },
            [&](const ast::Var&) { return true; },
            [&](const ast::Neg& x) { return x.operand == std::get<ast::Neg>(db).operand; },
            [&](const ast::Binary& x) {
                const auto& y = std::get<ast::Binary>(db);
                return x.op == y.op && x.lhs == y.lhs && x.rhs == y.rhs;
            },
            [&](const ast::Call& x) {
                const auto& y = std::get<ast::Call>(db);
                return x.fn == y.fn && x.arg == y.arg;
            },
            [&](const ast::Antiderivative& x) {
                const auto& y = std::get<ast::Antiderivative>(db);
                return x.base == y.base && x.integrand == y.integrand;
            },
        },
        da);
}

// ---------------------------------------------------------------------------
// Simplifying constructors

namespace {

bool foldable(double v) { return std::isfinite(v); }

const ast::Neg* asNeg(const Expr& e) { return std::get_if<ast::Neg>(&e.node().data); }

const ast::Binary* asBinary(const Expr& e, BinaryOp op) {
    const auto* b = std::get_if<ast::Binary>(&e.node().data);
    return (b && b->op == op) ? b : nullptr;
}

}  // namespace

Expr operator+(const Expr& a, const Expr& b) {
    const auto va = a.numberValue();
    const auto vb = b.numberValue();
    if (va && vb && foldable(*va + *vb)) return num(*va + *vb);
    if (a.isNumber(0.0)) return b;
    if (b.isNumber(0.0)) return a;
    if (const auto* n = asNeg(b)) return a - n->operand;
    if (vb && *vb < 0.0) return Expr::binary(BinaryOp::Sub, a, num(-*vb));
    return Expr::binary(BinaryOp::Add, a, b);
}

Expr operator-(const Expr& a, const Expr& b) {
    const auto va = a.numberValue();
    const auto vb = b.numberValue();
    if (va && vb && foldable(*va - *vb)) return num(*va - *vb);
    if (b.isNumber(0.0)) return a;
    if (a.isNumber(0.0)) return -b;
    if (const auto* n = asNeg(b)) return a + n->operand;
    if (vb && *vb < 0.0) return Expr::binary(BinaryOp::Add, a, num(-*vb));
    return Expr::binary(BinaryOp::Sub, a, b);
}

Expr operator-(const Expr& a) {
    if (const auto* n = asNeg(a)) return n->operand;
    if (const auto* m = asBinary(a, BinaryOp::Mul)) {
        if (auto c = m->lhs.numberValue()) return num(-*c) * m->rhs;
    }
    return Expr::negate(a);
}

Expr operator*(const Expr& a, const Expr& b) {
    const auto va = a.numberValue();
    const auto vb = b.numberValue();
    if (va && vb && foldable(*va * *vb)) return num(*va * *vb);
    if (a.isNumber(0.0) || b.isNumber(0.0)) return num(0.0);
    if (a.isNumber(1.0)) return b;
    if (b.isNumber(1.0)) return a;
    if (a.isNumber(-1.0)) return -b;
    if (b.isNumber(-1.0)) return -a;
    // Keep literal factors on the left and merge them.
    if (vb && !va) return b * a;
    if (va) {
        if (const auto* n = asNeg(b)) return num(-*va) * n->operand;
        if (const auto* m = asBinary(b, BinaryOp::Mul)) {
            if (auto c = m->lhs.numberValue()) return num(*va * *c) * m->rhs;
        }
    }
    if (const auto* n = asNeg(a)) return -(n->operand * b);
    if (const auto* n = asNeg(b)) return -(a * n->operand);
    return Expr::binary(BinaryOp::Mul, a, b);
}

Expr operator/(const Expr& a, const Expr& b) {
    const auto va = a.numberValue();
    const auto vb = b.numberValue();
    if (va && vb && *vb != 0.0 && foldable(*va / *vb)) return num(*va / *vb);
    if (b.isNumber(1.0)) return a;
    if (b.isNumber(-1.0)) return -a;
    if (a.isNumber(0.0) && vb && *vb != 0.0) return num(0.0);
    return Expr::binary(BinaryOp::Div, a, b);
}

Expr pow(const Expr& base, const Expr& exponent) {
    if (exponent.isNumber(1.0)) return base;
    if (exponent.isNumber(0.0)) return num(1.0);
    const auto vb = base.numberValue();
    const auto ve = exponent.numberValue();
    if (vb && ve) {
        try {
            return num(applyBinary(BinaryOp::Pow, *vb, *ve, base));
        } catch (const DomainError&) {
        }
    }
    return Expr::binary(BinaryOp::Pow, base, exponent);
}

Expr apply(Func fn, const Expr& arg) {
    if (auto v = arg.numberValue()) {
        try {
            const double r = applyFunc(fn, *v, arg);
            if (std::isfinite(r)) return num(r);
        } catch (const DomainError&) {
        }
    }
    return Expr::call(fn, arg);
}

// ---------------------------------------------------------------------------
// Evaluation

double evaluate(const Expr& e, double u) {
    return std::visit(
        Overloaded{
            [&](const ast::Number& n) { return n.value; },
            [&](const ast::Var&) { return u; },
            [&](const ast::Neg& n) { return -evaluate(n.operand, u); },
            [&](const ast::Binary& b) {
                const double x = evaluate(b.lhs, u);
                const double y = evaluate(b.rhs, u);
                return applyBinary(b.op, x, y, e);
            },
            [&](const ast::Call& c) { return applyFunc(c.fn, evaluate(c.arg, u), e); },
            [&](const ast::Antiderivative& a) {
                const Expr& f = a.integrand;
                return adaptiveGaussKronrod([&f](double r) { return evaluate(f, r); }, a.base, u);
            },
        },
        e.node().data);
}

// ---------------------------------------------------------------------------
// Differentiation

Expr differentiate(const Expr& e) {
    return std::visit(
        Overloaded{
            [](const ast::Number&) { return num(0.0); },
            [](const ast::Var&) { return num(1.0); },
            [](const ast::Neg& n) { return -differentiate(n.operand); },
            [&](const ast::Binary& b) -> Expr {
                const Expr& f = b.lhs;
                const Expr& g = b.rhs;
                switch (b.op) {
                    case BinaryOp::Add: return differentiate(f) + differentiate(g);
                    case BinaryOp::Sub: return differentiate(f) - differentiate(g);
                    case BinaryOp::Mul:
                        return differentiate(f) * g + f * differentiate(g);
                    case BinaryOp::Div:
                        if (!g.dependsOnU()) return differentiate(f) / g;
                        return (differentiate(f) * g - f * differentiate(g)) / pow(g, num(2.0));
                    case BinaryOp::Pow:
                        if (!g.dependsOnU()) {
                            return g * pow(f, g - num(1.0)) * differentiate(f);
                        }
                        if (!f.dependsOnU()) {
                            return e * apply(Func::Ln, f) * differentiate(g);
                        }
                        return e * (differentiate(g) * apply(Func::Ln, f) +
                                    g * differentiate(f) / f);
                }
                return num(0.0);
            },
            [&](const ast::Call& c) -> Expr {
                const Expr& a = c.arg;
                const Expr da = differentiate(a);
                if (da.isNumber(0.0)) return num(0.0);
                switch (c.fn) {
                    case Func::Sin: return apply(Func::Cos, a) * da;
                    case Func::Cos: return -(apply(Func::Sin, a) * da);
                    case Func::Tan: return da / pow(apply(Func::Cos, a), num(2.0));
                    case Func::Sqrt: return da / (num(2.0) * e);
                    case Func::Exp: return e * da;
                    case Func::Ln: return da / a;
                    case Func::Abs: return da * a / e;
                    case Func::Sech: return -(e * apply(Func::Tanh, a) * da);
                    case Func::Tanh: return pow(apply(Func::Sech, a), num(2.0)) * da;
                }
                return num(0.0);
            },
            [](const ast::Antiderivative& a) { return a.integrand; },
        },
        e.node().data);
}

}  // namespace abelforge
