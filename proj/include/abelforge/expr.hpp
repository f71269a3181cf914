#pragma once

// Coefficient expression language: scalar functions of the single variable u.
//
//   expr    := term   (('+' | '-') term)*
//   term    := unary  (('*' | '/') unary)*
//   unary   := '-' unary | power
//   power   := primary ('^' unary)?
//   primary := number | 'u' | func '(' expr ')' | '(' expr ')'
//   func    := sin | cos | tan | sqrt | exp | ln | abs | sech | tanh
//   number  := digits ['.' digits] [('e'|'E') ['+'|'-'] digits]  |  '.' digits [...]
//
// '^' binds tighter than unary minus and is right associative, so -2^2 == -4 and
// 2^3^2 == 512. There is no implicit multiplication and no named constant.

#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <variant>

namespace abelforge {

enum class Func : unsigned char { Sin, Cos, Tan, Sqrt, Exp, Ln, Abs, Sech, Tanh };
enum class BinaryOp : unsigned char { Add, Sub, Mul, Div, Pow };

std::string_view functionName(Func fn) noexcept;
std::optional<Func> functionFromName(std::string_view name) noexcept;

struct Node;

/// Immutable expression tree. Copies share structure.
class Expr {
public:
    /// The literal 0.
    Expr();

    // Raw constructors: build exactly the requested node. The only folding
    // performed is negate(Number x) -> Number(-x), which keeps render/parse
    // round trips structural.
    static Expr number(double value);
    static Expr variable();
    static Expr negate(Expr operand);
    static Expr binary(BinaryOp op, Expr lhs, Expr rhs);
    static Expr call(Func fn, Expr arg);
    /// Integral of `integrand` from `base` to u, evaluated by adaptive
    /// quadrature. Has no surface syntax: render() refuses it.
    static Expr antiderivative(Expr integrand, double base);

    const Node& node() const noexcept { return *node_; }
    bool dependsOnU() const noexcept;
    std::optional<double> numberValue() const noexcept;
    bool isNumber(double value) const noexcept;

    friend bool operator==(const Expr& a, const Expr& b) noexcept;

private:
    explicit Expr(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
    std::shared_ptr<const Node> node_;
};

namespace ast {
struct Number {
    double value;
};
struct Var {};
struct Neg {
    Expr operand;
};
struct Binary {
    BinaryOp op;
    Expr lhs;
    Expr rhs;
};
struct Call {
    Func fn;
    Expr arg;
};
struct Antiderivative {
    Expr integrand;
    double base;
};
}  // namespace ast

struct Node {
    std::variant<ast::Number, ast::Var, ast::Neg, ast::Binary, ast::Call, ast::Antiderivative> data;
    bool hasVar = false;
};

// Simplifying constructors used by differentiation and by the algebra that
// assembles coefficients. They fold literal arithmetic and drop neutral
// elements (x+0, x*1, x^1, ...); nothing beyond that.
Expr operator+(const Expr& a, const Expr& b);
Expr operator-(const Expr& a, const Expr& b);
Expr operator*(const Expr& a, const Expr& b);
Expr operator/(const Expr& a, const Expr& b);
Expr operator-(const Expr& a);
Expr pow(const Expr& base, const Expr& exponent);
Expr apply(Func fn, const Expr& arg);
inline Expr num(double v) { return Expr::number(v); }
inline Expr var() { return Expr::variable(); }

/// Throws ParseError.
Expr parse(std::string_view text);

/// Throws DomainError (division by zero, sqrt of a negative, ln of a
/// non-positive, non-integer power of a negative, non-finite result).
double evaluate(const Expr& e, double u);

/// Exact symbolic derivative in u.
Expr differentiate(const Expr& e);

/// Text in the grammar above; parse(render(e)) == e. Throws NotRenderable for
/// trees holding an antiderivative node or a non-finite literal.
std::string render(const Expr& e);
bool isRenderable(const Expr& e) noexcept;

/// Like render(), but never throws; intended for diagnostics.
std::string describe(const Expr& e);

}  // namespace abelforge
