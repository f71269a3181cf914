// Parsing and rendering of the coefficient language.

#include <cctype>
#include <charconv>
#include <cmath>
#include <string>
#include <vector>

#include "abelforge/errors.hpp"
#include "abelforge/expr.hpp"

namespace abelforge {

namespace {

class Parser {
public:
    explicit Parser(std::string_view text) : text_(text) {}

    Expr run() {
        Expr e = expression();
        skipSpace();
        if (pos_ != text_.size()) syntax({"operator", "end of input"});
        return e;
    }

private:
    std::string_view text_;
    std::size_t pos_ = 0;

    void skipSpace() {
        while (pos_ < text_.size() &&
               (text_[pos_] == ' ' || text_[pos_] == '\t' || text_[pos_] == '\n' ||
                text_[pos_] == '\r'))
            ++pos_;
    }

    char peek() {
        skipSpace();
        return pos_ < text_.size() ? text_[pos_] : '\0';
    }

    [[noreturn]] void syntax(std::vector<std::string> expected) {
        std::string what = "syntax error at offset " + std::to_string(pos_) + ": expected ";
        for (std::size_t i = 0; i < expected.size(); ++i) {
            if (i) what += i + 1 == expected.size() ? " or " : ", ";
            what += expected[i];
        }
        if (pos_ < text_.size()) {
            what += ", found '";
            what += text_[pos_];
            what += "'";
        } else {
            what += ", found end of input";
        }
        throw ParseError(ParseError::Kind::Syntax, pos_, std::move(expected), what);
    }

    Expr expression() {
        Expr lhs = term();
        for (;;) {
            const char c = peek();
            if (c != '+' && c != '-') return lhs;
            ++pos_;
            Expr rhs = term();
            lhs = Expr::binary(c == '+' ? BinaryOp::Add : BinaryOp::Sub, std::move(lhs),
                               std::move(rhs));
        }
    }

    Expr term() {
        Expr lhs = unary();
        for (;;) {
            const char c = peek();
            if (c != '*' && c != '/') return lhs;
            ++pos_;
            Expr rhs = unary();
            lhs = Expr::binary(c == '*' ? BinaryOp::Mul : BinaryOp::Div, std::move(lhs),
                               std::move(rhs));
        }
    }

    Expr unary() {
        if (peek() == '-') {
            ++pos_;
            return Expr::negate(unary());
        }
        return power();
    }

    Expr power() {
        Expr base = primary();
        if (peek() == '^') {
            ++pos_;
            return Expr::binary(BinaryOp::Pow, std::move(base), unary());
        }
        return base;
    }

    Expr primary() {
        const char c = peek();
        const std::size_t start = pos_;
        if (c == '(') {
            ++pos_;
            Expr inner = expression();
            if (peek() != ')') syntax({"')'"});
            ++pos_;
            return inner;
        }
        if (std::isdigit(static_cast<unsigned char>(c)) || c == '.') return numberLiteral();
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            while (pos_ < text_.size() &&
                   (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_'))
                ++pos_;
            const std::string_view name = text_.substr(start, pos_ - start);
            const bool isCall = peek() == '(';
            if (isCall) {
                const auto fn = functionFromName(name);
                if (!fn) {
                    throw ParseError(ParseError::Kind::UnknownFunction, start, {},
                                     "unknown function '" + std::string(name) + "' at offset " +
                                         std::to_string(start));
                }
                ++pos_;
                Expr arg = expression();
                if (peek() != ')') syntax({"')'"});
                ++pos_;
                return Expr::call(*fn, std::move(arg));
            }
            if (name == "u") return Expr::variable();
            if (functionFromName(name)) {
                syntax({"'('"});
            }
            throw ParseError(ParseError::Kind::UnknownIdentifier, start, {"u"},
                             "unknown identifier '" + std::string(name) + "' at offset " +
                                 std::to_string(start) + " (the only variable is u)");
        }
        syntax({"number", "'u'", "function", "'('", "'-'"});
    }

    Expr numberLiteral() {
        const std::size_t start = pos_;
        auto digits = [&] {
            std::size_t n = 0;
            while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
                ++pos_;
                ++n;
            }
            return n;
        };
        std::size_t mantissa = digits();
        if (pos_ < text_.size() && text_[pos_] == '.') {
            ++pos_;
            mantissa += digits();
        }
        if (mantissa == 0) {
            pos_ = start;
            syntax({"digit"});
        }
        if (pos_ < text_.size() && (text_[pos_] == 'e' || text_[pos_] == 'E')) {
            const std::size_t mark = pos_;
            ++pos_;
            if (pos_ < text_.size() && (text_[pos_] == '+' || text_[pos_] == '-')) ++pos_;
            if (digits() == 0) pos_ = mark;  // not an exponent; leave 'e' for the caller
        }
        const std::string_view lit = text_.substr(start, pos_ - start);
        double value = 0.0;
        const auto [ptr, ec] = std::from_chars(lit.data(), lit.data() + lit.size(), value);
        if (ec != std::errc() || ptr != lit.data() + lit.size() || !std::isfinite(value)) {
            pos_ = start;
            throw ParseError(ParseError::Kind::Syntax, start, {"finite number"},
                             "number out of range at offset " + std::to_string(start));
        }
        return Expr::number(value);
    }
};

// Precedence levels used by the renderer.
enum Level : int { kSum = 1, kProduct = 2, kUnary = 3, kPower = 4, kPrimary = 5 };

int levelOf(const Expr& e) {
    const auto& d = e.node().data;
    if (const auto* n = std::get_if<ast::Number>(&d)) return std::signbit(n->value) ? kUnary : kPrimary;
    if (std::holds_alternative<ast::Neg>(d)) return kUnary;
    if (const auto* b = std::get_if<ast::Binary>(&d)) {
        switch (b->op) {
            case BinaryOp::Add:
            case BinaryOp::Sub: return kSum;
            case BinaryOp::Mul:
            case BinaryOp::Div: return kProduct;
            case BinaryOp::Pow: return kPower;
        }
    }
    return kPrimary;
}

std::string formatNumber(double v) {
    if (!std::isfinite(v)) throw NotRenderable("non-finite literal cannot be rendered");
    char buf[64];
    const auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, v);
    return std::string(buf, ptr);
}

void renderInto(std::string& out, const Expr& e, int minLevel, bool lenient);

void renderOperand(std::string& out, const Expr& e, int minLevel, bool lenient) {
    if (levelOf(e) < minLevel) {
        out += '(';
        renderInto(out, e, kSum, lenient);
        out += ')';
    } else {
        renderInto(out, e, minLevel, lenient);
    }
}

void renderInto(std::string& out, const Expr& e, int minLevel, bool lenient) {
    const auto& d = e.node().data;
    if (const auto* n = std::get_if<ast::Number>(&d)) {
        if (lenient && !std::isfinite(n->value)) {
            out += std::isnan(n->value) ? "nan" : (n->value > 0 ? "inf" : "-inf");
            return;
        }
        out += formatNumber(n->value);
        return;
    }
    if (std::holds_alternative<ast::Var>(d)) {
        out += 'u';
        return;
    }
    if (const auto* n = std::get_if<ast::Neg>(&d)) {
        out += '-';
        // A unary operand is parenthesized for readability; the tree is the same.
        renderOperand(out, n->operand, kPower, lenient);
        return;
    }
    if (const auto* c = std::get_if<ast::Call>(&d)) {
        out += functionName(c->fn);
        out += '(';
        renderInto(out, c->arg, kSum, lenient);
        out += ')';
        return;
    }
    if (const auto* a = std::get_if<ast::Antiderivative>(&d)) {
        if (!lenient) throw NotRenderable("antiderivative node has no surface syntax");
        out += "integral(";
        renderInto(out, a->integrand, kSum, lenient);
        out += ", from ";
        out += formatNumber(a->base);
        out += ')';
        return;
    }
    const auto& b = std::get<ast::Binary>(d);
    (void)minLevel;
    switch (b.op) {
        case BinaryOp::Add:
        case BinaryOp::Sub:
            renderOperand(out, b.lhs, kSum, lenient);
            out += b.op == BinaryOp::Add ? '+' : '-';
            renderOperand(out, b.rhs, levelOf(b.rhs) == kUnary ? kPower : kProduct, lenient);
            return;
        case BinaryOp::Mul:
        case BinaryOp::Div:
            renderOperand(out, b.lhs, kProduct, lenient);
            out += b.op == BinaryOp::Mul ? '*' : '/';
            renderOperand(out, b.rhs, kPower, lenient);
            return;
        case BinaryOp::Pow:
            renderOperand(out, b.lhs, kPrimary, lenient);
            out += '^';
            renderOperand(out, b.rhs, kPower, lenient);
            return;
    }
}

}  // namespace

Expr parse(std::string_view text) { return Parser(text).run(); }

std::string render(const Expr& e) {
    std::string out;
    renderInto(out, e, kSum, false);
    return out;
}

bool isRenderable(const Expr& e) noexcept {
    try {
        (void)render(e);
        return true;
    } catch (...) {
        return false;
    }
}

std::string describe(const Expr& e) {
    std::string out;
    try {
        renderInto(out, e, kSum, true);
    } catch (...) {
        out = "<expression>";
    }
    return out;
}

}  // namespace abelforge
