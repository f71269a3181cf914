#pragma once

#include <string>
#include <string_view>

#include "abelforge/expr.hpp"

namespace abelforge {

/// A real function of u together with its symbolic derivative.
class ScalarField {
public:
    ScalarField() : ScalarField(Expr{}) {}
    explicit ScalarField(Expr expr) : expr_(std::move(expr)), derivative_(differentiate(expr_)) {}

    static ScalarField parse(std::string_view text) { return ScalarField(abelforge::parse(text)); }

    double operator()(double u) const { return evaluate(expr_, u); }
    double value(double u) const { return evaluate(expr_, u); }
    double slope(double u) const { return evaluate(derivative_, u); }

    const Expr& expr() const noexcept { return expr_; }
    const Expr& derivative() const noexcept { return derivative_; }

    std::string render() const { return abelforge::render(expr_); }

private:
    Expr expr_;
    Expr derivative_;
};

}  // namespace abelforge
