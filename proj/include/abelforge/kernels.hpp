#pragma once

// Grid evaluation kernels. Every expression is immutable, so points are
// independent; the parallel variants split the grid across OpenMP threads and
// write each result into its own slot, giving bit-identical output to the
// serial reference.

#include <cstddef>
#include <span>
#include <vector>

#include "abelforge/expr.hpp"

namespace abelforge::kernels {

struct GridValues {
    std::vector<double> values;
    std::vector<unsigned char> ok;  // 0 where evaluation raised DomainError

    std::size_t size() const noexcept { return values.size(); }
};

namespace serial {
GridValues evaluate(const Expr& e, std::span<const double> grid);
double maxAbs(std::span<const double> values, std::span<const unsigned char> ok);
}  // namespace serial

namespace parallel {
GridValues evaluate(const Expr& e, std::span<const double> grid);
double maxAbs(std::span<const double> values, std::span<const unsigned char> ok);
int threads() noexcept;
}  // namespace parallel

/// Dispatches to the parallel variant.
GridValues evaluate(const Expr& e, std::span<const double> grid);
double maxAbs(std::span<const double> values, std::span<const unsigned char> ok);

}  // namespace abelforge::kernels
