#include <algorithm>
#include <cmath>

#include "abelforge/errors.hpp"
#include "abelforge/kernels.hpp"

namespace abelforge::kernels::serial {

GridValues evaluate(const Expr& e, std::span<const double> grid) {
    GridValues out;
    out.values.assign(grid.size(), 0.0);
    out.ok.assign(grid.size(), 0);
    for (std::size_t i = 0; i < grid.size(); ++i) {
        try {
            out.values[i] = abelforge::evaluate(e, grid[i]);
            out.ok[i] = 1;
        } catch (const Error&) {
        }
    }
    return out;
}

double maxAbs(std::span<const double> values, std::span<const unsigned char> ok) {
    double m = 0.0;
    for (std::size_t i = 0; i < values.size(); ++i)
        if (ok[i]) m = std::max(m, std::abs(values[i]));
    return m;
}

}  // namespace abelforge::kernels::serial
