#include <algorithm>
#include <cmath>
#include <cstddef>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "abelforge/errors.hpp"
#include "abelforge/kernels.hpp"

namespace abelforge::kernels {

namespace parallel {

GridValues evaluate(const Expr& e, std::span<const double> grid) {
    GridValues out;
    out.values.assign(grid.size(), 0.0);
    out.ok.assign(grid.size(), 0);
    const auto n = static_cast<std::ptrdiff_t>(grid.size());
    double* values = out.values.data();
    unsigned char* ok = out.ok.data();
    // Exceptions must not leave the parallel region; each point records its own status.
#pragma omp parallel for schedule(static)
    for (std::ptrdiff_t i = 0; i < n; ++i) {
        try {
            values[i] = abelforge::evaluate(e, grid[static_cast<std::size_t>(i)]);
            ok[i] = 1;
        } catch (const Error&) {
            ok[i] = 0;
        }
    }
    return out;
}

double maxAbs(std::span<const double> values, std::span<const unsigned char> ok) {
    double m = 0.0;
    const auto n = static_cast<std::ptrdiff_t>(values.size());
#pragma omp parallel for reduction(max : m) schedule(static)
    for (std::ptrdiff_t i = 0; i < n; ++i)
        if (ok[static_cast<std::size_t>(i)]) m = std::max(m, std::abs(values[static_cast<std::size_t>(i)]));
    return m;
}

int threads() noexcept {
#ifdef _OPENMP
    return omp_get_max_threads();
#else
    return 1;
#endif
}

}  // namespace parallel

GridValues evaluate(const Expr& e, std::span<const double> grid) { return parallel::evaluate(e, grid); }

double maxAbs(std::span<const double> values, std::span<const unsigned char> ok) {
    return parallel::maxAbs(values, ok);
}

}  // namespace abelforge::kernels
