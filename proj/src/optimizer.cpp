#include "cltbound/optimizer.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <stdexcept>
#include <thread>

#include "cltbound/constants.hpp"
#include "cltbound/ranges.hpp"

namespace cltbound {

std::vector<double> closed_grid(double lo, double hi, double step) {
    std::vector<double> grid;
    if (!(lo <= hi)) return grid;
    for (std::size_t k = 0;; ++k) {
        const double x = lo + static_cast<double>(k) * step;
        if (x >= hi) {
            grid.push_back(hi);
            break;
        }
        grid.push_back(x);
    }
    return grid;
}

OptimizationResult optimize(double t, GridSteps steps) {
    if (!(steps.tau > 0.0) || !(steps.b > 0.0)) {
        throw std::invalid_argument("grid steps must be positive");
    }
    const ParamRanges ranges = param_ranges(t);

    OptimizationResult out;
    out.t = t;
    for (double b : closed_grid(ranges.b_lo, ranges.b_hi, steps.b)) {
        if (!(b > kTailExponent)) continue;
        const double tau_lo = tau_lower(t, b);
        for (double tau : closed_grid(tau_lo, ranges.tau_hi, steps.tau)) {
            if (!(tau > 0.0 && tau < 1.0)) continue;
            ++out.evaluations;
            const BoundParams params(t, tau, b);
            const CenterQuantities q = center_quantities(params);
            const auto outcome = compute_bounds(params, q);
            const auto* bound = std::get_if<BoundResult>(&outcome);
            if (!bound) continue;
            ++out.feasible_count;
            // Strict < keeps the first (smallest b, then smallest tau) minimizer.
            if (!out.optimum || bound->c_value < out.optimum->bound.c_value) {
                out.optimum = Optimum{tau, b, *bound};
            }
        }
    }
    return out;
}

std::vector<TableRow> make_table(std::span<const double> t_values, GridSteps steps, unsigned threads) {
    if (!(steps.tau > 0.0) || !(steps.b > 0.0)) {
        throw std::invalid_argument("grid steps must be positive");
    }
    for (double t : t_values) param_ranges(t);

    std::vector<TableRow> rows(t_values.size());
    if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
    threads = std::min<unsigned>(threads, static_cast<unsigned>(std::max<std::size_t>(1, rows.size())));

    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (std::size_t i = next++; i < rows.size(); i = next++) {
            rows[i] = {t_values[i], optimize(t_values[i], steps)};
        }
    };
    std::vector<std::jthread> pool;
    for (unsigned k = 1; k < threads; ++k) pool.emplace_back(worker);
    worker();
    return rows;
}

}  // namespace cltbound
