#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "cltbound/bound.hpp"

namespace cltbound {

struct GridSteps {
    double tau = 0.001;
    double b = 0.001;
};

struct Optimum {
    double tau = 0.0;
    double b = 0.0;
    BoundResult bound;
};

/// Grid search outcome at one t. `optimum` is empty when no grid point is
/// admissible.
struct OptimizationResult {
    double t = 0.0;
    std::size_t evaluations = 0;
    std::size_t feasible_count = 0;
    std::optional<Optimum> optimum;

    bool feasible() const { return optimum.has_value(); }
    double c_value() const { return optimum ? optimum->bound.c_value : 0.0; }
};

/// Closed grid lo, lo + step, lo + 2 step, ... with the last point capped at
/// hi. Empty when lo > hi.
std::vector<double> closed_grid(double lo, double hi, double step);

/// Minimizes C(t) over b in [b_lo, b_hi] (outer) and tau in
/// [tau_lo(b), tau_hi] (inner). Ties go to the smaller b, then the smaller tau.
///
/// Throws std::invalid_argument when t < 3.18 or a step is not positive.
OptimizationResult optimize(double t, GridSteps steps = {});

struct TableRow {
    double t = 0.0;
    OptimizationResult result;
};

/// One optimized row per t, in the order given. Rows are computed
/// concurrently; the output is identical to a sequential run.
std::vector<TableRow> make_table(std::span<const double> t_values, GridSteps steps = {},
                                 unsigned threads = 0);

}  // namespace cltbound
