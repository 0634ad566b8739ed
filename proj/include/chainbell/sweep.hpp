#pragma once

#include <ostream>
#include <string>
#include <vector>

#include "chainbell/eigensolver.hpp"

namespace chainbell {

enum class GridKind { geometric, linear };

// Dimension grid from d_min to d_max inclusive; geometric grids multiply by
// `ratio` and round, linear grids step by round(ratio). Duplicates collapse
// and both endpoints always appear.
std::vector<int> make_grid(int d_min, int d_max, GridKind kind, double ratio);

// Column groups a sweep can be asked for. Dropping a group skips both the
// computation and the CSV cells (left empty); the header never changes.
struct RequestedOutputs {
    bool optimal = true;  // B_opt, iterations, residual
    bool maxent = true;   // B_maxent
    bool approx = true;   // B_approx
    bool entropy = true;  // E_opt / E_approx, where the state is available
    bool kl = true;       // KL_opt / KL_approx, likewise
};

struct SweepSpec {
    std::vector<int> n_values;
    int d_min = 2;
    int d_max = 100;
    GridKind grid = GridKind::geometric;
    double ratio = 1.25;
    SolverConfig solver;
    RequestedOutputs outputs;
    bool deterministic = false;  // evaluate rows in the calling thread
    int workers = 0;             // 0 = auto
};

// A sweep row; quantities that were not requested are NaN (iterations: -1)
// and render as empty CSV cells.
struct SweepRow {
    int n_settings = 0;
    int n_outcomes = 0;
    double b_opt = 0.0;
    double b_maxent = 0.0;
    double b_approx = 0.0;
    double e_opt = 0.0;
    double e_approx = 0.0;
    double kl_opt = 0.0;
    double kl_approx = 0.0;
    int iterations = 0;
    double residual = 0.0;
    bool converged = false;  // carried for callers; the CSV shows residual
};

SweepRow evaluate_point(int n_settings, int n_outcomes, const SolverConfig& solver,
                        const RequestedOutputs& outputs = {});

std::vector<SweepRow> collect_sweep(const SweepSpec& spec);

// Streams the sweep as CSV (header + one line per grid point, flushed as
// soon as each row is ready, in grid order). Floats use %.16e so runs are
// reproducible byte for byte.
void run_sweep(const SweepSpec& spec, std::ostream& out);

std::string csv_header();
std::string csv_line(const SweepRow& row);

}  // namespace chainbell
