#include "chainbell/sweep.hpp"

#include <algorithm>
#include <cmath>
#include <condition_variable>
#include <cstdio>
#include <functional>
#include <limits>
#include <mutex>
#include <optional>
#include <stdexcept>
#include <thread>

#include "chainbell/states.hpp"

namespace chainbell {

std::vector<int> make_grid(int d_min, int d_max, GridKind kind, double ratio) {
    if (d_min < 2) throw std::invalid_argument("grid: d_min must be >= 2");
    if (d_max < d_min)
        throw std::invalid_argument("grid: empty grid (d_max < d_min)");

    std::vector<int> grid;
    if (kind == GridKind::geometric) {
        if (!(ratio > 1.0))
            throw std::invalid_argument("grid: geometric ratio must be > 1");
        double x = static_cast<double>(d_min);
        while (true) {
            const int v = static_cast<int>(std::llround(x));
            if (v >= d_max) break;
            grid.push_back(v);
            x *= ratio;
        }
    } else {
        const long long step = std::llround(ratio);
        if (step < 1) throw std::invalid_argument("grid: linear step must round to >= 1");
        for (long long v = d_min; v < d_max; v += step)
            grid.push_back(static_cast<int>(v));
    }
    grid.push_back(d_max);
    grid.erase(std::unique(grid.begin(), grid.end()), grid.end());
    return grid;
}

SweepRow evaluate_point(int n_settings, int n_outcomes, const SolverConfig& solver,
                        const RequestedOutputs& outputs) {
    const Scenario scenario = make_scenario(n_settings, n_outcomes);
    const BellMatrix matrix = build_bell_matrix(scenario);

    constexpr double kSkipped = std::numeric_limits<double>::quiet_NaN();
    SweepRow row;
    row.n_settings = n_settings;
    row.n_outcomes = n_outcomes;
    row.b_opt = row.b_maxent = row.b_approx = kSkipped;
    row.e_opt = row.e_approx = row.kl_opt = row.kl_approx = kSkipped;
    row.iterations = -1;
    row.residual = kSkipped;
    row.converged = true;

    if (outputs.optimal || outputs.entropy || outputs.kl) {
        const ViolationResult opt = power_iteration(matrix, solver);
        if (outputs.optimal) {
            row.b_opt = opt.min_eigenvalue;
            row.iterations = opt.iterations_used;
            row.residual = opt.residual;
        }
        if (outputs.entropy) row.e_opt = entropy(opt.optimal_state);
        if (outputs.kl) row.kl_opt = kl_vs_maxent(opt.optimal_state);
        row.converged = opt.converged;
    }
    if (outputs.maxent) row.b_maxent = maxent_value_symbol_sum(matrix);
    if (outputs.approx || outputs.entropy || outputs.kl) {
        const ApproxState app = approx_state(scenario);
        if (outputs.approx) {
            MatvecEngine engine(matrix, solver.matvec_mode);
            row.b_approx = bell_value(engine, app.vector.coefficients());
        }
        if (outputs.entropy) row.e_approx = entropy(app.vector);
        if (outputs.kl) row.kl_approx = kl_vs_maxent(app.vector);
    }
    return row;
}

std::string csv_header() {
    return "N,d,B_opt,B_maxent,B_approx,E_opt,E_approx,KL_opt,KL_approx,"
           "iterations,residual";
}

namespace {

void append_cell(std::string& line, double value) {
    line += ',';
    if (std::isnan(value)) return;
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.16e", value);
    line += buf;
}

}  // namespace

std::string csv_line(const SweepRow& row) {
    std::string line =
        std::to_string(row.n_settings) + ',' + std::to_string(row.n_outcomes);
    append_cell(line, row.b_opt);
    append_cell(line, row.b_maxent);
    append_cell(line, row.b_approx);
    append_cell(line, row.e_opt);
    append_cell(line, row.e_approx);
    append_cell(line, row.kl_opt);
    append_cell(line, row.kl_approx);
    line += ',';
    if (row.iterations >= 0) line += std::to_string(row.iterations);
    append_cell(line, row.residual);
    return line;
}

namespace {

struct Task {
    int n = 0;
    int d = 0;
};

std::vector<Task> plan(const SweepSpec& spec) {
    if (spec.n_values.empty())
        throw std::invalid_argument("sweep: at least one N value required");
    const std::vector<int> grid = make_grid(spec.d_min, spec.d_max, spec.grid, spec.ratio);
    std::vector<Task> tasks;
    tasks.reserve(spec.n_values.size() * grid.size());
    for (int n : spec.n_values)
        for (int d : grid) tasks.push_back({n, d});
    return tasks;
}

// Evaluates tasks on a small pool but hands rows to `emit` strictly in task
// order, so streamed output is identical to the sequential run.
void for_each_row(const SweepSpec& spec, const std::vector<Task>& tasks,
                  const std::function<void(const SweepRow&)>& emit) {
    if (spec.deterministic || tasks.size() == 1) {
        for (const Task& t : tasks) emit(evaluate_point(t.n, t.d, spec.solver, spec.outputs));
        return;
    }

    int nworkers = spec.workers;
    if (nworkers <= 0) {
        const unsigned hw = std::thread::hardware_concurrency();
        nworkers = static_cast<int>(std::clamp<unsigned>(hw == 0 ? 1 : hw, 1u, 8u));
    }
    nworkers = static_cast<int>(
        std::min<std::size_t>(static_cast<std::size_t>(nworkers), tasks.size()));

    std::mutex mu;
    std::condition_variable cv;
    std::vector<std::optional<SweepRow>> slots(tasks.size());
    std::size_t next_claim = 0;

    auto work = [&] {
        while (true) {
            std::size_t mine;
            {
                std::lock_guard<std::mutex> lock(mu);
                if (next_claim >= tasks.size()) return;
                mine = next_claim++;
            }
            SweepRow row = evaluate_point(tasks[mine].n, tasks[mine].d, spec.solver, spec.outputs);
            {
                std::lock_guard<std::mutex> lock(mu);
                slots[mine] = std::move(row);
            }
            cv.notify_all();
        }
    };

    std::vector<std::thread> pool;
    pool.reserve(static_cast<std::size_t>(nworkers));
    for (int w = 0; w < nworkers; ++w) pool.emplace_back(work);

    for (std::size_t i = 0; i < tasks.size(); ++i) {
        std::unique_lock<std::mutex> lock(mu);
        cv.wait(lock, [&] { return slots[i].has_value(); });
        SweepRow row = *slots[i];
        slots[i].reset();
        lock.unlock();
        emit(row);
    }
    for (auto& t : pool) t.join();
}

}  // namespace

std::vector<SweepRow> collect_sweep(const SweepSpec& spec) {
    std::vector<SweepRow> rows;
    for_each_row(spec, plan(spec), [&](const SweepRow& r) { rows.push_back(r); });
    return rows;
}

void run_sweep(const SweepSpec& spec, std::ostream& out) {
    out << csv_header() << '\n' << std::flush;
    for_each_row(spec, plan(spec), [&](const SweepRow& r) {
        out << csv_line(r) << '\n' << std::flush;
    });
}

}  // namespace chainbell
