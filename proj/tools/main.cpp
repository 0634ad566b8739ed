#include <cstdio>
#include <fstream>
#include <iostream>
#include <map>
#include <memory>
#include <ostream>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "chainbell/asymptotics.hpp"
#include "chainbell/bell_matrix.hpp"
#include "chainbell/classical.hpp"
#include "chainbell/core_model.hpp"
#include "chainbell/eigensolver.hpp"
#include "chainbell/probabilities.hpp"
#include "chainbell/states.hpp"
#include "chainbell/sweep.hpp"
#include "chainbell/verify.hpp"

namespace {

using namespace chainbell;

// Thrown by subcommand bodies to request a specific process exit code.
struct ExitWith {
    int code;
};

// Anything much past this dimension stops being an interactive computation
// (the symbol build alone is O(d), but the solver is O(d log d) per step and
// needs thousands of steps for tight residuals). Deliberate big runs opt in
// with --allow-large.
constexpr int kDefaultDimCap = 200000;

void check_dim_cap(int d, bool allow_large) {
    if (d > kDefaultDimCap && !allow_large)
        throw std::runtime_error(
            "d=" + std::to_string(d) + " exceeds the default cap of " +
            std::to_string(kDefaultDimCap) + "; pass --allow-large to proceed");
}

std::string fmt(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.16e", v);
    return buf;
}

std::string join_states(std::span<const double> xs) {
    std::string out;
    for (std::size_t i = 0; i < xs.size(); ++i) {
        if (i) out += ',';
        out += fmt(xs[i]);
    }
    return out;
}

std::string join_ints(std::span<const int> xs) {
    std::string out;
    for (std::size_t i = 0; i < xs.size(); ++i) {
        if (i) out += ',';
        out += std::to_string(xs[i]);
    }
    return out;
}

// Either stdout or --out PATH.
class OutputTarget {
  public:
    explicit OutputTarget(const std::string& path) {
        if (path.empty()) return;
        file_ = std::make_unique<std::ofstream>(path);
        if (!*file_) throw std::runtime_error("cannot open output file: " + path);
    }
    std::ostream& stream() { return file_ ? *file_ : std::cout; }

  private:
    std::unique_ptr<std::ofstream> file_;
};

struct SolverFlags {
    int iters = 100000;
    double tol = 1e-10;
    bool fixed_twenty = false;
    MatvecMode matvec = MatvecMode::fast;

    SolverConfig config() const {
        SolverConfig c;
        c.max_iterations = iters;
        c.residual_tolerance = tol;
        c.fixed_twenty_steps = fixed_twenty;
        c.matvec_mode = matvec;
        return c;
    }
};

void add_solver_flags(CLI::App* cmd, SolverFlags& f) {
    static const std::map<std::string, MatvecMode> kMatvec{
        {"naive", MatvecMode::naive}, {"fast", MatvecMode::fast}};
    cmd->add_option("--iters", f.iters, "iteration budget for the eigensolver");
    cmd->add_option("--tol", f.tol, "relative residual target");
    cmd->add_flag("--fixed-steps", f.fixed_twenty,
                  "run exactly 20 power steps with no convergence test");
    cmd->add_option("--matvec", f.matvec, "matrix-vector product implementation")
        ->transform(CLI::CheckedTransformer(kMatvec, CLI::ignore_case));
}

ViolationResult solve_or_exit(const Scenario& scenario, const SolverConfig& config) {
    const auto res = power_iteration(build_bell_matrix(scenario), config);
    if (!res.converged) {
        std::cerr << "solver did not converge: residual=" << fmt(res.residual)
                  << " after " << res.iterations_used << " iterations\n";
        throw ExitWith{2};
    }
    return res;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"numerical toolkit for a chained N-setting d-outcome Bell family"};
    app.require_subcommand(1);

    int n = 2, d = 2;
    SolverFlags solver;
    bool print_state = false;
    bool allow_large = false;
    std::string out_path;

    const auto add_allow_large = [&](CLI::App* cmd) {
        cmd->add_flag("--allow-large", allow_large,
                      "permit dimensions beyond the default cap of 200000");
    };

    // --- violation ---
    auto* violation = app.add_subcommand(
        "violation", "optimal Bell value and optimal state for one (N,d)");
    violation->add_option("--n", n, "number of settings per party")->required();
    violation->add_option("--d", d, "number of outcomes")->required();
    add_solver_flags(violation, solver);
    violation->add_flag("--print-state", print_state, "also print the Schmidt spectrum");
    add_allow_large(violation);
    violation->callback([&] {
        check_dim_cap(d, allow_large);
        const auto res = solve_or_exit(make_scenario(n, d), solver.config());
        std::cout << "N=" << n << " d=" << d << '\n'
                  << "B_opt=" << fmt(res.min_eigenvalue) << '\n'
                  << "B_opt_quadratic_form=" << fmt(res.bell_value) << '\n'
                  << "E_opt=" << fmt(entropy(res.optimal_state)) << '\n'
                  << "KL_opt=" << fmt(kl_vs_maxent(res.optimal_state)) << '\n'
                  << "iterations=" << res.iterations_used << '\n'
                  << "residual=" << fmt(res.residual) << '\n';
        if (print_state)
            std::cout << "state=" << join_states(res.optimal_state.coefficients()) << '\n';
    });

    // --- maxent ---
    auto* maxent = app.add_subcommand(
        "maxent", "Bell value of the maximally entangled state, both routes");
    maxent->add_option("--n", n)->required();
    maxent->add_option("--d", d)->required();
    maxent->callback([&] {
        const Scenario sc = make_scenario(n, d);
        std::cout << "N=" << n << " d=" << d << '\n'
                  << "B_maxent=" << fmt(maxent_value_symbol_sum(build_bell_matrix(sc)))
                  << '\n'
                  << "B_maxent_expanded=" << fmt(maxent_value_expanded(sc)) << '\n'
                  << "nosignaling_bound=" << fmt(nosignaling_bound(sc)) << '\n';
    });

    // --- approx ---
    auto* approx = app.add_subcommand(
        "approx", "closed-form approximate state: value, entropy, divergence");
    approx->add_option("--n", n)->required();
    approx->add_option("--d", d)->required();
    add_solver_flags(approx, solver);
    approx->add_flag("--print-state", print_state, "also print the Schmidt spectrum");
    add_allow_large(approx);
    approx->callback([&] {
        check_dim_cap(d, allow_large);
        const Scenario sc = make_scenario(n, d);
        const auto matrix = build_bell_matrix(sc);
        MatvecEngine engine(matrix, solver.matvec);
        const ApproxState app_state = approx_state(sc);
        std::cout << "N=" << n << " d=" << d << '\n'
                  << "normalization=" << fmt(app_state.normalization) << '\n'
                  << "B_approx=" << fmt(bell_value(engine, app_state.vector.coefficients()))
                  << '\n'
                  << "E_approx=" << fmt(entropy(app_state.vector)) << '\n'
                  << "KL_approx=" << fmt(kl_vs_maxent(app_state.vector)) << '\n';
        if (print_state)
            std::cout << "state=" << join_states(app_state.vector.coefficients()) << '\n';
    });

    // --- sweep ---
    SweepSpec sweep_spec;
    std::string grid_name = "geometric";
    std::vector<std::string> only;
    auto* sweep = app.add_subcommand("sweep", "CSV sweep over a dimension grid");
    sweep->add_option("--n", sweep_spec.n_values, "settings counts (repeat or comma-list)")
        ->required()
        ->delimiter(',');
    sweep->add_option("--d-min", sweep_spec.d_min, "smallest dimension");
    sweep->add_option("--d-max", sweep_spec.d_max, "largest dimension");
    sweep->add_option("--grid", grid_name, "grid kind")
        ->check(CLI::IsMember({"geometric", "linear"}));
    sweep->add_option("--ratio", sweep_spec.ratio,
                      "geometric growth factor (or linear step width)");
    add_solver_flags(sweep, solver);
    sweep->add_option("--only", only,
                      "restrict output columns (opt,maxent,approx,entropy,kl)")
        ->delimiter(',')
        ->check(CLI::IsMember({"opt", "maxent", "approx", "entropy", "kl"}));
    sweep->add_flag("--deterministic", sweep_spec.deterministic,
                    "evaluate rows sequentially in the calling thread");
    sweep->add_option("--workers", sweep_spec.workers, "worker thread count (0 = auto)");
    sweep->add_option("--out", out_path, "write CSV here instead of stdout");
    add_allow_large(sweep);
    sweep->callback([&] {
        check_dim_cap(sweep_spec.d_max, allow_large);
        sweep_spec.grid = grid_name == "linear" ? GridKind::linear : GridKind::geometric;
        sweep_spec.solver = solver.config();
        if (!only.empty()) {
            sweep_spec.outputs = {false, false, false, false, false};
            for (const std::string& o : only) {
                if (o == "opt") sweep_spec.outputs.optimal = true;
                if (o == "maxent") sweep_spec.outputs.maxent = true;
                if (o == "approx") sweep_spec.outputs.approx = true;
                if (o == "entropy") sweep_spec.outputs.entropy = true;
                if (o == "kl") sweep_spec.outputs.kl = true;
            }
        }
        OutputTarget target(out_path);
        run_sweep(sweep_spec, target.stream());
    });

    // --- limits ---
    std::vector<int> limit_ns;
    bool limits_csv = false;
    auto* limits = app.add_subcommand("limits", "large-d limits for given N");
    limits->add_option("--n", limit_ns, "settings counts (repeat or comma-list)")
        ->required()
        ->delimiter(',');
    limits->add_flag("--csv", limits_csv, "emit one CSV row per N");
    limits->callback([&] {
        if (limits_csv)
            std::cout << "N,maxent_limit,entropy_limit,kl_limit,c_n\n";
        for (int nv : limit_ns) {
            const LimitReport rep = limits_for(nv);
            if (limits_csv) {
                std::cout << nv << ',' << fmt(rep.maxent_limit) << ','
                          << fmt(rep.approx_entropy_limit) << ',' << fmt(rep.kl_limit)
                          << ',' << (rep.c_n ? fmt(*rep.c_n) : std::string()) << '\n';
                continue;
            }
            std::cout << "N=" << nv << '\n'
                      << "maxent_limit=" << fmt(rep.maxent_limit) << '\n'
                      << "entropy_limit=" << fmt(rep.approx_entropy_limit) << '\n'
                      << "kl_limit=" << fmt(rep.kl_limit) << '\n';
            if (rep.c_n) std::cout << "c_n=" << fmt(*rep.c_n) << '\n';
        }
    });

    // --- classical ---
    unsigned long long cap = 100000000ull;
    auto* classical = app.add_subcommand(
        "classical", "exhaustive minimum over deterministic strategies");
    classical->add_option("--n", n)->required();
    classical->add_option("--d", d)->required();
    classical->add_option("--cap", cap, "refuse searches above this many strategy pairs");
    classical->callback([&] {
        const auto res = classical_min_bruteforce(make_scenario(n, d), cap);
        std::cout << "N=" << n << " d=" << d << '\n'
                  << "min=" << res.min_value << '\n'
                  << "alice=" << join_ints(res.alice) << '\n'
                  << "bob=" << join_ints(res.bob) << '\n'
                  << "pairs=" << res.strategy_pairs << '\n';
    });

    // --- probtable ---
    std::string state_name = "maxent";
    auto* probtable = app.add_subcommand(
        "probtable", "full outcome distribution as CSV (x,y,a,b,p)");
    probtable->add_option("--n", n)->required();
    probtable->add_option("--d", d)->required();
    probtable->add_option("--state", state_name, "which state to tabulate")
        ->check(CLI::IsMember({"maxent", "optimal", "approx"}));
    add_solver_flags(probtable, solver);
    probtable->add_option("--out", out_path, "write CSV here instead of stdout");
    probtable->callback([&] {
        const Scenario sc = make_scenario(n, d);
        SchmidtVector state;
        if (state_name == "maxent") {
            state = maxent_state(d);
        } else if (state_name == "approx") {
            state = approx_state(sc).vector;
        } else {
            state = solve_or_exit(sc, solver.config()).optimal_state;
        }
        const ProbabilityTable table = build_table(sc, state);
        OutputTarget target(out_path);
        std::ostream& os = target.stream();
        os << "x,y,a,b,p\n";
        for (int x = 0; x < n; ++x)
            for (int y = 0; y < n; ++y)
                for (int a = 0; a < d; ++a)
                    for (int b = 0; b < d; ++b)
                        os << x << ',' << y << ',' << a << ',' << b << ','
                           << fmt(table.at(x, y, a, b)) << '\n';
    });

    // --- verify ---
    auto* verify = app.add_subcommand("verify", "cross-module consistency checks");
    verify->callback([&] {
        bool all_ok = true;
        for (const CheckResult& r : run_verify()) {
            std::cout << (r.pass ? "PASS " : "FAIL ") << r.name
                      << " (metric=" << fmt(r.metric) << " threshold=" << fmt(r.threshold)
                      << ")\n";
            all_ok = all_ok && r.pass;
        }
        if (!all_ok) throw ExitWith{1};
    });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        // Collapse CLI11's fine-grained error codes onto the documented
        // contract: 0 for help/success, 1 for any argument problem.
        const int rc = app.exit(e);
        return rc == 0 ? 0 : 1;
    } catch (const ExitWith& e) {
        return e.code;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
    return 0;
}
