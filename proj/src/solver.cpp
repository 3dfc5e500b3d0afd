#include "kron/solver.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace kron {

SourceVector mesh_emfs_from_edges(const Eigen::VectorXcd& edge_emfs,
                                  const ConnectivityMatrix& connectivity,
                                  const Eigen::VectorXcd& injections) {
    if (edge_emfs.size() != connectivity.rows())
        throw AssemblyError("edge emf vector does not match the edge count");
    if (injections.size() != connectivity.source_count())
        throw AssemblyError("injection vector does not match the source count");

    Eigen::VectorXcd ordered(connectivity.rows());
    for (int r = 0; r < connectivity.rows(); ++r)
        ordered(r) = edge_emfs(connectivity.edge_order[static_cast<size_t>(r)]);

    const Eigen::VectorXcd full = connectivity.cast_complex().transpose() * ordered;

    SourceVector out;
    out.injections = injections;
    out.mesh_emfs = full.tail(connectivity.mesh_count);
    out.source_edge_emfs = full.head(connectivity.source_count());
    return out;
}

FrequencyGrid FrequencyGrid::linear_hz(double fmin_hz, double fmax_hz, int points) {
    if (points < 1 || fmin_hz < 0.0 || fmax_hz < fmin_hz)
        throw DomainError("invalid linear frequency grid");
    FrequencyGrid grid;
    grid.omegas.reserve(static_cast<size_t>(points));
    grid.hertz.reserve(static_cast<size_t>(points));
    for (int i = 0; i < points; ++i) {
        double f = points == 1 ? fmin_hz
                               : fmin_hz + (fmax_hz - fmin_hz) * static_cast<double>(i) /
                                               static_cast<double>(points - 1);
        grid.hertz.push_back(f);
        grid.omegas.push_back(2.0 * std::numbers::pi * f);
    }
    return grid;
}

FrequencyGrid FrequencyGrid::logarithmic_hz(double fmin_hz, double fmax_hz, int points) {
    if (points < 1 || fmin_hz <= 0.0 || fmax_hz < fmin_hz)
        throw DomainError("invalid logarithmic frequency grid");
    FrequencyGrid grid;
    grid.omegas.reserve(static_cast<size_t>(points));
    const double lmin = std::log10(fmin_hz);
    const double lmax = std::log10(fmax_hz);
    grid.hertz.reserve(static_cast<size_t>(points));
    for (int i = 0; i < points; ++i) {
        double l = points == 1 ? lmin
                               : lmin + (lmax - lmin) * static_cast<double>(i) /
                                            static_cast<double>(points - 1);
        const double f = std::pow(10.0, l);
        grid.hertz.push_back(f);
        grid.omegas.push_back(2.0 * std::numbers::pi * f);
    }
    return grid;
}

double FrequencyGrid::hz(int i) const {
    if (!hertz.empty()) return hertz.at(static_cast<size_t>(i));
    return omegas.at(static_cast<size_t>(i)) / (2.0 * std::numbers::pi);
}

MeshSolution solve_complete(const MeshMetric& metric, const SourceVector& sources, double omega) {
    const Eigen::MatrixXcd d = metric.d_block();
    const Eigen::VectorXcd rhs = sources.mesh_emfs - metric.e_block() * sources.injections;

    MeshSolution solution;
    if (metric.mesh_count > 0) {
        if (!d.allFinite()) {
            std::ostringstream msg;
            msg << "mesh metric is not finite at omega = " << omega << " rad/s";
            throw SingularMetricError(msg.str());
        }
        Eigen::PartialPivLU<Eigen::MatrixXcd> lu(d);
        const double rcond = lu.rcond();
        if (!(rcond > 1e-14)) {
            std::ostringstream msg;
            msg << "mesh metric numerically singular at omega = " << omega
                << " rad/s (rcond = " << rcond << ")";
            throw SingularMetricError(msg.str());
        }
        solution.mesh_currents = lu.solve(rhs);
    } else {
        solution.mesh_currents.resize(0);
    }
    // Tail->head drop across each source edge.
    solution.source_voltages = metric.a_block() * sources.injections +
                               metric.b_block() * solution.mesh_currents -
                               sources.source_edge_emfs;
    return solution;
}

namespace {

SweepPoint solve_point(const NetworkProblem& problem, double omega,
                       const std::vector<int>& shielding_probe_index,
                       const std::vector<int>& shielding_reference_index) {
    SweepPoint point;
    point.omega = omega;
    try {
        const MeshMetric g = assemble_complete_metric(problem.edge_metric, problem.connectivity,
                                                      problem.chords, omega);
        const SourceVector sources = mesh_emfs_from_edges(problem.edge_emfs, problem.connectivity,
                                                          problem.tree_injections);
        const MeshSolution sol = solve_complete(g, sources, omega);

        const auto& conn = problem.connectivity;
        Eigen::VectorXcd x(conn.cols());
        x << sources.injections, sol.mesh_currents;
        const Eigen::VectorXcd ordered = conn.cast_complex() * x;
        point.edge_currents.resize(conn.rows());
        for (int r = 0; r < conn.rows(); ++r)
            point.edge_currents(conn.edge_order[static_cast<size_t>(r)]) = ordered(r);
        point.edge_drops = problem.edge_metric.evaluate(omega) * point.edge_currents;

        point.mesh_currents = sol.mesh_currents;
        point.source_voltages = sol.source_voltages;

        point.observables.assign(problem.probes.size(), Complex{0.0, 0.0});
        for (size_t pi = 0; pi < problem.probes.size(); ++pi) {
            const Probe& probe = problem.probes[pi];
            switch (probe.kind) {
                case Probe::Kind::EdgeCurrent:
                    point.observables[pi] = point.edge_currents(probe.id);
                    break;
                case Probe::Kind::EdgeVoltage:
                    point.observables[pi] =
                        problem.edge_emfs(probe.id) - point.edge_drops(probe.id);
                    break;
                case Probe::Kind::MeshCurrent:
                    point.observables[pi] = point.mesh_currents(probe.id);
                    break;
                case Probe::Kind::Shielding:
                    break;  // second pass below
            }
        }
        for (size_t pi = 0; pi < problem.probes.size(); ++pi) {
            if (problem.probes[pi].kind != Probe::Kind::Shielding) continue;
            const Complex probe_value = point.observables[static_cast<size_t>(
                shielding_probe_index[pi])];
            const Complex reference_value = point.observables[static_cast<size_t>(
                shielding_reference_index[pi])];
            double se;
            if (std::abs(probe_value) == 0.0) {
                se = 300.0;
            } else {
                se = 20.0 * std::log10(std::abs(reference_value) / std::abs(probe_value));
                se = std::clamp(se, -300.0, 300.0);
            }
            point.observables[pi] = Complex{se, 0.0};
        }
        point.ok = true;
    } catch (const Error& err) {
        point.ok = false;
        point.error = err.what();
    }
    return point;
}

// Resolves shielding probe references once, up front.
void resolve_shielding(const NetworkProblem& problem, std::vector<int>& probe_index,
                       std::vector<int>& reference_index) {
    probe_index.assign(problem.probes.size(), -1);
    reference_index.assign(problem.probes.size(), -1);
    auto find = [&](const std::string& name) {
        for (size_t i = 0; i < problem.probes.size(); ++i)
            if (problem.probes[i].name == name &&
                problem.probes[i].kind != Probe::Kind::Shielding)
                return static_cast<int>(i);
        throw ObservableError("shielding probe references unknown observable '" + name + "'");
    };
    for (size_t i = 0; i < problem.probes.size(); ++i) {
        if (problem.probes[i].kind != Probe::Kind::Shielding) continue;
        probe_index[i] = find(problem.probes[i].se_probe);
        reference_index[i] = find(problem.probes[i].se_reference);
    }
}

SweepSolution run_sweep_impl(const NetworkProblem& problem, const FrequencyGrid& grid,
                             int threads) {
    if (problem.edge_count() == 0) throw SweepError("problem has no edges");
    if (grid.size() == 0) throw SweepError("frequency grid is empty");

    std::vector<int> se_probe, se_reference;
    resolve_shielding(problem, se_probe, se_reference);

    SweepSolution solution;
    solution.omegas = grid.omegas;
    solution.hertz.resize(grid.omegas.size());
    for (int i = 0; i < grid.size(); ++i) solution.hertz[static_cast<size_t>(i)] = grid.hz(i);
    for (const Probe& probe : problem.probes) solution.observable_names.push_back(probe.name);
    solution.points.resize(static_cast<size_t>(grid.size()));

    const int n = grid.size();
#ifdef _OPENMP
    if (threads != 1) {
        const int nt = threads > 0 ? threads : omp_get_max_threads();
#pragma omp parallel for schedule(static) num_threads(nt)
        for (int i = 0; i < n; ++i)
            solution.points[static_cast<size_t>(i)] =
                solve_point(problem, grid.omegas[static_cast<size_t>(i)], se_probe, se_reference);
    } else
#endif
    {
        for (int i = 0; i < n; ++i)
            solution.points[static_cast<size_t>(i)] =
                solve_point(problem, grid.omegas[static_cast<size_t>(i)], se_probe, se_reference);
    }

    if (solution.solved_count() == 0)
        throw SweepError("every sweep point failed; first error: " +
                         solution.points.front().error);
    return solution;
}

}  // namespace

int SweepSolution::solved_count() const {
    return static_cast<int>(std::count_if(points.begin(), points.end(),
                                          [](const SweepPoint& p) { return p.ok; }));
}

SweepSolution run_sweep(const NetworkProblem& problem, const FrequencyGrid& grid,
                        const SweepOptions& options) {
    return run_sweep_impl(problem, grid, options.threads);
}

SweepSolution run_sweep_serial(const NetworkProblem& problem, const FrequencyGrid& grid) {
    return run_sweep_impl(problem, grid, 1);
}

std::vector<double> shielding_effectiveness(const SweepSolution& solution,
                                            const std::string& probe,
                                            const std::string& reference) {
    auto find = [&](const std::string& name) {
        for (size_t i = 0; i < solution.observable_names.size(); ++i)
            if (solution.observable_names[i] == name) return i;
        throw ObservableError("observable '" + name + "' is not part of the sweep");
    };
    const size_t pi = find(probe);
    const size_t ri = find(reference);

    std::vector<double> curve;
    curve.reserve(solution.points.size());
    for (const SweepPoint& point : solution.points) {
        if (!point.ok) {
            curve.push_back(std::numeric_limits<double>::quiet_NaN());
            continue;
        }
        const double num = std::abs(point.observables[ri]);
        const double den = std::abs(point.observables[pi]);
        if (den == 0.0) {
            curve.push_back(300.0);
        } else {
            curve.push_back(std::clamp(20.0 * std::log10(num / den), -300.0, 300.0));
        }
    }
    return curve;
}

PowerBalance power_balance(const NetworkProblem& problem, const SweepPoint& point) {
    if (!point.ok) throw SweepError("power balance requested on a failed sweep point");

    const SourceVector sources = mesh_emfs_from_edges(problem.edge_emfs, problem.connectivity,
                                                      problem.tree_injections);
    PowerBalance balance;
    balance.source_power =
        (point.mesh_currents.adjoint() * sources.mesh_emfs).value().real() +
        (sources.injections.adjoint() * (point.source_voltages + sources.source_edge_emfs))
            .value()
            .real();

    const Eigen::MatrixXcd z = problem.edge_metric.evaluate(point.omega);
    double dissipated =
        (point.edge_currents.adjoint() * z * point.edge_currents).value().real();

    // Chord exchange term: the mesh-block difference between the full and
    // the chord-free metric.
    if (!problem.chords.empty()) {
        const MeshMetric with = assemble_complete_metric(problem.edge_metric,
                                                         problem.connectivity, problem.chords,
                                                         point.omega);
        const MeshMetric without = assemble_complete_metric(
            problem.edge_metric, problem.connectivity, {}, point.omega);
        const Eigen::MatrixXcd x = with.d_block() - without.d_block();
        dissipated += (point.mesh_currents.adjoint() * x * point.mesh_currents).value().real();
    }
    balance.dissipated_power = dissipated;
    return balance;
}

}  // namespace kron
