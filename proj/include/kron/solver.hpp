#pragma once

#include <map>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "kron/metric.hpp"
#include "kron/problem.hpp"

namespace kron {

/// Sources of the complete-space system: per-source-edge current
/// injections J, mesh emfs S, and the raw per-edge emf vector they came
/// from.
struct SourceVector {
    Eigen::VectorXcd injections;       // J, amps, connectivity source order
    Eigen::VectorXcd mesh_emfs;        // S, volts, mesh order
    Eigen::VectorXcd source_edge_emfs; // emf on each source edge, volts
};

/// S = mesh-block rows of C^T * edge_emfs; the source-block rows are kept
/// as the per-source emf work terms.
SourceVector mesh_emfs_from_edges(const Eigen::VectorXcd& edge_emfs,
                                  const ConnectivityMatrix& connectivity,
                                  const Eigen::VectorXcd& injections);

/// Sorted sweep frequencies, stored in rad/s. The factories also keep the
/// exact Hz values they were built from so reports and CSV columns do not
/// pick up a 2 pi round-trip error; grids assembled by hand may leave
/// hertz empty and have it derived.
struct FrequencyGrid {
    std::vector<double> omegas;
    std::vector<double> hertz;

    static FrequencyGrid linear_hz(double fmin_hz, double fmax_hz, int points);
    static FrequencyGrid logarithmic_hz(double fmin_hz, double fmax_hz, int points);

    int size() const { return static_cast<int>(omegas.size()); }
    double hz(int i) const;
};

/// Mesh currents and source-edge voltages at one frequency. The source
/// voltage is the tail->head drop across each source edge.
struct MeshSolution {
    Eigen::VectorXcd mesh_currents;    // k
    Eigen::VectorXcd source_voltages;  // V_J
};

/// Solves D'k = S - E'J by dense LU with partial pivoting, then recovers
/// the source-edge voltages V_J = (A'J + B'k) - emf_src. Raises
/// SingularMetricError naming the frequency when D' is numerically
/// singular (reciprocal condition below 1e-14).
MeshSolution solve_complete(const MeshMetric& metric, const SourceVector& sources, double omega);

/// One solved (or failed) sweep point.
struct SweepPoint {
    double omega = 0.0;
    bool ok = false;
    std::string error;

    Eigen::VectorXcd mesh_currents;
    Eigen::VectorXcd source_voltages;
    Eigen::VectorXcd edge_currents;  // i = C [J; k], edge-id order
    Eigen::VectorXcd edge_drops;     // (z i) per edge, edge-id order
    std::vector<Complex> observables;  // probe order
};

struct SweepSolution {
    std::vector<double> omegas;
    std::vector<double> hertz;
    std::vector<std::string> observable_names;
    std::vector<SweepPoint> points;

    int solved_count() const;
};

struct SweepOptions {
    int threads = 0;  // 0 = library default
};

/// Frequency sweep over the complete-space solve. Points are independent
/// work items; the parallel and serial paths produce bit-identical
/// results. Isolated per-point failures are recorded without aborting;
/// SweepError is raised only when every point fails or the grid is empty.
SweepSolution run_sweep(const NetworkProblem& problem, const FrequencyGrid& grid,
                        const SweepOptions& options = {});

/// Serial reference path, one point after another on the calling thread.
SweepSolution run_sweep_serial(const NetworkProblem& problem, const FrequencyGrid& grid);

/// SE(omega) = 20 log10(|reference| / |probe|) in dB, +300 dB when the
/// probe underflows. Failed points yield NaN.
std::vector<double> shielding_effectiveness(const SweepSolution& solution,
                                            const std::string& probe,
                                            const std::string& reference);

/// Power bookkeeping of one solved point, used by the balance checks:
/// source side Re(k^H S + J^H (V_J + emf_src)), dissipation side
/// Re(i^H z i) plus the chord exchange term Re(k^H X k).
struct PowerBalance {
    double source_power = 0.0;
    double dissipated_power = 0.0;
};
PowerBalance power_balance(const NetworkProblem& problem, const SweepPoint& point);

}  // namespace kron
