// Benchmark: serial reference sweep vs the OpenMP-parallel sweep on a
// synthetic ladder network.

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <sstream>
#include <string>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "kron/netlist.hpp"
#include "kron/solver.hpp"

namespace {

// Ladder of `sections` coupled RLC loops sharing a return rail.
std::string ladder_netlist(int sections) {
    std::ostringstream out;
    const int n_vertices = sections + 1;
    for (int v = 1; v <= n_vertices; ++v) out << "vertex " << v << "\n";
    int edge = 1;
    for (int s = 0; s < sections; ++s) {
        const int a = s + 1, b = s + 2;
        out << "edge " << edge++ << " " << a << " " << b << " R=" << (1.0 + 0.1 * s)
            << " L=" << (1e-6 + 1e-8 * s) << "\n";
        out << "edge " << edge++ << " " << b << " " << a << " R=" << (2.0 + 0.05 * s)
            << " C=" << (1e-9 + 1e-11 * s) << "\n";
    }
    out << "edge " << edge++ << " 1 " << n_vertices << " R=50 emf=1\n";
    out << "probe iload edge 1 current\n";
    return out.str();
}

double seconds_since(std::chrono::steady_clock::time_point start) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

}  // namespace

int main(int argc, char** argv) {
    const int sections = argc > 1 ? std::atoi(argv[1]) : 40;
    const int points = argc > 2 ? std::atoi(argv[2]) : 20000;

    const kron::NetworkProblem problem = kron::parse_netlist(ladder_netlist(sections));
    const kron::FrequencyGrid grid = kron::FrequencyGrid::logarithmic_hz(1e3, 1e9, points);

    std::printf("ladder: %d sections, %d edges, %d meshes, %d sweep points\n", sections,
                problem.edge_count(), problem.mesh_count(), grid.size());

    auto t0 = std::chrono::steady_clock::now();
    const kron::SweepSolution serial = kron::run_sweep_serial(problem, grid);
    const double t_serial = seconds_since(t0);
    std::printf("serial reference: %8.3f s\n", t_serial);

#ifdef _OPENMP
    const int max_threads = omp_get_max_threads();
#else
    const int max_threads = 1;
#endif
    for (int threads = 2; threads <= max_threads; threads *= 2) {
        kron::SweepOptions options;
        options.threads = threads;
        t0 = std::chrono::steady_clock::now();
        const kron::SweepSolution parallel = kron::run_sweep(problem, grid, options);
        const double t_parallel = seconds_since(t0);

        bool identical = parallel.points.size() == serial.points.size();
        for (size_t i = 0; identical && i < parallel.points.size(); ++i) {
            const auto& a = parallel.points[i];
            const auto& b = serial.points[i];
            identical = a.ok == b.ok && (!a.ok || a.observables == b.observables);
        }
        std::printf("omp %2d threads:   %8.3f s  speedup %5.2fx  results %s\n", threads,
                    t_parallel, t_serial / t_parallel,
                    identical ? "bit-identical" : "DIFFER (bug)");
        if (!identical) return 1;
    }
    return 0;
}
