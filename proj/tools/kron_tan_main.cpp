#include <cstdio>
#include <iostream>

#include <CLI11.hpp>

#include "kron/netlist.hpp"
#include "kron/nodal_oracle.hpp"
#include "kron/solver.hpp"

namespace {

void print_mesh_ids(const kron::NetworkProblem& problem) {
    std::cout << "meshes (named by closing edge):";
    for (const kron::Mesh& mesh : problem.meshes.meshes)
        std::cout << " " << (mesh.closing_edge + 1);
    std::cout << "\n";
}

int run_tree(const std::string& path) {
    const kron::NetworkProblem problem = kron::load_netlist(path);
    std::cout << kron::topology_report(problem);
    print_mesh_ids(problem);
    return 0;
}

int run_check(const std::string& path) {
    const kron::NetworkProblem problem = kron::load_netlist(path);
    std::cout << "parsed ok: " << path << "\n" << kron::topology_report(problem);
    print_mesh_ids(problem);
    if (problem.connectivity.source_count() > 0) {
        std::cout << "current sources on edges:";
        for (int e : problem.connectivity.source_edges) std::cout << " " << (e + 1);
        std::cout << "\n";
    }
    if (!problem.probes.empty()) {
        std::cout << "probes:";
        for (const kron::Probe& probe : problem.probes) std::cout << " " << probe.name;
        std::cout << "\n";
    }
    return 0;
}

int run_solve(const std::string& netlist, double fmin, double fmax, int points, bool log_spacing,
              const std::string& out_csv, const std::string& out_svg, bool oracle, int threads) {
    const kron::NetworkProblem problem = kron::load_netlist(netlist);
    const kron::FrequencyGrid grid = log_spacing
                                         ? kron::FrequencyGrid::logarithmic_hz(fmin, fmax, points)
                                         : kron::FrequencyGrid::linear_hz(fmin, fmax, points);

    kron::SweepOptions options;
    options.threads = threads;
    const kron::SweepSolution solution = kron::run_sweep(problem, grid, options);

    print_mesh_ids(problem);
    std::cout << "solved " << solution.solved_count() << "/" << grid.size() << " points\n";
    for (const kron::SweepPoint& point : solution.points)
        if (!point.ok)
            std::cout << "  failed at " << point.omega / (2 * 3.141592653589793)
                      << " Hz: " << point.error << "\n";

    if (!out_csv.empty()) {
        kron::write_csv(solution, out_csv);
        std::cout << "wrote " << out_csv << "\n";
    }
    if (!out_svg.empty()) {
        kron::write_svg(solution, out_svg);
        std::cout << "wrote " << out_svg << "\n";
    }

    if (oracle) {
        double worst = 0.0;
        int compared = 0;
        for (size_t i = 0; i < solution.points.size(); ++i) {
            const kron::SweepPoint& point = solution.points[i];
            if (!point.ok) continue;
            const kron::NodalSolution reference = kron::solve_nodal(problem, point.omega);
            const double scale = std::max(reference.edge_currents.norm(), 1e-300);
            worst = std::max(worst,
                             (point.edge_currents - reference.edge_currents).norm() / scale);
            ++compared;
        }
        std::printf("oracle comparison over %d points: max relative deviation %.3e\n", compared,
                    worst);
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"kron-tan: frequency-domain network solver on a cell-complex foundation"};
    app.require_subcommand(1);

    std::string netlist;

    auto* tree = app.add_subcommand("tree", "print spanning tree, meshes and connectivity blocks");
    tree->add_option("netlist", netlist, "netlist file")->required();

    auto* check = app.add_subcommand("check", "validate a netlist and print the topology report");
    check->add_option("netlist", netlist, "netlist file")->required();

    auto* solve = app.add_subcommand("solve", "run a frequency sweep");
    std::string solve_netlist, out_csv, out_svg;
    double fmin = 0.0, fmax = 0.0;
    int points = 0, threads = 0;
    bool log_spacing = false, oracle = false;
    solve->add_option("--netlist", solve_netlist, "netlist file")->required();
    solve->add_option("--fmin", fmin, "sweep start, Hz")->required();
    solve->add_option("--fmax", fmax, "sweep end, Hz")->required();
    solve->add_option("--points", points, "number of grid points")->required();
    solve->add_flag("--log", log_spacing, "logarithmic spacing");
    solve->add_option("--out", out_csv, "CSV output path");
    solve->add_option("--svg", out_svg, "SVG magnitude plot path");
    solve->add_flag("--oracle", oracle, "compare against the nodal reference solver");
    solve->add_option("--threads", threads, "sweep worker count (0 = library default)");

    CLI11_PARSE(app, argc, argv);

    try {
        if (tree->parsed()) return run_tree(netlist);
        if (check->parsed()) return run_check(netlist);
        if (solve->parsed())
            return run_solve(solve_netlist, fmin, fmax, points, log_spacing, out_csv, out_svg,
                             oracle, threads);
    } catch (const kron::Error& err) {
        std::cerr << "error: " << err.what() << "\n";
        return 1;
    }
    return 0;
}
