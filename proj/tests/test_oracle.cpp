#include <doctest.h>

#include <random>

#include "helpers.hpp"
#include "kron/netlist.hpp"
#include "kron/nodal_oracle.hpp"
#include "kron/solver.hpp"

using namespace kron;
using testing::EdgeSpec;

TEST_CASE("voltage divider load current") {
    // 1 V behind 1 ohm into a 1 ohm load.
    kron::NetworkProblem problem = testing::make_problem(
        2, {{0, 1, 1.0, 0.0, 0.0, Complex{1.0, 0.0}}, {1, 0, 1.0}});
    const NodalSolution sol = solve_nodal(problem, 50.0);
    CHECK(std::abs(sol.edge_currents(1) - Complex{0.5, 0.0}) <= 1e-14);
}

TEST_CASE("current injection splits by conductance") {
    kron::NetworkProblem problem =
        testing::make_problem(2, {{0, 1, 1e6}, {0, 1, 2.0}, {0, 1, 4.0}});
    testing::set_sources(problem, {{0, 1.0}});
    const NodalSolution sol = solve_nodal(problem, 10.0);
    CHECK(std::abs(sol.edge_currents(1) / sol.edge_currents(2) - 2.0) <= 1e-9);
}

TEST_CASE("oracle satisfies the node law with injection") {
    std::mt19937 rng(71);
    for (int trial = 0; trial < 30; ++trial) {
        kron::NetworkProblem problem = testing::random_rlc_problem(rng, true);
        const double omega = testing::random_omega(rng);
        NodalSolution sol;
        try {
            sol = solve_nodal(problem, omega);
        } catch (const OracleSingularError&) {
            continue;
        }
        Eigen::VectorXcd injection = Eigen::VectorXcd::Zero(problem.complex.vertex_count());
        for (int j = 0; j < problem.connectivity.source_count(); ++j) {
            const Edge& e =
                problem.complex.edge(problem.connectivity.source_edges[static_cast<size_t>(j)]);
            injection(e.head) += problem.tree_injections(j);
            injection(e.tail) -= problem.tree_injections(j);
        }
        const Eigen::VectorXcd residual =
            incidence_matrix(problem.complex).cast<double>().cast<Complex>() *
                sol.edge_currents -
            injection;
        const double scale = std::max(1.0, sol.edge_currents.cwiseAbs().maxCoeff());
        CHECK(residual.cwiseAbs().maxCoeff() <= 1e-12 * scale);
    }
}

TEST_CASE("solver and oracle agree on random RLC networks") {
    std::mt19937 rng(73);
    int compared = 0;
    while (compared < 60) {
        kron::NetworkProblem problem = testing::random_rlc_problem(rng, true);
        FrequencyGrid grid;
        grid.omegas = {testing::random_omega(rng)};
        SweepSolution sweep;
        try {
            sweep = run_sweep_serial(problem, grid);
        } catch (const SweepError&) {
            continue;
        }
        if (!sweep.points[0].ok) continue;
        const NodalSolution reference = solve_nodal(problem, grid.omegas[0]);
        // Relative agreement with a femtoamp absolute floor for decks
        // whose exact solution is zero (tree networks, idle sources).
        const double tolerance = std::max(1e-9 * reference.edge_currents.norm(), 1e-15);
        CHECK((sweep.points[0].edge_currents - reference.edge_currents).norm() <= tolerance);
        ++compared;
    }
}

TEST_CASE("shared-branch deck: oracle equals the mesh solve") {
    const NetworkProblem problem =
        load_netlist(std::string(KRON_DECK_DIR) + "/figure4_isometric.knet");
    for (double omega : {1e4, 2.4e5, 5e6}) {
        FrequencyGrid grid;
        grid.omegas = {omega};
        const SweepSolution sweep = run_sweep_serial(problem, grid);
        REQUIRE(sweep.points[0].ok);
        const NodalSolution reference = solve_nodal(problem, omega);
        const double scale = reference.edge_currents.norm();
        CHECK((sweep.points[0].edge_currents - reference.edge_currents).norm() <= 1e-9 * scale);
    }
}

TEST_CASE("oracle handles zero-impedance edges through explicit currents") {
    // Pure emf edge (z = 0) feeding a resistor pair.
    kron::NetworkProblem problem = testing::make_problem(
        3, {{0, 1, 0.0, 0.0, 0.0, Complex{1.0, 0.0}}, {1, 2, 9.0}, {2, 0, 1.0}});
    const NodalSolution sol = solve_nodal(problem, 100.0);
    CHECK(std::abs(sol.edge_currents(0) - Complex{0.1, 0.0}) <= 1e-12);
    CHECK(std::abs(sol.edge_currents(2) - Complex{0.1, 0.0}) <= 1e-12);
}

TEST_CASE("oracle rejects a singular system") {
    // Two pure wires in a loop with an emf: the loop current is unbounded.
    kron::NetworkProblem problem = testing::make_problem(
        2, {{0, 1, 0.0, 0.0, 0.0, Complex{1.0, 0.0}}, {1, 0, 0.0}});
    CHECK_THROWS_AS(solve_nodal(problem, 10.0), OracleSingularError);
}

TEST_CASE("oracle admittance system is reciprocal for passive decks") {
    // Indirect reciprocity check: swap source and observation edges and
    // compare transfer currents.
    std::mt19937 rng(79);
    for (int trial = 0; trial < 10; ++trial) {
        kron::NetworkProblem base = testing::random_rlc_problem(rng, false);
        if (base.edge_count() < 3) continue;
        const double omega = testing::random_omega(rng);

        base.tree_injections.setZero();  // reciprocity compares a lone source
        kron::NetworkProblem forward = base;
        forward.edge_emfs.setZero();
        forward.edge_emfs(0) = Complex{1.0, 0.0};
        kron::NetworkProblem backward = base;
        backward.edge_emfs.setZero();
        backward.edge_emfs(1) = Complex{1.0, 0.0};

        const Complex i01 = solve_nodal(forward, omega).edge_currents(1);
        const Complex i10 = solve_nodal(backward, omega).edge_currents(0);
        CHECK(std::abs(i01 - i10) <= std::max(1e-9 * std::abs(i01), 1e-15));
    }
}
