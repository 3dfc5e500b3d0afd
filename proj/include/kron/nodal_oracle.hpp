#pragma once

#include <Eigen/Dense>

#include "kron/problem.hpp"

namespace kron {

/// Result of the brute-force reference solve: every edge current plus the
/// node potentials it was derived from (component grounds at zero).
struct NodalSolution {
    Eigen::VectorXcd edge_currents;
    Eigen::VectorXcd node_voltages;
};

/// Classic nodal analysis used as ground truth in tests. Works directly
/// from the incidence relations and per-edge admittances: no spanning
/// tree, no mesh basis, no complete-space transformation. Edges that take
/// part in couplings (delay-line two-ports, chord-induced controlled
/// sources) or that carry zero impedance get explicit current unknowns,
/// the textbook controlled-source treatment. Chords referencing meshes
/// are stamped on the corresponding closing edges, whose currents equal
/// the mesh currents by construction.
NodalSolution solve_nodal(const NetworkProblem& problem, double omega);

}  // namespace kron
