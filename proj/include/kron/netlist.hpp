#pragma once

#include <string>

#include "kron/problem.hpp"
#include "kron/solver.hpp"

namespace kron {

/// Parses the line-oriented netlist format into a fully assembled
/// problem. Stanzas:
///
///   vertex <id>
///   edge <id> <tail> <head> [R=<ohms>] [L=<henry>] [C=<farad>]
///                           [emf=<volts>[@<degrees>]]
///   jsource <tree-edge-id> <amps>
///   mutual <mesh_i> <mesh_j> u=<henry>
///   branin <edgeL> <edgeR> Zc=<ohms> tau=<seconds>
///   aperture <edge> we=<meters> b=<meters>
///   farfield <mesh_t> <mesh_r> R11= R22= At= Ar= r=
///   reflection <mesh> G= R= sigma= Rr= [phase=<+1|-1>]
///   probe <name> edge <id> current|voltage
///   probe <name> mesh <id> current
///   probe <name> se <probe-name> <reference-name>
///   # comment
///
/// Ids are 1-based and contiguous. Meshes are not user-assigned: a mesh is
/// named by its closing edge, so `mutual 2 5` couples the fundamental
/// cycles whose closing edges are 2 and 5. Every failure carries its line
/// number.
NetworkProblem parse_netlist(const std::string& text);

/// parse_netlist over the contents of a file.
NetworkProblem load_netlist(const std::string& path);

/// Canonical netlist text for the problem; parse(format(parse(x)))
/// round-trips to the identical problem.
std::string format_netlist(const NetworkProblem& problem);

/// Human-readable topology report: counts, spanning tree, mesh cycles and
/// the connectivity matrix in block form. All ids 1-based.
std::string topology_report(const NetworkProblem& problem);

/// Sweep CSV: header `freq_hz,<name>_re,<name>_im,...`, one row per grid
/// point, C locale, byte-stable across runs and worker counts. Failed
/// points carry nan fields.
std::string csv_string(const SweepSolution& solution);
void write_csv(const SweepSolution& solution, const std::string& path);

/// Static log-frequency magnitude plot of the declared probes.
/// Presentation only; the CSV is the data interface.
void write_svg(const SweepSolution& solution, const std::string& path);

}  // namespace kron
