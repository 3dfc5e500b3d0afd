#pragma once

#include <string>
#include <vector>

#include "kron/cell_complex.hpp"
#include "kron/metric.hpp"
#include "kron/topology.hpp"

namespace kron {

/// Named observable extracted from a sweep point. Edge voltage is the
/// terminal voltage of the edge (emf minus impedance drop); mesh current
/// is the fundamental-cycle current of the mesh owning the given closing
/// edge. Shielding probes derive dB curves from two other observables.
struct Probe {
    enum class Kind { EdgeCurrent, EdgeVoltage, MeshCurrent, Shielding };
    std::string name;
    Kind kind = Kind::EdgeCurrent;
    int id = -1;                // edge id or mesh index, internal 0-based
    std::string se_probe;       // Shielding only
    std::string se_reference;   // Shielding only
};

/// Record of an aperture stanza; the derived lumped impedance is already
/// folded into the edge metric, this keeps the original parameters for
/// pretty-printing.
struct ApertureRecord {
    int edge = -1;
    ApertureModel model;
};

/// Fully assembled frequency-domain network: topology, per-edge operators,
/// chord couplings and sources. Immutable after construction; safe to
/// share read-only across sweep workers.
struct NetworkProblem {
    CellComplex complex;
    SpanningTree tree;
    MeshBasis meshes;
    ConnectivityMatrix connectivity;
    EdgeMetric edge_metric;
    std::vector<ChordCoupling> chords;

    Eigen::VectorXcd edge_emfs;        // volts per edge
    Eigen::VectorXcd tree_injections;  // amps per source edge (connectivity order)

    std::vector<Probe> probes;
    std::vector<BraninLine> branin_lines;     // for reports and pretty-printing
    std::vector<ApertureRecord> apertures;    // for reports and pretty-printing

    int mesh_count() const { return meshes.size(); }
    int edge_count() const { return complex.edge_count(); }
};

}  // namespace kron
