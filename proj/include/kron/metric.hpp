#pragma once

#include <functional>
#include <map>
#include <span>
#include <variant>
#include <vector>

#include <Eigen/Dense>

#include "kron/couplings.hpp"
#include "kron/impedance.hpp"
#include "kron/topology.hpp"

namespace kron {

/// Square operator-valued matrix over edges: one intrinsic impedance per
/// edge on the diagonal, plus sparse off-diagonal interactions (delay-line
/// two-ports).
class EdgeMetric {
public:
    EdgeMetric() = default;
    explicit EdgeMetric(int edge_count) : edge_count_(edge_count) {
        diagonal_.resize(static_cast<size_t>(edge_count));
    }

    int edge_count() const { return edge_count_; }

    ImpedanceExpr& diagonal(int edge) { return diagonal_.at(static_cast<size_t>(edge)); }
    const ImpedanceExpr& diagonal(int edge) const {
        return diagonal_.at(static_cast<size_t>(edge));
    }

    /// Off-diagonal operator (created on first access).
    ImpedanceExpr& off_diagonal(int row_edge, int col_edge);
    const std::map<std::pair<int, int>, ImpedanceExpr>& off_diagonals() const {
        return off_diagonal_;
    }

    /// Dense z(j omega) over all edges.
    Eigen::MatrixXcd evaluate(double omega) const;

private:
    int edge_count_ = 0;
    std::vector<ImpedanceExpr> diagonal_;
    std::map<std::pair<int, int>, ImpedanceExpr> off_diagonal_;
};

/// Free-function spelling of EdgeMetric::evaluate.
Eigen::MatrixXcd evaluate_edge_metric(const EdgeMetric& metric, double omega);

/// Inductive chord between two meshes; contributes -u p to the (i,j) and
/// (j,i) mesh-block entries. Both meshes must contain an inductive edge.
struct MutualInductanceChord {
    int mesh_i = -1;
    int mesh_j = -1;
    double mutual = 0.0;  // u, henry
};

/// Direct operator chord added symmetrically to (i,j) and (j,i).
struct DirectImpedanceChord {
    int mesh_i = -1;
    int mesh_j = -1;
    ImpedanceExpr impedance;
};

/// Non-local energy exchange between meshes.
using ChordCoupling =
    std::variant<MutualInductanceChord, FarFieldLink, ReflectionLink, DirectImpedanceChord>;

/// Metric of the complete space (sources + meshes) at one frequency, with
/// the four blocks of C^T z C addressable.
struct MeshMetric {
    int source_count = 0;
    int mesh_count = 0;
    Eigen::MatrixXcd g;

    int size() const { return source_count + mesh_count; }

    Eigen::MatrixXcd a_block() const { return g.topLeftCorner(source_count, source_count); }
    Eigen::MatrixXcd b_block() const { return g.topRightCorner(source_count, mesh_count); }
    Eigen::MatrixXcd e_block() const { return g.bottomLeftCorner(mesh_count, source_count); }
    Eigen::MatrixXcd d_block() const { return g.bottomRightCorner(mesh_count, mesh_count); }
};

/// g = C^T z(j omega) C, then chord contributions added to the mesh block.
/// Emf-level couplings (far field, reflection) enter with a sign flip: an
/// induced emf proportional to a mesh current moves to the impedance side
/// of the mesh equations as its negative.
MeshMetric assemble_complete_metric(const EdgeMetric& metric, const ConnectivityMatrix& connectivity,
                                    std::span<const ChordCoupling> chords, double omega);

/// Per-frequency metric evaluator, the comparable object of an isometry
/// check.
using MetricEvaluator = std::function<Eigen::MatrixXcd(double)>;

struct IsometryReport {
    bool isometric = false;
    double max_relative_deviation = 0.0;
};

/// True when both evaluators agree entrywise within 1e-10 relative at
/// every sampled frequency.
IsometryReport isometry_check(const MetricEvaluator& a, const MetricEvaluator& b,
                              std::span<const double> omega_samples);

}  // namespace kron
