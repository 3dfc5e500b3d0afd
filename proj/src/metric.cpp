#include "kron/metric.hpp"

#include <cmath>
#include <string>

namespace kron {

ImpedanceExpr& EdgeMetric::off_diagonal(int row_edge, int col_edge) {
    if (row_edge == col_edge)
        throw AssemblyError("off-diagonal entry requested on the diagonal");
    if (row_edge < 0 || row_edge >= edge_count_ || col_edge < 0 || col_edge >= edge_count_)
        throw AssemblyError("off-diagonal entry references a missing edge");
    return off_diagonal_[{row_edge, col_edge}];
}

Eigen::MatrixXcd EdgeMetric::evaluate(double omega) const {
    Eigen::MatrixXcd z = Eigen::MatrixXcd::Zero(edge_count_, edge_count_);
    for (int e = 0; e < edge_count_; ++e)
        z(e, e) = diagonal_[static_cast<size_t>(e)].eval(omega);
    for (const auto& [key, expr] : off_diagonal_) z(key.first, key.second) = expr.eval(omega);
    return z;
}

Eigen::MatrixXcd evaluate_edge_metric(const EdgeMetric& metric, double omega) {
    return metric.evaluate(omega);
}

namespace {

void require_mesh(int mesh, int mesh_count, const char* what) {
    if (mesh < 0 || mesh >= mesh_count)
        throw AssemblyError(std::string(what) + " references missing mesh " +
                            std::to_string(mesh));
}

bool mesh_has_inductive_edge(const EdgeMetric& metric, const ConnectivityMatrix& connectivity,
                             int mesh) {
    for (int r = 0; r < connectivity.rows(); ++r) {
        if (connectivity.entries(r, connectivity.source_count() + mesh) == 0) continue;
        if (metric.diagonal(connectivity.edge_order[static_cast<size_t>(r)]).inductance > 0.0)
            return true;
    }
    return false;
}

}  // namespace

MeshMetric assemble_complete_metric(const EdgeMetric& metric, const ConnectivityMatrix& connectivity,
                                    std::span<const ChordCoupling> chords, double omega) {
    if (metric.edge_count() != connectivity.rows())
        throw AssemblyError("edge metric has " + std::to_string(metric.edge_count()) +
                            " edges but the connectivity matrix has " +
                            std::to_string(connectivity.rows()) + " rows");

    const Eigen::MatrixXcd z = metric.evaluate(omega);
    // C rows follow edge_order, z is indexed by edge id; permute z to match.
    Eigen::MatrixXcd z_rows(connectivity.rows(), connectivity.rows());
    for (int r = 0; r < connectivity.rows(); ++r)
        for (int c = 0; c < connectivity.rows(); ++c)
            z_rows(r, c) = z(connectivity.edge_order[static_cast<size_t>(r)],
                             connectivity.edge_order[static_cast<size_t>(c)]);

    const Eigen::MatrixXcd c = connectivity.cast_complex();

    MeshMetric out;
    out.source_count = connectivity.source_count();
    out.mesh_count = connectivity.mesh_count;
    out.g = c.transpose() * z_rows * c;

    const Complex p{0.0, omega};
    const int s = out.source_count;
    for (const ChordCoupling& chord : chords) {
        if (const auto* mutual = std::get_if<MutualInductanceChord>(&chord)) {
            require_mesh(mutual->mesh_i, out.mesh_count, "mutual inductance");
            require_mesh(mutual->mesh_j, out.mesh_count, "mutual inductance");
            if (!mesh_has_inductive_edge(metric, connectivity, mutual->mesh_i) ||
                !mesh_has_inductive_edge(metric, connectivity, mutual->mesh_j))
                throw AssemblyError("mutual inductance requires an inductive edge in each mesh");
            const Complex value = -mutual->mutual * p;
            out.g(s + mutual->mesh_i, s + mutual->mesh_j) += value;
            out.g(s + mutual->mesh_j, s + mutual->mesh_i) += value;
        } else if (const auto* far = std::get_if<FarFieldLink>(&chord)) {
            require_mesh(far->mesh_transmit, out.mesh_count, "far-field link");
            require_mesh(far->mesh_receive, out.mesh_count, "far-field link");
            const Complex z21 = friis_coupling_impedance(*far, omega);
            out.g(s + far->mesh_receive, s + far->mesh_transmit) -= z21;
            out.g(s + far->mesh_transmit, s + far->mesh_receive) -= z21;
        } else if (const auto* wall = std::get_if<ReflectionLink>(&chord)) {
            require_mesh(wall->mesh, out.mesh_count, "reflection link");
            out.g(s + wall->mesh, s + wall->mesh) -=
                wall->phase * reflection_coupling(*wall, omega);
        } else if (const auto* direct = std::get_if<DirectImpedanceChord>(&chord)) {
            require_mesh(direct->mesh_i, out.mesh_count, "direct chord");
            require_mesh(direct->mesh_j, out.mesh_count, "direct chord");
            const Complex value = direct->impedance.eval(omega);
            out.g(s + direct->mesh_i, s + direct->mesh_j) += value;
            out.g(s + direct->mesh_j, s + direct->mesh_i) += value;
        }
    }
    return out;
}

IsometryReport isometry_check(const MetricEvaluator& a, const MetricEvaluator& b,
                              std::span<const double> omega_samples) {
    IsometryReport report;
    report.isometric = true;
    for (double omega : omega_samples) {
        const Eigen::MatrixXcd ga = a(omega);
        const Eigen::MatrixXcd gb = b(omega);
        if (ga.rows() != gb.rows() || ga.cols() != gb.cols())
            throw AssemblyError("isometry check on metrics of different dimensions");
        const double scale =
            std::max({ga.cwiseAbs().maxCoeff(), gb.cwiseAbs().maxCoeff(), 1e-300});
        const double deviation = (ga - gb).cwiseAbs().maxCoeff() / scale;
        report.max_relative_deviation = std::max(report.max_relative_deviation, deviation);
        if (deviation > 1e-10) report.isometric = false;
    }
    return report;
}

}  // namespace kron
