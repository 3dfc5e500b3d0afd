#include "kron/nodal_oracle.hpp"

#include <cmath>
#include <functional>
#include <vector>

namespace kron {

namespace {

// Component labels by direct union-find over the edge list; deliberately
// not shared with the spanning-tree code.
std::vector<int> component_of(const CellComplex& complex) {
    std::vector<int> parent(static_cast<size_t>(complex.vertex_count()));
    for (size_t i = 0; i < parent.size(); ++i) parent[i] = static_cast<int>(i);
    std::function<int(int)> find = [&](int v) {
        while (parent[static_cast<size_t>(v)] != v) {
            parent[static_cast<size_t>(v)] = parent[static_cast<size_t>(parent[static_cast<size_t>(v)])];
            v = parent[static_cast<size_t>(v)];
        }
        return v;
    };
    for (const Edge& e : complex.edges()) {
        int a = find(e.tail), b = find(e.head);
        if (a != b) parent[static_cast<size_t>(std::max(a, b))] = std::min(a, b);
    }
    std::vector<int> label(parent.size());
    for (size_t v = 0; v < parent.size(); ++v) label[v] = find(static_cast<int>(v));
    return label;
}

}  // namespace

NodalSolution solve_nodal(const NetworkProblem& problem, double omega) {
    const CellComplex& complex = problem.complex;
    const int n_vertices = complex.vertex_count();
    const int n_edges = complex.edge_count();

    // Full edge impedance matrix: intrinsic operators plus chord couplings
    // stamped on closing edges.
    Eigen::MatrixXcd z = problem.edge_metric.evaluate(omega);
    const Complex p{0.0, omega};
    auto closing = [&](int mesh) {
        return problem.meshes.meshes.at(static_cast<size_t>(mesh)).closing_edge;
    };
    for (const ChordCoupling& chord : problem.chords) {
        if (const auto* mutual = std::get_if<MutualInductanceChord>(&chord)) {
            const int a = closing(mutual->mesh_i), b = closing(mutual->mesh_j);
            z(a, b) += -mutual->mutual * p;
            z(b, a) += -mutual->mutual * p;
        } else if (const auto* far = std::get_if<FarFieldLink>(&chord)) {
            const int a = closing(far->mesh_receive), b = closing(far->mesh_transmit);
            const Complex z21 = friis_coupling_impedance(*far, omega);
            z(a, b) -= z21;
            z(b, a) -= z21;
        } else if (const auto* wall = std::get_if<ReflectionLink>(&chord)) {
            const int a = closing(wall->mesh);
            z(a, a) -= wall->phase * reflection_coupling(*wall, omega);
        } else if (const auto* direct = std::get_if<DirectImpedanceChord>(&chord)) {
            const int a = closing(direct->mesh_i), b = closing(direct->mesh_j);
            const Complex value = direct->impedance.eval(omega);
            z(a, b) += value;
            z(b, a) += value;
        }
    }

    // Edges with off-diagonal interactions or zero intrinsic impedance get
    // explicit current unknowns; everything else folds into admittances.
    std::vector<bool> explicit_current(static_cast<size_t>(n_edges), false);
    for (int a = 0; a < n_edges; ++a) {
        if (z(a, a) == Complex{0.0, 0.0}) explicit_current[static_cast<size_t>(a)] = true;
        for (int b = 0; b < n_edges; ++b) {
            if (a == b || z(a, b) == Complex{0.0, 0.0}) continue;
            explicit_current[static_cast<size_t>(a)] = true;
            explicit_current[static_cast<size_t>(b)] = true;
        }
    }
    std::vector<int> current_index(static_cast<size_t>(n_edges), -1);
    int n_currents = 0;
    for (int a = 0; a < n_edges; ++a)
        if (explicit_current[static_cast<size_t>(a)]) current_index[static_cast<size_t>(a)] = n_currents++;

    // One grounded vertex per component.
    const std::vector<int> component = component_of(complex);
    std::vector<int> voltage_index(static_cast<size_t>(n_vertices), -1);
    int n_voltages = 0;
    for (int v = 0; v < n_vertices; ++v)
        if (component[static_cast<size_t>(v)] != v) voltage_index[static_cast<size_t>(v)] = n_voltages++;

    // Injection pattern of the tree current sources: +J into the head,
    // -J out of the tail.
    Eigen::VectorXcd injection = Eigen::VectorXcd::Zero(n_vertices);
    for (int j = 0; j < problem.connectivity.source_count(); ++j) {
        const Edge& e = complex.edge(problem.connectivity.source_edges[static_cast<size_t>(j)]);
        injection(e.head) += problem.tree_injections(j);
        injection(e.tail) -= problem.tree_injections(j);
    }

    const int dim = n_voltages + n_currents;
    Eigen::MatrixXcd system = Eigen::MatrixXcd::Zero(dim, dim);
    Eigen::VectorXcd rhs = Eigen::VectorXcd::Zero(dim);

    // Node law rows: sum over incident edges of (+- current) equals the
    // injection, current arriving at a head counted positive. Folded edges
    // carry i_a = (emf_a - V_head + V_tail) / z_aa.
    for (int v = 0; v < n_vertices; ++v) {
        const int row = voltage_index[static_cast<size_t>(v)];
        if (row < 0) continue;
        rhs(row) = injection(v);
    }
    auto stamp_voltage = [&](int row, int vertex, Complex value) {
        const int col = voltage_index[static_cast<size_t>(vertex)];
        if (col >= 0) system(row, col) += value;
    };
    for (int a = 0; a < n_edges; ++a) {
        const Edge& e = complex.edge(a);
        const int row_head = voltage_index[static_cast<size_t>(e.head)];
        const int row_tail = voltage_index[static_cast<size_t>(e.tail)];
        if (explicit_current[static_cast<size_t>(a)]) {
            const int col = n_voltages + current_index[static_cast<size_t>(a)];
            if (row_head >= 0) system(row_head, col) += 1.0;
            if (row_tail >= 0) system(row_tail, col) -= 1.0;
            continue;
        }
        const Complex y = 1.0 / z(a, a);
        const Complex emf_term = problem.edge_emfs(a) * y;
        if (row_head >= 0) {
            stamp_voltage(row_head, e.head, -y);
            stamp_voltage(row_head, e.tail, y);
            rhs(row_head) -= emf_term;
        }
        if (row_tail >= 0) {
            stamp_voltage(row_tail, e.head, y);
            stamp_voltage(row_tail, e.tail, -y);
            rhs(row_tail) += emf_term;
        }
    }

    // Branch rows of the explicit-current edges:
    //   (V_head - V_tail) + sum_b z(a,b) i_b = emf_a
    for (int a = 0; a < n_edges; ++a) {
        if (!explicit_current[static_cast<size_t>(a)]) continue;
        const int row = n_voltages + current_index[static_cast<size_t>(a)];
        const Edge& e = complex.edge(a);
        stamp_voltage(row, e.head, Complex{1.0, 0.0});
        stamp_voltage(row, e.tail, Complex{-1.0, 0.0});
        for (int b = 0; b < n_edges; ++b) {
            if (z(a, b) == Complex{0.0, 0.0}) continue;
            if (!explicit_current[static_cast<size_t>(b)])
                throw OracleSingularError("coupled edge interacts with a folded edge");
            system(row, n_voltages + current_index[static_cast<size_t>(b)]) += z(a, b);
        }
        rhs(row) = problem.edge_emfs(a);
    }

    Eigen::VectorXcd unknowns;
    if (dim > 0) {
        Eigen::FullPivLU<Eigen::MatrixXcd> lu(system);
        if (!lu.isInvertible()) throw OracleSingularError("nodal system is singular");
        unknowns = lu.solve(rhs);
        if (!unknowns.allFinite()) throw OracleSingularError("nodal solve produced non-finite values");
    }

    NodalSolution solution;
    solution.node_voltages = Eigen::VectorXcd::Zero(n_vertices);
    for (int v = 0; v < n_vertices; ++v) {
        const int idx = voltage_index[static_cast<size_t>(v)];
        if (idx >= 0) solution.node_voltages(v) = unknowns(idx);
    }
    solution.edge_currents.resize(n_edges);
    for (int a = 0; a < n_edges; ++a) {
        if (explicit_current[static_cast<size_t>(a)]) {
            solution.edge_currents(a) = unknowns(n_voltages + current_index[static_cast<size_t>(a)]);
        } else {
            const Edge& e = complex.edge(a);
            const Complex u = solution.node_voltages(e.head) - solution.node_voltages(e.tail);
            solution.edge_currents(a) = (problem.edge_emfs(a) - u) / z(a, a);
        }
    }
    return solution;
}

}  // namespace kron
