#include "kron/topology.hpp"

#include <algorithm>
#include <deque>
#include <set>
#include <string>

namespace kron {

bool SpanningTree::is_tree_edge(int edge_id) const {
    return std::binary_search(tree_edges.begin(), tree_edges.end(), edge_id);
}

int MeshBasis::index_of_closing_edge(int edge_id) const {
    for (size_t i = 0; i < meshes.size(); ++i)
        if (meshes[i].closing_edge == edge_id) return static_cast<int>(i);
    return -1;
}

SpanningTree build_spanning_tree(const CellComplex& complex) {
    const int n = complex.vertex_count();
    SpanningTree tree;
    tree.parent_vertex.assign(static_cast<size_t>(n), -1);
    tree.parent_edge.assign(static_cast<size_t>(n), -1);
    tree.depth.assign(static_cast<size_t>(n), 0);

    std::vector<bool> visited(static_cast<size_t>(n), false);
    std::vector<bool> in_tree(static_cast<size_t>(complex.edge_count()), false);

    for (int root = 0; root < n; ++root) {
        if (visited[static_cast<size_t>(root)]) continue;
        ++tree.component_count;
        visited[static_cast<size_t>(root)] = true;
        std::deque<int> queue{root};
        while (!queue.empty()) {
            int u = queue.front();
            queue.pop_front();
            for (int eid : complex.incident_edges(u)) {
                const Edge& e = complex.edge(eid);
                int other = e.tail == u ? e.head : e.tail;
                if (visited[static_cast<size_t>(other)]) continue;
                visited[static_cast<size_t>(other)] = true;
                in_tree[static_cast<size_t>(eid)] = true;
                tree.parent_vertex[static_cast<size_t>(other)] = u;
                tree.parent_edge[static_cast<size_t>(other)] = eid;
                tree.depth[static_cast<size_t>(other)] = tree.depth[static_cast<size_t>(u)] + 1;
                queue.push_back(other);
            }
        }
    }

    for (int eid = 0; eid < complex.edge_count(); ++eid) {
        if (in_tree[static_cast<size_t>(eid)])
            tree.tree_edges.push_back(eid);
        else
            tree.closing_edges.push_back(eid);
    }
    return tree;
}

namespace {

// Signed tree path from vertex `from` to vertex `to`, walking parent links
// up to the common ancestor. sign +1 when an edge is traversed tail->head.
std::vector<SignedEdge> tree_path(const SpanningTree& tree, const CellComplex& complex,
                                  int from, int to) {
    std::vector<SignedEdge> up_from;    // from -> ancestor
    std::vector<SignedEdge> up_to;      // to -> ancestor
    int a = from, b = to;
    auto step = [&](int v, std::vector<SignedEdge>& out) {
        int pe = tree.parent_edge[static_cast<size_t>(v)];
        const Edge& e = complex.edge(pe);
        out.push_back({pe, e.tail == v ? 1 : -1});
        return tree.parent_vertex[static_cast<size_t>(v)];
    };
    while (tree.depth[static_cast<size_t>(a)] > tree.depth[static_cast<size_t>(b)]) a = step(a, up_from);
    while (tree.depth[static_cast<size_t>(b)] > tree.depth[static_cast<size_t>(a)]) b = step(b, up_to);
    while (a != b) {
        a = step(a, up_from);
        b = step(b, up_to);
    }
    // from -> ancestor, then ancestor -> to (the reversed second walk).
    std::vector<SignedEdge> path = std::move(up_from);
    for (auto it = up_to.rbegin(); it != up_to.rend(); ++it)
        path.push_back({it->edge, -it->sign});
    return path;
}

}  // namespace

MeshBasis build_mesh_basis(CellComplex& complex, const SpanningTree& tree) {
    MeshBasis basis;
    for (int c : tree.closing_edges) {
        const Edge& e = complex.edge(c);
        Mesh mesh;
        mesh.closing_edge = c;
        mesh.cycle.push_back({c, 1});
        auto path = tree_path(tree, complex, e.head, e.tail);
        mesh.cycle.insert(mesh.cycle.end(), path.begin(), path.end());
        mesh.face_id = complex.add_face(mesh.cycle);
        basis.meshes.push_back(std::move(mesh));
    }
    return basis;
}

ConnectivityMatrix build_connectivity(const CellComplex& complex, const SpanningTree& tree,
                                      const MeshBasis& basis,
                                      const std::vector<int>& source_edges) {
    ConnectivityMatrix c;
    c.tree_count = static_cast<int>(tree.tree_edges.size());
    c.mesh_count = basis.size();
    c.edge_order = tree.tree_edges;
    c.edge_order.insert(c.edge_order.end(), tree.closing_edges.begin(), tree.closing_edges.end());
    c.row_of_edge.assign(static_cast<size_t>(complex.edge_count()), -1);
    for (size_t r = 0; r < c.edge_order.size(); ++r)
        c.row_of_edge[static_cast<size_t>(c.edge_order[r])] = static_cast<int>(r);

    std::set<int> seen;
    for (int s : source_edges) {
        if (!tree.is_tree_edge(s))
            throw SourcePlacementError("current source on edge " + std::to_string(s) +
                                       " which is not a tree edge");
        if (!seen.insert(s).second)
            throw SourcePlacementError("duplicate current source on edge " + std::to_string(s));
    }
    c.source_edges = source_edges;

    c.entries = Eigen::MatrixXi::Zero(c.rows(), c.cols());
    for (int j = 0; j < c.source_count(); ++j)
        c.entries(c.row_of_edge[static_cast<size_t>(c.source_edges[static_cast<size_t>(j)])], j) = 1;
    for (int m = 0; m < c.mesh_count; ++m)
        for (const SignedEdge& se : basis.meshes[static_cast<size_t>(m)].cycle)
            c.entries(c.row_of_edge[static_cast<size_t>(se.edge)], c.source_count() + m) = se.sign;
    return c;
}

CompleteDecomposition decompose_current(const Chain& current, const SpanningTree& tree,
                                        const MeshBasis& basis) {
    if (current.degree() != 1)
        throw DegreeError("decompose_current expects a 1-chain");

    CompleteDecomposition parts;
    parts.mesh_coefficients.resize(basis.size());
    // Each closing edge sits in exactly one mesh with sign +1, so the mesh
    // coefficients can be read off directly.
    for (int m = 0; m < basis.size(); ++m)
        parts.mesh_coefficients(m) = current.at(basis.meshes[static_cast<size_t>(m)].closing_edge);

    Chain residual = current;
    for (int m = 0; m < basis.size(); ++m) {
        Complex beta = parts.mesh_coefficients(m);
        if (beta == Complex{0.0, 0.0}) continue;
        for (const SignedEdge& se : basis.meshes[static_cast<size_t>(m)].cycle)
            residual.add(se.edge, -beta * static_cast<double>(se.sign));
    }
    parts.tree_coefficients.resize(static_cast<int>(tree.tree_edges.size()));
    for (size_t a = 0; a < tree.tree_edges.size(); ++a)
        parts.tree_coefficients(static_cast<int>(a)) = residual.at(tree.tree_edges[a]);
    return parts;
}

Chain reconstruct_current(const SpanningTree& tree, const MeshBasis& basis,
                          const CompleteDecomposition& parts) {
    Chain current(1);
    for (int m = 0; m < basis.size(); ++m) {
        Complex beta = parts.mesh_coefficients(m);
        for (const SignedEdge& se : basis.meshes[static_cast<size_t>(m)].cycle)
            current.add(se.edge, beta * static_cast<double>(se.sign));
    }
    for (size_t a = 0; a < tree.tree_edges.size(); ++a)
        current.add(tree.tree_edges[a], parts.tree_coefficients(static_cast<int>(a)));
    return current;
}

}  // namespace kron
