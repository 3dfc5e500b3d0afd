#pragma once

#include <vector>

#include <Eigen/Dense>

#include "kron/cell_complex.hpp"

namespace kron {

/// Spanning tree (forest for multi-component graphs). tree_edges and
/// closing_edges partition the edge set; both are ascending.
struct SpanningTree {
    std::vector<int> tree_edges;
    std::vector<int> closing_edges;
    int component_count = 0;  // R

    // BFS bookkeeping, used to extract tree paths.
    std::vector<int> parent_vertex;  // per vertex; -1 at component roots
    std::vector<int> parent_edge;    // per vertex; -1 at component roots
    std::vector<int> depth;          // per vertex

    bool is_tree_edge(int edge_id) const;
};

/// Fundamental cycle attached to one closing edge. The closing edge always
/// carries sign +1; tree-path edges are signed by traversal direction.
struct Mesh {
    int closing_edge = -1;
    int face_id = -1;  // registered 2-cell in the complex
    std::vector<SignedEdge> cycle;
};

/// One mesh per closing edge, ordered by ascending closing-edge id.
struct MeshBasis {
    std::vector<Mesh> meshes;

    int size() const { return static_cast<int>(meshes.size()); }
    /// Mesh index of a closing edge, or -1.
    int index_of_closing_edge(int edge_id) const;
};

/// Block connectivity matrix C = [[Q, L], [0, I]] of the complete space.
/// Rows are edges ordered tree-first then closing (ascending within each
/// group); columns are current sources first, then meshes. Entries are
/// exact integers.
struct ConnectivityMatrix {
    std::vector<int> edge_order;    // row -> edge id
    std::vector<int> row_of_edge;   // edge id -> row
    std::vector<int> source_edges;  // column -> tree edge id
    int tree_count = 0;
    int mesh_count = 0;

    Eigen::MatrixXi entries;

    int rows() const { return static_cast<int>(edge_order.size()); }
    int cols() const { return static_cast<int>(source_edges.size()) + mesh_count; }
    int source_count() const { return static_cast<int>(source_edges.size()); }

    Eigen::MatrixXcd cast_complex() const { return entries.cast<double>().cast<Complex>(); }

    /// Blocks of C. Q maps source injections onto tree edges; L holds the
    /// tree-path coefficients of each mesh.
    Eigen::MatrixXi q_block() const { return entries.topLeftCorner(tree_count, source_count()); }
    Eigen::MatrixXi l_block() const { return entries.topRightCorner(tree_count, mesh_count); }

    /// Column of one mesh over all edge rows.
    Eigen::VectorXi mesh_column(int mesh_index) const {
        return entries.col(source_count() + mesh_index);
    }
};

/// Splitting of a current into mesh coefficients plus tree ("node pair")
/// coefficients. Reconstruction is exact by construction.
struct CompleteDecomposition {
    Eigen::VectorXcd mesh_coefficients;  // per mesh, basis order
    Eigen::VectorXcd tree_coefficients;  // per tree edge, ascending order
};

/// Deterministic spanning forest: breadth-first from the lowest-id vertex
/// of each component, neighbors visited in ascending edge id.
SpanningTree build_spanning_tree(const CellComplex& complex);

/// Builds one mesh per closing edge and registers each cycle as a face of
/// the complex. Mesh order follows ascending closing-edge ids.
MeshBasis build_mesh_basis(CellComplex& complex, const SpanningTree& tree);

/// Assembles C for the given current-source placement. Source edges must
/// be tree edges; anything else raises SourcePlacementError.
ConnectivityMatrix build_connectivity(const CellComplex& complex, const SpanningTree& tree,
                                      const MeshBasis& basis,
                                      const std::vector<int>& source_edges);

/// Reads mesh coefficients off the closing edges, then subtracts the mesh
/// part to expose the tree coefficients.
CompleteDecomposition decompose_current(const Chain& current, const SpanningTree& tree,
                                        const MeshBasis& basis);

/// Inverse of decompose_current, for round-trip checks.
Chain reconstruct_current(const SpanningTree& tree, const MeshBasis& basis,
                          const CompleteDecomposition& parts);

}  // namespace kron
