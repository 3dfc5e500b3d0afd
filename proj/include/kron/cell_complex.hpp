#pragma once

#include <complex>
#include <map>
#include <vector>

#include <Eigen/Dense>

#include "kron/errors.hpp"

namespace kron {

using Complex = std::complex<double>;

/// Oriented edge between two distinct vertices. Positive current flows
/// tail -> head. Indices are dense and 0-based; the netlist layer maps
/// to 1-based ids for all I/O.
struct Edge {
    int id = -1;
    int tail = -1;
    int head = -1;
};

/// One step of a face boundary cycle: an edge id plus a traversal sign.
struct SignedEdge {
    int edge = -1;
    int sign = 0;  // +1 traversed tail->head, -1 reversed

    bool operator==(const SignedEdge&) const = default;
};

/// 2-cell with an explicit signed boundary cycle.
struct Face {
    int id = -1;
    std::vector<SignedEdge> boundary;
};

/// Formal complex-weighted sum of cells of one degree. Absent keys are
/// zero coefficients. The map keeps iteration deterministic.
class Chain {
public:
    explicit Chain(int degree) : degree_(degree) {}

    int degree() const { return degree_; }

    void add(int cell, Complex value) {
        auto [it, inserted] = coeff_.try_emplace(cell, value);
        if (!inserted) it->second += value;
        if (it->second == Complex{0.0, 0.0}) coeff_.erase(it);
    }
    void set(int cell, Complex value) {
        if (value == Complex{0.0, 0.0}) {
            coeff_.erase(cell);
        } else {
            coeff_[cell] = value;
        }
    }
    Complex at(int cell) const {
        auto it = coeff_.find(cell);
        return it == coeff_.end() ? Complex{0.0, 0.0} : it->second;
    }
    bool is_zero() const { return coeff_.empty(); }
    const std::map<int, Complex>& coefficients() const { return coeff_; }

private:
    int degree_;
    std::map<int, Complex> coeff_;
};

/// Linear functional on chains of one degree; same storage as Chain.
class Cochain {
public:
    explicit Cochain(int degree) : degree_(degree) {}

    int degree() const { return degree_; }

    void add(int cell, Complex value) {
        auto [it, inserted] = coeff_.try_emplace(cell, value);
        if (!inserted) it->second += value;
        if (it->second == Complex{0.0, 0.0}) coeff_.erase(it);
    }
    void set(int cell, Complex value) {
        if (value == Complex{0.0, 0.0}) {
            coeff_.erase(cell);
        } else {
            coeff_[cell] = value;
        }
    }
    Complex at(int cell) const {
        auto it = coeff_.find(cell);
        return it == coeff_.end() ? Complex{0.0, 0.0} : it->second;
    }
    bool is_zero() const { return coeff_.empty(); }
    const std::map<int, Complex>& coefficients() const { return coeff_; }

private:
    int degree_;
    std::map<int, Complex> coeff_;
};

/// Entries in {-1, 0, +1}; row per vertex, column per edge. Kept in exact
/// integer arithmetic so boundary identities hold without tolerance.
using IncidenceMatrix = Eigen::MatrixXi;

/// Cellular complex specialized to graphs plus explicit face cycles:
/// vertices (0-cells), oriented edges (1-cells) and faces (2-cells).
///
/// Self-loops are rejected at construction: their incidence column would
/// vanish and the spanning-tree decomposition breaks down. Parallel edges
/// are allowed. Faces carry explicit signed cycles; nothing is inferred
/// from an embedding.
class CellComplex {
public:
    CellComplex() = default;
    CellComplex(int vertex_count, std::vector<Edge> edges);

    /// Registers a face with the given signed boundary cycle and returns
    /// its id. The cycle must close and may use each edge at most once.
    int add_face(std::vector<SignedEdge> cycle);

    int vertex_count() const { return vertex_count_; }
    int edge_count() const { return static_cast<int>(edges_.size()); }
    int face_count() const { return static_cast<int>(faces_.size()); }

    const Edge& edge(int id) const { return edges_.at(static_cast<size_t>(id)); }
    const Face& face(int id) const { return faces_.at(static_cast<size_t>(id)); }
    const std::vector<Edge>& edges() const { return edges_; }
    const std::vector<Face>& faces() const { return faces_; }

    /// Edge ids incident to a vertex, ascending. Parallel edges appear once
    /// each; an edge incident at both ends cannot exist (no self-loops).
    const std::vector<int>& incident_edges(int vertex) const {
        return incident_.at(static_cast<size_t>(vertex));
    }

private:
    int vertex_count_ = 0;
    std::vector<Edge> edges_;
    std::vector<Face> faces_;
    std::vector<std::vector<int>> incident_;
};

/// Boundary operator: degree 1 -> 0 and 2 -> 1. Degree-0 input raises
/// DegreeError rather than inventing a degree -1 space.
Chain boundary(const CellComplex& complex, const Chain& chain);

/// B[head(a)][a] = +1, B[tail(a)][a] = -1: a current entering a vertex
/// counts positive.
IncidenceMatrix incidence_matrix(const CellComplex& complex);

/// Adjoint of the boundary operator: degree 0 -> 1 and 1 -> 2. For a
/// vertex potential this produces the edge potential differences
/// U_a = sum_s B[s][a] V_s.
Cochain coboundary(const CellComplex& complex, const Cochain& cochain);

/// Duality pairing <v|c> (bilinear, no conjugation). Degrees must match.
Complex pairing(const Cochain& v, const Chain& c);

/// Returns the boundary of a 1-chain of currents; zero exactly when the
/// current satisfies the node law.
Chain kcl_residual(const CellComplex& complex, const Chain& current);

/// Diagnostic: sum of potential differences around a face boundary,
/// <coboundary(v) | boundary(face)>. Always zero up to rounding.
Complex mesh_voltage_sum(const CellComplex& complex, const Cochain& potential, int face_id);

}  // namespace kron
