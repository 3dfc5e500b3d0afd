#include "kron/cell_complex.hpp"

#include <algorithm>
#include <set>
#include <string>

namespace kron {

CellComplex::CellComplex(int vertex_count, std::vector<Edge> edges)
    : vertex_count_(vertex_count), edges_(std::move(edges)) {
    if (vertex_count_ < 0) throw TopologyError("negative vertex count");
    incident_.resize(static_cast<size_t>(vertex_count_));
    for (size_t i = 0; i < edges_.size(); ++i) {
        Edge& e = edges_[i];
        e.id = static_cast<int>(i);
        if (e.tail < 0 || e.tail >= vertex_count_ || e.head < 0 || e.head >= vertex_count_)
            throw TopologyError("edge " + std::to_string(i) + " references a missing vertex");
        if (e.tail == e.head)
            throw TopologyError("edge " + std::to_string(i) +
                                " is a self-loop; its incidence column would vanish");
        incident_[static_cast<size_t>(e.tail)].push_back(e.id);
        incident_[static_cast<size_t>(e.head)].push_back(e.id);
    }
    for (auto& list : incident_) std::sort(list.begin(), list.end());
}

int CellComplex::add_face(std::vector<SignedEdge> cycle) {
    if (cycle.empty()) throw TopologyError("face boundary cycle is empty");
    std::set<int> seen;
    for (const SignedEdge& se : cycle) {
        if (se.edge < 0 || se.edge >= edge_count())
            throw TopologyError("face cycle references missing edge " + std::to_string(se.edge));
        if (se.sign != 1 && se.sign != -1)
            throw TopologyError("face cycle sign must be +1 or -1");
        if (!seen.insert(se.edge).second)
            throw TopologyError("edge " + std::to_string(se.edge) +
                                " appears twice in one face boundary");
    }
    // Walk the signed edges; each must continue from the previous endpoint
    // and the walk must return to its starting vertex.
    const Edge& first = edge(cycle.front().edge);
    int start = cycle.front().sign > 0 ? first.tail : first.head;
    int at = start;
    for (const SignedEdge& se : cycle) {
        const Edge& e = edge(se.edge);
        int from = se.sign > 0 ? e.tail : e.head;
        int to = se.sign > 0 ? e.head : e.tail;
        if (from != at)
            throw TopologyError("face boundary is not a connected cycle at edge " +
                                std::to_string(se.edge));
        at = to;
    }
    if (at != start) throw TopologyError("face boundary does not close");

    Face f;
    f.id = face_count();
    f.boundary = std::move(cycle);
    faces_.push_back(std::move(f));
    return faces_.back().id;
}

Chain boundary(const CellComplex& complex, const Chain& chain) {
    if (chain.degree() == 0)
        throw DegreeError("boundary of a vertex chain is not defined in this complex");
    if (chain.degree() != 1 && chain.degree() != 2)
        throw DegreeError("boundary expects a chain of degree 1 or 2");

    if (chain.degree() == 1) {
        Chain out(0);
        for (const auto& [edge_id, value] : chain.coefficients()) {
            const Edge& e = complex.edge(edge_id);
            out.add(e.head, value);
            out.add(e.tail, -value);
        }
        return out;
    }
    Chain out(1);
    for (const auto& [face_id, value] : chain.coefficients()) {
        const Face& f = complex.face(face_id);
        for (const SignedEdge& se : f.boundary)
            out.add(se.edge, static_cast<double>(se.sign) * value);
    }
    return out;
}

IncidenceMatrix incidence_matrix(const CellComplex& complex) {
    IncidenceMatrix b = IncidenceMatrix::Zero(complex.vertex_count(), complex.edge_count());
    for (const Edge& e : complex.edges()) {
        b(e.head, e.id) = 1;
        b(e.tail, e.id) = -1;
    }
    return b;
}

Cochain coboundary(const CellComplex& complex, const Cochain& cochain) {
    if (cochain.degree() == 2)
        throw DegreeError("coboundary of a degree-2 cochain needs 3-cells, none exist here");
    if (cochain.degree() != 0 && cochain.degree() != 1)
        throw DegreeError("coboundary expects a cochain of degree 0 or 1");

    if (cochain.degree() == 0) {
        Cochain out(1);
        for (const Edge& e : complex.edges()) {
            Complex u = cochain.at(e.head) - cochain.at(e.tail);
            if (u != Complex{0.0, 0.0}) out.set(e.id, u);
        }
        return out;
    }
    Cochain out(2);
    for (const Face& f : complex.faces()) {
        Complex sum{0.0, 0.0};
        for (const SignedEdge& se : f.boundary)
            sum += static_cast<double>(se.sign) * cochain.at(se.edge);
        if (sum != Complex{0.0, 0.0}) out.set(f.id, sum);
    }
    return out;
}

Complex pairing(const Cochain& v, const Chain& c) {
    if (v.degree() != c.degree())
        throw DegreeError("pairing requires matching degrees");
    // Iterate the smaller map.
    Complex sum{0.0, 0.0};
    if (v.coefficients().size() <= c.coefficients().size()) {
        for (const auto& [cell, value] : v.coefficients()) sum += value * c.at(cell);
    } else {
        for (const auto& [cell, value] : c.coefficients()) sum += v.at(cell) * value;
    }
    return sum;
}

Chain kcl_residual(const CellComplex& complex, const Chain& current) {
    if (current.degree() != 1)
        throw DegreeError("kcl_residual expects a 1-chain of edge currents");
    return boundary(complex, current);
}

Complex mesh_voltage_sum(const CellComplex& complex, const Cochain& potential, int face_id) {
    if (potential.degree() != 0)
        throw DegreeError("mesh_voltage_sum expects a vertex potential");
    Cochain u = coboundary(complex, potential);
    Chain face_chain(2);
    face_chain.set(face_id, Complex{1.0, 0.0});
    return pairing(u, boundary(complex, face_chain));
}

}  // namespace kron
