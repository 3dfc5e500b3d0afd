#pragma once

#include <complex>
#include <random>
#include <vector>

#include "kron/nodal_oracle.hpp"
#include "kron/problem.hpp"
#include "kron/solver.hpp"
#include "kron/topology.hpp"

namespace testing {

using kron::Complex;

/// 3 vertices, 5 edges; incidence matrix
///   [[ 1 -1 -1  0  0]
///    [-1  1  0  1  1]
///    [ 0  0  1 -1 -1]]
inline kron::CellComplex make_five_edge_graph() {
    return kron::CellComplex(3, {{0, 1, 0}, {1, 0, 1}, {2, 0, 2}, {3, 2, 1}, {4, 2, 1}});
}

/// 2 vertices joined by 3 parallel branches; edge 0 is the shared branch
/// of the two meshes (opposed by mesh 1, followed by mesh 0... it enters
/// mesh(edge 1) with +1 and mesh(edge 2) with -1).
inline kron::CellComplex make_three_branch_graph() {
    return kron::CellComplex(2, {{0, 1, 0}, {1, 0, 1}, {2, 1, 0}});
}

struct EdgeSpec {
    int tail = 0;
    int head = 0;
    double r = 0.0;
    double l = 0.0;
    double c = 0.0;  // farads; 0 = none
    Complex emf{0.0, 0.0};
};

/// Assembles a problem with no current sources; add them with set_sources.
inline kron::NetworkProblem make_problem(int n_vertices, const std::vector<EdgeSpec>& specs) {
    std::vector<kron::Edge> edges;
    for (size_t i = 0; i < specs.size(); ++i)
        edges.push_back({static_cast<int>(i), specs[i].tail, specs[i].head});

    kron::NetworkProblem problem;
    problem.complex = kron::CellComplex(n_vertices, std::move(edges));
    problem.tree = kron::build_spanning_tree(problem.complex);
    problem.meshes = kron::build_mesh_basis(problem.complex, problem.tree);
    problem.connectivity =
        kron::build_connectivity(problem.complex, problem.tree, problem.meshes, {});
    problem.edge_metric = kron::EdgeMetric(static_cast<int>(specs.size()));
    problem.edge_emfs = Eigen::VectorXcd::Zero(static_cast<int>(specs.size()));
    for (size_t i = 0; i < specs.size(); ++i) {
        auto& z = problem.edge_metric.diagonal(static_cast<int>(i));
        z.resistance = specs[i].r;
        z.inductance = specs[i].l;
        z.elastance = specs[i].c > 0.0 ? 1.0 / specs[i].c : 0.0;
        problem.edge_emfs(static_cast<int>(i)) = specs[i].emf;
    }
    problem.tree_injections.resize(0);
    return problem;
}

inline void set_sources(kron::NetworkProblem& problem,
                        const std::vector<std::pair<int, double>>& jsources) {
    std::vector<int> source_edges;
    for (const auto& [edge, amps] : jsources) source_edges.push_back(edge);
    problem.connectivity = kron::build_connectivity(problem.complex, problem.tree,
                                                    problem.meshes, source_edges);
    problem.tree_injections.resize(static_cast<int>(jsources.size()));
    for (size_t j = 0; j < jsources.size(); ++j)
        problem.tree_injections(static_cast<int>(j)) = jsources[j].second;
}

/// Random connected multigraph: a random tree plus extra edges, then the
/// edge order shuffled so tree edges are not clustered at low ids.
inline kron::CellComplex random_connected_complex(std::mt19937& rng, int max_edges = 50,
                                                  int max_vertices = 16) {
    std::uniform_int_distribution<int> nv_dist(2, max_vertices);
    const int n_vertices = nv_dist(rng);
    std::vector<std::pair<int, int>> pairs;
    for (int v = 1; v < n_vertices; ++v) {
        std::uniform_int_distribution<int> parent(0, v - 1);
        pairs.emplace_back(parent(rng), v);
    }
    const int room = max_edges - static_cast<int>(pairs.size());
    std::uniform_int_distribution<int> extra_dist(0, std::max(0, room));
    const int extra = extra_dist(rng);
    std::uniform_int_distribution<int> vertex(0, n_vertices - 1);
    for (int i = 0; i < extra; ++i) {
        int a = vertex(rng), b = vertex(rng);
        if (a == b) {
            --i;
            continue;
        }
        pairs.emplace_back(a, b);
    }
    std::shuffle(pairs.begin(), pairs.end(), rng);
    std::bernoulli_distribution flip(0.5);
    std::vector<kron::Edge> edges;
    for (size_t i = 0; i < pairs.size(); ++i) {
        auto [a, b] = pairs[i];
        if (flip(rng)) std::swap(a, b);
        edges.push_back({static_cast<int>(i), a, b});
    }
    return kron::CellComplex(n_vertices, std::move(edges));
}

/// Random passive RLC problem with mixed emf/current sources and, when
/// requested and possible, mutual / far-field / reflection chords.
inline kron::NetworkProblem random_rlc_problem(std::mt19937& rng, bool with_chords = true,
                                               int max_edges = 12) {
    const kron::CellComplex complex = random_connected_complex(rng, max_edges, 6);
    std::uniform_real_distribution<double> r_dist(1.0, 100.0);
    std::uniform_real_distribution<double> exp_dist(0.0, 1.0);
    std::uniform_real_distribution<double> phase_dist(0.0, 2.0 * 3.14159265358979323846);
    std::bernoulli_distribution coin(0.5), third(0.3);

    std::vector<EdgeSpec> specs;
    for (const kron::Edge& e : complex.edges()) {
        EdgeSpec s;
        s.tail = e.tail;
        s.head = e.head;
        s.r = r_dist(rng);
        if (coin(rng)) s.l = std::pow(10.0, -6.0 + 3.0 * exp_dist(rng));
        if (third(rng)) s.c = std::pow(10.0, -9.0 + 3.0 * exp_dist(rng));
        specs.push_back(s);
    }
    // At least one emf, at most three sources total.
    std::uniform_int_distribution<int> edge_pick(0, complex.edge_count() - 1);
    const int n_emf = 1 + (coin(rng) ? 1 : 0);
    for (int i = 0; i < n_emf; ++i) {
        const double mag = 0.5 + 1.5 * exp_dist(rng);
        const double ph = phase_dist(rng);
        specs[static_cast<size_t>(edge_pick(rng))].emf =
            mag * Complex{std::cos(ph), std::sin(ph)};
    }
    kron::NetworkProblem problem = make_problem(complex.vertex_count(), specs);

    if (coin(rng) && !problem.tree.tree_edges.empty()) {
        std::uniform_int_distribution<int> tree_pick(
            0, static_cast<int>(problem.tree.tree_edges.size()) - 1);
        const int edge = problem.tree.tree_edges[static_cast<size_t>(tree_pick(rng))];
        std::uniform_real_distribution<double> amps(-1.0, 1.0);
        double j = amps(rng);
        if (std::abs(j) < 0.05) j = 0.1;
        set_sources(problem, {{edge, j}});
    }

    if (with_chords && problem.mesh_count() >= 2) {
        // Meshes with an inductive edge, for mutual couplings.
        std::vector<int> inductive;
        for (int m = 0; m < problem.mesh_count(); ++m) {
            bool has = false;
            for (const kron::SignedEdge& se : problem.meshes.meshes[static_cast<size_t>(m)].cycle)
                if (problem.edge_metric.diagonal(se.edge).inductance > 0.0) has = true;
            if (has) inductive.push_back(m);
        }
        if (inductive.size() >= 2 && third(rng)) {
            const int mi = inductive[0], mj = inductive[1];
            double li = 0.0, lj = 0.0;
            for (const kron::SignedEdge& se :
                 problem.meshes.meshes[static_cast<size_t>(mi)].cycle)
                li += problem.edge_metric.diagonal(se.edge).inductance;
            for (const kron::SignedEdge& se :
                 problem.meshes.meshes[static_cast<size_t>(mj)].cycle)
                lj += problem.edge_metric.diagonal(se.edge).inductance;
            kron::MutualInductanceChord chord;
            chord.mesh_i = mi;
            chord.mesh_j = mj;
            chord.mutual = 0.3 * std::sqrt(li * lj);
            problem.chords.push_back(chord);
        }
        if (third(rng)) {
            kron::FarFieldLink link;
            link.mesh_transmit = 0;
            link.mesh_receive = 1;
            link.r11 = 20.0 + 60.0 * exp_dist(rng);
            link.r22 = 20.0 + 60.0 * exp_dist(rng);
            link.aperture_transmit = 0.01 * exp_dist(rng) + 1e-3;
            link.aperture_receive = 0.01 * exp_dist(rng) + 1e-3;
            link.distance = 1.0 + 9.0 * exp_dist(rng);
            problem.chords.push_back(link);
        }
        if (third(rng)) {
            kron::ReflectionLink link;
            link.mesh = problem.mesh_count() - 1;
            link.gain = 1.0 + 9.0 * exp_dist(rng);
            link.wall_distance = 0.2 + exp_dist(rng);
            link.reflection_coefficient = exp_dist(rng);
            link.radiation_resistance = 10.0 + 90.0 * exp_dist(rng);
            link.phase = coin(rng) ? 1.0 : -1.0;
            problem.chords.push_back(link);
        }
    }
    return problem;
}

/// Random angular frequency, log-uniform over [1e3, 1e8] rad/s.
inline double random_omega(std::mt19937& rng) {
    std::uniform_real_distribution<double> exp_dist(3.0, 8.0);
    return std::pow(10.0, exp_dist(rng));
}

}  // namespace testing
