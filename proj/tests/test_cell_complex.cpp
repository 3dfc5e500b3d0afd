#include <doctest.h>

#include <random>

#include "helpers.hpp"
#include "kron/cell_complex.hpp"

using namespace kron;
using testing::make_five_edge_graph;

TEST_CASE("incidence matrix of the five-edge reference graph") {
    const CellComplex complex = make_five_edge_graph();
    const IncidenceMatrix b = incidence_matrix(complex);
    IncidenceMatrix expected(3, 5);
    expected << 1, -1, -1, 0, 0,
               -1,  1,  0, 1, 1,
                0,  0,  1, -1, -1;
    CHECK(b == expected);
}

TEST_CASE("incidence of a single edge and of an edgeless graph") {
    const CellComplex single(2, {{0, 0, 1}});
    IncidenceMatrix expected(2, 1);
    expected << -1, 1;
    CHECK(incidence_matrix(single) == expected);

    const CellComplex empty(3, {});
    CHECK(incidence_matrix(empty).cols() == 0);
    CHECK(incidence_matrix(empty).rows() == 3);
}

TEST_CASE("incidence columns have exactly one +1 and one -1") {
    std::mt19937 rng(7);
    for (int trial = 0; trial < 20; ++trial) {
        const CellComplex complex = testing::random_connected_complex(rng, 30);
        const IncidenceMatrix b = incidence_matrix(complex);
        for (int col = 0; col < b.cols(); ++col) {
            int plus = 0, minus = 0, other = 0;
            for (int row = 0; row < b.rows(); ++row) {
                if (b(row, col) == 1) ++plus;
                else if (b(row, col) == -1) ++minus;
                else if (b(row, col) != 0) ++other;
            }
            CHECK(plus == 1);
            CHECK(minus == 1);
            CHECK(other == 0);
            CHECK(b.col(col).sum() == 0);
        }
    }
}

TEST_CASE("boundary of a unit edge chain") {
    const CellComplex complex = make_five_edge_graph();
    Chain unit(1);
    unit.set(0, 1.0);  // edge 1 in 1-based terms
    const Chain b = boundary(complex, unit);
    CHECK(b.at(0) == Complex{1.0, 0.0});
    CHECK(b.at(1) == Complex{-1.0, 0.0});
    CHECK(b.at(2) == Complex{0.0, 0.0});
}

TEST_CASE("boundary is linear and vanishes on the zero chain") {
    const CellComplex complex = make_five_edge_graph();
    CHECK(boundary(complex, Chain(2)).is_zero());

    std::mt19937 rng(3);
    std::uniform_real_distribution<double> dist(-2.0, 2.0);
    Chain c1(1), c2(1);
    for (int e = 0; e < complex.edge_count(); ++e) {
        c1.set(e, Complex{dist(rng), dist(rng)});
        c2.set(e, Complex{dist(rng), dist(rng)});
    }
    const Complex alpha{2.0, 0.0}, beta{0.0, -3.0};
    Chain mix(1);
    for (int e = 0; e < complex.edge_count(); ++e)
        mix.set(e, alpha * c1.at(e) + beta * c2.at(e));
    const Chain left = boundary(complex, mix);
    const Chain b1 = boundary(complex, c1);
    const Chain b2 = boundary(complex, c2);
    for (int v = 0; v < complex.vertex_count(); ++v)
        CHECK(std::abs(left.at(v) - (alpha * b1.at(v) + beta * b2.at(v))) < 1e-14);
}

TEST_CASE("boundary of a boundary is exactly zero") {
    CellComplex complex = make_five_edge_graph();
    // cycle 2-3-4 in 1-based edge terms: +edge2 -edge4 -edge3
    const int f = complex.add_face({{1, 1}, {3, -1}, {2, -1}});
    Chain face(2);
    face.set(f, Complex{3.0, -1.0});
    CHECK(boundary(complex, boundary(complex, face)).is_zero());
}

TEST_CASE("degree errors on boundary, coboundary and pairing") {
    const CellComplex complex = make_five_edge_graph();
    CHECK_THROWS_AS(boundary(complex, Chain(0)), DegreeError);
    CHECK_THROWS_AS(coboundary(complex, Cochain(2)), DegreeError);
    CHECK_THROWS_AS(pairing(Cochain(0), Chain(1)), DegreeError);
}

TEST_CASE("coboundary produces potential differences") {
    const CellComplex single(2, {{0, 0, 1}});
    Cochain v(0);
    v.set(0, 1.0);
    const Cochain u = coboundary(single, v);
    CHECK(u.at(0) == Complex{-1.0, 0.0});

    // Constant potential: zero differences.
    Cochain flat(0);
    flat.set(0, Complex{2.5, 1.0});
    flat.set(1, Complex{2.5, 1.0});
    CHECK(coboundary(single, flat).is_zero());
}

TEST_CASE("coboundary is the adjoint of the boundary") {
    std::mt19937 rng(11);
    std::uniform_real_distribution<double> dist(-1.0, 1.0);
    for (int trial = 0; trial < 50; ++trial) {
        const CellComplex complex = testing::random_connected_complex(rng, 20);
        Cochain v(0);
        for (int s = 0; s < complex.vertex_count(); ++s)
            v.set(s, Complex{dist(rng), dist(rng)});
        Chain theta(1);
        for (int e = 0; e < complex.edge_count(); ++e)
            theta.set(e, Complex{dist(rng), dist(rng)});
        const Complex lhs = pairing(coboundary(complex, v), theta);
        const Complex rhs = pairing(v, boundary(complex, theta));
        CHECK(std::abs(lhs - rhs) <= 1e-12 * (1.0 + std::abs(rhs)));
    }
}

TEST_CASE("coboundary adjointness one degree up") {
    CellComplex complex = make_five_edge_graph();
    const int f = complex.add_face({{1, 1}, {3, -1}, {2, -1}});

    std::mt19937 rng(13);
    std::uniform_real_distribution<double> dist(-1.0, 1.0);
    Cochain u(1);
    for (int e = 0; e < complex.edge_count(); ++e) u.set(e, Complex{dist(rng), dist(rng)});
    Chain face(2);
    face.set(f, Complex{dist(rng), dist(rng)});

    const Complex lhs = pairing(coboundary(complex, u), face);
    const Complex rhs = pairing(u, boundary(complex, face));
    CHECK(std::abs(lhs - rhs) <= 1e-12 * (1.0 + std::abs(rhs)));
}

TEST_CASE("node-law residual of the reference graph") {
    const CellComplex complex = make_five_edge_graph();
    Chain i(1);
    i.set(0, 1.0);
    i.set(1, 1.0);
    i.set(3, 1.0);
    const Chain r = kcl_residual(complex, i);
    CHECK(r.at(0) == Complex{0.0, 0.0});
    CHECK(r.at(1) == Complex{1.0, 0.0});
    CHECK(r.at(2) == Complex{-1.0, 0.0});

    CHECK(kcl_residual(complex, Chain(1)).is_zero());
}

TEST_CASE("mesh boundaries have zero residual") {
    CellComplex complex = make_five_edge_graph();
    const int f = complex.add_face({{1, 1}, {3, -1}, {2, -1}});
    Chain face(2);
    face.set(f, Complex{1.0, 2.0});
    CHECK(kcl_residual(complex, boundary(complex, face)).is_zero());
}

TEST_CASE("voltage sum around a mesh vanishes") {
    CellComplex complex = make_five_edge_graph();
    const int f = complex.add_face({{1, 1}, {3, -1}, {2, -1}});

    std::mt19937 rng(5);
    std::uniform_real_distribution<double> dist(-10.0, 10.0);
    Cochain v(0);
    double norm = 0.0;
    for (int s = 0; s < 3; ++s) {
        const Complex value{dist(rng), dist(rng)};
        v.set(s, value);
        norm += std::abs(value);
    }
    CHECK(std::abs(mesh_voltage_sum(complex, v, f)) <= 1e-12 * norm);

    // U2 - U4 - U3 spelled out with the edge differences directly.
    const Cochain u = coboundary(complex, v);
    CHECK(std::abs(u.at(1) - u.at(3) - u.at(2)) <= 1e-12 * norm);

    Cochain flat(0);
    for (int s = 0; s < 3; ++s) flat.set(s, Complex{4.2, -1.0});
    CHECK(mesh_voltage_sum(complex, flat, f) == Complex{0.0, 0.0});
}

TEST_CASE("construction rejects self-loops and bad faces, allows parallel edges") {
    CHECK_THROWS_AS(CellComplex(2, {{0, 1, 1}}), TopologyError);
    CHECK_NOTHROW(CellComplex(2, {{0, 0, 1}, {1, 0, 1}}));

    CellComplex complex = make_five_edge_graph();
    CHECK_THROWS_AS(complex.add_face({{0, 1}, {2, 1}}), TopologyError);   // does not close
    CHECK_THROWS_AS(complex.add_face({{0, 1}, {0, -1}}), TopologyError);  // edge used twice
    CHECK_THROWS_AS(complex.add_face({{0, 2}}), TopologyError);           // bad sign
    CHECK_NOTHROW(complex.add_face({{0, 1}, {1, 1}}));  // two parallel edges close a loop
}
