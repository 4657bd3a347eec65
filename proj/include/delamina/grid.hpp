// grid.hpp
// Node-centered fields on a uniform rectangular grid over (0,lx) x (0,ly).
//
// Node (i,j) sits at (i*dx, j*dy), i in [0,nx], j in [0,ny]; storage is
// row-major with x fastest: index = j*(nx+1) + i. All reductions walk that
// order so results do not depend on thread count.

#ifndef DELAMINA_GRID_HPP
#define DELAMINA_GRID_HPP

#include <cstddef>
#include <vector>

#include "delamina/errors.hpp"

namespace delamina {

struct Grid {
    int nx = 0, ny = 0;   // cell counts per axis
    double lx = 1.0, ly = 1.0;

    Grid() = default;
    Grid(int nx_, int ny_, double lx_ = 1.0, double ly_ = 1.0)
        : nx(nx_), ny(ny_), lx(lx_), ly(ly_) {
        if (nx < 4 || ny < 4) throw InvalidArgument("Grid: nx and ny must be >= 4");
        if (!(lx > 0.0) || !(ly > 0.0)) throw InvalidArgument("Grid: edge lengths must be positive");
    }

    double dx() const { return lx / nx; }
    double dy() const { return ly / ny; }
    double spacing() const { return dx() > dy() ? dx() : dy(); }
    double area() const { return lx * ly; }
    int npx() const { return nx + 1; }  // nodes per row
    int npy() const { return ny + 1; }
    std::size_t nodes() const { return std::size_t(npx()) * std::size_t(npy()); }
    std::size_t idx(int i, int j) const { return std::size_t(j) * npx() + i; }
    double x(int i) const { return lx * i / nx; }
    double y(int j) const { return ly * j / ny; }

    bool operator==(const Grid& o) const {
        return nx == o.nx && ny == o.ny && lx == o.lx && ly == o.ly;
    }
    bool operator!=(const Grid& o) const { return !(*this == o); }
};

struct ScalarField {
    Grid grid;
    std::vector<double> v;

    ScalarField() = default;
    explicit ScalarField(const Grid& g, double fill = 0.0) : grid(g), v(g.nodes(), fill) {}

    double& at(int i, int j) { return v[grid.idx(i, j)]; }
    double at(int i, int j) const { return v[grid.idx(i, j)]; }
};

struct VectorField2 {
    Grid grid;
    ScalarField x, y;

    VectorField2() = default;
    explicit VectorField2(const Grid& g) : grid(g), x(g), y(g) {}
};

// Symmetric 2x2 tensor field; only xx, xy, yy stored.
struct SymTensorField {
    Grid grid;
    ScalarField xx, xy, yy;

    SymTensorField() = default;
    explicit SymTensorField(const Grid& g) : grid(g), xx(g), xy(g), yy(g) {}
};

enum class Edge { Left = 0, Right = 1, Bottom = 2, Top = 3 };
enum class EdgeCondition { Free, DirichletZero };

// Which edges carry u=0, w=0. The full-boundary version serves the blister
// problems, the left-edge version the bonded film with one clamped side.
struct BoundarySpec {
    EdgeCondition edge[4] = {EdgeCondition::Free, EdgeCondition::Free,
                             EdgeCondition::Free, EdgeCondition::Free};

    static BoundarySpec all_dirichlet() {
        BoundarySpec b;
        for (auto& e : b.edge) e = EdgeCondition::DirichletZero;
        return b;
    }
    static BoundarySpec left_dirichlet() {
        BoundarySpec b;
        b.edge[int(Edge::Left)] = EdgeCondition::DirichletZero;
        return b;
    }
    static BoundarySpec none() { return BoundarySpec{}; }

    bool dirichlet(Edge e) const { return edge[int(e)] == EdgeCondition::DirichletZero; }
    bool any_dirichlet() const {
        for (const auto& e : edge)
            if (e == EdgeCondition::DirichletZero) return true;
        return false;
    }
    bool node_is_dirichlet(const Grid& g, int i, int j) const {
        return (i == 0 && dirichlet(Edge::Left)) || (i == g.nx && dirichlet(Edge::Right)) ||
               (j == 0 && dirichlet(Edge::Bottom)) || (j == g.ny && dirichlet(Edge::Top));
    }
};

inline void require_same_grid(const Grid& a, const Grid& b, const char* what) {
    if (a != b) throw InvalidArgument(std::string(what) + ": fields live on different grids");
}

} // namespace delamina

#endif
