#pragma once

#include <vector>

#include "kdvstar/graph.hpp"
#include "kdvstar/poly.hpp"

namespace kdvstar {

/// Uniform grid on one edge: M+1 nodes, x_0 = 0 at the vertex and
/// x_M = l_j at the outer end.
struct EdgeGrid {
    int edge = 0;
    int segments = 0; // M
    double spacing = 0.0;

    int node_count() const { return segments + 1; }
    double node(int i) const { return spacing * i; }
    double length() const { return spacing * segments; }
};

/// Nodal values of the unknown on every edge grid at one time.
struct GraphState {
    double t = 0.0;
    std::vector<std::vector<double>> values; // [edge][node]

    int n_edges() const { return static_cast<int>(values.size()); }

    static GraphState zeros(const std::vector<EdgeGrid>& grids, double t = 0.0);
};

/// Equal node count per edge (spacing varies with l_j). M >= 8.
std::vector<EdgeGrid> build_grids(const StarGraph& graph, int segments);

/// Finite-difference weights for the m-th derivative on the given integer
/// offsets (spacing h = 1 units; divide by h^m at the call site). Solved
/// from the exactness conditions on monomials.
std::vector<double> fd_weights(const std::vector<int>& offsets, int m);

/// First derivative: centered interior, 3-point one-sided ends, all
/// second order.
std::vector<double> apply_dx(const std::vector<double>& values, const EdgeGrid& grid);

/// Third derivative: 5-point centered interior (exact through degree 4),
/// 5-point biased stencils near the ends, all second order. Normalized so
/// u = x^3 maps to +6.
std::vector<double> apply_dxxx(const std::vector<double>& values, const EdgeGrid& grid);

/// Second derivative at the vertex (x = 0) by the 4-point one-sided
/// second-order stencil; the same stencil the flux constraint row uses.
double dxx_at_vertex(const std::vector<double>& values, const EdgeGrid& grid);

/// Second derivative at the outer end (x = l_j), mirrored 4-point stencil.
double dxx_at_outer(const std::vector<double>& values, const EdgeGrid& grid);

/// First derivative at the outer end, 3-point one-sided.
double dx_at_outer(const std::vector<double>& values, const EdgeGrid& grid);

/// First derivative at the vertex, 3-point one-sided.
double dx_at_vertex(const std::vector<double>& values, const EdgeGrid& grid);

/// Sample a GraphPoly on the grids at time tag t.
GraphState sample_on_grids(const GraphPoly& poly, const std::vector<EdgeGrid>& grids, double t = 0.0);

} // namespace kdvstar
