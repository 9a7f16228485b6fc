#pragma once

#include <vector>

#include "kdvstar/graph.hpp"
#include "kdvstar/grid.hpp"
#include "kdvstar/poly.hpp"
#include "kdvstar/signals.hpp"

namespace kdvstar {

enum class EndpointLocation { LeftEnd, RightEnd };

/// One endpoint condition d^order p / dx^order (location) = target.
struct EndpointConstraint {
    EndpointLocation location;
    int order = 0; // 0, 1 or 2
    double target = 0.0;
};

/// The three boundary-lifting families: phi carries g0 (vertex flux),
/// psi carries p_j (outer Dirichlet), theta carries g_j (outer Neumann).
struct LiftingTriple {
    GraphPoly phi;
    GraphPoly psi;
    GraphPoly theta;
};

enum class HomogenizeDirection { Forward, Inverse };

/// Minimal-degree polynomial matching every endpoint constraint: with c
/// constraints the degree is c-1 and the square system is solved directly.
EdgePoly build_constrained_poly(const std::vector<EndpointConstraint>& constraints, double length,
                                int edge = 0);

/// Constructs the lifting triple for the graph. psi_j and theta_j follow
/// their constraint tables per edge; phi_j pins the common vertex value to
/// 0 and splits the curvature budget evenly, phi_j''(0) = 1/N, so the flux
/// row sums to -alpha*0 + 1.
LiftingTriple build_lifting_triple(const StarGraph& graph);

/// u <-> v transform: forward subtracts
/// phi_j(x) g0(t) + psi_j(x) p_j(t) + theta_j(x) g_j(t), inverse adds it.
GraphPoly homogenize(const GraphPoly& u, const LiftingTriple& lifting,
                     const BoundarySignals& signals, double t, HomogenizeDirection direction);

GraphState homogenize(const GraphState& u, const std::vector<EdgeGrid>& grids,
                      const LiftingTriple& lifting, const BoundarySignals& signals,
                      HomogenizeDirection direction);

} // namespace kdvstar
