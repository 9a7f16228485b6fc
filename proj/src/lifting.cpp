#include "kdvstar/lifting.hpp"

#include <Eigen/Dense>

#include <cmath>
#include <string>

namespace kdvstar {

EdgePoly build_constrained_poly(const std::vector<EndpointConstraint>& constraints, double length,
                                int edge) {
    const int n = static_cast<int>(constraints.size());
    if (n < 1 || n > 6) {
        throw Error(ErrorCode::InvalidConfig, "constraint count must be in [1, 6], got " +
                                                  std::to_string(n));
    }
    if (!(length > 0.0)) throw Error(ErrorCode::NonpositiveLength, "lifting edge length");

    // Row r: d^{order} x^m / dx^{order} at the endpoint = m!/(m-order)! x^{m-order}.
    Eigen::MatrixXd A = Eigen::MatrixXd::Zero(n, n);
    Eigen::VectorXd b(n);
    for (int r = 0; r < n; ++r) {
        const auto& c = constraints[static_cast<size_t>(r)];
        if (c.order < 0 || c.order > 2) {
            throw Error(ErrorCode::InvalidConfig, "endpoint derivative order must be 0, 1 or 2");
        }
        const double x = (c.location == EndpointLocation::LeftEnd) ? 0.0 : length;
        for (int m = c.order; m < n; ++m) {
            double fall = 1.0;
            for (int i = 0; i < c.order; ++i) fall *= static_cast<double>(m - i);
            A(r, m) = fall * std::pow(x, m - c.order);
        }
        b(r) = c.target;
    }
    Eigen::FullPivLU<Eigen::MatrixXd> lu(A);
    if (!lu.isInvertible()) {
        throw Error(ErrorCode::SingularConstraintSystem,
                    "conflicting or redundant endpoint constraints");
    }
    Eigen::VectorXd coeffs = lu.solve(b);
    return EdgePoly({coeffs.data(), coeffs.data() + n}, edge);
}

LiftingTriple build_lifting_triple(const StarGraph& graph) {
    require_valid_graph(graph);
    const int n = graph.n_edges;
    LiftingTriple triple{GraphPoly::zeros(n), GraphPoly::zeros(n), GraphPoly::zeros(n)};
    for (int j = 0; j < n; ++j) {
        const double l = graph.lengths[static_cast<size_t>(j)];
        triple.psi[j] = build_constrained_poly({{EndpointLocation::LeftEnd, 0, 0.0},
                                                {EndpointLocation::RightEnd, 0, 1.0},
                                                {EndpointLocation::RightEnd, 1, 0.0},
                                                {EndpointLocation::LeftEnd, 2, 0.0}},
                                               l, j);
        triple.theta[j] = build_constrained_poly({{EndpointLocation::LeftEnd, 0, 0.0},
                                                  {EndpointLocation::RightEnd, 0, 0.0},
                                                  {EndpointLocation::RightEnd, 1, 1.0},
                                                  {EndpointLocation::LeftEnd, 2, 0.0}},
                                                 l, j);
        triple.phi[j] = build_constrained_poly({{EndpointLocation::LeftEnd, 0, 0.0},
                                                {EndpointLocation::RightEnd, 0, 0.0},
                                                {EndpointLocation::RightEnd, 1, 0.0},
                                                {EndpointLocation::LeftEnd, 2, 1.0 / n}},
                                               l, j);
    }
    return triple;
}

GraphPoly homogenize(const GraphPoly& u, const LiftingTriple& lifting,
                     const BoundarySignals& signals, double t, HomogenizeDirection direction) {
    const int n = u.n_edges();
    const double sgn = direction == HomogenizeDirection::Forward ? -1.0 : 1.0;
    const double g0 = signals.g0.value(t);
    GraphPoly out = GraphPoly::zeros(n);
    for (int j = 0; j < n; ++j) {
        EdgePoly lift = poly_scale(lifting.phi[j], g0);
        lift = poly_add(lift, poly_scale(lifting.psi[j], signals.p[static_cast<size_t>(j)].value(t)));
        lift = poly_add(lift, poly_scale(lifting.theta[j], signals.g[static_cast<size_t>(j)].value(t)));
        out[j] = poly_add(u[j], poly_scale(lift, sgn));
    }
    return out;
}

GraphState homogenize(const GraphState& u, const std::vector<EdgeGrid>& grids,
                      const LiftingTriple& lifting, const BoundarySignals& signals,
                      HomogenizeDirection direction) {
    const double sgn = direction == HomogenizeDirection::Forward ? -1.0 : 1.0;
    const double t = u.t;
    const double g0 = signals.g0.value(t);
    GraphState out = u;
    for (size_t j = 0; j < grids.size(); ++j) {
        const double pj = signals.p[j].value(t);
        const double gj = signals.g[j].value(t);
        for (int i = 0; i < grids[j].node_count(); ++i) {
            const double x = grids[j].node(i);
            const double lift = g0 * poly_eval_unchecked(lifting.phi[static_cast<int>(j)], x) +
                                pj * poly_eval_unchecked(lifting.psi[static_cast<int>(j)], x) +
                                gj * poly_eval_unchecked(lifting.theta[static_cast<int>(j)], x);
            out.values[j][static_cast<size_t>(i)] += sgn * lift;
        }
    }
    return out;
}

} // namespace kdvstar
