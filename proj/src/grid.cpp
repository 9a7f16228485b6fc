#include "kdvstar/grid.hpp"

#include <Eigen/Dense>

#include <cmath>
#include <string>

namespace kdvstar {

GraphState GraphState::zeros(const std::vector<EdgeGrid>& grids, double t) {
    GraphState s;
    s.t = t;
    s.values.reserve(grids.size());
    for (const auto& g : grids) s.values.emplace_back(static_cast<size_t>(g.node_count()), 0.0);
    return s;
}

std::vector<EdgeGrid> build_grids(const StarGraph& graph, int segments) {
    require_valid_graph(graph);
    if (segments < 8) {
        throw Error(ErrorCode::GridTooCoarse,
                    "nodes-per-edge M = " + std::to_string(segments) + ", need >= 8");
    }
    std::vector<EdgeGrid> grids;
    grids.reserve(static_cast<size_t>(graph.n_edges));
    for (int j = 0; j < graph.n_edges; ++j) {
        grids.push_back({j, segments, graph.lengths[static_cast<size_t>(j)] / segments});
    }
    return grids;
}

std::vector<double> fd_weights(const std::vector<int>& offsets, int m) {
    const int n = static_cast<int>(offsets.size());
    Eigen::MatrixXd V(n, n);
    Eigen::VectorXd rhs = Eigen::VectorXd::Zero(n);
    double fact = 1.0;
    for (int p = 0; p < n; ++p) {
        if (p > 0) fact *= p;
        for (int c = 0; c < n; ++c) V(p, c) = std::pow(static_cast<double>(offsets[c]), p);
        if (p == m) rhs(p) = fact;
    }
    Eigen::VectorXd w = V.fullPivLu().solve(rhs);
    return {w.data(), w.data() + n};
}

namespace {

double apply_stencil(const std::vector<double>& values, int at, const std::vector<int>& offsets,
                     const std::vector<double>& weights, double scale) {
    double acc = 0.0;
    for (size_t k = 0; k < offsets.size(); ++k) acc += weights[k] * values[static_cast<size_t>(at + offsets[k])];
    return acc * scale;
}

} // namespace

std::vector<double> apply_dx(const std::vector<double>& values, const EdgeGrid& grid) {
    const int n = grid.node_count();
    const double h = grid.spacing;
    std::vector<double> out(static_cast<size_t>(n), 0.0);
    // One-sided second-order ends: -3/2, 2, -1/2.
    out[0] = (-1.5 * values[0] + 2.0 * values[1] - 0.5 * values[2]) / h;
    for (int i = 1; i < n - 1; ++i) {
        out[static_cast<size_t>(i)] = (values[static_cast<size_t>(i + 1)] - values[static_cast<size_t>(i - 1)]) / (2.0 * h);
    }
    out[static_cast<size_t>(n - 1)] =
        (0.5 * values[static_cast<size_t>(n - 3)] - 2.0 * values[static_cast<size_t>(n - 2)] +
         1.5 * values[static_cast<size_t>(n - 1)]) / h;
    return out;
}

std::vector<double> apply_dxxx(const std::vector<double>& values, const EdgeGrid& grid) {
    const int n = grid.node_count();
    const double h = grid.spacing;
    const double ih3 = 1.0 / (h * h * h);
    std::vector<double> out(static_cast<size_t>(n), 0.0);

    static const std::vector<int> off_left0{0, 1, 2, 3, 4};
    static const std::vector<int> off_left1{-1, 0, 1, 2, 3};
    static const std::vector<double> w_left0 = fd_weights(off_left0, 3);
    static const std::vector<double> w_left1 = fd_weights(off_left1, 3);

    out[0] = apply_stencil(values, 0, off_left0, w_left0, ih3);
    out[1] = apply_stencil(values, 1, off_left1, w_left1, ih3);
    for (int i = 2; i < n - 2; ++i) {
        // (-u_{i-2} + 2u_{i-1} - 2u_{i+1} + u_{i+2}) / (2h^3), exact on cubics.
        out[static_cast<size_t>(i)] =
            (-values[static_cast<size_t>(i - 2)] + 2.0 * values[static_cast<size_t>(i - 1)] -
             2.0 * values[static_cast<size_t>(i + 1)] + values[static_cast<size_t>(i + 2)]) *
            0.5 * ih3;
    }
    // Mirrored biased stencils at the right end (odd derivative: negate mirrored weights).
    static const std::vector<int> off_right1{-3, -2, -1, 0, 1};
    static const std::vector<int> off_right0{-4, -3, -2, -1, 0};
    static const std::vector<double> w_right1 = fd_weights(off_right1, 3);
    static const std::vector<double> w_right0 = fd_weights(off_right0, 3);
    out[static_cast<size_t>(n - 2)] = apply_stencil(values, n - 2, off_right1, w_right1, ih3);
    out[static_cast<size_t>(n - 1)] = apply_stencil(values, n - 1, off_right0, w_right0, ih3);
    return out;
}

double dxx_at_vertex(const std::vector<double>& values, const EdgeGrid& grid) {
    const double h2 = grid.spacing * grid.spacing;
    return (2.0 * values[0] - 5.0 * values[1] + 4.0 * values[2] - values[3]) / h2;
}

double dxx_at_outer(const std::vector<double>& values, const EdgeGrid& grid) {
    const size_t n = values.size();
    const double h2 = grid.spacing * grid.spacing;
    return (2.0 * values[n - 1] - 5.0 * values[n - 2] + 4.0 * values[n - 3] - values[n - 4]) / h2;
}

double dx_at_outer(const std::vector<double>& values, const EdgeGrid& grid) {
    const size_t n = values.size();
    return (0.5 * values[n - 3] - 2.0 * values[n - 2] + 1.5 * values[n - 1]) / grid.spacing;
}

double dx_at_vertex(const std::vector<double>& values, const EdgeGrid& grid) {
    return (-1.5 * values[0] + 2.0 * values[1] - 0.5 * values[2]) / grid.spacing;
}

GraphState sample_on_grids(const GraphPoly& poly, const std::vector<EdgeGrid>& grids, double t) {
    if (poly.n_edges() != static_cast<int>(grids.size())) {
        throw Error(ErrorCode::EdgeMismatch, "polynomial edge count does not match grids");
    }
    GraphState s = GraphState::zeros(grids, t);
    for (size_t j = 0; j < grids.size(); ++j) {
        for (int i = 0; i < grids[j].node_count(); ++i) {
            s.values[j][static_cast<size_t>(i)] =
                poly_eval_unchecked(poly[static_cast<int>(j)], grids[j].node(i));
        }
    }
    return s;
}

} // namespace kdvstar
