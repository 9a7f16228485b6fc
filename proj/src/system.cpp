#include "kdvstar/system.hpp"

#include <cmath>

namespace kdvstar {

SpatialSystem::SpatialSystem(StarGraph graph, std::vector<EdgeGrid> grids, Mode mode)
    : graph_(std::move(graph)), grids_(std::move(grids)), mode_(mode) {
    require_valid_graph(graph_);
    const int n_edges = graph_.n_edges;
    block_ = grids_.front().node_count();
    dim_ = n_edges * block_;
    const int m = grids_.front().segments;
    is_pde_.assign(static_cast<size_t>(dim_), 0);

    // PDE rows: nodes 1..M-2 on each edge. Constraint rows replace the PDE
    // at node 0 (vertex), node M-1 (outer Neumann) and node M (outer
    // Dirichlet).
    const std::vector<int> off_dxxx_left{-1, 0, 1, 2, 3};
    const std::vector<double> w_dxxx_left = fd_weights(off_dxxx_left, 3);

    for (int j = 0; j < n_edges; ++j) {
        const double h = grids_[static_cast<size_t>(j)].spacing;
        const double ih = 1.0 / (2.0 * h);
        const double ih3 = 1.0 / (h * h * h);
        for (int i = 1; i <= m - 2; ++i) {
            const int row = index(j, i);
            is_pde_[static_cast<size_t>(row)] = 1;
            dx_.emplace_back(row, index(j, i - 1), -ih);
            dx_.emplace_back(row, index(j, i + 1), ih);
            if (i == 1) {
                for (size_t k = 0; k < off_dxxx_left.size(); ++k) {
                    dxxx_.emplace_back(row, index(j, i + off_dxxx_left[k]), w_dxxx_left[k] * ih3);
                }
            } else {
                dxxx_.emplace_back(row, index(j, i - 2), -0.5 * ih3);
                dxxx_.emplace_back(row, index(j, i - 1), ih3);
                dxxx_.emplace_back(row, index(j, i + 1), -ih3);
                dxxx_.emplace_back(row, index(j, i + 2), 0.5 * ih3);
            }
        }
    }

    // Vertex continuity u_j(0) - u_1(0) = 0 on the node-0 rows of edges 2..N.
    for (int j = 1; j < n_edges; ++j) {
        ConstraintRow row;
        row.kind = ConstraintRow::Kind::Continuity;
        row.edge = j;
        row.row = index(j, 0);
        row.entries = {{index(j, 0), 1.0}, {index(0, 0), -1.0}};
        constraints_.push_back(std::move(row));
    }
    // Flux balance on the node-0 row of edge 1:
    // sum_j dxx u_j(0) + alpha u_1(0) = g0(t) - gamma (N/3) u_1(0)^2.
    {
        ConstraintRow row;
        row.kind = ConstraintRow::Kind::Flux;
        row.edge = 0;
        row.row = index(0, 0);
        for (int j = 0; j < n_edges; ++j) {
            const double h = grids_[static_cast<size_t>(j)].spacing;
            const double ih2 = 1.0 / (h * h);
            row.entries.emplace_back(index(j, 0), 2.0 * ih2);
            row.entries.emplace_back(index(j, 1), -5.0 * ih2);
            row.entries.emplace_back(index(j, 2), 4.0 * ih2);
            row.entries.emplace_back(index(j, 3), -1.0 * ih2);
        }
        row.entries.emplace_back(index(0, 0), graph_.alpha);
        constraints_.push_back(std::move(row));
    }
    for (int j = 0; j < n_edges; ++j) {
        const double h = grids_[static_cast<size_t>(j)].spacing;
        ConstraintRow dir;
        dir.kind = ConstraintRow::Kind::Dirichlet;
        dir.edge = j;
        dir.row = index(j, m);
        dir.entries = {{index(j, m), 1.0}};
        constraints_.push_back(std::move(dir));

        ConstraintRow neu;
        neu.kind = ConstraintRow::Kind::Neumann;
        neu.edge = j;
        neu.row = index(j, m - 1);
        neu.entries = {{index(j, m - 2), 0.5 / h}, {index(j, m - 1), -2.0 / h}, {index(j, m), 1.5 / h}};
        constraints_.push_back(std::move(neu));
    }
}

Eigen::VectorXd SpatialSystem::apply_operator(const Eigen::VectorXd& u,
                                              const Eigen::VectorXd* drift) const {
    Eigen::VectorXd w = u;
    if (drift != nullptr) w = u.cwiseProduct(Eigen::VectorXd::Ones(dim_) + *drift);
    Eigen::VectorXd out = Eigen::VectorXd::Zero(dim_);
    for (const auto& t : dx_) out(t.row()) -= t.value() * w(t.col());
    for (const auto& t : dxxx_) out(t.row()) -= t.value() * u(t.col());
    return out;
}

Eigen::VectorXd SpatialSystem::constraint_rhs(const BoundarySignals& signals, double t,
                                              double lagged_vertex) const {
    Eigen::VectorXd rhs(static_cast<Eigen::Index>(constraints_.size()));
    for (size_t c = 0; c < constraints_.size(); ++c) {
        const auto& row = constraints_[c];
        switch (row.kind) {
        case ConstraintRow::Kind::Continuity: rhs(static_cast<Eigen::Index>(c)) = 0.0; break;
        case ConstraintRow::Kind::Flux: {
            double v = signals.g0.value(t);
            if (mode_ == Mode::Nonlinear) {
                v -= (static_cast<double>(graph_.n_edges) / 3.0) * lagged_vertex * lagged_vertex;
            }
            rhs(static_cast<Eigen::Index>(c)) = v;
            break;
        }
        case ConstraintRow::Kind::Dirichlet:
            rhs(static_cast<Eigen::Index>(c)) = signals.p[static_cast<size_t>(row.edge)].value(t);
            break;
        case ConstraintRow::Kind::Neumann:
            rhs(static_cast<Eigen::Index>(c)) = signals.g[static_cast<size_t>(row.edge)].value(t);
            break;
        }
    }
    return rhs;
}

Eigen::VectorXd SpatialSystem::constraint_residual(const Eigen::VectorXd& u,
                                                   const BoundarySignals& signals, double t) const {
    Eigen::VectorXd rhs = constraint_rhs(signals, t, u(index(0, 0)));
    Eigen::VectorXd res(static_cast<Eigen::Index>(constraints_.size()));
    for (size_t c = 0; c < constraints_.size(); ++c) {
        double lhs = 0.0;
        for (const auto& [col, w] : constraints_[c].entries) lhs += w * u(col);
        res(static_cast<Eigen::Index>(c)) = lhs - rhs(static_cast<Eigen::Index>(c));
    }
    return res;
}

Eigen::VectorXd SpatialSystem::flatten(const GraphState& state) const {
    Eigen::VectorXd u(dim_);
    for (int j = 0; j < graph_.n_edges; ++j)
        for (int i = 0; i < block_; ++i) u(index(j, i)) = state.values[static_cast<size_t>(j)][static_cast<size_t>(i)];
    return u;
}

GraphState SpatialSystem::unflatten(const Eigen::VectorXd& u, double t) const {
    GraphState s = GraphState::zeros(grids_, t);
    for (int j = 0; j < graph_.n_edges; ++j)
        for (int i = 0; i < block_; ++i) s.values[static_cast<size_t>(j)][static_cast<size_t>(i)] = u(index(j, i));
    return s;
}

SpatialSystem assemble_system(const StarGraph& graph, const std::vector<EdgeGrid>& grids, Mode mode) {
    return SpatialSystem(graph, grids, mode);
}

} // namespace kdvstar
