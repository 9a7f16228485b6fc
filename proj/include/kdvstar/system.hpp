#pragma once

#include <Eigen/Sparse>

#include <vector>

#include "kdvstar/compatibility.hpp" // Mode
#include "kdvstar/graph.hpp"
#include "kdvstar/grid.hpp"
#include "kdvstar/signals.hpp"

namespace kdvstar {

/// One algebraic boundary/vertex condition imposed as a matrix row.
struct ConstraintRow {
    enum class Kind { Continuity, Flux, Dirichlet, Neumann };
    Kind kind;
    int edge = 0; // 0-based owner edge (Flux couples all edges; owner is edge 0)
    int row = 0;  // global row index this condition replaces
    std::vector<std::pair<int, double>> entries; // (global column, coefficient)
};

/// Coupled spatial discretization: per-edge stencil blocks for the first and
/// third derivative on the PDE rows, plus the 3N boundary/vertex conditions
/// as explicit constraint rows (N-1 vertex continuity, 1 flux balance,
/// N right Dirichlet, N right Neumann).
class SpatialSystem {
  public:
    SpatialSystem(StarGraph graph, std::vector<EdgeGrid> grids, Mode mode);

    const StarGraph& graph() const { return graph_; }
    const std::vector<EdgeGrid>& grids() const { return grids_; }
    Mode mode() const { return mode_; }

    int block() const { return block_; } // nodes per edge
    int dim() const { return dim_; }
    int index(int edge, int node) const { return edge * block_ + node; }

    bool is_pde_row(int row) const { return is_pde_[static_cast<size_t>(row)]; }
    const std::vector<ConstraintRow>& constraints() const { return constraints_; }

    const std::vector<Eigen::Triplet<double>>& dx_triplets() const { return dx_; }
    const std::vector<Eigen::Triplet<double>>& dxxx_triplets() const { return dxxx_; }

    /// Right-hand-side operator of u_t = L u on the PDE rows:
    /// L u = -dx((1 + a) u) - dxxx u. Null drift means a = 0. Constraint
    /// rows of the output are zero.
    Eigen::VectorXd apply_operator(const Eigen::VectorXd& u, const Eigen::VectorXd* drift) const;

    /// Constraint right-hand sides at time t. `lagged_vertex` is the
    /// previous iterate's u_1(t, 0) entering the flux quadratic in
    /// nonlinear mode (ignored in linear mode).
    Eigen::VectorXd constraint_rhs(const BoundarySignals& signals, double t,
                                   double lagged_vertex) const;

    /// Residual of the constraint rows on a state:
    /// row value - rhs, with the flux quadratic evaluated at the state's
    /// own vertex value. Length = 3N, ordered as constraints().
    Eigen::VectorXd constraint_residual(const Eigen::VectorXd& u, const BoundarySignals& signals,
                                        double t) const;

    Eigen::VectorXd flatten(const GraphState& state) const;
    GraphState unflatten(const Eigen::VectorXd& u, double t) const;

  private:
    StarGraph graph_;
    std::vector<EdgeGrid> grids_;
    Mode mode_;
    int block_ = 0;
    int dim_ = 0;
    std::vector<char> is_pde_;
    std::vector<Eigen::Triplet<double>> dx_;   // PDE rows only
    std::vector<Eigen::Triplet<double>> dxxx_; // PDE rows only
    std::vector<ConstraintRow> constraints_;
};

SpatialSystem assemble_system(const StarGraph& graph, const std::vector<EdgeGrid>& grids, Mode mode);

} // namespace kdvstar
