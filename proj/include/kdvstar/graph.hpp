#pragma once

#include <string>
#include <vector>

#include "kdvstar/errors.hpp"

namespace kdvstar {

/// Star-shaped network: N edges (0, l_j) joined at the vertex x = 0,
/// plus the dissipation coefficient of the vertex flux condition.
struct StarGraph {
    int n_edges = 0;
    std::vector<double> lengths;
    double alpha = 0.0;
};

struct ValidationResult {
    bool ok = true;
    ErrorCode code = ErrorCode::InvalidConfig;
    std::string message;

    static ValidationResult pass() { return {}; }
    static ValidationResult fail(ErrorCode c, std::string msg) { return {false, c, std::move(msg)}; }
};

/// Total check of the StarGraph invariants: N >= 2, every l_j > 0 and
/// alpha > N/2 (strict; equality is rejected so the vertex energy-rate
/// coefficient N/2 - alpha stays strictly negative). Reports the first
/// violated invariant.
ValidationResult validate_graph(const StarGraph& graph);

/// Throwing wrapper around validate_graph.
void require_valid_graph(const StarGraph& graph);

} // namespace kdvstar
