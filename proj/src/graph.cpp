#include "kdvstar/graph.hpp"

namespace kdvstar {

ValidationResult validate_graph(const StarGraph& graph) {
    if (graph.n_edges < 2) {
        return ValidationResult::fail(ErrorCode::TooFewEdges,
                                      "n_edges = " + std::to_string(graph.n_edges) + ", need >= 2");
    }
    if (static_cast<int>(graph.lengths.size()) != graph.n_edges) {
        return ValidationResult::fail(ErrorCode::InvalidConfig,
                                      "lengths has " + std::to_string(graph.lengths.size()) +
                                          " entries for n_edges = " + std::to_string(graph.n_edges));
    }
    for (int j = 0; j < graph.n_edges; ++j) {
        if (!(graph.lengths[j] > 0.0)) {
            return ValidationResult::fail(ErrorCode::NonpositiveLength,
                                          "l_" + std::to_string(j + 1) + " = " +
                                              std::to_string(graph.lengths[j]));
        }
    }
    if (!(graph.alpha > 0.5 * graph.n_edges)) {
        return ValidationResult::fail(ErrorCode::AlphaTooSmall,
                                      "alpha = " + std::to_string(graph.alpha) +
                                          " must exceed N/2 = " + std::to_string(0.5 * graph.n_edges));
    }
    return ValidationResult::pass();
}

void require_valid_graph(const StarGraph& graph) {
    ValidationResult r = validate_graph(graph);
    if (!r.ok) throw Error(r.code, r.message);
}

} // namespace kdvstar
