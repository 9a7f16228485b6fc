#include "kdvstar/compatibility.hpp"

#include <cmath>

namespace kdvstar {

const char* trace_kind_name(TraceKind kind) {
    switch (kind) {
    case TraceKind::VertexContinuity: return "VertexContinuity";
    case TraceKind::FluxBalance: return "FluxBalance";
    case TraceKind::RightDirichlet: return "RightDirichlet";
    case TraceKind::RightNeumann: return "RightNeumann";
    }
    return "?";
}

std::int64_t binomial(int n, int k) {
    if (k < 0 || k > n) return 0;
    if (n > 40) throw Error(ErrorCode::OrderExceeded, "binomial level too large for exact arithmetic");
    std::int64_t out = 1;
    for (int i = 1; i <= k; ++i) {
        out = out * (n - k + i) / i; // exact at every step for binomials
    }
    return out;
}

GraphPoly phi_next(const std::vector<GraphPoly>& history, Mode mode) {
    if (history.empty()) throw Error(ErrorCode::InvalidConfig, "phi_next needs phi_0");
    const int n = history.front().n_edges();
    for (const auto& g : history) {
        if (g.n_edges() != n) throw Error(ErrorCode::EdgeMismatch, "phi history edge counts differ");
    }
    const int k = static_cast<int>(history.size()); // producing phi_k
    GraphPoly out = GraphPoly::zeros(n);
    for (int j = 0; j < n; ++j) {
        const EdgePoly& prev = history[static_cast<size_t>(k - 1)][j];
        EdgePoly acc = poly_add(poly_derivative(prev, 3), poly_derivative(prev, 1));
        if (mode == Mode::Nonlinear) {
            for (int i = 0; i <= k - 1; ++i) {
                const double c = 0.5 * static_cast<double>(binomial(k - 1, i));
                EdgePoly prod = poly_product(history[static_cast<size_t>(i)][j],
                                             history[static_cast<size_t>(k - 1 - i)][j]);
                acc = poly_add(acc, poly_scale(poly_derivative(prod, 1), c));
            }
        }
        out[j] = poly_scale(acc, -1.0);
    }
    return out;
}

std::vector<GraphPoly> phi_sequence(const GraphPoly& u0, int k, Mode mode) {
    std::vector<GraphPoly> seq{u0};
    for (int level = 1; level <= k; ++level) seq.push_back(phi_next(seq, mode));
    return seq;
}

namespace {

// Requirement kinds gated by a fractional index sigma against the
// half-integer thresholds, intervals closed on the right.
void push_gated(std::vector<TraceRequirement>& out, double sigma, int level) {
    if (sigma > 0.5) {
        out.push_back({TraceKind::VertexContinuity, level});
        out.push_back({TraceKind::RightDirichlet, level});
    }
    if (sigma > 1.5) out.push_back({TraceKind::RightNeumann, level});
    if (sigma > 2.5) out.push_back({TraceKind::FluxBalance, level});
}

} // namespace

std::vector<TraceRequirement> trace_requirements(double s) {
    if (s < 0.0) throw Error(ErrorCode::InvalidConfig, "regularity index s must be >= 0");
    std::vector<TraceRequirement> out;
    if (s <= 3.0) {
        push_gated(out, s, 0);
        return out;
    }
    const int kf = static_cast<int>(std::floor(s / 3.0));
    for (int level = 0; level <= kf - 1; ++level) {
        out.push_back({TraceKind::VertexContinuity, level});
        out.push_back({TraceKind::FluxBalance, level});
        out.push_back({TraceKind::RightDirichlet, level});
        out.push_back({TraceKind::RightNeumann, level});
    }
    push_gated(out, s - 3.0 * kf, kf);
    return out;
}

CompatibilityReport check_compatibility(double s, const GraphPoly& u0,
                                        const BoundarySignals& signals, const StarGraph& graph,
                                        Mode mode, double tol) {
    require_valid_graph(graph);
    if (u0.n_edges() != graph.n_edges) {
        throw Error(ErrorCode::EdgeMismatch, "initial data edge count does not match graph");
    }
    const int n = graph.n_edges;

    CompatibilityReport report;
    report.s = s;
    report.k_max = static_cast<int>(std::floor(s / 3.0));
    auto requirements = trace_requirements(s);

    int deepest = 0;
    for (const auto& r : requirements) deepest = std::max(deepest, r.level);
    auto phi = phi_sequence(u0, deepest, mode);

    auto record = [&](const TraceRequirement& req, int edge, double left, double right) {
        RequirementRecord rec;
        rec.requirement = req;
        rec.edge = edge;
        rec.left = left;
        rec.right = right;
        rec.residual = std::abs(left - right);
        rec.pass = rec.residual <= tol * (1.0 + std::abs(left) + std::abs(right));
        report.records.push_back(rec);
        report.pass = report.pass && rec.pass;
    };

    for (const auto& req : requirements) {
        const int k = req.level;
        const auto& phik = phi[static_cast<size_t>(k)];
        switch (req.kind) {
        case TraceKind::VertexContinuity: {
            const double anchor = poly_eval_unchecked(phik[0], 0.0);
            for (int j = 1; j < n; ++j) {
                record(req, j + 1, poly_eval_unchecked(phik[j], 0.0), anchor);
            }
            break;
        }
        case TraceKind::FluxBalance: {
            double left = 0.0;
            for (int j = 0; j < n; ++j) {
                left += poly_eval_unchecked(poly_derivative(phik[j], 2), 0.0);
            }
            const double phik1 = poly_eval_unchecked(phik[0], 0.0);
            double right = -graph.alpha * phik1 + signals.g0.derivative_at_zero(k);
            if (mode == Mode::Nonlinear) {
                double quad = 0.0;
                for (int l = 0; l <= k; ++l) {
                    quad += static_cast<double>(binomial(k, l)) *
                            poly_eval_unchecked(phi[static_cast<size_t>(l)][0], 0.0) *
                            poly_eval_unchecked(phi[static_cast<size_t>(k - l)][0], 0.0);
                }
                right -= (static_cast<double>(n) / 3.0) * quad;
            }
            record(req, 0, left, right);
            break;
        }
        case TraceKind::RightDirichlet: {
            for (int j = 0; j < n; ++j) {
                record(req, j + 1, poly_eval_unchecked(phik[j], graph.lengths[j]),
                       signals.p[static_cast<size_t>(j)].derivative_at_zero(k));
            }
            break;
        }
        case TraceKind::RightNeumann: {
            for (int j = 0; j < n; ++j) {
                record(req, j + 1,
                       poly_eval_unchecked(poly_derivative(phik[j], 1), graph.lengths[j]),
                       signals.g[static_cast<size_t>(j)].derivative_at_zero(k));
            }
            break;
        }
        }
    }
    return report;
}

} // namespace kdvstar
