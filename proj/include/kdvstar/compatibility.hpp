#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "kdvstar/graph.hpp"
#include "kdvstar/poly.hpp"
#include "kdvstar/signals.hpp"

namespace kdvstar {

enum class Mode { Linear, Nonlinear };

enum class TraceKind { VertexContinuity, FluxBalance, RightDirichlet, RightNeumann };

const char* trace_kind_name(TraceKind kind);

/// One trace equality the regularity index s imposes: a kind and the
/// recursion level k it applies to.
struct TraceRequirement {
    TraceKind kind;
    int level = 0;

    friend bool operator==(const TraceRequirement&, const TraceRequirement&) = default;
};

struct RequirementRecord {
    TraceRequirement requirement;
    int edge = 0; // 1-based; 0 for the flux line, which couples all edges
    double left = 0.0;
    double right = 0.0;
    double residual = 0.0; // |left - right|
    bool pass = false;
};

struct CompatibilityReport {
    double s = 0.0;
    int k_max = 0; // floor(s/3)
    std::vector<RequirementRecord> records;
    bool pass = true;
};

/// Exact integer binomial coefficient; k is capped well below overflow.
std::int64_t binomial(int n, int k);

/// One step of the trace recursion: given phi_0..phi_{k-1}, returns
/// phi_k = -(phi_{k-1}''' + phi_{k-1}' + 1/2 sum_i C(k-1,i) (phi_i phi_{k-1-i})').
/// Linear mode drops the quadratic sum.
GraphPoly phi_next(const std::vector<GraphPoly>& history, Mode mode);

/// Convenience: phi_0..phi_k for initial data u0.
std::vector<GraphPoly> phi_sequence(const GraphPoly& u0, int k, Mode mode);

/// The exact requirement schedule for regularity index s >= 0. Empty for
/// s <= 1/2. Intervals are closed on the right, and for s > 3 the level
/// floor(s/3) is gated by s - 3*floor(s/3) against 1/2, 3/2, 5/2 with the
/// same pattern.
std::vector<TraceRequirement> trace_requirements(double s);

/// Evaluates every requirement the index s imposes on (u0, g0, g, p).
/// A record passes when |left - right| <= tol * (1 + |left| + |right|).
CompatibilityReport check_compatibility(double s, const GraphPoly& u0,
                                        const BoundarySignals& signals, const StarGraph& graph,
                                        Mode mode, double tol);

} // namespace kdvstar
