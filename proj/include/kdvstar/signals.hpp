#pragma once

#include <optional>
#include <vector>

#include "kdvstar/errors.hpp"

namespace kdvstar {

/// Scalar control signal on [0, T]: either a polynomial in t (derivatives
/// exact, any order) or a sampled series interpolated locally by a
/// polynomial of the declared order (default cubic). Derivative queries
/// beyond the declared order are rejected, never extrapolated.
class TimeSignal {
  public:
    TimeSignal() : TimeSignal::TimeSignal(std::vector<double>{}) {}

    /// Polynomial signal c0 + c1 t + ...
    explicit TimeSignal(std::vector<double> poly_coeffs);

    /// Sampled signal with strictly increasing time stamps.
    TimeSignal(std::vector<double> times, std::vector<double> values, int order);

    static TimeSignal zero() { return TimeSignal(std::vector<double>{}); }
    static TimeSignal constant(double c) { return TimeSignal(std::vector<double>{c}); }

    bool is_polynomial() const { return sampled_times_.empty(); }
    const std::vector<double>& poly_coeffs() const { return poly_; }

    /// Highest derivative order this signal can answer at t = 0.
    int declared_order() const;

    /// Evaluate at t. Respects the domain: sampled signals reject t outside
    /// their sample range; if a horizon was attached (set_horizon), any t
    /// outside [0, T] is an error rather than clamped.
    double value(double t) const;

    /// d^k/dt^k at t = 0; exact for polynomials, local finite-order fit for
    /// sampled signals. Throws OrderExceeded when k > declared_order().
    double derivative_at_zero(int k) const;

    /// Exact derivative signal (polynomial signals only; sampled signals
    /// throw OrderExceeded since their derivative is not trusted as data).
    TimeSignal derivative() const;

    /// Attach the run horizon so evaluations outside [0, T] error out.
    void set_horizon(double T) { horizon_ = T; }

    /// Checks a sampled signal covers [0, T]; polynomials always do.
    void ensure_covers(double T) const;

  private:
    std::vector<double> poly_;          // polynomial form (may be empty = zero)
    std::vector<double> sampled_times_; // empty for polynomial signals
    std::vector<double> sampled_values_;
    int order_ = 0; // interpolation order for sampled signals
    std::optional<double> horizon_;
};

/// The control inputs of the coupled system: the vertex flux signal g0,
/// the outer Neumann signals g_j and the outer Dirichlet signals p_j.
struct BoundarySignals {
    TimeSignal g0;
    std::vector<TimeSignal> g;
    std::vector<TimeSignal> p;

    static BoundarySignals zeros(int n_edges);

    /// Differentiated tuple (g0', g', p') for the time-derivative system.
    BoundarySignals differentiated() const;

    void set_horizon(double T);
    void ensure_covers(double T) const;
};

} // namespace kdvstar
