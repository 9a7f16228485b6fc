#include "kdvstar/signals.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace kdvstar {

namespace {

// Value of the d-th derivative at x of the Lagrange interpolant through
// (xs[i], ys[i]), computed via divided differences on the Newton form.
double newton_fit_derivative(const std::vector<double>& xs, const std::vector<double>& ys, double x,
                             int d) {
    const size_t n = xs.size();
    std::vector<double> dd = ys; // divided-difference table, in place
    for (size_t level = 1; level < n; ++level)
        for (size_t i = n - 1; i >= level; --i)
            dd[i] = (dd[i] - dd[i - 1]) / (xs[i] - xs[i - level]);

    // Newton form p(t) = sum dd[k] prod_{i<k}(t - xs[i]); differentiate by
    // running Horner on the factored form d+1 times.
    // acc[m] holds the m-th derivative / m! fragments during the backward pass.
    std::vector<double> acc(static_cast<size_t>(d) + 1, 0.0);
    acc[0] = dd[n - 1];
    for (size_t k = n - 1; k-- > 0;) {
        for (size_t m = acc.size() - 1; m >= 1; --m) acc[m] = acc[m] * (x - xs[k]) + acc[m - 1];
        acc[0] = acc[0] * (x - xs[k]) + dd[k];
    }
    double fact = 1.0;
    for (int m = 2; m <= d; ++m) fact *= m;
    return acc[static_cast<size_t>(d)] * fact;
}

} // namespace

TimeSignal::TimeSignal(std::vector<double> poly_coeffs) : poly_(std::move(poly_coeffs)) {
    while (!poly_.empty() && poly_.back() == 0.0) poly_.pop_back();
}

TimeSignal::TimeSignal(std::vector<double> times, std::vector<double> values, int order)
    : sampled_times_(std::move(times)), sampled_values_(std::move(values)), order_(order) {
    if (sampled_times_.size() != sampled_values_.size() || sampled_times_.size() < 2) {
        throw Error(ErrorCode::InvalidConfig, "sampled signal needs >= 2 matching time/value pairs");
    }
    if (order_ < 1) throw Error(ErrorCode::InvalidConfig, "interpolation order must be >= 1");
    for (size_t i = 1; i < sampled_times_.size(); ++i) {
        if (!(sampled_times_[i] > sampled_times_[i - 1])) {
            throw Error(ErrorCode::InvalidConfig, "sampled time stamps must strictly increase");
        }
    }
    if (static_cast<int>(sampled_times_.size()) < order_ + 1) {
        throw Error(ErrorCode::InvalidConfig, "sampled signal shorter than interpolation order + 1");
    }
}

int TimeSignal::declared_order() const {
    if (is_polynomial()) return kDegreeCap; // any k; higher derivatives are exactly zero
    return order_;
}

double TimeSignal::value(double t) const {
    if (horizon_ && (t < 0.0 || t > *horizon_ * (1.0 + 1e-12))) {
        throw Error(ErrorCode::OutOfDomain,
                    "signal evaluated at t = " + std::to_string(t) + " outside [0, " +
                        std::to_string(*horizon_) + "]");
    }
    if (is_polynomial()) {
        double acc = 0.0;
        for (auto it = poly_.rbegin(); it != poly_.rend(); ++it) acc = acc * t + *it;
        return acc;
    }
    const auto& ts = sampled_times_;
    if (t < ts.front() - 1e-12 || t > ts.back() + 1e-12) {
        throw Error(ErrorCode::OutOfDomain, "t = " + std::to_string(t) + " outside sample range [" +
                                                std::to_string(ts.front()) + ", " +
                                                std::to_string(ts.back()) + "]");
    }
    // Window of order+1 points around the bracketing interval.
    size_t hi = static_cast<size_t>(std::upper_bound(ts.begin(), ts.end(), t) - ts.begin());
    size_t npts = static_cast<size_t>(order_) + 1;
    size_t lo = (hi > npts / 2 + 1) ? hi - npts / 2 - 1 : 0;
    lo = std::min(lo, ts.size() - npts);
    std::vector<double> xs(ts.begin() + lo, ts.begin() + lo + npts);
    std::vector<double> ys(sampled_values_.begin() + lo, sampled_values_.begin() + lo + npts);
    return newton_fit_derivative(xs, ys, t, 0);
}

double TimeSignal::derivative_at_zero(int k) const {
    if (k < 0) throw Error(ErrorCode::InvalidConfig, "derivative order must be >= 0");
    if (is_polynomial()) {
        if (k >= static_cast<int>(poly_.size())) return 0.0;
        double fact = 1.0;
        for (int m = 2; m <= k; ++m) fact *= m;
        return poly_[static_cast<size_t>(k)] * fact;
    }
    if (k > order_) {
        throw Error(ErrorCode::OrderExceeded, "derivative order " + std::to_string(k) +
                                                  " beyond declared order " + std::to_string(order_));
    }
    size_t npts = static_cast<size_t>(order_) + 1;
    std::vector<double> xs(sampled_times_.begin(), sampled_times_.begin() + npts);
    std::vector<double> ys(sampled_values_.begin(), sampled_values_.begin() + npts);
    return newton_fit_derivative(xs, ys, 0.0, k);
}

TimeSignal TimeSignal::derivative() const {
    if (!is_polynomial()) {
        throw Error(ErrorCode::OrderExceeded,
                    "derivative signal requested from sampled data; use polynomial signals");
    }
    std::vector<double> d(poly_.size() > 1 ? poly_.size() - 1 : 0);
    for (size_t k = 1; k < poly_.size(); ++k) d[k - 1] = static_cast<double>(k) * poly_[k];
    TimeSignal out{std::move(d)};
    out.horizon_ = horizon_;
    return out;
}

void TimeSignal::ensure_covers(double T) const {
    if (is_polynomial()) return;
    if (sampled_times_.front() > 1e-12 || sampled_times_.back() < T - 1e-12) {
        throw Error(ErrorCode::InvalidConfig, "sampled signal does not cover [0, " +
                                                  std::to_string(T) + "]");
    }
}

BoundarySignals BoundarySignals::zeros(int n_edges) {
    BoundarySignals s;
    s.g0 = TimeSignal::zero();
    s.g.assign(static_cast<size_t>(n_edges), TimeSignal::zero());
    s.p.assign(static_cast<size_t>(n_edges), TimeSignal::zero());
    return s;
}

BoundarySignals BoundarySignals::differentiated() const {
    BoundarySignals d;
    d.g0 = g0.derivative();
    d.g.reserve(g.size());
    d.p.reserve(p.size());
    for (const auto& s : g) d.g.push_back(s.derivative());
    for (const auto& s : p) d.p.push_back(s.derivative());
    return d;
}

void BoundarySignals::set_horizon(double T) {
    g0.set_horizon(T);
    for (auto& s : g) s.set_horizon(T);
    for (auto& s : p) s.set_horizon(T);
}

void BoundarySignals::ensure_covers(double T) const {
    g0.ensure_covers(T);
    for (const auto& s : g) s.ensure_covers(T);
    for (const auto& s : p) s.ensure_covers(T);
}

} // namespace kdvstar
