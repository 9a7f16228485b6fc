#include "kdvstar/poly.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace kdvstar {

namespace {

void trim_trailing_zeros(std::vector<double>& c) {
    while (!c.empty() && c.back() == 0.0) c.pop_back();
}

void check_degree_cap(int degree, const char* where) {
    if (degree > kDegreeCap) {
        throw Error(ErrorCode::DegreeCapExceeded,
                    std::string(where) + " would produce degree " + std::to_string(degree) +
                        " > cap " + std::to_string(kDegreeCap));
    }
}

} // namespace

EdgePoly::EdgePoly(std::vector<double> coeffs, int edge) : coeffs_(std::move(coeffs)), edge_(edge) {
    trim_trailing_zeros(coeffs_);
    check_degree_cap(degree(), "EdgePoly");
}

double poly_eval_unchecked(const EdgePoly& p, double x) {
    double acc = 0.0;
    const auto& c = p.coeffs();
    for (auto it = c.rbegin(); it != c.rend(); ++it) acc = acc * x + *it;
    return acc;
}

double poly_eval(const EdgePoly& p, double x, double length) {
    if (x < 0.0 || x > length) {
        throw Error(ErrorCode::OutOfDomain, "x = " + std::to_string(x) + " outside [0, " +
                                                std::to_string(length) + "]");
    }
    return poly_eval_unchecked(p, x);
}

EdgePoly poly_derivative(const EdgePoly& p, int order) {
    if (order < 0) throw Error(ErrorCode::InvalidConfig, "derivative order must be >= 0");
    std::vector<double> c = p.coeffs();
    for (int pass = 0; pass < order; ++pass) {
        if (c.empty()) break;
        std::vector<double> d(c.size() > 1 ? c.size() - 1 : 0);
        for (size_t k = 1; k < c.size(); ++k) d[k - 1] = static_cast<double>(k) * c[k];
        c = std::move(d);
    }
    return EdgePoly(std::move(c), p.edge());
}

EdgePoly poly_product(const EdgePoly& p, const EdgePoly& q) {
    if (p.edge() != q.edge()) {
        throw Error(ErrorCode::EdgeMismatch, "product of polynomials on edges " +
                                                 std::to_string(p.edge()) + " and " +
                                                 std::to_string(q.edge()));
    }
    if (p.is_zero() || q.is_zero()) return EdgePoly::zero(p.edge());
    check_degree_cap(p.degree() + q.degree(), "poly_product");
    std::vector<double> c(static_cast<size_t>(p.degree() + q.degree()) + 1, 0.0);
    for (size_t i = 0; i < p.coeffs().size(); ++i)
        for (size_t j = 0; j < q.coeffs().size(); ++j) c[i + j] += p.coeffs()[i] * q.coeffs()[j];
    return EdgePoly(std::move(c), p.edge());
}

EdgePoly poly_add(const EdgePoly& p, const EdgePoly& q) {
    if (p.edge() != q.edge()) {
        throw Error(ErrorCode::EdgeMismatch, "sum of polynomials on edges " +
                                                 std::to_string(p.edge()) + " and " +
                                                 std::to_string(q.edge()));
    }
    std::vector<double> c(std::max(p.coeffs().size(), q.coeffs().size()), 0.0);
    for (size_t k = 0; k < c.size(); ++k) c[k] = p.coeff(static_cast<int>(k)) + q.coeff(static_cast<int>(k));
    return EdgePoly(std::move(c), p.edge());
}

EdgePoly poly_scale(const EdgePoly& p, double s) {
    std::vector<double> c = p.coeffs();
    for (double& v : c) v *= s;
    return EdgePoly(std::move(c), p.edge());
}

EdgePoly poly_antiderivative(const EdgePoly& p) {
    if (p.is_zero()) return p;
    check_degree_cap(p.degree() + 1, "poly_antiderivative");
    std::vector<double> c(p.coeffs().size() + 1, 0.0);
    for (size_t k = 0; k < p.coeffs().size(); ++k) c[k + 1] = p.coeffs()[k] / static_cast<double>(k + 1);
    return EdgePoly(std::move(c), p.edge());
}

double poly_integral(const EdgePoly& p, double a, double b) {
    EdgePoly P = poly_antiderivative(p);
    return poly_eval_unchecked(P, b) - poly_eval_unchecked(P, a);
}

SpaceTimePoly::SpaceTimePoly(std::vector<std::vector<double>> coeffs, int edge)
    : coeffs_(std::move(coeffs)), edge_(edge) {
    normalize();
    check_degree_cap(x_degree(), "SpaceTimePoly(x)");
    check_degree_cap(t_degree(), "SpaceTimePoly(t)");
}

void SpaceTimePoly::normalize() {
    for (auto& row : coeffs_) trim_trailing_zeros(row);
    while (!coeffs_.empty() && coeffs_.back().empty()) coeffs_.pop_back();
}

int SpaceTimePoly::t_degree() const {
    size_t d = 0;
    for (const auto& row : coeffs_) d = std::max(d, row.size());
    return static_cast<int>(d) - 1;
}

double SpaceTimePoly::coeff(int m, int k) const {
    if (m < 0 || m >= static_cast<int>(coeffs_.size())) return 0.0;
    const auto& row = coeffs_[m];
    return (k >= 0 && k < static_cast<int>(row.size())) ? row[k] : 0.0;
}

double SpaceTimePoly::eval(double x, double t) const {
    double acc = 0.0;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
        double row = 0.0;
        for (auto jt = it->rbegin(); jt != it->rend(); ++jt) row = row * t + *jt;
        acc = acc * x + row;
    }
    return acc;
}

SpaceTimePoly SpaceTimePoly::dx(int order) const {
    std::vector<std::vector<double>> c = coeffs_;
    for (int pass = 0; pass < order; ++pass) {
        if (c.empty()) break;
        std::vector<std::vector<double>> d(c.size() > 1 ? c.size() - 1 : 0);
        for (size_t m = 1; m < c.size(); ++m) {
            d[m - 1] = c[m];
            for (double& v : d[m - 1]) v *= static_cast<double>(m);
        }
        c = std::move(d);
    }
    return SpaceTimePoly(std::move(c), edge_);
}

SpaceTimePoly SpaceTimePoly::dt() const {
    std::vector<std::vector<double>> c(coeffs_.size());
    for (size_t m = 0; m < coeffs_.size(); ++m) {
        const auto& row = coeffs_[m];
        if (row.size() > 1) {
            c[m].resize(row.size() - 1);
            for (size_t k = 1; k < row.size(); ++k) c[m][k - 1] = static_cast<double>(k) * row[k];
        }
    }
    return SpaceTimePoly(std::move(c), edge_);
}

SpaceTimePoly SpaceTimePoly::product(const SpaceTimePoly& other) const {
    if (edge_ != other.edge_) {
        throw Error(ErrorCode::EdgeMismatch, "space-time product across edges");
    }
    if (is_zero() || other.is_zero()) return zero(edge_);
    check_degree_cap(x_degree() + other.x_degree(), "SpaceTimePoly::product(x)");
    check_degree_cap(t_degree() + other.t_degree(), "SpaceTimePoly::product(t)");
    std::vector<std::vector<double>> c(
        static_cast<size_t>(x_degree() + other.x_degree()) + 1,
        std::vector<double>(static_cast<size_t>(t_degree() + other.t_degree()) + 1, 0.0));
    for (size_t m1 = 0; m1 < coeffs_.size(); ++m1)
        for (size_t k1 = 0; k1 < coeffs_[m1].size(); ++k1) {
            if (coeffs_[m1][k1] == 0.0) continue;
            for (size_t m2 = 0; m2 < other.coeffs_.size(); ++m2)
                for (size_t k2 = 0; k2 < other.coeffs_[m2].size(); ++k2)
                    c[m1 + m2][k1 + k2] += coeffs_[m1][k1] * other.coeffs_[m2][k2];
        }
    return SpaceTimePoly(std::move(c), edge_);
}

SpaceTimePoly SpaceTimePoly::plus(const SpaceTimePoly& other) const {
    if (edge_ != other.edge_) {
        throw Error(ErrorCode::EdgeMismatch, "space-time sum across edges");
    }
    std::vector<std::vector<double>> c(
        std::max(coeffs_.size(), other.coeffs_.size()));
    for (size_t m = 0; m < c.size(); ++m) {
        size_t kmax = 0;
        if (m < coeffs_.size()) kmax = std::max(kmax, coeffs_[m].size());
        if (m < other.coeffs_.size()) kmax = std::max(kmax, other.coeffs_[m].size());
        c[m].assign(kmax, 0.0);
        for (size_t k = 0; k < kmax; ++k)
            c[m][k] = coeff(static_cast<int>(m), static_cast<int>(k)) +
                      other.coeff(static_cast<int>(m), static_cast<int>(k));
    }
    return SpaceTimePoly(std::move(c), edge_);
}

SpaceTimePoly SpaceTimePoly::scaled(double s) const {
    std::vector<std::vector<double>> c = coeffs_;
    for (auto& row : c)
        for (double& v : row) v *= s;
    return SpaceTimePoly(std::move(c), edge_);
}

std::vector<double> SpaceTimePoly::at_x(double x0) const {
    std::vector<double> out(static_cast<size_t>(std::max(t_degree(), 0)) + 1, 0.0);
    if (is_zero()) return {0.0};
    // Accumulate x0^m row by row; rows are short so plain powers are fine.
    double xm = 1.0;
    for (size_t m = 0; m < coeffs_.size(); ++m) {
        for (size_t k = 0; k < coeffs_[m].size(); ++k) out[k] += coeffs_[m][k] * xm;
        xm *= x0;
    }
    return out;
}

EdgePoly SpaceTimePoly::at_t(double t0) const {
    std::vector<double> c(coeffs_.size(), 0.0);
    for (size_t m = 0; m < coeffs_.size(); ++m) {
        double row = 0.0;
        for (auto jt = coeffs_[m].rbegin(); jt != coeffs_[m].rend(); ++jt) row = row * t0 + *jt;
        c[m] = row;
    }
    return EdgePoly(std::move(c), edge_);
}

} // namespace kdvstar
