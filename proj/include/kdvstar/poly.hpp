#pragma once

#include <vector>

#include "kdvstar/errors.hpp"

namespace kdvstar {

/// Hard cap on polynomial degree. The nonlinear trace recursion roughly
/// doubles the degree per level; exceeding the cap is an error, never a
/// silent truncation.
inline constexpr int kDegreeCap = 32;

/// Polynomial in the monomial basis on one edge interval [0, l_j].
/// Trailing zero coefficients are trimmed so the degree is canonical.
class EdgePoly {
  public:
    EdgePoly() = default;
    EdgePoly(std::vector<double> coeffs, int edge);

    static EdgePoly zero(int edge) { return EdgePoly({}, edge); }
    static EdgePoly constant(double c, int edge) { return EdgePoly({c}, edge); }

    const std::vector<double>& coeffs() const { return coeffs_; }
    int edge() const { return edge_; }
    /// Canonical degree; -1 for the zero polynomial.
    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    bool is_zero() const { return coeffs_.empty(); }

    double coeff(int k) const {
        return (k >= 0 && k < static_cast<int>(coeffs_.size())) ? coeffs_[k] : 0.0;
    }

  private:
    std::vector<double> coeffs_; // c_0 .. c_d, canonical (no trailing zeros)
    int edge_ = 0;
};

/// Horner evaluation at x; the caller supplies the edge length for the
/// domain check (x must lie in [0, length]).
double poly_eval(const EdgePoly& p, double x, double length);

/// Unchecked Horner evaluation (pure algebra, no domain).
double poly_eval_unchecked(const EdgePoly& p, double x);

/// Exact symbolic derivative of the given order (order >= 0).
EdgePoly poly_derivative(const EdgePoly& p, int order);

/// Exact coefficient convolution; both operands must live on the same edge.
EdgePoly poly_product(const EdgePoly& p, const EdgePoly& q);

EdgePoly poly_add(const EdgePoly& p, const EdgePoly& q);
EdgePoly poly_scale(const EdgePoly& p, double s);

/// Antiderivative with zero constant term.
EdgePoly poly_antiderivative(const EdgePoly& p);

/// Exact integral of p over [a, b].
double poly_integral(const EdgePoly& p, double a, double b);

/// One polynomial per edge of the owning graph; entry j is defined on [0, l_j].
struct GraphPoly {
    std::vector<EdgePoly> edges;

    int n_edges() const { return static_cast<int>(edges.size()); }
    const EdgePoly& operator[](int j) const { return edges[j]; }
    EdgePoly& operator[](int j) { return edges[j]; }

    static GraphPoly zeros(int n) {
        GraphPoly g;
        g.edges.reserve(n);
        for (int j = 0; j < n; ++j) g.edges.push_back(EdgePoly::zero(j));
        return g;
    }
};

/// Bivariate polynomial sum a_{mk} x^m t^k on one edge; the carrier for
/// manufactured space-time solutions.
class SpaceTimePoly {
  public:
    SpaceTimePoly() = default;
    /// coeffs[m][k] multiplies x^m t^k.
    SpaceTimePoly(std::vector<std::vector<double>> coeffs, int edge);

    static SpaceTimePoly zero(int edge) { return SpaceTimePoly({}, edge); }

    int edge() const { return edge_; }
    int x_degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    int t_degree() const;
    bool is_zero() const { return coeffs_.empty(); }
    double coeff(int m, int k) const;

    double eval(double x, double t) const;

    SpaceTimePoly dx(int order = 1) const;
    SpaceTimePoly dt() const;
    SpaceTimePoly product(const SpaceTimePoly& other) const;
    SpaceTimePoly plus(const SpaceTimePoly& other) const;
    SpaceTimePoly scaled(double s) const;

    /// Restriction x = x0: returns the coefficients of the resulting
    /// polynomial in t (index k multiplies t^k).
    std::vector<double> at_x(double x0) const;
    /// Restriction t = t0 as an EdgePoly in x.
    EdgePoly at_t(double t0) const;

  private:
    void normalize();

    std::vector<std::vector<double>> coeffs_; // [m][k] for x^m t^k
    int edge_ = 0;
};

} // namespace kdvstar
