#pragma once

#include <complex>
#include <map>
#include <string>
#include <vector>

#include "isinglab/graph.hpp"
#include "isinglab/rational.hpp"

namespace isinglab {

// Couplings above this are rejected; deep low-temperature weights would wreck
// double-precision conditioning without adding verification value.
inline constexpr double kMaxCoupling = 3.0;

// Partition function in the field variable z = e^{-2h/q}, where q is the
// common denominator of the per-vertex weights. Coefficients are positive and
// palindromic (c_j = c_{D-j}) by construction.
struct FieldPolynomial {
    std::vector<double> coef;  // c_0..c_D
    long q = 1;
    int degree() const { return static_cast<int>(coef.size()) - 1; }
};

struct ZeroSpectrum {
    std::vector<std::complex<double>> roots;
    std::vector<double> alphas;  // (q/2)|arg z| per root, ascending
    double max_circle_deviation = 0.0;
    double alpha1() const;
};

// Nonnegative rational weights lambda_u; absent vertices weigh 0.
using WeightedField = std::map<int, BigRational>;

FieldPolynomial partition_polynomial(const BaseGraph& g, const std::vector<double>& J,
                                     const WeightedField& lambda);

// All complex roots by simultaneous (Aberth) iteration from perturbed
// unit-circle starts, Newton-polished. Throws if iteration stalls or some
// root strays farther than circle_tol from the unit circle.
ZeroSpectrum polynomial_roots(const FieldPolynomial& p, double circle_tol = 1e-9);

// First positive zero of g(t) = sum_sigma W(sigma) cos(t Lambda(sigma)) by a
// bracketing scan (step pi / (64 Lambda_max)) plus bisection to 1e-12.
double alpha1_scan(const BaseGraph& g, const std::vector<double>& J, const WeightedField& lambda);

struct RadiusDiagnostic {
    std::vector<std::pair<int, double>> ratios;  // (k, |u_k/k!|^{1/k}) for even k
    double inv_alpha1 = 0.0;
};

// |u_k(X)/k!|^{1/k} against 1/alpha_1; the limsup converges slowly, so this
// reports and asserts nothing.
RadiusDiagnostic cumulant_radius_diagnostic(const BaseGraph& g, const std::vector<BigRational>& t,
                                            const WeightedField& lambda, int K);

// Common denominator of the weights (1 for an empty field).
long field_denominator(const WeightedField& lambda);

}  // namespace isinglab
