#pragma once

#include <vector>

#include "betaturan/common.hpp"

namespace betaturan::series {

// Coefficients c_0..c_N of a formal power series, immutable after construction.
class TruncatedSeries {
public:
    explicit TruncatedSeries(std::vector<double> coeffs);

    int order() const { return static_cast<int>(coeffs_.size()) - 1; }
    double operator[](int k) const { return coeffs_[static_cast<std::size_t>(k)]; }
    const std::vector<double>& coeffs() const { return coeffs_; }

    // Horner evaluation of the truncated polynomial at x.
    double eval(double x) const;

private:
    std::vector<double> coeffs_;
};

// c_n(a,b) = exp(log_gamma(a+b+n) - log_gamma(b) - log_gamma(a+1+n)), the n-th
// coefficient of x^{-a}(1-x)^{-b} I_x(a,b).
double normalized_coeff(double a, double b, int n);

// Coefficients c_0..c_N of x^{-a}(1-x)^{-b} I_x(a,b).
TruncatedSeries series_of_normalized_I(double a, double b, int order);

// Convolution; both inputs must have equal order.
TruncatedSeries cauchy_product(const TruncatedSeries& s, const TruncatedSeries& t);

// Determinant coefficient sequence together with the per-coefficient scale
// max_j |product term| that entered the fused convolution difference.  The
// scale is what sign verdicts are measured against.
struct OracleSeries {
    std::vector<double> coeff;
    std::vector<double> scale;
};

// phi_k of I_x(a,b+alpha) I_x(a,b+beta) - I_x(a,b) I_x(a,b+alpha+beta)
// = x^{2a}(1-x)^{2b+alpha+beta} sum_k phi_k x^k, by brute-force convolution.
// Fused difference of two convolutions; a Neumaier-compensated pass replaces
// any coefficient smaller than 1e-10 of its scale.  alpha and beta are
// ordered canonically so swapped inputs produce bit-identical output.
TruncatedSeries phi_oracle(const ParameterPoint& point, int order);

// psi_k of I_x(a+alpha,b) I_x(a+beta,b) - I_x(a,b) I_x(a+alpha+beta,b)
// = x^{2a+alpha+beta}(1-x)^{2b} sum_k psi_k x^k.
TruncatedSeries psi_oracle(const ParameterPoint& point, int order);

OracleSeries phi_oracle_with_scale(const ParameterPoint& point, int order);
OracleSeries psi_oracle_with_scale(const ParameterPoint& point, int order);

// Double-double evaluation of the same convolutions, seeded from lgammal.
// Noise floor around 1e-15 * scale instead of 1e-13 * scale; used for
// extended-precision re-verification of scan verdicts and for the tight
// closed-form comparisons.
OracleSeries phi_oracle_dd(const ParameterPoint& point, int order);
OracleSeries psi_oracle_dd(const ParameterPoint& point, int order);

}  // namespace betaturan::series
