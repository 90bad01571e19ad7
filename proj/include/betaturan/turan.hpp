#pragma once

#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "betaturan/common.hpp"
#include "betaturan/series.hpp"

namespace betaturan::turan {

// Two-sided Turan bound constants m, M of the corollaries.
struct BoundPair {
    double lower_m;
    double upper_M;
};

enum class SignVerdict { all_positive, all_negative, mixed, indeterminate };

const char* to_string(SignVerdict v);

// Outcome of classifying phi_0..phi_N (or psi_0..psi_N) at one grid point.
struct SignReport {
    ParameterPoint point;
    char family;  // 'p' for phi, 'q' for psi
    int k_min = 0;
    int k_max = 0;
    double min_abs = 0.0;            // smallest |coefficient| over the range
    double noise_floor = 0.0;        // largest per-k floor applied
    SignVerdict verdict = SignVerdict::indeterminate;
    std::optional<int> first_violation_k;  // present whenever verdict == mixed
    int indeterminate_count = 0;
    bool trivial_zero = false;       // every coefficient below its floor (b = 1 class)
    bool reverified = false;         // extended-precision recheck was run
};

// Eq.-(9)-style closed form for psi_k; alpha must be a positive integer.
// Brace differences evaluated as sign(d) * exp(max) * (1 - exp(min - max)).
double psi_k_closed(double a, double b, int alpha, double beta, int k);

// Eq.-(14)-style closed form for phi_k; alpha must be a positive integer.
double phi_k_closed(double a, double b, int alpha, double beta, int k);

// Both sides of the linearization identity for psi: lhs from inc_beta
// products divided by x^{2a+alpha+beta}(1-x)^{2b}, rhs from the j-sum of
// 2F1 differences.  Contract: |lhs - rhs| <= 1e-9 * (1 + |lhs|).
std::pair<double, double> psi_linearization_eval(const ParameterPoint& point, double x_eval);

// Same for phi with prefactor x^{2a}(1-x)^{2b+alpha+beta}.
std::pair<double, double> phi_linearization_eval(const ParameterPoint& point, double x_eval);

// Bound constants for I_x(a,b)^2 - I_x(a-nu,b) I_x(a+nu,b); requires b > 1,
// nu >= 1, a > nu - 1.
BoundPair turan_bounds_a(double a, double b, int nu);

// Bound constants for I_x(a,b)^2 - I_x(a,b+nu) I_x(a,b-nu); requires b > nu,
// a > 0.
BoundPair turan_bounds_b(double a, double b, int nu);

// One evaluation of a two-sided bound chain at x.
struct BoundCheckRow {
    double x;
    double lower;      // m * weight(x)
    double value;      // the Turan determinant
    double upper;      // M * I_x(a,b)^2
    bool ok_lower;
    bool ok_upper;
};

std::vector<BoundCheckRow> check_turan_bounds_a(double a, double b, int nu,
                                                std::span<const double> xs,
                                                double slack = 1e-12);
std::vector<BoundCheckRow> check_turan_bounds_b(double a, double b, int nu,
                                                std::span<const double> xs,
                                                double slack = 1e-12);

// Classifies the oracle coefficients of both families at every grid point.
// Mixed verdicts are re-verified in double-double before being reported.
// Reports come back in grid order regardless of worker count.
std::vector<SignReport> conjecture_scan(std::span<const ParameterPoint> grid, int order);

// Single-point, single-family classification (the scan's unit of work).
SignReport classify_signs(const ParameterPoint& point, char family, int order);

}  // namespace betaturan::turan
