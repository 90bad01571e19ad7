#pragma once

#include <span>
#include <utility>
#include <vector>

#include "betaturan/common.hpp"

namespace betaturan::proofcheck {

enum class MomentKind { log_one_minus_t, log_t };

// integral_0^x t^{a-1}(1-t)^{b-1} L(t)^j dt with L = log(1-t) or log t and
// j in {0,1,2}.  x may be 1 (full interval).  Endpoint singularities are
// removed by the substitutions t = u^{1/a} (a < 1) and 1-t = v^{1/b}
// (x = 1, b < 1) before tanh-sinh integration.  Certified to 1e-11 abs+rel;
// throws quadrature_tolerance_error with the achieved estimate otherwise.
double moment_integral(double a, double b, double x, int j, MomentKind kind);

// The five proof functions of one theorem's derivative chain at one x.
struct ChainValues {
    double x;
    double U, V, W, Z, Q;
};

// Theorem-1 chain (log(1-t) moments, second-parameter log-concavity).
ChainValues chain_eval_b(double a, double b, double x);

// Theorem-2 chain (log t moments, first-parameter log-convexity/concavity).
ChainValues chain_eval_a(double a, double b, double x);

// The closed quadratics Q alone; valid on all of [0, 1].
double q_poly_b(double a, double b, double x);
double q_poly_a(double a, double b, double x);

// Collapsed sign sequence of sampled values; |v| <= zero_tol counts as 0.
struct SignPattern {
    std::vector<int> pattern;               // entries in {-1, 0, +1}, no repeats
    int change_count = 0;                    // pattern.size() - 1
    std::vector<double> change_locations;    // midpoint of each bracketing pair
};

SignPattern sign_pattern_of(std::span<const std::pair<double, double>> values,
                            double zero_tol);

// f_alpha(x) = (psi(x+alpha)-psi(x))^2 + psi'(x+alpha) - psi'(x) together
// with g_alpha(x) = psi(x) - psi(x+alpha) + 1/x and the residual of
// f(x+1) - f(x) = 2 alpha / (x(x+alpha)) * g_alpha(x).
struct LemmaPsiResult {
    double f;
    double g;
    double recurrence_residual;
};

LemmaPsiResult lemma_psi_check(double alpha, double x);

enum class FdDirection { in_a, in_b };

// Richardson-refined central second difference of log I_x along a or b.
// h <= 0 selects the default 1e-4 * parameter.  Sets *cancellation_warning
// when the log differences fall near rounding noise.
double logconc_fd(double a, double b, double x, double h, FdDirection direction,
                  bool* cancellation_warning = nullptr);

}  // namespace betaturan::proofcheck
