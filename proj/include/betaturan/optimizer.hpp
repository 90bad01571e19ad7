#pragma once

#include <iosfwd>
#include <span>
#include <string>
#include <vector>

#include "betaturan/common.hpp"

namespace betaturan::optimizer {

class infeasible_error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class convergence_error : public std::runtime_error {
public:
    convergence_error(const std::string& what, std::vector<double> iterate)
        : std::runtime_error(what), last_iterate(std::move(iterate)) {}
    std::vector<double> last_iterate;
};

// minimize sum_i c_i alpha_i  subject to  prod_i I_{p_i}(w_i, alpha_i - w_i + 1) >= epsilon.
struct LotteryInstance {
    std::vector<double> costs;   // c_i > 0
    std::vector<double> wins;    // w_i > 0
    std::vector<double> probs;   // p_i in (0,1)
    double epsilon = 0.5;        // in (0,1)
    bool alpha_at_least_w = false;  // optional extra bound alpha_i >= w_i

    std::size_t size() const { return costs.size(); }
    void validate() const;

    // Text format: optional comment lines (#...), a header line
    // "epsilon <v>", an optional "alpha_min w" directive, then one
    // "<c> <w> <p>" line per coordinate.
    static LotteryInstance parse(std::istream& in);
};

struct Solution {
    std::vector<double> alpha;
    double objective = 0.0;
    double constraint_value = 0.0;  // prod_i I_{p_i}(...), >= epsilon - 1e-8
    double kkt_residual = 0.0;
    int iterations = 0;
};

// sum_i log I_{p_i}(w_i, alpha_i - w_i + 1); concave in alpha.
// Requires alpha_i > w_i - 1 for every i.
double constraint_log(const LotteryInstance& instance, std::span<const double> alpha);

// Log-barrier interior-point solve with exact Newton steps; t doubled per
// outer iteration until the duality gap is below tol.
Solution solve(const LotteryInstance& instance, double tol);

// Same, started from a caller-supplied strictly feasible point.
Solution solve_from(const LotteryInstance& instance, std::vector<double> start, double tol);

void write_solution(std::ostream& out, const Solution& solution);

namespace detail {
// d/db and d^2/db^2 of log I_x(a,b), from termwise differentiation of the
// defining series.
struct LogIncBetaDerivs {
    double value;   // log I_x(a,b)
    double d1;
    double d2;
};
LogIncBetaDerivs log_inc_beta_derivs(double a, double b, double x);
}  // namespace detail

}  // namespace betaturan::optimizer
