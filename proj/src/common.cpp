#include "betaturan/common.hpp"

#include <cmath>

namespace betaturan {

ParameterPoint::ParameterPoint(double a_, double b_, double alpha_, double beta_, double x_)
    : a(a_), b(b_), alpha(alpha_), beta(beta_), x(x_) {
    if (!std::isfinite(a) || !(a > 0.0))
        throw domain_error("ParameterPoint: a must be a positive real");
    if (!std::isfinite(b) || !(b > 0.0))
        throw domain_error("ParameterPoint: b must be a positive real");
    if (!std::isfinite(alpha) || alpha < 0.0)
        throw domain_error("ParameterPoint: alpha must be nonnegative");
    if (!std::isfinite(beta) || beta < 0.0)
        throw domain_error("ParameterPoint: beta must be nonnegative");
    if (!std::isfinite(x) || !(x > 0.0 && x < 1.0))
        throw domain_error("ParameterPoint: x must lie in (0,1)");
}

}  // namespace betaturan
