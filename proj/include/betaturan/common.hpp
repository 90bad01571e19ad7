#pragma once

#include <stdexcept>
#include <string>

namespace betaturan {

// Thrown when an argument is outside a documented precondition.
class domain_error : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

// A series hit its hard term cap before the tail bound was satisfied.
class series_cap_error : public std::runtime_error {
public:
    series_cap_error(const std::string& what, long terms)
        : std::runtime_error(what), terms_used(terms) {}
    long terms_used;
};

// Quadrature finished but could not certify the requested tolerance.
class quadrature_tolerance_error : public std::runtime_error {
public:
    quadrature_tolerance_error(const std::string& what, double achieved)
        : std::runtime_error(what), achieved_error(achieved) {}
    double achieved_error;
};

// Universal input record for the phi/psi determinant machinery.
// Invariants: a > 0, b > 0, alpha >= 0, beta >= 0, 0 < x < 1.
struct ParameterPoint {
    double a;
    double b;
    double alpha;
    double beta;
    double x;

    ParameterPoint(double a_, double b_, double alpha_, double beta_, double x_);
};

}  // namespace betaturan
