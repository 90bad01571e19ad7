#include "betaturan/series.hpp"

#include <algorithm>
#include <cmath>
#include <utility>

#include "betaturan/detail/double_double.hpp"
#include "betaturan/specfun.hpp"

namespace betaturan::series {

namespace {

using detail_dd = betaturan::detail::dd;

void neumaier_add(double& sum, double& comp, double term) {
    double t = sum + term;
    if (std::abs(sum) >= std::abs(term))
        comp += (sum - t) + term;
    else
        comp += (term - t) + sum;
    sum = t;
}

// Fused difference of the convolutions s1*s2 - s3*s4, with the per-k scale of
// the largest product that entered.  Coefficients below 1e-10 of their scale
// are recomputed with Neumaier compensation; sign verdicts near zero must not
// ride on plain-summation rounding.
OracleSeries fused_determinant(const std::vector<double>& s1, const std::vector<double>& s2,
                               const std::vector<double>& s3, const std::vector<double>& s4) {
    const std::size_t n = s1.size();
    OracleSeries out{std::vector<double>(n), std::vector<double>(n)};
    for (std::size_t k = 0; k < n; ++k) {
        double sum = 0.0;
        double scale = 0.0;
        for (std::size_t j = 0; j <= k; ++j) {
            double p = s1[j] * s2[k - j];
            double q = s3[j] * s4[k - j];
            sum += p - q;
            scale = std::max(scale, std::max(std::abs(p), std::abs(q)));
        }
        if (std::abs(sum) < 1e-10 * scale) {
            double s = 0.0, comp = 0.0;
            for (std::size_t j = 0; j <= k; ++j) {
                neumaier_add(s, comp, s1[j] * s2[k - j]);
                neumaier_add(s, comp, -(s3[j] * s4[k - j]));
            }
            sum = s + comp;
        }
        out.coeff[k] = sum;
        out.scale[k] = scale;
    }
    return out;
}

// Double-double normalized-I coefficients.  The shift arguments are kept as
// exact double-double sums (fl(b)+fl(alpha) would already cost ~1e-16 of the
// convolution scale, which is what this path exists to avoid); the seed c_0
// comes from lgammal.
std::vector<detail_dd> series_normalized_dd(detail_dd a, detail_dd bshift, int order) {
    long double la = static_cast<long double>(a.hi) + static_cast<long double>(a.lo);
    long double lb = static_cast<long double>(bshift.hi) + static_cast<long double>(bshift.lo);
    long double log_c0 = ::lgammal(la + lb) - ::lgammal(lb) - ::lgammal(la + 1.0L);
    detail_dd c{::expl(log_c0)};
    std::vector<detail_dd> out(static_cast<std::size_t>(order) + 1);
    for (int n = 0; n <= order; ++n) {
        out[static_cast<std::size_t>(n)] = c;
        c = c * ((a + bshift + detail_dd(static_cast<double>(n))) /
                 (a + detail_dd(1.0) + detail_dd(static_cast<double>(n))));
    }
    return out;
}

OracleSeries fused_determinant_dd(const std::vector<detail_dd>& s1, const std::vector<detail_dd>& s2,
                                  const std::vector<detail_dd>& s3, const std::vector<detail_dd>& s4) {
    const std::size_t n = s1.size();
    OracleSeries out{std::vector<double>(n), std::vector<double>(n)};
    for (std::size_t k = 0; k < n; ++k) {
        detail_dd sum{0.0};
        double scale = 0.0;
        for (std::size_t j = 0; j <= k; ++j) {
            detail_dd p = s1[j] * s2[k - j];
            detail_dd q = s3[j] * s4[k - j];
            sum += p - q;
            scale = std::max(scale, std::max(std::abs(p.hi), std::abs(q.hi)));
        }
        out.coeff[k] = sum.to_double();
        out.scale[k] = scale;
    }
    return out;
}

void check_point_orders(const ParameterPoint&, int order) {
    if (order < 0) throw domain_error("oracle: order must be nonnegative");
}

}  // namespace

TruncatedSeries::TruncatedSeries(std::vector<double> coeffs) : coeffs_(std::move(coeffs)) {
    if (coeffs_.empty())
        throw domain_error("TruncatedSeries: at least the constant coefficient is required");
}

double TruncatedSeries::eval(double x) const {
    double acc = 0.0;
    for (std::size_t i = coeffs_.size(); i-- > 0;) acc = acc * x + coeffs_[i];
    return acc;
}

double normalized_coeff(double a, double b, int n) {
    if (!(a > 0.0) || !(b > 0.0))
        throw domain_error("normalized_coeff: a and b must be positive");
    if (n < 0) throw domain_error("normalized_coeff: n must be nonnegative");
    return std::exp(specfun::log_gamma(a + b + n) - specfun::log_gamma(b) -
                    specfun::log_gamma(a + 1.0 + n));
}

TruncatedSeries series_of_normalized_I(double a, double b, int order) {
    if (order < 0) throw domain_error("series_of_normalized_I: order must be nonnegative");
    std::vector<double> c(static_cast<std::size_t>(order) + 1);
    for (int n = 0; n <= order; ++n) c[static_cast<std::size_t>(n)] = normalized_coeff(a, b, n);
    return TruncatedSeries(std::move(c));
}

TruncatedSeries cauchy_product(const TruncatedSeries& s, const TruncatedSeries& t) {
    if (s.order() != t.order())
        throw std::invalid_argument("cauchy_product: series orders must match");
    const int n = s.order();
    std::vector<double> out(static_cast<std::size_t>(n) + 1, 0.0);
    for (int k = 0; k <= n; ++k) {
        double acc = 0.0;
        for (int j = 0; j <= k; ++j) acc += s[j] * t[k - j];
        out[static_cast<std::size_t>(k)] = acc;
    }
    return TruncatedSeries(std::move(out));
}

OracleSeries phi_oracle_with_scale(const ParameterPoint& point, int order) {
    check_point_orders(point, order);
    // Canonical shift order makes the alpha <-> beta symmetry bit-exact.
    const double lo = std::min(point.alpha, point.beta);
    const double hi = std::max(point.alpha, point.beta);
    auto s1 = series_of_normalized_I(point.a, point.b + lo, order).coeffs();
    auto s2 = series_of_normalized_I(point.a, point.b + hi, order).coeffs();
    auto s3 = series_of_normalized_I(point.a, point.b, order).coeffs();
    auto s4 = series_of_normalized_I(point.a, point.b + lo + hi, order).coeffs();
    return fused_determinant(s1, s2, s3, s4);
}

OracleSeries psi_oracle_with_scale(const ParameterPoint& point, int order) {
    check_point_orders(point, order);
    const double lo = std::min(point.alpha, point.beta);
    const double hi = std::max(point.alpha, point.beta);
    auto s1 = series_of_normalized_I(point.a + lo, point.b, order).coeffs();
    auto s2 = series_of_normalized_I(point.a + hi, point.b, order).coeffs();
    auto s3 = series_of_normalized_I(point.a, point.b, order).coeffs();
    auto s4 = series_of_normalized_I(point.a + lo + hi, point.b, order).coeffs();
    return fused_determinant(s1, s2, s3, s4);
}

TruncatedSeries phi_oracle(const ParameterPoint& point, int order) {
    return TruncatedSeries(phi_oracle_with_scale(point, order).coeff);
}

TruncatedSeries psi_oracle(const ParameterPoint& point, int order) {
    return TruncatedSeries(psi_oracle_with_scale(point, order).coeff);
}

OracleSeries phi_oracle_dd(const ParameterPoint& point, int order) {
    check_point_orders(point, order);
    const detail_dd a{point.a};
    const detail_dd b{point.b};
    const detail_dd lo{std::min(point.alpha, point.beta)};
    const detail_dd hi{std::max(point.alpha, point.beta)};
    auto s1 = series_normalized_dd(a, b + lo, order);
    auto s2 = series_normalized_dd(a, b + hi, order);
    auto s3 = series_normalized_dd(a, b, order);
    auto s4 = series_normalized_dd(a, b + lo + hi, order);
    return fused_determinant_dd(s1, s2, s3, s4);
}

OracleSeries psi_oracle_dd(const ParameterPoint& point, int order) {
    check_point_orders(point, order);
    const detail_dd a{point.a};
    const detail_dd b{point.b};
    const detail_dd lo{std::min(point.alpha, point.beta)};
    const detail_dd hi{std::max(point.alpha, point.beta)};
    auto s1 = series_normalized_dd(a + lo, b, order);
    auto s2 = series_normalized_dd(a + hi, b, order);
    auto s3 = series_normalized_dd(a, b, order);
    auto s4 = series_normalized_dd(a + lo + hi, b, order);
    return fused_determinant_dd(s1, s2, s3, s4);
}

}  // namespace betaturan::series
