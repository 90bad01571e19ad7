#include "betaturan/identities.hpp"

#include <string>

namespace betaturan::identities {

namespace {

// Pochhammer that refuses to divide by: callers pre-check with this.
void require_nonzero(const BigRational& q, const char* what) {
    if (q == 0) throw domain_error(std::string("identities: ") + what + " vanishes");
}

}  // namespace

BigRational pochhammer_rat(const BigRational& base, int n) {
    if (n < 0) throw domain_error("pochhammer_rat: n must be nonnegative");
    BigRational acc = 1;
    for (int i = 0; i < n; ++i) acc *= base + i;
    return acc;
}

CheckResult combin1_check(const BigRational& a, const BigRational& b,
                          const BigRational& beta, int m, int n) {
    if (m < 0 || n < 0) throw domain_error("combin1_check: m, n must be nonnegative");
    BigRational lhs = 0;
    for (int k = 0; k <= m; ++k) {
        BigRational d1 = pochhammer_rat(b, k) * pochhammer_rat(b + beta, m - k);
        BigRational d2 = pochhammer_rat(b + k, n + 1);
        BigRational d3 = pochhammer_rat(b + beta + (m - k), n + 1);
        require_nonzero(d1, "(b)_k (b+beta)_{m-k}");
        require_nonzero(d2, "(b+k)_{n+1}");
        require_nonzero(d3, "(b+beta+m-k)_{n+1}");
        lhs += pochhammer_rat(a, k) * pochhammer_rat(a + beta, m - k) / d1 *
               (pochhammer_rat(a + k, n + 1) / d2 -
                pochhammer_rat(a + beta + (m - k), n + 1) / d3);
    }
    BigRational rhs = 0;
    for (int j = 0; j <= n; ++j) {
        BigRational d1 = pochhammer_rat(b, j) * pochhammer_rat(b + beta, n - j);
        BigRational d2 = pochhammer_rat(b + j, m + 1);
        BigRational d3 = pochhammer_rat(b + beta + (n - j), m + 1);
        require_nonzero(d1, "(b)_j (b+beta)_{n-j}");
        require_nonzero(d2, "(b+j)_{m+1}");
        require_nonzero(d3, "(b+beta+n-j)_{m+1}");
        rhs += pochhammer_rat(a, j) * pochhammer_rat(a + beta, n - j) / d1 *
               (pochhammer_rat(a + j, m + 1) / d2 -
                pochhammer_rat(a + beta + (n - j), m + 1) / d3);
    }
    return {lhs == rhs, lhs, rhs};
}

CheckResult combin2_check(const BigRational& a, const BigRational& b,
                          const BigRational& beta, int m, int n) {
    if (m < 0 || n < 0) throw domain_error("combin2_check: m, n must be nonnegative");
    require_nonzero(b, "b");
    require_nonzero(b + beta, "b + beta");
    BigRational lhs = 0;
    for (int j = 0; j <= n; ++j) {
        BigRational d = pochhammer_rat(b + 1, j) * pochhammer_rat(b + 1 + beta, n - j);
        require_nonzero(d, "(b+1)_j (b+1+beta)_{n-j}");
        lhs += pochhammer_rat(a + b, j) * pochhammer_rat(a + b + beta, n - j) / d *
               (pochhammer_rat(a + b + beta + (n - j), m + 1) -
                pochhammer_rat(a + b + j, m + 1));
    }
    lhs *= a / (b * (b + beta));
    BigRational rhs = 0;
    BigRational dn1 = pochhammer_rat(b, n + 1);
    BigRational dn2 = pochhammer_rat(b + beta, n + 1);
    require_nonzero(dn1, "(b)_{n+1}");
    require_nonzero(dn2, "(b+beta)_{n+1}");
    for (int k = 0; k <= m; ++k) {
        BigRational d = pochhammer_rat(a + 1, k) * pochhammer_rat(a + 1, m - k);
        require_nonzero(d, "(a+1)_k (a+1)_{m-k}");
        rhs += pochhammer_rat(a + b, k) * pochhammer_rat(a + b + beta, m - k) / d *
               (pochhammer_rat(a + b + k, n + 1) / dn1 -
                pochhammer_rat(a + b + beta + (m - k), n + 1) / dn2);
    }
    rhs *= pochhammer_rat(a + 1, m);
    return {lhs == rhs, lhs, rhs};
}

GosperResult gosper_check(const BigRational& a, const BigRational& b,
                          const BigRational& beta, int m) {
    if (m < 0) throw domain_error("gosper_check: m must be nonnegative");
    BigRational am1 = pochhammer_rat(a, m + 1);
    require_nonzero(am1, "(a)_{m+1}");  // implies (a)_k != 0 for every k <= m+1

    auto u = [&](int k) {
        BigRational d = pochhammer_rat(a + 1, k) * pochhammer_rat(a + 1, m - k);
        require_nonzero(d, "(a+1)_k (a+1)_{m-k}");
        return pochhammer_rat(a + b, k) * pochhammer_rat(a + b + beta, m - k) / d *
               (b * (2 * k - m) + beta * (a + k));
    };
    auto v = [&](int k) {
        BigRational d = pochhammer_rat(a, k) * pochhammer_rat(a, m - k + 1);
        require_nonzero(d, "(a)_k (a)_{m-k+1}");
        return -(a * a) * pochhammer_rat(a + b, k) * pochhammer_rat(a + b + beta, m - k + 1) / d;
    };

    GosperResult out{true, -1, 0, 0};
    for (int k = 0; k <= m; ++k) {
        BigRational uk = u(k);
        if (uk != v(k + 1) - v(k)) {
            out.ok = false;
            out.first_bad_k = k;
            break;
        }
        out.sum += uk;
    }
    BigRational dm = pochhammer_rat(a + 1, m);
    require_nonzero(dm, "(a+1)_m");
    out.closed = a * (pochhammer_rat(a + b + beta, m + 1) - pochhammer_rat(a + b, m + 1)) / dm;
    if (out.ok && out.sum != out.closed) out.ok = false;
    return out;
}

CheckResult kkizv_sum_check(const BigRational& a, const BigRational& b,
                            const BigRational& mu, int m) {
    if (m < 0) throw domain_error("kkizv_sum_check: m must be nonnegative");
    if (b == 1)
        throw domain_error("kkizv_sum_check: b = 1 is excluded (right side divides by b - 1)");
    BigRational lhs = 0;
    for (int k = 0; k <= m; ++k) {
        BigRational d = pochhammer_rat(a + 2, k) * pochhammer_rat(a + mu + 2, m - k);
        require_nonzero(d, "(a+2)_k (a+mu+2)_{m-k}");
        lhs += pochhammer_rat(a + b, k) * pochhammer_rat(a + b + mu, m - k) / d *
               (BigRational(m - 2 * k) + mu);
    }
    BigRational d1 = pochhammer_rat(a + 1, m + 1);
    BigRational d2 = pochhammer_rat(a + mu + 1, m + 1);
    require_nonzero(d1, "(a+1)_{m+1}");
    require_nonzero(d2, "(a+mu+1)_{m+1}");
    BigRational rhs = (a + 1) * (a + mu + 1) / (b - 1) *
                      (pochhammer_rat(a + b, m + 1) / d1 - pochhammer_rat(a + b + mu, m + 1) / d2);
    return {lhs == rhs, lhs, rhs};
}

}  // namespace betaturan::identities
