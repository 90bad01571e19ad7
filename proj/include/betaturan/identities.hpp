#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>

#include "betaturan/common.hpp"

namespace betaturan::identities {

// Exact rational, always in lowest terms with positive denominator.
using BigInt = boost::multiprecision::cpp_int;
using BigRational = boost::multiprecision::cpp_rational;

// Rising factorial base (base+1) ... (base+n-1); (base)_0 = 1.  Exact.
BigRational pochhammer_rat(const BigRational& base, int n);

struct CheckResult {
    bool equal;
    BigRational lhs;
    BigRational rhs;
};

// Combinatorial identity 1: the m-sum/n-sum symmetry of brace differences of
// Pochhammer ratios.  Throws domain_error if a denominator Pochhammer vanishes.
CheckResult combin1_check(const BigRational& a, const BigRational& b,
                          const BigRational& beta, int m, int n);

// Combinatorial identity 2: the variant with prefactor a/(b(b+beta)).
CheckResult combin2_check(const BigRational& a, const BigRational& b,
                          const BigRational& beta, int m, int n);

struct GosperResult {
    bool ok;                 // every per-k anti-difference held and the total matched
    int first_bad_k = -1;    // first k with u_k != v_{k+1} - v_k, if any
    BigRational sum;         // sum of u_k
    BigRational closed;      // a((a+b+beta)_{m+1} - (a+b)_{m+1}) / (a+1)_m
};

// Verifies the telescoping anti-difference u_k = v_{k+1} - v_k for every
// k = 0..m and the resulting closed-form sum, exactly.
GosperResult gosper_check(const BigRational& a, const BigRational& b,
                          const BigRational& beta, int m);

// The summation formula used inside the psi linearization proof.
// Requires b != 1 (right side divides by b - 1).
CheckResult kkizv_sum_check(const BigRational& a, const BigRational& b,
                            const BigRational& mu, int m);

}  // namespace betaturan::identities
