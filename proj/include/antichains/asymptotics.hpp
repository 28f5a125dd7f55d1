#pragma once

// Exact-rational series T1, T2 for the log-ratio of antichain counts to
// 2^{l_n}, the closed-form asymptotic of T1, Motzkin numbers, and the
// terminating Gauss hypergeometric evaluation with its log-space
// asymptotic.

#include "antichains/common.hpp"

#include <vector>

namespace antichains {

// T1(n) = 2 sum_{0 <= k < n/2} C(n,2k+1) C(2k+1,k) 2^{-(n-k)}.
Rat t1(int n);
// Same sum accumulated from the top index downward (summation-order check).
Rat t1_backward(int n);

// T2(n) = sum_{0 <= k < n/2} C(n,2k+1) C(2k+1,k)
//         (n^2 - 3(k+1)n + k(9k+17)/4) 2^{-2(n-k)}.
Rat t2(int n);
Rat t2_backward(int n);

// Closed-form asymptotic of T1:
// sqrt((1+2*sqrt 2)/(2*sqrt 2*pi)) * n^{-1/2} * ((1+2*sqrt 2)/2)^n,
// evaluated in log-space.  10-digit prefix constant: 0.6563912139.
long double t1_asymptotic_log(int n);
long double t1_asymptotic(int n);

// Motzkin numbers via M_{n+1} = M_n + sum_k M_k M_{n-1-k}.
Int motzkin(int n);

// Terminating Gauss 2F1: requires a or b to be a non-positive integer (all
// half-integer parameters used here become integers in one of the two
// slots); refuses otherwise, and refuses if c hits a non-positive integer
// before termination. Every term is an exact rational.
Rat gauss_2f1_terminating(const Rat& a, const Rat& b, const Rat& c, const Rat& z);

// Log of the large-lambda asymptotic of 2F1(a - lambda, b - lambda, c; z):
// log[ Gamma(c) z^{1/4} / (2 sqrt(pi)) * lambda^{1/2-c}
//      * (1 + 1/sqrt z)^{c-a+lambda} / ((1/sqrt z)^{lambda-a} (1+sqrt z)^{b-lambda}) ].
long double hyper_asymptotic_log(const Rat& a, const Rat& b, const Rat& c,
                                 long double z, long double lambda);

struct AsymptoticEstimate {
    int n = 0;
    Int ell_n;                      // middle layer size of [3]^n
    Rat T1, T2;
    long double log2_alpha_estimate = 0;  // ell_n + (T1+T2)/ln 2
};
AsymptoticEstimate asymptotic_estimate(int n);

}  // namespace antichains
