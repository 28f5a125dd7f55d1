#include "antichains/asymptotics.hpp"

#include "antichains/poset.hpp"

#include <cmath>

namespace antichains {

namespace {

Rat t1_term(int n, int k) {
    Rat term = Rat(binomial(n, 2 * k + 1) * binomial(2 * k + 1, k));
    term /= Rat(Int(1) << (n - k));
    return term;
}

Rat t2_term(int n, int k) {
    // n^2 - 3(k+1)n + k(9k+17)/4
    Rat poly = Rat(Int(n) * n - Int(3) * (k + 1) * n) + Rat(Int(k) * (9 * k + 17), 4);
    Rat term = Rat(binomial(n, 2 * k + 1) * binomial(2 * k + 1, k)) * poly;
    term /= Rat(Int(1) << (2 * (n - k)));
    return term;
}

}  // namespace

Rat t1(int n) {
    if (n < 1) throw std::domain_error("t1: n >= 1 required");
    Rat s = 0;
    for (int k = 0; 2 * k < n; ++k) s += t1_term(n, k);
    return 2 * s;
}

Rat t1_backward(int n) {
    if (n < 1) throw std::domain_error("t1: n >= 1 required");
    Rat s = 0;
    for (int k = (n - 1) / 2; k >= 0; --k) s += t1_term(n, k);
    return 2 * s;
}

Rat t2(int n) {
    if (n < 1) throw std::domain_error("t2: n >= 1 required");
    Rat s = 0;
    for (int k = 0; 2 * k < n; ++k) s += t2_term(n, k);
    return s;
}

Rat t2_backward(int n) {
    if (n < 1) throw std::domain_error("t2: n >= 1 required");
    Rat s = 0;
    for (int k = (n - 1) / 2; k >= 0; --k) s += t2_term(n, k);
    return s;
}

long double t1_asymptotic_log(int n) {
    if (n < 1) throw std::domain_error("t1_asymptotic: n >= 1 required");
    const long double r2 = std::sqrt(2.0L);
    const long double prefix = std::sqrt((1 + 2 * r2) / (2 * r2 * 3.14159265358979323846264338327950288L));
    const long double base = (1 + 2 * r2) / 2;
    return std::log(prefix) - 0.5L * std::log(static_cast<long double>(n)) +
           n * std::log(base);
}

long double t1_asymptotic(int n) { return std::exp(t1_asymptotic_log(n)); }

Int motzkin(int n) {
    if (n < 0) throw std::domain_error("motzkin: n >= 0 required");
    std::vector<Int> m(static_cast<std::size_t>(n) + 1);
    m[0] = 1;
    for (int i = 0; i < n; ++i) {
        Int next = m[static_cast<std::size_t>(i)];
        for (int k = 0; k <= i - 1; ++k)
            next += m[static_cast<std::size_t>(k)] * m[static_cast<std::size_t>(i - 1 - k)];
        m[static_cast<std::size_t>(i) + 1] = next;
    }
    return m[static_cast<std::size_t>(n)];
}

namespace {

// If r is an integer <= 0, returns its negation (the termination index).
bool nonpositive_integer(const Rat& r, long& neg) {
    if (boost::multiprecision::denominator(r) != 1) return false;
    const Int num = boost::multiprecision::numerator(r);
    if (num > 0) return false;
    neg = static_cast<long>(-num);
    return true;
}

}  // namespace

Rat gauss_2f1_terminating(const Rat& a, const Rat& b, const Rat& c, const Rat& z) {
    long ma = 0, mb = 0;
    const bool ta = nonpositive_integer(a, ma);
    const bool tb = nonpositive_integer(b, mb);
    if (!ta && !tb)
        throw std::domain_error(
            "gauss_2f1_terminating: neither upper parameter is a non-positive integer");
    const long M = ta && tb ? std::min(ma, mb) : (ta ? ma : mb);
    // term_{m+1} = term_m * (a+m)(b+m) / ((c+m)(m+1)) * z
    Rat sum = 0, term = 1;
    for (long m = 0;; ++m) {
        sum += term;
        if (m == M) break;
        const Rat cm = c + m;
        if (cm == 0)
            throw std::domain_error(
                "gauss_2f1_terminating: lower parameter hits zero before termination");
        term *= (a + m) * (b + m) * z;
        term /= cm * Rat(m + 1);
    }
    return sum;
}

long double hyper_asymptotic_log(const Rat& a, const Rat& b, const Rat& c,
                                 long double z, long double lambda) {
    if (z <= 0 || lambda <= 0)
        throw std::domain_error("hyper_asymptotic: z > 0 and lambda > 0 required");
    const long double A = rat_to_ld(a), B = rat_to_ld(b), C = rat_to_ld(c);
    const long double sz = std::sqrt(z);
    const long double pi = 3.14159265358979323846264338327950288L;
    return std::lgamma(static_cast<double>(C)) + 0.25L * std::log(z) -
           std::log(2 * std::sqrt(pi)) + (0.5L - C) * std::log(lambda) +
           (C - A + lambda) * std::log(1 + 1 / sz) - (lambda - A) * std::log(1 / sz) -
           (B - lambda) * std::log(1 + sz);
}

AsymptoticEstimate asymptotic_estimate(int n) {
    AsymptoticEstimate e;
    e.n = n;
    e.ell_n = layer_size(3, n, n);
    e.T1 = t1(n);
    e.T2 = t2(n);
    const long double ln2 = 0.69314718055994530941723212145817657L;
    e.log2_alpha_estimate =
        e.ell_n.convert_to<long double>() + (rat_to_ld(e.T1) + rat_to_ld(e.T2)) / ln2;
    return e;
}

}  // namespace antichains
