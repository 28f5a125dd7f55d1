#pragma once

// Shared basic types: arbitrary-precision integers/rationals, a compact
// dynamic bitset, and a deterministic RNG with explicit sampling helpers.

#include <boost/multiprecision/cpp_int.hpp>

#include <cmath>
#include <cstdint>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

namespace antichains {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

inline Int binomial(long n, long k) {
    if (k < 0 || k > n) return 0;
    if (k > n - k) k = n - k;
    Int r = 1;
    for (long i = 1; i <= k; ++i) {
        r *= (n - k + i);
        r /= i;
    }
    return r;
}

// Renders a rational as "p" or "p/q" in lowest terms.
inline std::string rat_to_string(const Rat& r) {
    const Int num = boost::multiprecision::numerator(r);
    const Int den = boost::multiprecision::denominator(r);
    if (den == 1) return num.str();
    return num.str() + "/" + den.str();
}

// log2 of a positive integer with ~60-bit mantissa accuracy: take the top
// 62 bits exactly and correct by the discarded shift.
inline long double log2_int(const Int& x) {
    if (x <= 0) throw std::domain_error("log2_int: nonpositive argument");
    const long bits = static_cast<long>(boost::multiprecision::msb(x)) + 1;
    const long shift = bits > 62 ? bits - 62 : 0;
    const Int top = x >> shift;
    const long double t = top.convert_to<long double>();
    return std::log2(t) + static_cast<long double>(shift);
}

inline long double log2_rat(const Rat& r) {
    return log2_int(boost::multiprecision::numerator(r)) -
           log2_int(boost::multiprecision::denominator(r));
}

inline long double rat_to_ld(const Rat& r) {
    if (r == 0) return 0.0L;
    if (r < 0) return -rat_to_ld(-r);
    return std::exp2(log2_rat(r));
}

// Fixed-width bitset sized at construction; all binary operations assume
// operands of equal width (they are always drawn from the same ground set).
struct Bits {
    std::vector<std::uint64_t> w;
    std::size_t nbits = 0;

    Bits() = default;
    explicit Bits(std::size_t n) : w((n + 63) / 64, 0), nbits(n) {}

    void set(std::size_t i) { w[i >> 6] |= (std::uint64_t{1} << (i & 63)); }
    void reset(std::size_t i) { w[i >> 6] &= ~(std::uint64_t{1} << (i & 63)); }
    bool test(std::size_t i) const { return (w[i >> 6] >> (i & 63)) & 1; }

    std::size_t count() const {
        std::size_t c = 0;
        for (auto x : w) c += static_cast<std::size_t>(__builtin_popcountll(x));
        return c;
    }
    bool any() const {
        for (auto x : w)
            if (x) return true;
        return false;
    }
    bool none() const { return !any(); }

    bool intersects(const Bits& o) const {
        for (std::size_t i = 0; i < w.size(); ++i)
            if (w[i] & o.w[i]) return true;
        return false;
    }
    bool is_subset_of(const Bits& o) const {
        for (std::size_t i = 0; i < w.size(); ++i)
            if (w[i] & ~o.w[i]) return false;
        return true;
    }
    Bits& operator|=(const Bits& o) {
        for (std::size_t i = 0; i < w.size(); ++i) w[i] |= o.w[i];
        return *this;
    }
    Bits& operator&=(const Bits& o) {
        for (std::size_t i = 0; i < w.size(); ++i) w[i] &= o.w[i];
        return *this;
    }
    Bits& andnot(const Bits& o) {
        for (std::size_t i = 0; i < w.size(); ++i) w[i] &= ~o.w[i];
        return *this;
    }
    friend Bits operator|(Bits a, const Bits& b) { return a |= b; }
    friend Bits operator&(Bits a, const Bits& b) { return a &= b; }
    bool operator==(const Bits& o) const { return nbits == o.nbits && w == o.w; }

    template <class F>
    void for_each(F f) const {
        for (std::size_t i = 0; i < w.size(); ++i) {
            std::uint64_t x = w[i];
            while (x) {
                f(i * 64 + static_cast<std::size_t>(__builtin_ctzll(x)));
                x &= x - 1;
            }
        }
    }
};

// Deterministic RNG. Uniform integers use mask rejection and the unit
// interval uses the top 53 bits, so streams are reproducible across
// platforms (no std::uniform_* distributions, whose algorithms vary).
struct Rng {
    std::mt19937_64 eng;
    explicit Rng(std::uint64_t seed) : eng(seed) {}

    std::uint64_t raw() { return eng(); }

    std::uint64_t below(std::uint64_t n) {
        if (n == 0) throw std::domain_error("Rng::below(0)");
        if ((n & (n - 1)) == 0) return eng() & (n - 1);
        std::uint64_t mask = ~std::uint64_t{0};
        mask >>= __builtin_clzll(n | 1);
        for (;;) {
            const std::uint64_t v = eng() & mask;
            if (v < n) return v;
        }
    }

    double unit() { return static_cast<double>(eng() >> 11) * 0x1.0p-53; }

    bool bernoulli(double p) { return unit() < p; }
};

}  // namespace antichains
