#pragma once

// Exact elementary number theory on signed 64-bit integers: prime
// factorization, Euler phi, Moebius mu, divisor lists, Ramanujan sums and
// gcd/lcm aggregates. Everything here is a pure function; overflow aborts
// with an exception instead of wrapping.

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

namespace circulant {

using int64 = std::int64_t;

inline constexpr int64 kMaxFactorizeInput = int64(1) << 40;

// a*b with overflow detection.
inline int64 checked_mul(int64 a, int64 b) {
    int64 r = 0;
    if (__builtin_mul_overflow(a, b, &r))
        throw std::overflow_error("integer overflow in product " + std::to_string(a) +
                                  " * " + std::to_string(b));
    return r;
}

struct PrimePower {
    int64 prime;
    int64 exponent;
    bool operator==(const PrimePower&) const = default;
};

// Unique prime factorization of a positive integer. value == 1 iff factors
// is empty; primes are strictly increasing.
struct Factorization {
    int64 value = 1;
    std::vector<PrimePower> factors;

    int64 reconstruct() const {
        int64 v = 1;
        for (const auto& [p, e] : factors)
            for (int64 i = 0; i < e; ++i) v = checked_mul(v, p);
        return v;
    }
};

inline bool is_prime(int64 n) {
    if (n < 2) return false;
    if (n % 2 == 0) return n == 2;
    for (int64 d = 3; d * d <= n; d += 2)
        if (n % d == 0) return false;
    return true;
}

// Trial division; inputs are capped at 2^40 so the divisor scan stays below
// 2^20 steps.
inline Factorization factorize(int64 n) {
    if (n < 1) throw std::invalid_argument("factorize: need n >= 1, got " + std::to_string(n));
    if (n > kMaxFactorizeInput)
        throw std::invalid_argument("factorize: n exceeds 2^40 cap");
    Factorization f;
    f.value = n;
    for (int64 p = 2; p * p <= n; p += (p == 2 ? 1 : 2)) {
        if (n % p != 0) continue;
        int64 e = 0;
        while (n % p == 0) { n /= p; ++e; }
        f.factors.push_back({p, e});
    }
    if (n > 1) f.factors.push_back({n, 1});
    return f;
}

inline int64 euler_phi(const Factorization& f) {
    int64 phi = 1;
    for (const auto& [p, e] : f.factors) {
        int64 pe = p;
        for (int64 i = 1; i < e; ++i) pe = checked_mul(pe, p);
        phi = checked_mul(phi, pe - pe / p);
    }
    return phi;
}

// phi(n) = #{1 <= s <= n : gcd(s, n) = 1}, computed multiplicatively.
inline int64 euler_phi(int64 n) { return euler_phi(factorize(n)); }

// mu(n): 0 on a repeated prime factor, else (-1)^(number of prime factors).
inline int64 moebius(int64 n) {
    Factorization f = factorize(n);
    for (const auto& [p, e] : f.factors)
        if (e >= 2) return 0;
    return f.factors.size() % 2 == 0 ? 1 : -1;
}

// All divisors of n, strictly increasing. Length is tau(n).
inline std::vector<int64> divisors(int64 n) {
    Factorization f = factorize(n);
    std::vector<int64> divs{1};
    for (const auto& [p, e] : f.factors) {
        const std::size_t base = divs.size();
        int64 pe = 1;
        for (int64 i = 1; i <= e; ++i) {
            pe = checked_mul(pe, p);
            for (std::size_t k = 0; k < base; ++k)
                divs.push_back(checked_mul(divs[k], pe));
        }
    }
    std::sort(divs.begin(), divs.end());
    return divs;
}

// Ramanujan sum c_f(j) = sum of e^(2*pi*i*j*x/f) over x in [1,f] coprime to
// f, evaluated by the closed form mu(f/g) * phi(f) / phi(f/g) with
// g = gcd(f, j). The quotient is exact because (f/g) | f forces
// phi(f/g) | phi(f); a non-exact division indicates an arithmetic bug.
inline int64 ramanujan_sum(int64 f, int64 j) {
    if (f < 1) throw std::invalid_argument("ramanujan_sum: need f >= 1");
    if (j < 0) throw std::invalid_argument("ramanujan_sum: need j >= 0");
    const int64 g = std::gcd(f, j);  // gcd(f, 0) == f
    const int64 m = f / g;
    const int64 mu = moebius(m);
    if (mu == 0) return 0;
    const int64 phi_f = euler_phi(f);
    const int64 phi_m = euler_phi(m);
    if (phi_f % phi_m != 0)
        throw std::logic_error("ramanujan_sum: phi(" + std::to_string(m) +
                               ") does not divide phi(" + std::to_string(f) + ")");
    return mu * (phi_f / phi_m);
}

// gcd of all values together with n; n itself for an empty set.
inline int64 gcd_all(const std::vector<int64>& values, int64 n) {
    int64 g = n;
    for (int64 v : values) g = std::gcd(g, v);
    return g;
}

inline int64 lcm_all(const std::vector<int64>& values) {
    if (values.empty()) throw std::invalid_argument("lcm_all: empty set");
    int64 l = 1;
    for (int64 v : values) {
        if (v < 1) throw std::invalid_argument("lcm_all: values must be positive");
        l = checked_mul(l / std::gcd(l, v), v);
    }
    return l;
}

}  // namespace circulant
