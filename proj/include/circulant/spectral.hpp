#pragma once

// Eigenvalues of circulant graphs. The numeric route evaluates the
// character sums lambda_j = sum_{s in S} omega_n^(j*s) in double precision;
// the exact route evaluates the Ramanujan-sum formula
// lambda_j = sum_{f in F} c_f(j) for integral graphs described by a divisor
// set. Spectral classifications: the rational-ratio condition on
// eigenvalue differences and two bipartiteness tests.

#include <complex>
#include <numbers>
#include <random>

#include "circulant/graph.hpp"

namespace circulant {

class Spectrum {
  public:
    enum class Variant { exact, numeric };

    static Spectrum from_exact(int64 n, std::vector<int64> values) {
        if (static_cast<int64>(values.size()) != n)
            throw std::invalid_argument("spectrum: need n values");
        Spectrum s;
        s.n_ = n;
        s.variant_ = Variant::exact;
        s.exact_ = std::move(values);
        return s;
    }

    static Spectrum from_numeric(int64 n, std::vector<std::complex<double>> values) {
        if (static_cast<int64>(values.size()) != n)
            throw std::invalid_argument("spectrum: need n values");
        Spectrum s;
        s.n_ = n;
        s.variant_ = Variant::numeric;
        s.numeric_ = std::move(values);
        return s;
    }

    int64 n() const { return n_; }
    Variant variant() const { return variant_; }
    bool is_exact() const { return variant_ == Variant::exact; }

    const std::vector<int64>& exact_values() const& {
        if (!is_exact()) throw std::logic_error("spectrum: not exact");
        return exact_;
    }
    std::vector<int64> exact_values() && {
        if (!is_exact()) throw std::logic_error("spectrum: not exact");
        return std::move(exact_);
    }
    const std::vector<std::complex<double>>& numeric_values() const& {
        if (is_exact()) throw std::logic_error("spectrum: not numeric");
        return numeric_;
    }
    std::vector<std::complex<double>> numeric_values() && {
        if (is_exact()) throw std::logic_error("spectrum: not numeric");
        return std::move(numeric_);
    }

    // Values as reals regardless of variant (imaginary parts of a symmetric
    // adjacency are numerical noise).
    std::vector<double> real_values() const {
        std::vector<double> out;
        out.reserve(n_);
        if (is_exact())
            for (int64 v : exact_) out.push_back(static_cast<double>(v));
        else
            for (const auto& z : numeric_) out.push_back(z.real());
        return out;
    }

    // View in non-increasing order of modulus (ties broken by value); the
    // stored order is always the character index j.
    Spectrum sorted_by_modulus() const {
        Spectrum s = *this;
        if (is_exact()) {
            std::sort(s.exact_.begin(), s.exact_.end(), [](int64 a, int64 b) {
                auto ka = std::make_pair(std::abs(a), a);
                auto kb = std::make_pair(std::abs(b), b);
                return ka > kb;
            });
        } else {
            std::sort(s.numeric_.begin(), s.numeric_.end(),
                      [](const std::complex<double>& a, const std::complex<double>& b) {
                          auto ka = std::make_tuple(std::abs(a), a.real(), a.imag());
                          auto kb = std::make_tuple(std::abs(b), b.real(), b.imag());
                          return ka > kb;
                      });
        }
        return s;
    }

  private:
    int64 n_ = 0;
    Variant variant_ = Variant::exact;
    std::vector<int64> exact_;
    std::vector<std::complex<double>> numeric_;
};

// lambda_j = sum over the symbol of omega_n^(j*s). The exponent is reduced
// mod n before calling into the trig routines so angles stay small.
inline Spectrum eigenvalues_numeric(const CirculantGraph& G) {
    const int64 n = G.order();
    std::vector<std::complex<double>> values(n);
    const double step = 2.0 * std::numbers::pi / static_cast<double>(n);
    for (int64 j = 0; j < n; ++j) {
        std::complex<double> sum = 0.0;
        for (int64 s : G.symbol.members)
            sum += std::polar(1.0, step * static_cast<double>((j * s) % n));
        values[j] = sum;
    }
    return Spectrum::from_numeric(n, std::move(values));
}

// Exact integer spectrum of the integral graph described by D:
// lambda_j = sum_{f in F} c_f(j). Ramanujan sums are tabulated per divisor
// of f since c_f(j) only depends on gcd(f, j).
inline Spectrum eigenvalues_exact(const DivisorSet& D) {
    const int64 n = D.n;
    std::vector<int64> values(n, 0);
    for (int64 f : D.f_values()) {
        std::vector<int64> divs = divisors(f);
        std::vector<int64> table(divs.size());
        for (std::size_t i = 0; i < divs.size(); ++i)
            table[i] = ramanujan_sum(f, divs[i]);
        for (int64 j = 0; j < n; ++j) {
            const int64 g = std::gcd(f, j);
            const auto it = std::lower_bound(divs.begin(), divs.end(), g);
            values[j] += table[it - divs.begin()];
        }
    }
    return Spectrum::from_exact(n, std::move(values));
}

// Cluster tolerance for telling numeric eigenvalues apart.
inline constexpr double kDistinctTol = 1e-7;

inline int64 distinct_eigenvalue_count(const Spectrum& spec) {
    if (spec.is_exact()) {
        std::vector<int64> v = spec.exact_values();
        std::sort(v.begin(), v.end());
        v.erase(std::unique(v.begin(), v.end()), v.end());
        return static_cast<int64>(v.size());
    }
    std::vector<double> v = spec.real_values();
    std::sort(v.begin(), v.end());
    int64 count = v.empty() ? 0 : 1;
    for (std::size_t i = 1; i < v.size(); ++i)
        if (v[i] - v[i - 1] > kDistinctTol) ++count;
    return count;
}

// Result of recognizing a double as a small rational via its continued
// fraction expansion.
struct RationalApprox {
    bool ok = false;
    int64 p = 0;
    int64 q = 1;
    double residual = 0.0;
};

// Expand x as a continued fraction; accept once the remainder collapses
// (next coefficient would exceed 1e8), fail once the convergent denominator
// passes max_denominator without collapsing. A genuine small rational
// read from double data collapses almost immediately; quadratic and higher
// algebraic irrationals keep producing modest coefficients until the
// denominator budget is exhausted.
inline RationalApprox reconstruct_rational(double x, int64 max_denominator) {
    constexpr double kCollapse = 1e-8;
    constexpr int kMaxTerms = 64;
    int64 h_prev = 0, h = 1;  // numerators of convergents
    int64 k_prev = 1, k = 0;  // denominators
    double y = x;
    for (int term = 0; term < kMaxTerms; ++term) {
        const double a_floor = std::floor(y);
        if (std::abs(a_floor) > 4e18) break;
        const int64 a = static_cast<int64>(a_floor);
        int64 h_next, k_next;
        if (__builtin_mul_overflow(a, h, &h_next) ||
            __builtin_add_overflow(h_next, h_prev, &h_next) ||
            __builtin_mul_overflow(a, k, &k_next) ||
            __builtin_add_overflow(k_next, k_prev, &k_next))
            break;
        h_prev = h; h = h_next;
        k_prev = k; k = k_next;
        if (k > max_denominator) break;
        const double frac = y - a_floor;
        if (frac < kCollapse) {
            RationalApprox r;
            r.p = h;
            r.q = k;
            r.residual = std::abs(x - static_cast<double>(h) / static_cast<double>(k));
            r.ok = true;
            return r;
        }
        y = 1.0 / frac;
    }
    return {};
}

// Trivially satisfied direction of the ratio condition: differences of an
// integer spectrum have rational quotients.
inline bool ratio_condition(const Spectrum& spec) {
    if (!spec.is_exact())
        throw std::invalid_argument("ratio_condition: exact spectrum required");
    return true;
}

// Heuristic converse probe: true iff every sampled eigenvalue-difference
// ratio (lambda_i - lambda_j) / (lambda_r - lambda_s) is recognized as a
// rational with denominator <= max_denominator and residual < 1e-6. All
// quadruples are scanned for n <= 16; above that a seeded sample of 10^4
// quadruples is used. Requires at least two distinct eigenvalues, otherwise
// no valid denominator pair exists. This is a numeric heuristic, not a
// proof of (ir)rationality.
inline bool ratio_condition_numeric(const Spectrum& spec, int64 max_denominator,
                                    std::uint64_t seed = 0) {
    if (spec.is_exact())
        throw std::invalid_argument("ratio_condition_numeric: numeric spectrum required");
    const std::vector<double> v = spec.real_values();
    const int64 n = spec.n();
    if (distinct_eigenvalue_count(spec) < 2)
        throw std::invalid_argument(
            "ratio_condition_numeric: need at least two distinct eigenvalues");
    constexpr double kResidualTol = 1e-6;

    auto ratio_ok = [&](int64 i, int64 j, int64 r, int64 s) {
        const double den = v[r] - v[s];
        if (std::abs(den) <= kDistinctTol) return true;  // not a valid quadruple
        const double x = (v[i] - v[j]) / den;
        const RationalApprox ra = reconstruct_rational(x, max_denominator);
        return ra.ok && ra.residual < kResidualTol;
    };

    if (n <= 16) {
        for (int64 i = 0; i < n; ++i)
            for (int64 j = i + 1; j < n; ++j)
                for (int64 r = 0; r < n; ++r)
                    for (int64 s = r + 1; s < n; ++s)
                        if (!ratio_ok(i, j, r, s)) return false;
        return true;
    }

    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<int64> pick(0, n - 1);
    constexpr int kSamples = 10000;
    for (int sample = 0; sample < kSamples; ++sample) {
        int64 i = pick(rng), j = pick(rng), r = pick(rng), s = pick(rng);
        if (i == j || r == s) continue;
        if (!ratio_ok(i, j, r, s)) return false;
    }
    return true;
}

// A connected k-regular graph is bipartite iff -k is an eigenvalue.
inline bool is_bipartite_spectral(const Spectrum& spec, int64 k) {
    if (spec.is_exact()) {
        for (int64 v : spec.exact_values())
            if (v == -k) return true;
        return false;
    }
    constexpr double kTol = 1e-9;
    for (const auto& z : spec.numeric_values())
        if (std::abs(z.real() + static_cast<double>(k)) < kTol &&
            std::abs(z.imag()) < kTol)
            return true;
    return false;
}

// Divisor-set bipartiteness criterion: the graph is bipartite iff n is even
// and some residue l0 makes 2*l0/f an odd integer for every f in F.
// Returns the smallest such l0.
inline std::optional<int64> bipartite_divisor_test(const DivisorSet& D) {
    if (D.n % 2 != 0) return std::nullopt;
    const std::vector<int64> fs = D.f_values();
    for (int64 l0 = 0; l0 < D.n; ++l0) {
        bool all_odd = true;
        for (int64 f : fs) {
            const int64 twice = 2 * l0;
            if (twice % f != 0 || (twice / f) % 2 == 0) {
                all_odd = false;
                break;
            }
        }
        if (all_odd) return l0;
    }
    return std::nullopt;
}

}  // namespace circulant
