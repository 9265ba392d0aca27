#pragma once

// Continuous-time quantum walk U(t) = e^(-iAt) on a circulant graph, in the
// n-dimensional single-excitation picture. For integral graphs every phase
// e^(-i*lambda*t) at a time t = pi*p/q is a root of unity, so periodicity
// and perfect-state-transfer certificates reduce to integer congruences;
// floating point appears only in reported moduli and cross-checks.

#include "circulant/extremal.hpp"
#include "circulant/spectral.hpp"

namespace circulant {

// Angle t = pi * p / q in lowest terms, q >= 1.
struct RationalAngle {
    int64 p = 0;
    int64 q = 1;

    static RationalAngle of(int64 p, int64 q) {
        if (q == 0) throw std::invalid_argument("rational angle: zero denominator");
        if (q < 0) { p = -p; q = -q; }
        const int64 g = std::gcd(p < 0 ? -p : p, q);
        if (g > 1) { p /= g; q /= g; }
        return {p, q};
    }

    double radians() const {
        return std::numbers::pi * static_cast<double>(p) / static_cast<double>(q);
    }
    bool operator==(const RationalAngle&) const = default;
};

struct PstWitness {
    int64 a = 0;
    int64 b = 0;
    RationalAngle time;
    bool exact = false;
    double fidelity = 0.0;
};

struct PeriodResult {
    RationalAngle angle;      // minimal t > 0 with U(t) a global phase
    bool degenerate = false;  // all eigenvalues equal; 2*pi by convention
};

struct EvolutionReport {
    int64 n = 1;
    std::optional<DivisorSet> divisor_set;
    bool periodic = false;
    std::optional<RationalAngle> period;
    std::optional<PstWitness> pst;
};

struct ComplexMatrix {
    int64 n = 0;
    std::vector<std::complex<double>> data;

    explicit ComplexMatrix(int64 size = 0) : n(size), data(size * size) {}
    std::complex<double>& at(int64 i, int64 j) { return data[i * n + j]; }
    const std::complex<double>& at(int64 i, int64 j) const { return data[i * n + j]; }
};

inline constexpr int64 kDenseMatrixCeiling = 512;

// U(t) from the spectral decomposition with eigenvectors
// v_j = [1, w^j, ..., w^(j(n-1))]: entry (a,b) is
// (1/n) sum_j e^(-i*lambda_j*t) * w^(j(a-b)), so the matrix is circulant
// and one row profile fills it.
inline ComplexMatrix evolution_operator(const CirculantGraph& G, double t) {
    const int64 n = G.order();
    if (n > kDenseMatrixCeiling)
        throw std::invalid_argument("evolution_operator: dense ceiling is n <= 512");
    const std::vector<double> lambda = eigenvalues_numeric(G).real_values();
    const double step = 2.0 * std::numbers::pi / static_cast<double>(n);
    std::vector<std::complex<double>> profile(n);
    for (int64 m = 0; m < n; ++m) {
        std::complex<double> sum = 0.0;
        for (int64 j = 0; j < n; ++j)
            sum += std::polar(1.0, step * static_cast<double>((j * m) % n) - lambda[j] * t);
        profile[m] = sum / static_cast<double>(n);
    }
    ComplexMatrix U(n);
    for (int64 a = 0; a < n; ++a)
        for (int64 b = 0; b < n; ++b)
            U.at(a, b) = profile[((a - b) % n + n) % n];
    return U;
}

namespace detail {

inline int64 mod_reduce(__int128 value, int64 modulus) {
    __int128 r = value % modulus;
    if (r < 0) r += modulus;
    return static_cast<int64>(r);
}

// Term l of <a|U(pi*p/q)|b> has phase 2*pi*r_l/M with M = lcm(2q, n) and
// r_l = (-lambda_l * p * M/(2q) + l * (a-b) * M/n) mod M.
struct PhaseGrid {
    int64 M = 1;
    int64 lambda_scale = 1;  // M / (2q)
    int64 index_scale = 1;   // M / n

    PhaseGrid(int64 n, const RationalAngle& t) {
        M = lcm_all({2 * t.q, n});
        lambda_scale = M / (2 * t.q);
        index_scale = M / n;
    }

    int64 phase_index(int64 lambda, int64 ell, int64 diff, int64 p) const {
        const __int128 value = -static_cast<__int128>(lambda) * p * lambda_scale +
                               static_cast<__int128>(ell) * diff * index_scale;
        return mod_reduce(value, M);
    }
};

// All n terms share one phase <=> the amplitude has modulus exactly 1.
inline bool all_phases_equal(const std::vector<int64>& lambda, int64 n, int64 diff,
                             const RationalAngle& t) {
    const PhaseGrid grid(n, t);
    const int64 first = grid.phase_index(lambda[0], 0, diff, t.p);
    for (int64 ell = 1; ell < n; ++ell)
        if (grid.phase_index(lambda[ell], ell, diff, t.p) != first) return false;
    return true;
}

// gcd of all differences lambda_j - lambda_0; zero when the spectrum is
// constant.
inline int64 eigen_diff_gcd(const std::vector<int64>& lambda) {
    int64 g = 0;
    for (int64 v : lambda) g = std::gcd(g, std::abs(v - lambda[0]));
    return g;
}

}  // namespace detail

struct TransferAmplitude {
    bool unit_modulus = false;  // exact certificate: all term phases equal
    double modulus = 0.0;       // floating-point |<a|U(t)|b>| for reporting
};

// |<a|e^(-iAt)|b>| at t = pi*p/q for the integral graph of D, decided by
// exact integer phase comparison.
inline TransferAmplitude transfer_amplitude_exact(const DivisorSet& D, int64 a, int64 b,
                                                  const RationalAngle& t) {
    const int64 n = D.n;
    if (a < 0 || a >= n || b < 0 || b >= n)
        throw std::invalid_argument("transfer_amplitude_exact: vertex out of range");
    const std::vector<int64> lambda = eigenvalues_exact(D).exact_values();
    const int64 diff = ((a - b) % n + n) % n;
    const detail::PhaseGrid grid(n, t);
    TransferAmplitude out;
    out.unit_modulus = detail::all_phases_equal(lambda, n, diff, t);
    std::complex<double> sum = 0.0;
    const double step = 2.0 * std::numbers::pi / static_cast<double>(grid.M);
    for (int64 ell = 0; ell < n; ++ell)
        sum += std::polar(1.0, step * static_cast<double>(
                                    grid.phase_index(lambda[ell], ell, diff, t.p)));
    out.modulus = std::abs(sum) / static_cast<double>(n);
    return out;
}

// Minimal t > 0 with all e^(-i*lambda_j*t) equal: t = 2*pi/g for g the gcd
// of the eigenvalue differences. A constant spectrum has no such minimal t;
// it is reported as 2*pi and flagged degenerate.
inline PeriodResult period(const DivisorSet& D) {
    const std::vector<int64> lambda = eigenvalues_exact(D).exact_values();
    const int64 g = detail::eigen_diff_gcd(lambda);
    if (g == 0) return {RationalAngle::of(2, 1), true};
    return {RationalAngle::of(2, g), false};
}

// Exact certificate that U(t) = e^(i*theta) * I.
inline bool is_global_phase_at(const DivisorSet& D, const RationalAngle& t) {
    const std::vector<int64> lambda = eigenvalues_exact(D).exact_values();
    const int64 two_q = 2 * t.q;
    for (int64 v : lambda)
        if (detail::mod_reduce(static_cast<__int128>(v - lambda[0]) * t.p, two_q) != 0)
            return false;
    return true;
}

// Exact certificate that U(t) = I.
inline bool is_identity_at(const DivisorSet& D, const RationalAngle& t) {
    const std::vector<int64> lambda = eigenvalues_exact(D).exact_values();
    const int64 two_q = 2 * t.q;
    for (int64 v : lambda)
        if (detail::mod_reduce(static_cast<__int128>(v) * t.p, two_q) != 0) return false;
    return true;
}

// Periodicity of the walk on an arbitrary circulant graph is equivalent to
// integrality of the graph, so the decision procedure is the gcd-class
// decomposition.
inline bool is_periodic(const CirculantGraph& G) {
    return integrality_decomposition(G).has_value();
}

// Exhaustive scan for perfect state transfer from vertex 0 (vertex
// transitivity makes a = 0 general) at times t = pi*p/q with q <= max_q and
// t inside one period. Returns the first witness in (b, q, p) lexicographic
// order. The denominator bound is the completeness horizon of the search:
// a PST time of an integer spectrum is always a rational multiple of pi,
// but its denominator may exceed max_q.
inline std::optional<PstWitness> pst_search(const DivisorSet& D, int64 max_q) {
    if (max_q < 1) throw std::invalid_argument("pst_search: need max_q >= 1");
    const int64 n = D.n;
    const std::vector<int64> lambda = eigenvalues_exact(D).exact_values();
    int64 g = detail::eigen_diff_gcd(lambda);
    if (g == 0) g = 1;
    for (int64 b = 1; b < n; ++b)
        for (int64 q = 1; q <= max_q; ++q)
            for (int64 p = 1; p * g < 2 * q; ++p) {
                if (std::gcd(p, q) != 1) continue;  // same time as a smaller q
                const RationalAngle t = RationalAngle{p, q};
                if (detail::all_phases_equal(lambda, n, b, t))
                    return PstWitness{0, b, t, true, 1.0};
            }
    return std::nullopt;
}

// Strict even-order phase pattern: e^(i*lambda_l*t) = (-1)^l for every l.
inline bool antipodal_criterion_strict(const DivisorSet& D, const RationalAngle& t) {
    if (D.n % 2 != 0)
        throw std::invalid_argument("antipodal_criterion: n must be even");
    const std::vector<int64> lambda = eigenvalues_exact(D).exact_values();
    for (int64 ell = 0; ell < D.n; ++ell) {
        const __int128 num = static_cast<__int128>(lambda[ell]) * t.p -
                             static_cast<__int128>(ell) * t.q;
        if (detail::mod_reduce(num, 2 * t.q) != 0) return false;
    }
    return true;
}

// Same pattern up to one global phase: all e^(i*lambda_l*t) * (-1)^l equal.
inline bool antipodal_criterion_relaxed(const DivisorSet& D, const RationalAngle& t) {
    if (D.n % 2 != 0)
        throw std::invalid_argument("antipodal_criterion: n must be even");
    const std::vector<int64> lambda = eigenvalues_exact(D).exact_values();
    const int64 two_q = 2 * t.q;
    int64 first = 0;
    for (int64 ell = 0; ell < D.n; ++ell) {
        const __int128 num = static_cast<__int128>(lambda[ell]) * t.p -
                             static_cast<__int128>(ell) * t.q;
        const int64 r = detail::mod_reduce(num, two_q);
        if (ell == 0)
            first = r;
        else if (r != first)
            return false;
    }
    return true;
}

struct NoPstReport {
    int64 n = 0;
    int64 graphs_checked = 0;
    bool pst_free = false;      // no witness found on any connected integral graph
    bool mechanism_ok = false;  // w^(l(a-b)) = +-1 for all l forces a = b
};

// Odd-order impossibility: every connected integral circulant of odd order
// n has no perfect state transfer. Searches each graph up to denominator
// 2n and verifies the phase obstruction behind the result.
inline NoPstReport no_pst_odd_check(int64 n) {
    if (n < 3 || n % 2 == 0)
        throw std::invalid_argument("no_pst_odd_check: need odd n >= 3");
    NoPstReport report;
    report.n = n;
    report.mechanism_ok = true;
    for (int64 diff = 1; diff < n && report.mechanism_ok; ++diff) {
        bool some_ell_escapes = false;
        for (int64 ell = 0; ell < n; ++ell) {
            const int64 twice = (2 * ell * diff) % (2 * n);
            if (twice != 0 && twice != n) {
                some_ell_escapes = true;
                break;
            }
        }
        report.mechanism_ok = some_ell_escapes;
    }
    report.pst_free = true;
    for (const DivisorSet& D : enumerate_integral(n)) {
        ++report.graphs_checked;
        if (pst_search(D, 2 * n)) report.pst_free = false;
    }
    return report;
}

}  // namespace circulant
