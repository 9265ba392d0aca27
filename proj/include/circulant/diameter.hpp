#pragma once

// Diameter of circulant graphs two ways: iterated sumsets of T = S u {0}
// (the diameter is the least i with i*T covering the whole residue ring)
// and a breadth-first search from vertex 0, which equals the diameter by
// vertex transitivity. Also the additive-generator number t of a divisor
// set, the bracketing t <= diam <= 2t+1, and constructors for the two
// extremal families that meet the trivial bounds.

#include <bit>

#include "circulant/graph.hpp"

namespace circulant {

// Subset of the residue ring Z_n held as a bitset.
struct ResidueSet {
    int64 n = 1;
    std::vector<std::uint64_t> words;

    explicit ResidueSet(int64 modulus = 1)
        : n(modulus), words((modulus + 63) / 64, 0) {
        if (modulus < 1) throw std::invalid_argument("residue set: modulus must be >= 1");
    }

    static ResidueSet from_members(int64 n, const std::vector<int64>& members) {
        ResidueSet r(n);
        for (int64 m : members) r.insert(((m % n) + n) % n);
        return r;
    }

    void insert(int64 x) { words[x >> 6] |= std::uint64_t(1) << (x & 63); }
    bool contains(int64 x) const { return (words[x >> 6] >> (x & 63)) & 1; }

    int64 count() const {
        int64 c = 0;
        for (std::uint64_t w : words) c += std::popcount(w);
        return c;
    }
    bool is_full() const { return count() == n; }

    std::vector<int64> members() const {
        std::vector<int64> out;
        for (std::size_t wi = 0; wi < words.size(); ++wi) {
            std::uint64_t w = words[wi];
            while (w) {
                out.push_back(static_cast<int64>(wi) * 64 + std::countr_zero(w));
                w &= w - 1;
            }
        }
        return out;
    }

    bool operator==(const ResidueSet&) const = default;
};

// {(x + y) mod n : x in X, y in Y}. The smaller operand supplies the shift
// amounts, the larger is swept once per shift.
inline ResidueSet sumset(const ResidueSet& X, const ResidueSet& Y) {
    if (X.n != Y.n) throw std::invalid_argument("sumset: modulus mismatch");
    const int64 n = X.n;
    const ResidueSet& shifts = X.count() <= Y.count() ? X : Y;
    const ResidueSet& base = X.count() <= Y.count() ? Y : X;
    ResidueSet out(n);
    const std::vector<int64> base_members = base.members();
    for (int64 s : shifts.members())
        for (int64 b : base_members) {
            int64 v = s + b;
            if (v >= n) v -= n;
            out.insert(v);
        }
    return out;
}

// Diameter value: a nonnegative integer, or infinite for a disconnected
// graph.
struct Diameter {
    bool finite = true;
    int64 value = 0;

    static Diameter of(int64 v) { return {true, v}; }
    static Diameter infinite() { return {false, 0}; }
    bool operator==(const Diameter&) const = default;
};

// Least i such that i*T = Z_n for T = S u {0}; infinite once the iterates
// hit a fixed point short of the full ring.
inline Diameter diameter_sumset(const CirculantGraph& G) {
    const int64 n = G.order();
    if (n == 1) return Diameter::of(0);
    ResidueSet T = ResidueSet::from_members(n, G.symbol.members);
    T.insert(0);
    ResidueSet cover = T;
    int64 i = 1;
    while (!cover.is_full()) {
        ResidueSet next = sumset(cover, T);
        if (next == cover) return Diameter::infinite();
        cover = std::move(next);
        ++i;
    }
    return Diameter::of(i);
}

// Eccentricity of vertex 0 by BFS; equals the diameter because circulant
// graphs are vertex transitive.
inline Diameter diameter_bfs(const CirculantGraph& G) {
    const int64 n = G.order();
    if (n == 1) return Diameter::of(0);
    std::vector<int32_t> dist(n, -1);
    std::vector<int64> frontier{0}, next;
    dist[0] = 0;
    int64 reached = 1, depth = 0;
    while (!frontier.empty()) {
        next.clear();
        ++depth;
        for (int64 u : frontier)
            for (int64 s : G.symbol.members) {
                int64 v = u + s;
                if (v >= n) v -= n;
                if (dist[v] < 0) {
                    dist[v] = static_cast<int32_t>(depth);
                    next.push_back(v);
                    ++reached;
                }
            }
        std::swap(frontier, next);
    }
    if (reached < n) return Diameter::infinite();
    return Diameter::of(depth - 1);
}

// Minimum size of a subset of D that generates Z_n additively, i.e. whose
// gcd together with n is 1. Exhaustive subset scan in increasing size;
// divisor sets are tiny at the orders this library targets.
inline int64 generator_number(const DivisorSet& D) {
    if (gcd_all(D.members, D.n) != 1)
        throw std::invalid_argument("generator_number: divisor set does not generate Z_n");
    const int64 m = D.size();
    for (int64 size = 1; size <= m; ++size) {
        std::vector<int64> idx(size);
        for (int64 i = 0; i < size; ++i) idx[i] = i;
        while (true) {
            int64 g = D.n;
            for (int64 i : idx) g = std::gcd(g, D.members[i]);
            if (g == 1) return size;
            int64 pos = size - 1;
            while (pos >= 0 && idx[pos] == m - size + pos) --pos;
            if (pos < 0) break;
            ++idx[pos];
            for (int64 i = pos + 1; i < size; ++i) idx[i] = idx[i - 1] + 1;
        }
    }
    return m;  // unreachable: gcd of the whole set is 1
}

struct DiameterReport {
    int64 n = 1;
    DivisorSet divisor_set;
    Diameter diameter;
    int64 generator_number_t = 0;
    bool lower_ok = false;  // t <= diam
    bool upper_ok = false;  // diam <= 2t + 1
};

// Evaluate t <= diam <= 2t+1 for the graph of D. Both flags hold for every
// valid input; a false flag signals a bug or a counterexample.
inline DiameterReport check_diameter_bounds(const DivisorSet& D) {
    DiameterReport report;
    report.n = D.n;
    report.divisor_set = D;
    report.generator_number_t = generator_number(D);
    report.diameter = diameter_sumset(from_divisor_set(D));
    const int64 t = report.generator_number_t;
    report.lower_ok = report.diameter.finite && t <= report.diameter.value;
    report.upper_ok = report.diameter.finite && report.diameter.value <= 2 * t + 1;
    return report;
}

namespace detail {
inline void require_distinct_odd_primes(const std::vector<int64>& primes) {
    for (int64 p : primes) {
        if (!is_prime(p))
            throw std::invalid_argument("family: " + std::to_string(p) + " is not prime");
        if (p % 2 == 0)
            throw std::invalid_argument("family: primes must be odd");
    }
    std::vector<int64> sorted = primes;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
        throw std::invalid_argument("family: primes must be distinct");
}
}  // namespace detail

// n = p_1 * ... * p_r with D = {p_1, ..., p_r}; for r >= 3 the graph has
// diameter exactly 2.
inline DivisorSet family_diam2(const std::vector<int64>& primes) {
    if (primes.size() < 3)
        throw std::invalid_argument("family diam2 requires r >= 3 primes");
    detail::require_distinct_odd_primes(primes);
    int64 n = 1;
    for (int64 p : primes) n = checked_mul(n, p);
    return DivisorSet::create(n, primes);
}

// m = p_1 * ... * p_r, n = 2m^2, D = {(m/p_i)^2}; the graph has diameter
// exactly 2r+1.
inline DivisorSet family_diam_2r_plus_1(const std::vector<int64>& primes) {
    if (primes.empty())
        throw std::invalid_argument("family diam2rp1 requires at least one prime");
    detail::require_distinct_odd_primes(primes);
    int64 m = 1;
    for (int64 p : primes) m = checked_mul(m, p);
    const int64 n = checked_mul(2, checked_mul(m, m));
    std::vector<int64> members;
    for (int64 p : primes) members.push_back(checked_mul(m / p, m / p));
    return DivisorSet::create(n, std::move(members));
}

}  // namespace circulant
