#pragma once

// Enumeration of connected integral circulant graphs of a given order and
// the extremal search for the largest order attainable at a fixed degree.

#include <functional>
#include <thread>

#include "circulant/graph.hpp"

namespace circulant {

// All nonempty D subsets of the divisors d | n, d <= n/2 whose graph is
// connected (gcd of D together with n is 1), in lexicographic member
// order.
inline std::vector<DivisorSet> enumerate_integral(int64 n) {
    if (n < 2) throw std::invalid_argument("enumerate_integral: need n >= 2");
    std::vector<int64> candidates;
    for (int64 d : divisors(n))
        if (2 * d <= n) candidates.push_back(d);
    std::vector<DivisorSet> out;
    std::vector<int64> current;
    std::function<void(std::size_t, int64)> walk = [&](std::size_t idx, int64 g) {
        if (!current.empty() && g == 1)
            out.push_back(DivisorSet::create(n, current));
        for (std::size_t i = idx; i < candidates.size(); ++i) {
            current.push_back(candidates[i]);
            walk(i + 1, std::gcd(g, candidates[i]));
            current.pop_back();
        }
    };
    walk(0, n);
    std::sort(out.begin(), out.end());
    return out;
}

struct ExtremalRecord {
    int64 degree_k = 0;
    int64 max_order = 0;
    DivisorSet witness;
    int64 cap = 0;  // search ceiling the record is valid under
};

namespace detail {

// Smallest-lexicographic connected D with degree exactly k at order n, if
// any. Candidates are restricted to classes no bigger than k and pruned by
// the remaining degree budget.
inline std::optional<DivisorSet> degree_witness(int64 n, int64 k) {
    std::vector<int64> candidates, sizes;
    for (int64 d : divisors(n)) {
        if (2 * d > n) continue;
        const int64 phi = euler_phi(n / d);
        if (phi <= k) {
            candidates.push_back(d);
            sizes.push_back(phi);
        }
    }
    std::vector<int64> current;
    std::optional<DivisorSet> found;
    std::function<void(std::size_t, int64, int64)> walk = [&](std::size_t idx, int64 degree,
                                                              int64 g) {
        if (found) return;  // first hit is lexicographically smallest
        if (degree == k && g == 1) {
            found = DivisorSet::create(n, current);
            return;
        }
        for (std::size_t i = idx; i < candidates.size() && !found; ++i) {
            if (degree + sizes[i] > k) continue;
            current.push_back(candidates[i]);
            walk(i + 1, degree + sizes[i], std::gcd(g, candidates[i]));
            current.pop_back();
        }
    };
    walk(0, 0, n);
    return found;
}

}  // namespace detail

// Largest n <= cap carrying a connected integral circulant graph of degree
// exactly k, with the lexicographically smallest witness D. The search is
// honest only up to the cap, which is therefore recorded in the result.
inline std::optional<ExtremalRecord> max_order_for_degree(int64 k, int64 cap) {
    if (k < 2) throw std::invalid_argument("max_order_for_degree: need k >= 2");
    if (cap < 2) throw std::invalid_argument("max_order_for_degree: need cap >= 2");
    for (int64 n = cap; n >= 2; --n) {
        if (auto witness = detail::degree_witness(n, k))
            return ExtremalRecord{k, n, std::move(*witness), cap};
    }
    return std::nullopt;
}

// One scan over all orders for every degree 2..kmax at once. With jobs > 1
// the order range is split across threads; the merge keeps the largest
// order per degree, so the result does not depend on scheduling.
inline std::vector<std::optional<ExtremalRecord>> extremal_table(int64 kmax, int64 cap,
                                                                 int jobs = 1) {
    if (kmax < 2) throw std::invalid_argument("extremal_table: need kmax >= 2");
    if (cap < 2) throw std::invalid_argument("extremal_table: need cap >= 2");

    auto scan_range = [kmax, cap](int64 hi, int64 lo,
                                  std::vector<std::optional<ExtremalRecord>>& table) {
        for (int64 n = hi; n >= lo; --n)
            for (int64 k = 2; k <= kmax; ++k) {
                if (table[k]) continue;  // a larger order already won
                if (auto witness = detail::degree_witness(n, k))
                    table[k] = ExtremalRecord{k, n, std::move(*witness), cap};
            }
    };

    std::vector<std::optional<ExtremalRecord>> table(kmax + 1);
    if (jobs <= 1) {
        scan_range(cap, 2, table);
    } else {
        const int64 span = cap - 1;
        const int64 workers = std::min<int64>(jobs, span);
        std::vector<std::vector<std::optional<ExtremalRecord>>> partial(
            workers, std::vector<std::optional<ExtremalRecord>>(kmax + 1));
        std::vector<std::thread> threads;
        for (int64 w = 0; w < workers; ++w) {
            const int64 lo = 2 + span * w / workers;
            const int64 hi = 1 + span * (w + 1) / workers;
            threads.emplace_back(scan_range, hi, lo, std::ref(partial[w]));
        }
        for (auto& th : threads) th.join();
        for (const auto& local : partial)
            for (int64 k = 2; k <= kmax; ++k)
                if (local[k] && (!table[k] || local[k]->max_order > table[k]->max_order))
                    table[k] = local[k];
    }
    table.erase(table.begin(), table.begin() + 2);
    return table;  // index 0 holds degree 2
}

}  // namespace circulant
