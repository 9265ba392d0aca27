#pragma once

// Circulant graphs G(n;S) on the residues 0..n-1, with an edge {u,v}
// whenever (u-v) mod n lies in the symbol S. The symbol is closed under
// negation mod n, so the graph is undirected. Integral circulants are
// exactly the graphs whose symbol is a union of gcd classes
// G_n(d) = {k : gcd(k,n) = d}; such a graph is described by the set D of
// class labels d | n, d <= n/2.

#include <optional>
#include <queue>
#include <string>
#include <vector>

#include "circulant/numtheory.hpp"

namespace circulant {

// Connection set of a circulant graph: sorted residues in [1, n-1] with
// s present iff n-s present.
struct SymbolSet {
    int64 n = 1;
    std::vector<int64> members;

    static SymbolSet create(int64 n, std::vector<int64> members) {
        if (n < 1) throw std::invalid_argument("symbol: modulus must be >= 1");
        std::sort(members.begin(), members.end());
        members.erase(std::unique(members.begin(), members.end()), members.end());
        for (int64 s : members) {
            if (s < 1 || s > n - 1)
                throw std::invalid_argument("symbol: element " + std::to_string(s) +
                                            " outside [1, " + std::to_string(n - 1) + "]");
        }
        SymbolSet sym{n, std::move(members)};
        for (int64 s : sym.members) {
            if (!sym.contains(n - s))
                throw std::invalid_argument("symbol not closed under negation: " +
                                            std::to_string(s) + " present, " +
                                            std::to_string(n - s) + " absent mod " +
                                            std::to_string(n));
        }
        return sym;
    }

    bool contains(int64 s) const {
        return std::binary_search(members.begin(), members.end(), s);
    }
    int64 size() const { return static_cast<int64>(members.size()); }
    bool operator==(const SymbolSet&) const = default;
};

struct CirculantGraph {
    SymbolSet symbol;

    static CirculantGraph create(int64 n, std::vector<int64> symbol_members) {
        return CirculantGraph{SymbolSet::create(n, std::move(symbol_members))};
    }

    int64 order() const { return symbol.n; }
    int64 degree() const { return symbol.size(); }
    bool operator==(const CirculantGraph&) const = default;
};

// Set of divisors d of n with d <= n/2; the canonical description of an
// integral circulant graph.
struct DivisorSet {
    int64 n = 1;
    std::vector<int64> members;

    static DivisorSet create(int64 n, std::vector<int64> members) {
        if (n < 1) throw std::invalid_argument("divisor set: modulus must be >= 1");
        std::sort(members.begin(), members.end());
        members.erase(std::unique(members.begin(), members.end()), members.end());
        for (int64 d : members) {
            if (d < 1 || n % d != 0)
                throw std::invalid_argument("divisor set: " + std::to_string(d) +
                                            " does not divide " + std::to_string(n));
            if (2 * d > n)
                throw std::invalid_argument("divisor set: " + std::to_string(d) +
                                            " exceeds n/2 for n = " + std::to_string(n));
        }
        return DivisorSet{n, std::move(members)};
    }

    // Dual view F = {n/d : d in D}, ascending; the eigenvalue formula sums
    // over F.
    std::vector<int64> f_values() const {
        std::vector<int64> fs;
        fs.reserve(members.size());
        for (int64 d : members) fs.push_back(n / d);
        std::sort(fs.begin(), fs.end());
        return fs;
    }

    // Degree of the described graph: sum of phi(n/d) over d in D.
    int64 degree() const {
        int64 k = 0;
        for (int64 d : members) k += euler_phi(n / d);
        return k;
    }

    int64 size() const { return static_cast<int64>(members.size()); }
    bool operator==(const DivisorSet&) const = default;
    bool operator<(const DivisorSet& other) const {
        return members < other.members;
    }
};

// G_n(d) = {k in [1, n-1] : gcd(k, n) = d}; has phi(n/d) elements.
inline SymbolSet gcd_class(int64 n, int64 d) {
    if (n < 2) throw std::invalid_argument("gcd_class: need n >= 2");
    if (d < 1 || n % d != 0)
        throw std::invalid_argument("gcd_class: " + std::to_string(d) +
                                    " does not divide " + std::to_string(n));
    if (2 * d > n)
        throw std::invalid_argument("gcd_class: need d <= n/2");
    std::vector<int64> members;
    for (int64 m = 1; m * d <= n - 1; ++m)
        if (std::gcd(m, n / d) == 1) members.push_back(m * d);
    return SymbolSet::create(n, std::move(members));
}

// Symbol = union of the gcd classes named by D (disjoint by construction).
inline CirculantGraph from_divisor_set(const DivisorSet& D) {
    std::vector<int64> members;
    for (int64 d : D.members) {
        SymbolSet cls = gcd_class(D.n, d);
        members.insert(members.end(), cls.members.begin(), cls.members.end());
    }
    return CirculantGraph::create(D.n, std::move(members));
}

// If the symbol is exactly a union of full gcd classes, return the unique
// witnessing D; otherwise nullopt. Every s lands in the class labelled
// gcd(s,n), so the union of the touched classes covers S; equality holds
// iff the class sizes add up to #S.
inline std::optional<DivisorSet> integrality_decomposition(const CirculantGraph& G) {
    const int64 n = G.order();
    std::vector<int64> labels;
    for (int64 s : G.symbol.members) labels.push_back(std::gcd(s, n));
    std::sort(labels.begin(), labels.end());
    labels.erase(std::unique(labels.begin(), labels.end()), labels.end());
    int64 covered = 0;
    for (int64 d : labels) covered += euler_phi(n / d);
    if (covered != G.degree()) return std::nullopt;
    return DivisorSet::create(n, std::move(labels));
}

// gcd criterion; a one-vertex graph counts as connected.
inline bool is_connected(const CirculantGraph& G) {
    return gcd_all(G.symbol.members, G.order()) == 1;
}

// Breadth-first 2-coloring over every component. An edgeless graph is
// bipartite under the usual convention.
inline bool is_bipartite_bfs(const CirculantGraph& G) {
    const int64 n = G.order();
    std::vector<int> color(n, -1);
    std::queue<int64> queue;
    for (int64 start = 0; start < n; ++start) {
        if (color[start] != -1) continue;
        color[start] = 0;
        queue.push(start);
        while (!queue.empty()) {
            int64 u = queue.front();
            queue.pop();
            for (int64 s : G.symbol.members) {
                int64 v = (u + s) % n;
                if (color[v] == -1) {
                    color[v] = 1 - color[u];
                    queue.push(v);
                } else if (color[v] == color[u]) {
                    return false;
                }
            }
        }
    }
    return true;
}

// Row i of the adjacency matrix: row 0 cyclically shifted by i.
inline std::vector<bool> adjacency_row(const CirculantGraph& G, int64 i) {
    const int64 n = G.order();
    if (i < 0 || i >= n)
        throw std::invalid_argument("adjacency_row: index " + std::to_string(i) +
                                    " out of range for n = " + std::to_string(n));
    std::vector<bool> row(n, false);
    for (int64 s : G.symbol.members) row[(i + s) % n] = true;
    return row;
}

}  // namespace circulant
