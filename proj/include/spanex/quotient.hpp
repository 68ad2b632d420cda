#pragma once

#include <numeric>
#include <vector>

#include "spanex/graph.hpp"
#include "spanex/spectral.hpp"
#include "spanex/unipoly.hpp"

namespace spanex {

// Ordered list of disjoint nonempty vertex cells covering V(G).
struct Partition {
    std::vector<VertexSet> cells;

    static Partition of(std::vector<VertexSet> cells) { return Partition{std::move(cells)}; }

    void validate(const Graph& g) const {
        std::uint64_t seen = 0;
        for (const auto& cell : cells) {
            if (cell.empty()) throw std::invalid_argument("partition cell is empty");
            if (cell.bits & seen) throw std::invalid_argument("partition cells overlap");
            seen |= cell.bits;
        }
        if (seen != VertexSet::full(g.order()).bits)
            throw std::invalid_argument("partition does not cover V(G)");
    }
};

// Cell-level matrix of average row sums of the partitioned adjacency matrix.
// Entries are kept as exact fractions (edge count from cell i into cell j,
// over |cell i|) and rounded to doubles only on demand.
struct QuotientMatrix {
    int m = 0;
    std::vector<long long> num;  // row-major, num[i*m+j] / den[i]
    std::vector<long long> den;  // den[i] = |cell i|
    Partition partition;

    double entry(int i, int j) const {
        return static_cast<double>(num[static_cast<std::size_t>(i) * m + j]) /
               static_cast<double>(den[static_cast<std::size_t>(i)]);
    }

    bool integral() const {
        for (int i = 0; i < m; ++i)
            for (int j = 0; j < m; ++j)
                if (num[static_cast<std::size_t>(i) * m + j] % den[static_cast<std::size_t>(i)] != 0)
                    return false;
        return true;
    }

    // Exact integer entries; only meaningful when integral() holds.
    std::vector<std::vector<long long>> int_entries() const {
        if (!integral()) throw std::logic_error("quotient matrix is not integral");
        std::vector<std::vector<long long>> out(static_cast<std::size_t>(m));
        for (int i = 0; i < m; ++i) {
            out[static_cast<std::size_t>(i)].resize(static_cast<std::size_t>(m));
            for (int j = 0; j < m; ++j)
                out[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] =
                    num[static_cast<std::size_t>(i) * m + j] / den[static_cast<std::size_t>(i)];
        }
        return out;
    }

    std::vector<double> real_entries() const {
        std::vector<double> out(static_cast<std::size_t>(m) * m);
        for (int i = 0; i < m; ++i)
            for (int j = 0; j < m; ++j) out[static_cast<std::size_t>(i) * m + j] = entry(i, j);
        return out;
    }
};

inline QuotientMatrix quotient_matrix(const Graph& g, const Partition& p) {
    p.validate(g);
    const int m = static_cast<int>(p.cells.size());
    QuotientMatrix q;
    q.m = m;
    q.partition = p;
    q.num.assign(static_cast<std::size_t>(m) * m, 0);
    q.den.resize(static_cast<std::size_t>(m));
    for (int i = 0; i < m; ++i) {
        q.den[static_cast<std::size_t>(i)] = p.cells[static_cast<std::size_t>(i)].size();
        for (int v : p.cells[static_cast<std::size_t>(i)].vertices())
            for (int j = 0; j < m; ++j)
                q.num[static_cast<std::size_t>(i) * m + j] +=
                    std::popcount(g.neighbors(v) & p.cells[static_cast<std::size_t>(j)].bits);
    }
    return q;
}

// True iff every vertex of cell i has the same number of neighbors in cell j,
// for every ordered cell pair (i, j).
inline bool is_equitable(const Graph& g, const Partition& p) {
    p.validate(g);
    const int m = static_cast<int>(p.cells.size());
    for (int i = 0; i < m; ++i) {
        const auto verts = p.cells[static_cast<std::size_t>(i)].vertices();
        for (int j = 0; j < m; ++j) {
            const std::uint64_t cell = p.cells[static_cast<std::size_t>(j)].bits;
            const int expect = std::popcount(g.neighbors(verts.front()) & cell);
            for (std::size_t t = 1; t < verts.size(); ++t)
                if (std::popcount(g.neighbors(verts[t]) & cell) != expect) return false;
        }
    }
    return true;
}

// Perron root of a nonnegative quotient matrix via power iteration with the
// deterministic all-ones start; for m <= 3 the value is cross-checked against
// the largest real root of the exact characteristic polynomial.
inline double largest_eigenvalue_of_quotient(const QuotientMatrix& q,
                                             double tol = kDefaultSpectralTol) {
    for (long long v : q.num)
        if (v < 0) throw std::invalid_argument("quotient matrix has a negative entry");
    const double rho = detail::perron_root_power(q.real_entries(), q.m, tol);
    if (q.m <= 3) {
        // scale rows to a common denominator D: the Perron root of D*B is D*rho
        long long d = 1;
        for (long long den : q.den) d = std::lcm(d, den);
        std::vector<std::vector<mpz_class>> scaled(static_cast<std::size_t>(q.m));
        double max_row_sum = 0.0;
        for (int i = 0; i < q.m; ++i) {
            double row_sum = 0.0;
            scaled[static_cast<std::size_t>(i)].resize(static_cast<std::size_t>(q.m));
            for (int j = 0; j < q.m; ++j) {
                scaled[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] =
                    static_cast<long>(q.num[static_cast<std::size_t>(i) * q.m + j] *
                                      (d / q.den[static_cast<std::size_t>(i)]));
                row_sum += q.entry(i, j);
            }
            max_row_sum = std::max(max_row_sum, row_sum);
        }
        if (max_row_sum > 0.0) {
            const double root =
                largest_real_root(char_poly_exact(scaled), d * max_row_sum + 1.0) / d;
            if (std::abs(root - rho) > 1e-8 * (1.0 + std::abs(rho)))
                throw ConvergenceError("quotient eigenvalue cross-check disagreement",
                                       std::min(root, rho), std::max(root, rho));
        }
    }
    return rho;
}

}  // namespace spanex
