#pragma once

#include <algorithm>
#include <cmath>
#include <vector>

#include "spanex/graph.hpp"

namespace spanex {

inline constexpr double kDefaultSpectralTol = 1e-10;
inline constexpr int kJacobiMaxSweeps = 100;

struct Spectrum {
    std::vector<double> eigenvalues;  // descending
    double tol_achieved = 0.0;        // final off-diagonal Frobenius norm
};

namespace detail {

inline double off_diagonal_norm(const std::vector<double>& a, int n) {
    double s = 0.0;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            const double x = a[static_cast<std::size_t>(i) * n + j];
            s += 2.0 * x * x;
        }
    return std::sqrt(s);
}

// Cyclic Jacobi sweeps on a symmetric matrix (row-major, modified in place).
// Returns the off-diagonal norm reached; diagonal then holds the eigenvalues.
inline double jacobi_eigenvalues(std::vector<double>& a, int n, double tol, int max_sweeps) {
    auto at = [&](int i, int j) -> double& { return a[static_cast<std::size_t>(i) * n + j]; };
    for (int sweep = 0; sweep < max_sweeps; ++sweep) {
        const double off = off_diagonal_norm(a, n);
        if (off < tol) return off;
        for (int p = 0; p < n - 1; ++p) {
            for (int q = p + 1; q < n; ++q) {
                const double apq = at(p, q);
                if (apq == 0.0) continue;
                const double theta = (at(q, q) - at(p, p)) / (2.0 * apq);
                double t = 1.0 / (std::abs(theta) + std::sqrt(theta * theta + 1.0));
                if (theta < 0.0) t = -t;
                const double c = 1.0 / std::sqrt(t * t + 1.0);
                const double s = t * c;
                const double tau = s / (1.0 + c);
                const double h = t * apq;
                at(p, p) -= h;
                at(q, q) += h;
                at(p, q) = at(q, p) = 0.0;
                for (int r = 0; r < n; ++r) {
                    if (r == p || r == q) continue;
                    const double arp = at(r, p);
                    const double arq = at(r, q);
                    at(r, p) = arp - s * (arq + tau * arp);
                    at(p, r) = at(r, p);
                    at(r, q) = arq + s * (arp - tau * arq);
                    at(q, r) = at(r, q);
                }
            }
        }
    }
    const double off = off_diagonal_norm(a, n);
    if (off < tol) return off;
    // best bracket for the largest eigenvalue: diagonal max +- off
    double dmax = at(0, 0);
    for (int i = 1; i < n; ++i) dmax = std::max(dmax, at(i, i));
    throw ConvergenceError("Jacobi sweeps did not converge", dmax - off, dmax + off);
}

// Collatz-Wielandt power iteration for the Perron root of a nonnegative
// square matrix, run on B+I so the iteration is primitive for irreducible B.
// The all-ones start vector is positive, hence not orthogonal to the Perron
// vector. Returns the root once the ratio bracket is tighter than tol.
inline double perron_root_power(const std::vector<double>& b, int n, double tol,
                                long long max_iters = 2'000'000) {
    if (n == 1) return b[0];
    std::vector<double> x(static_cast<std::size_t>(n), 1.0);
    std::vector<double> y(static_cast<std::size_t>(n), 0.0);
    double lo = 0.0, hi = 0.0;
    for (long long it = 0; it < max_iters; ++it) {
        for (int i = 0; i < n; ++i) {
            double s = x[static_cast<std::size_t>(i)];  // the +I shift
            const double* row = &b[static_cast<std::size_t>(i) * n];
            for (int j = 0; j < n; ++j) s += row[j] * x[static_cast<std::size_t>(j)];
            y[static_cast<std::size_t>(i)] = s;
        }
        lo = y[0] / x[0];
        hi = lo;
        double ymax = 0.0;
        for (int i = 0; i < n; ++i) {
            const double r = y[static_cast<std::size_t>(i)] / x[static_cast<std::size_t>(i)];
            lo = std::min(lo, r);
            hi = std::max(hi, r);
            ymax = std::max(ymax, y[static_cast<std::size_t>(i)]);
        }
        if (hi - lo < tol) return (lo + hi) / 2.0 - 1.0;
        for (int i = 0; i < n; ++i) x[static_cast<std::size_t>(i)] = y[static_cast<std::size_t>(i)] / ymax;
    }
    throw ConvergenceError("power iteration did not converge", lo - 1.0, hi - 1.0);
}

}  // namespace detail

inline Spectrum adjacency_spectrum(const Graph& g, double tol = kDefaultSpectralTol) {
    if (g.order() < 1) throw std::invalid_argument("spectrum requires order >= 1");
    if (tol <= 0.0) throw std::invalid_argument("tolerance must be positive");
    std::vector<double> a = g.adjacency_matrix();
    const int n = g.order();
    Spectrum sp;
    sp.tol_achieved = detail::jacobi_eigenvalues(a, n, tol, kJacobiMaxSweeps);
    sp.eigenvalues.resize(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i)
        sp.eigenvalues[static_cast<std::size_t>(i)] = a[static_cast<std::size_t>(i) * n + i];
    std::sort(sp.eigenvalues.begin(), sp.eigenvalues.end(), std::greater<>());
    return sp;
}

// Adjacency spectral radius by Jacobi; for connected graphs the value is
// cross-checked against a Collatz-Wielandt power-iteration bracket.
inline double spectral_radius(const Graph& g, double tol = kDefaultSpectralTol) {
    const Spectrum sp = adjacency_spectrum(g, tol);
    const double rho = sp.eigenvalues.front();
    if (g.order() >= 2 && is_connected(g)) {
        const double check = detail::perron_root_power(g.adjacency_matrix(), g.order(), tol);
        if (std::abs(check - rho) > 64.0 * std::max(tol, 1e-13) * (1.0 + std::abs(rho)))
            throw ConvergenceError("eigensolver cross-check disagreement", std::min(rho, check),
                                   std::max(rho, check));
    }
    return rho;
}

}  // namespace spanex
