#pragma once

#include <cmath>
#include <limits>
#include <optional>
#include <string>
#include <vector>

#include "spanex/multipoly.hpp"

namespace spanex {

// Quotient-matrix templates and characteristic polynomials of the three
// extremal constructions, as exact polynomials in (x, n, s, k, b):
//
//   b1 family:   K_s v (K_{n-(k-1)s-b-2} u ((k-2)s+b+2) K_1)   (3-cell quotient)
//   star family: K_s v ((k-2)s+b+3) K_1                        (2-cell quotient)
//   gstar:       K_1 v (K_{n-k-b-1} u (k+b) K_1)               (b1 family at s=1)
//
// f1 is the gap polynomial tying the b1 and gstar characteristic polynomials
// together: gstar_poly - b1_poly = (s-1) * f1.

namespace poly_vars {
inline const MultiPoly X = MultiPoly::variable(Var::x);
inline const MultiPoly N = MultiPoly::variable(Var::n);
inline const MultiPoly S = MultiPoly::variable(Var::s);
inline const MultiPoly K = MultiPoly::variable(Var::k);
inline const MultiPoly B = MultiPoly::variable(Var::b);
}  // namespace poly_vars

inline std::array<MultiPoly, 9> b1_quotient_template() {
    using namespace poly_vars;
    return {S - 1, N - (K - 1) * S - B - 2, (K - 2) * S + B + 2,
            S,     N - (K - 1) * S - B - 3, MultiPoly(0),
            S,     MultiPoly(0),            MultiPoly(0)};
}

inline std::array<MultiPoly, 4> star_quotient_template() {
    using namespace poly_vars;
    return {S - 1, (K - 2) * S + B + 3, S, MultiPoly(0)};
}

inline std::array<MultiPoly, 9> gstar_quotient_template() {
    using namespace poly_vars;
    return {MultiPoly(0), N - K - B - 1, K + B,
            MultiPoly(1), N - K - B - 2, MultiPoly(0),
            MultiPoly(1), MultiPoly(0),  MultiPoly(0)};
}

inline MultiPoly b1_quotient_poly() {
    using namespace poly_vars;
    return X * X * X + (-N + (K - 2) * S + B + 4) * X * X -
           (N + (K - 2) * S * S - (K - B - 4) * S - B - 3) * X + (K - 2) * S * S * N +
           (B + 2) * S * N - (K - 2) * (K - 1) * S * S * S -
           (2 * B * K + 5 * K - 3 * B - 8) * S * S - (B + 2) * (B + 3) * S;
}

inline MultiPoly star_quotient_poly() {
    using namespace poly_vars;
    return X * X - (S - 1) * X - S * ((K - 2) * S + B + 3);
}

inline MultiPoly gstar_quotient_poly() {
    using namespace poly_vars;
    return X * X * X + (-N + K + B + 2) * X * X - (N - 1) * X + (K + B) * N - K * K -
           2 * B * K - 2 * K - B * B - 2 * B;
}

inline MultiPoly f1_poly() {
    using namespace poly_vars;
    return -(K - 2) * X * X + ((K - 2) * S + B + 2) * X - (K - 2) * S * N - (K + B) * N +
           (K - 2) * (K - 1) * S * S + (K * K + 2 * B * K + 2 * K - 3 * B - 6) * S + K * K +
           2 * B * K + B * B + 2 * K + 2 * B;
}

struct IdentityCheck {
    bool ok;
    MultiPoly residue;  // zero when ok
};

// Exact check of gstar_poly - b1_poly == (s-1) * f1 over the integers.
inline IdentityCheck verify_quotient_poly_identity() {
    using namespace poly_vars;
    const MultiPoly residue = gstar_quotient_poly() - b1_quotient_poly() - (S - 1) * f1_poly();
    return {residue.is_zero(), residue};
}

// Spectral radius of the star family K_s v ((k-2)s+b+3) K_1 in closed form.
inline double closed_form_rho(int s, int k, int b) {
    if (s < 1 || k < 2 || b < 0)
        throw std::invalid_argument("closed_form_rho requires s >= 1, k >= 2, b >= 0");
    const double radicand = (4.0 * k - 7.0) * s * s + (4.0 * b + 10.0) * s + 1.0;
    return (s - 1 + std::sqrt(radicand)) / 2.0;
}

struct F1GridRow {
    int s, k, b, n;
    double rho1 = 0.0;      // largest root of the instantiated b1 polynomial
    double f1_value = 0.0;  // f1 evaluated at rho1
    bool skipped = false;
    std::string note;       // reason when skipped
};

struct F1Report {
    std::vector<F1GridRow> rows;
    int evaluated = 0;
    int skipped = 0;
    int nonnegative = 0;
    double max_value = -std::numeric_limits<double>::infinity();
    std::optional<F1GridRow> argmax;
    bool all_negative() const { return nonnegative == 0 && evaluated > 0; }
};

struct F1Grid {
    int s_min = 2, s_max = 6;
    int k_min = 5, k_max = 10;
    int b_min = 0, b_max = -1;          // -1: up to k-3 for each k
    std::vector<int> n_offsets = {0, 5};  // n = (k-1)s + b + 3 + offset
};

// Evaluates f1 at the largest root rho1 of the instantiated b1 polynomial
// over a parameter grid. Points outside the hypothesis region (s >= 2,
// k >= max(5, b+3), (b,k) != (2,5), n >= (k-1)s+b+3) are skipped with a note.
inline F1Report check_f1_negativity(const F1Grid& grid = {}) {
    const MultiPoly phi = b1_quotient_poly();
    const MultiPoly f1 = f1_poly();
    F1Report rep;
    for (int s = grid.s_min; s <= grid.s_max; ++s)
        for (int k = grid.k_min; k <= grid.k_max; ++k) {
            const int b_hi = grid.b_max < 0 ? k - 3 : grid.b_max;
            for (int b = grid.b_min; b <= b_hi; ++b)
                for (int off : grid.n_offsets) {
                    const int n = (k - 1) * s + b + 3 + off;
                    F1GridRow row{s, k, b, n};
                    if (s < 2) row.note = "requires s >= 2";
                    else if (k < std::max(5, b + 3)) row.note = "requires k >= max(5, b+3)";
                    else if (b == 2 && k == 5) row.note = "excluded point (b,k)=(2,5)";
                    else if (n < (k - 1) * s + b + 3) row.note = "requires n >= (k-1)s+b+3";
                    if (!row.note.empty()) {
                        row.skipped = true;
                        ++rep.skipped;
                        rep.rows.push_back(row);
                        continue;
                    }
                    const UniPoly inst = phi.instantiate(n, s, k, b);
                    row.rho1 = largest_real_root(inst, static_cast<double>(n));
                    row.f1_value =
                        f1.eval({mpq_class(row.rho1), mpq_class(n), mpq_class(s), mpq_class(k),
                                 mpq_class(b)})
                            .get_d();
                    ++rep.evaluated;
                    if (row.f1_value >= 0.0) ++rep.nonnegative;
                    if (row.f1_value > rep.max_value) {
                        rep.max_value = row.f1_value;
                        rep.argmax = row;
                    }
                    rep.rows.push_back(row);
                }
        }
    return rep;
}

}  // namespace spanex
