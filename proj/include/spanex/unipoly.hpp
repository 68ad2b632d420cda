#pragma once

#include <gmpxx.h>

#include <sstream>
#include <string>
#include <vector>

#include "spanex/errors.hpp"

namespace spanex {

inline constexpr int kCharPolyMaxDim = 12;
inline constexpr double kRootBisectTol = 1e-12;

// Dense univariate polynomial with exact rational coefficients, ascending
// degree order. The leading stored coefficient is nonzero.
class UniPoly {
  public:
    UniPoly() = default;
    explicit UniPoly(std::vector<mpq_class> coeffs_ascending) : c_(std::move(coeffs_ascending)) {
        normalize();
    }

    static UniPoly from_coeffs_desc(std::vector<mpq_class> desc) {
        std::vector<mpq_class> asc(desc.rbegin(), desc.rend());
        return UniPoly(std::move(asc));
    }

    int degree() const { return static_cast<int>(c_.size()) - 1; }  // -1 for the zero poly
    bool is_zero() const { return c_.empty(); }
    const std::vector<mpq_class>& coeffs() const { return c_; }

    const mpq_class& coeff(int i) const {
        static const mpq_class zero = 0;
        return (i >= 0 && i < static_cast<int>(c_.size())) ? c_[static_cast<std::size_t>(i)] : zero;
    }

    bool integral() const {
        for (const auto& q : c_)
            if (q.get_den() != 1) return false;
        return true;
    }

    mpq_class eval(const mpq_class& x) const {
        mpq_class acc = 0;
        for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
        return acc;
    }

    double eval(double x) const {
        double acc = 0.0;
        for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + it->get_d();
        return acc;
    }

    friend bool operator==(const UniPoly&, const UniPoly&) = default;

    std::string to_string() const {
        if (c_.empty()) return "0";
        std::ostringstream out;
        bool first = true;
        for (int i = degree(); i >= 0; --i) {
            const mpq_class& q = c_[static_cast<std::size_t>(i)];
            if (q == 0) continue;
            if (!first) out << (q > 0 ? " + " : " - ");
            else if (q < 0) out << "-";
            first = false;
            mpq_class a = abs(q);
            if (a != 1 || i == 0) out << a.get_str();
            if (i > 0) {
                if (a != 1) out << "*";
                out << "x";
                if (i > 1) out << "^" << i;
            }
        }
        return out.str();
    }

  private:
    void normalize() {
        while (!c_.empty() && c_.back() == 0) c_.pop_back();
    }

    std::vector<mpq_class> c_;
};

// det(xI - M) for a square integer matrix, by the Faddeev-LeVerrier
// recurrence over exact rationals. The result is integral for integer input.
inline UniPoly char_poly_exact(const std::vector<std::vector<mpz_class>>& m) {
    const int dim = static_cast<int>(m.size());
    for (const auto& row : m)
        if (static_cast<int>(row.size()) != dim)
            throw std::invalid_argument("characteristic polynomial requires a square matrix");
    if (dim == 0) throw std::invalid_argument("characteristic polynomial requires dim >= 1");
    if (dim > kCharPolyMaxDim)
        throw ScopeError("characteristic polynomial limited to dimension <= 12");

    auto idx = [dim](int i, int j) { return static_cast<std::size_t>(i) * dim + j; };
    std::vector<mpq_class> mq(static_cast<std::size_t>(dim) * dim);
    for (int i = 0; i < dim; ++i)
        for (int j = 0; j < dim; ++j)
            mq[idx(i, j)] = mpq_class(m[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)]);

    std::vector<mpq_class> coeff(static_cast<std::size_t>(dim) + 1);
    coeff[static_cast<std::size_t>(dim)] = 1;
    std::vector<mpq_class> aux = mq;
    std::vector<mpq_class> next(static_cast<std::size_t>(dim) * dim);
    for (int step = 1; step <= dim; ++step) {
        mpq_class tr = 0;
        for (int i = 0; i < dim; ++i) tr += aux[idx(i, i)];
        coeff[static_cast<std::size_t>(dim - step)] = -tr / step;
        if (step == dim) break;
        for (int i = 0; i < dim; ++i) aux[idx(i, i)] += coeff[static_cast<std::size_t>(dim - step)];
        for (int i = 0; i < dim; ++i)
            for (int j = 0; j < dim; ++j) {
                mpq_class s = 0;
                for (int l = 0; l < dim; ++l) s += mq[idx(i, l)] * aux[idx(l, j)];
                next[idx(i, j)] = s;
            }
        std::swap(aux, next);
    }
    return UniPoly(std::move(coeff));
}

inline UniPoly char_poly_exact(const std::vector<std::vector<long long>>& m) {
    std::vector<std::vector<mpz_class>> z(m.size());
    for (std::size_t i = 0; i < m.size(); ++i) {
        z[i].reserve(m[i].size());
        for (long long v : m[i]) z[i].emplace_back(static_cast<long>(v));
    }
    return char_poly_exact(z);
}

// Largest real root of p in (0, hi], located by a downward sign-change scan
// with grid refinement, then bisection with exact rational sign evaluation.
inline double largest_real_root(const UniPoly& p, double hi, double tol = kRootBisectTol) {
    if (p.degree() < 1) throw std::invalid_argument("largest_real_root requires a nonconstant polynomial");
    if (!(hi > 0.0)) throw std::invalid_argument("upper bound must be positive");
    const mpq_class hi_q(hi);  // exact: doubles are dyadic rationals
    if (p.eval(hi_q) == 0) return hi;

    for (int gridpw = 6; gridpw <= 14; ++gridpw) {
        const long steps = 1L << gridpw;
        const mpq_class h = hi_q / steps;
        int prev_sign = sgn(p.eval(hi_q));
        for (long j = 1; j <= steps; ++j) {
            const mpq_class xj = hi_q - h * j;
            const int s = sgn(p.eval(xj));
            if (s == 0) return xj.get_d();
            if (s != prev_sign) {
                // bisect [xj, xj + h]
                mpq_class lo = xj, up = xj + h;
                int lo_sign = s;
                while (mpq_class(up - lo).get_d() > tol) {
                    const mpq_class mid = (lo + up) / 2;
                    const int ms = sgn(p.eval(mid));
                    if (ms == 0) return mid.get_d();
                    if (ms == lo_sign) lo = mid;
                    else up = mid;
                }
                return mpq_class((lo + up) / 2).get_d();
            }
            prev_sign = s;
        }
    }
    throw std::runtime_error("no real root in bracket (0, " + std::to_string(hi) + "]");
}

}  // namespace spanex
