#pragma once

#include <gmpxx.h>

#include <array>
#include <map>
#include <sstream>
#include <string>

#include "spanex/unipoly.hpp"

namespace spanex {

// The five formal variables of the toolkit's polynomial templates, in fixed
// exponent-vector order.
enum class Var : int { x = 0, n = 1, s = 2, k = 3, b = 4 };

inline constexpr std::array<const char*, 5> kVarNames = {"x", "n", "s", "k", "b"};

// Sparse multivariate polynomial in (x, n, s, k, b) with arbitrary-precision
// integer coefficients. Terms live in a sorted map, so equality is canonical;
// zero coefficients are never stored.
class MultiPoly {
  public:
    using Monomial = std::array<int, 5>;

    MultiPoly() = default;
    MultiPoly(long c) { set_term({0, 0, 0, 0, 0}, mpz_class(c)); }   // NOLINT(google-explicit-constructor)
    MultiPoly(const mpz_class& c) { set_term({0, 0, 0, 0, 0}, c); }  // NOLINT(google-explicit-constructor)

    static MultiPoly variable(Var v) {
        MultiPoly p;
        Monomial m{0, 0, 0, 0, 0};
        m[static_cast<std::size_t>(v)] = 1;
        p.set_term(m, 1);
        return p;
    }

    bool is_zero() const { return terms_.empty(); }
    const std::map<Monomial, mpz_class>& terms() const { return terms_; }

    friend bool operator==(const MultiPoly&, const MultiPoly&) = default;

    friend MultiPoly operator+(const MultiPoly& a, const MultiPoly& b) {
        MultiPoly out = a;
        for (const auto& [m, c] : b.terms_) out.add_term(m, c);
        return out;
    }

    friend MultiPoly operator-(const MultiPoly& a, const MultiPoly& b) {
        MultiPoly out = a;
        for (const auto& [m, c] : b.terms_) out.add_term(m, -c);
        return out;
    }

    friend MultiPoly operator-(const MultiPoly& a) { return MultiPoly(0) - a; }

    friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) {
        MultiPoly out;
        for (const auto& [ma, ca] : a.terms_)
            for (const auto& [mb, cb] : b.terms_) {
                Monomial m;
                for (std::size_t i = 0; i < 5; ++i) m[i] = ma[i] + mb[i];
                out.add_term(m, ca * cb);
            }
        return out;
    }

    // Partial evaluation: replace one variable by an integer.
    MultiPoly substitute(Var v, const mpz_class& value) const {
        const auto vi = static_cast<std::size_t>(v);
        MultiPoly out;
        for (const auto& [m, c] : terms_) {
            mpz_class factor;
            mpz_pow_ui(factor.get_mpz_t(), value.get_mpz_t(), static_cast<unsigned long>(m[vi]));
            Monomial m2 = m;
            m2[vi] = 0;
            out.add_term(m2, c * factor);
        }
        return out;
    }

    mpq_class eval(const std::array<mpq_class, 5>& point) const {
        mpq_class acc = 0;
        for (const auto& [m, c] : terms_) {
            mpq_class t(c);
            for (std::size_t i = 0; i < 5; ++i)
                for (int e = 0; e < m[i]; ++e) t *= point[i];
            acc += t;
        }
        return acc;
    }

    // Instantiate (n, s, k, b) and collect the result as a polynomial in x.
    UniPoly instantiate(const mpz_class& n, const mpz_class& s, const mpz_class& k,
                        const mpz_class& b) const {
        const MultiPoly inst =
            substitute(Var::n, n).substitute(Var::s, s).substitute(Var::k, k).substitute(Var::b, b);
        int deg = 0;
        for (const auto& [m, c] : inst.terms_) deg = std::max(deg, m[0]);
        std::vector<mpq_class> coeffs(static_cast<std::size_t>(deg) + 1, 0);
        for (const auto& [m, c] : inst.terms_) coeffs[static_cast<std::size_t>(m[0])] += mpq_class(c);
        return UniPoly(std::move(coeffs));
    }

    std::string to_string() const {
        if (terms_.empty()) return "0";
        std::ostringstream out;
        bool first = true;
        for (const auto& [m, c] : terms_) {
            if (!first) out << (c > 0 ? " + " : " - ");
            else if (c < 0) out << "-";
            first = false;
            mpz_class a = abs(c);
            bool printed = false;
            if (a != 1 || m == Monomial{0, 0, 0, 0, 0}) {
                out << a.get_str();
                printed = true;
            }
            for (std::size_t i = 0; i < 5; ++i) {
                if (m[i] == 0) continue;
                if (printed) out << "*";
                out << kVarNames[i];
                if (m[i] > 1) out << "^" << m[i];
                printed = true;
            }
        }
        return out.str();
    }

  private:
    void set_term(const Monomial& m, const mpz_class& c) {
        if (c != 0) terms_[m] = c;
    }

    void add_term(const Monomial& m, const mpz_class& c) {
        auto it = terms_.find(m);
        if (it == terms_.end()) {
            if (c != 0) terms_.emplace(m, c);
            return;
        }
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }

    std::map<Monomial, mpz_class> terms_;
};

// Symbolic det(xI - M) for 2x2 and 3x3 matrices of polynomials, used to
// cross-check the transcribed quotient-polynomial templates.
inline MultiPoly char_poly_2x2(const std::array<MultiPoly, 4>& m) {
    const MultiPoly x = MultiPoly::variable(Var::x);
    return (x - m[0]) * (x - m[3]) - m[1] * m[2];
}

inline MultiPoly char_poly_3x3(const std::array<MultiPoly, 9>& m) {
    const MultiPoly x = MultiPoly::variable(Var::x);
    const MultiPoly a = x - m[0], bb = -m[1], c = -m[2];
    const MultiPoly d = -m[3], e = x - m[4], f = -m[5];
    const MultiPoly g = -m[6], h = -m[7], i = x - m[8];
    return a * (e * i - f * h) - bb * (d * i - f * g) + c * (d * h - e * g);
}

}  // namespace spanex
