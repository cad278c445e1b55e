#pragma once

// Integer Laurent polynomials in one variable, used for bracket and Jones
// computations. Zero coefficients are never stored.

#include <cstdint>
#include <map>
#include <string>

namespace tanglecalc {

struct LaurentPolynomial {
    std::map<int, std::int64_t> terms;  // exponent -> coefficient

    LaurentPolynomial() = default;

    static LaurentPolynomial monomial(std::int64_t coeff, int exp) {
        LaurentPolynomial p;
        if (coeff != 0) p.terms[exp] = coeff;
        return p;
    }

    static LaurentPolynomial one() { return monomial(1, 0); }

    bool is_zero() const { return terms.empty(); }

    void add_term(int exp, std::int64_t coeff) {
        auto [it, inserted] = terms.try_emplace(exp, coeff);
        if (!inserted) {
            it->second += coeff;
            if (it->second == 0) terms.erase(it);
        }
    }

    LaurentPolynomial operator+(const LaurentPolynomial& o) const {
        LaurentPolynomial r = *this;
        for (auto [e, c] : o.terms) r.add_term(e, c);
        return r;
    }

    LaurentPolynomial operator*(const LaurentPolynomial& o) const {
        LaurentPolynomial r;
        for (auto [e1, c1] : terms)
            for (auto [e2, c2] : o.terms) r.add_term(e1 + e2, c1 * c2);
        return r;
    }

    // x -> x^-1; the bracket of a mirror diagram.
    LaurentPolynomial exponent_negated() const {
        LaurentPolynomial r;
        for (auto [e, c] : terms) r.terms[-e] = c;
        return r;
    }

    friend bool operator==(const LaurentPolynomial&, const LaurentPolynomial&) = default;
    friend bool operator<(const LaurentPolynomial& a, const LaurentPolynomial& b) {
        return a.terms < b.terms;
    }

    std::string str(const std::string& var = "A") const {
        if (terms.empty()) return "0";
        std::string s;
        for (auto it = terms.rbegin(); it != terms.rend(); ++it) {
            auto [e, c] = *it;
            if (!s.empty()) s += c > 0 ? " + " : " - ";
            else if (c < 0) s += "-";
            std::int64_t a = c < 0 ? -c : c;
            if (a != 1 || e == 0) s += std::to_string(a);
            if (e != 0) {
                if (a != 1) s += "*";
                s += var;
                if (e != 1) s += "^" + std::to_string(e);
            }
        }
        return s;
    }
};

}  // namespace tanglecalc
