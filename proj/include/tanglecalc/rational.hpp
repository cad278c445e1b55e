#pragma once

// Exact arithmetic over the extended rationals Q u {inf} and the
// continued-fraction conversions used by the rational tangle calculus.
// All values are immutable and all operations are pure.

#include <array>
#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

namespace tanglecalc {

using Int = std::int64_t;

inline Int floor_div(Int a, Int b) {
    Int q = a / b;
    if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
    return q;
}

inline Int mod_pos(Int a, Int p) {
    Int r = a % p;
    return r < 0 ? r + p : r;
}

// Extended gcd: returns {g, x, y} with a*x + b*y = g, g >= 0.
inline std::array<Int, 3> ext_gcd(Int a, Int b) {
    Int old_r = a, r = b;
    Int old_x = 1, x = 0;
    Int old_y = 0, y = 1;
    while (r != 0) {
        Int q = old_r / r;
        Int t;
        t = old_r - q * r; old_r = r; r = t;
        t = old_x - q * x; old_x = x; x = t;
        t = old_y - q * y; old_y = y; y = t;
    }
    if (old_r < 0) { old_r = -old_r; old_x = -old_x; old_y = -old_y; }
    return {old_r, old_x, old_y};
}

// a^-1 mod p, in (0, p). Requires p >= 2 and gcd(a, p) = 1.
inline Int mod_inverse(Int a, Int p) {
    if (p < 2) throw std::invalid_argument("mod_inverse: modulus must be at least 2");
    Int a0 = mod_pos(a, p);
    auto [g, x, y] = ext_gcd(a0, p);
    (void)y;
    if (g != 1) throw std::invalid_argument("mod_inverse: arguments are not coprime");
    return mod_pos(x, p);
}

// Reduced fraction num/den with den >= 0. den == 0 only for the unique
// infinity value 1/0; zero is 0/1. The representation is unique per value,
// so equality of values is field-wise equality.
struct ExtendedRational {
    Int num = 0;
    Int den = 1;

    ExtendedRational() = default;

    ExtendedRational(Int n, Int d) {
        if (n == 0 && d == 0) throw std::invalid_argument("0/0 is undefined");
        if (d == 0) { num = 1; den = 0; return; }
        if (d < 0) { n = -n; d = -d; }
        Int g = std::gcd(n < 0 ? -n : n, d);
        num = n / g;
        den = d / g;
    }

    explicit ExtendedRational(Int n) : num(n), den(1) {}

    static ExtendedRational infinity() { return ExtendedRational(1, 0); }

    bool is_infinite() const { return den == 0; }
    bool is_integer() const { return den == 1; }
    bool is_zero() const { return num == 0 && den == 1; }

    friend bool operator==(const ExtendedRational&, const ExtendedRational&) = default;

    // Total order with inf greatest; used only for stable sorting of outputs.
    friend bool operator<(const ExtendedRational& a, const ExtendedRational& b) {
        if (a.is_infinite()) return false;
        if (b.is_infinite()) return true;
        return a.num * b.den < b.num * a.den;
    }

    ExtendedRational operator-() const {
        if (is_infinite()) return *this;
        ExtendedRational r;
        r.num = -num;
        r.den = den;
        return r;
    }

    ExtendedRational reciprocal() const { return ExtendedRational(den, num); }

    ExtendedRational operator+(const ExtendedRational& o) const {
        if (is_infinite() && o.is_infinite())
            throw std::domain_error("inf + inf is undefined");
        if (is_infinite() || o.is_infinite()) return infinity();
        return ExtendedRational(num * o.den + o.num * den, den * o.den);
    }

    ExtendedRational operator-(const ExtendedRational& o) const { return *this + (-o); }

    std::string str() const {
        if (is_infinite()) return "inf";
        if (den == 1) return std::to_string(num);
        return std::to_string(num) + "/" + std::to_string(den);
    }
};

inline ExtendedRational normalize(Int num, Int den) { return ExtendedRational(num, den); }

// Coefficients (a1,...,an) of a1 + 1/(a2 + ... + 1/an). The empty list
// denotes inf (the base tangle with no twists applied).
using TwistCoefficients = std::vector<Int>;

inline ExtendedRational cf_evaluate(const TwistCoefficients& coeffs) {
    ExtendedRational x = ExtendedRational::infinity();
    for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it)
        x = ExtendedRational(*it) + x.reciprocal();
    return x;
}

// Euclidean expansion; tails are >= 1, the leading coefficient takes the
// floor (so negatives expand as e.g. -1/2 -> [-1, 2]). Round-trips through
// cf_evaluate by construction.
inline TwistCoefficients cf_expand(ExtendedRational x) {
    TwistCoefficients out;
    if (x.is_infinite()) return out;
    Int p = x.num, q = x.den;
    for (;;) {
        Int a = floor_div(p, q);
        out.push_back(a);
        Int r = p - a * q;
        if (r == 0) break;
        p = q;
        q = r;
    }
    return out;
}

}  // namespace tanglecalc
