#pragma once

// Rational and Montesinos tangle values, the twist moves h/v/r, tangle sum,
// mirror image and the distance d(P,R) = |ps - rq|.

#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

#include "tanglecalc/rational.hpp"

namespace tanglecalc {

// A rational tangle up to isomorphism: T(p/q) with T(a) == T(b) iff a == b.
struct RationalTangle {
    ExtendedRational fraction;

    RationalTangle() : fraction(ExtendedRational::infinity()) {}
    explicit RationalTangle(ExtendedRational f) : fraction(f) {}
    RationalTangle(Int num, Int den) : fraction(num, den) {}

    static RationalTangle infinity() { return RationalTangle(); }
    static RationalTangle integral(Int m) { return RationalTangle(ExtendedRational(m)); }

    bool is_integral() const { return fraction.is_integer(); }
    bool is_infinite() const { return fraction.is_infinite(); }

    friend bool operator==(const RationalTangle&, const RationalTangle&) = default;

    std::string str() const { return "T(" + fraction.str() + ")"; }
};

// Ordered sum T(r1)+...+T(rn) of non-integral rational tangles. Integral
// addends are absorbed into their left neighbour, so a canonical value never
// carries one. A T(inf) summand is legal and kept symbolically: the sum with
// T(inf) is the attachment whose numerator closure is a connected sum.
struct MontesinosTangle {
    std::vector<RationalTangle> summands;

    explicit MontesinosTangle(std::vector<RationalTangle> s) : summands(std::move(s)) {
        if (summands.size() < 2)
            throw std::invalid_argument("Montesinos tangle needs at least two summands");
        for (const auto& t : summands)
            if (t.is_integral())
                throw std::invalid_argument("Montesinos summands must be non-integral");
    }

    friend bool operator==(const MontesinosTangle&, const MontesinosTangle&) = default;

    std::string str() const {
        std::string s = "M(";
        for (std::size_t i = 0; i < summands.size(); ++i) {
            if (i) s += ",";
            s += summands[i].fraction.str();
        }
        return s + ")";
    }
};

using Tangle = std::variant<RationalTangle, MontesinosTangle>;

inline std::string tangle_str(const Tangle& t) {
    return std::visit([](const auto& v) { return v.str(); }, t);
}

enum class MoveKind { horizontal, vertical, reflect };

struct TwistMove {
    MoveKind kind;
    Int count = 0;  // unused for reflect

    friend bool operator==(const TwistMove&, const TwistMove&) = default;
};

// A word in the moves h, v, r; the rightmost move acts first.
struct TwistWord {
    std::vector<TwistMove> moves;

    friend bool operator==(const TwistWord&, const TwistWord&) = default;

    std::string str() const {
        std::string s;
        for (const auto& m : moves) {
            if (!s.empty()) s += " ";
            switch (m.kind) {
                case MoveKind::horizontal: s += "h"; break;
                case MoveKind::vertical: s += "v"; break;
                case MoveKind::reflect: s += "r"; continue;
            }
            if (m.count != 1) s += "^" + std::to_string(m.count);
        }
        return s;
    }
};

// Fraction actions of the moves: h^k adds k, v^k maps f to f/(kf+1),
// r inverts. These satisfy r h^a r = v^a and send the canonical word
// h^{a1} r ... h^{an} r applied to T(inf) to the continued fraction value.
inline ExtendedRational apply_move(const ExtendedRational& f, const TwistMove& m) {
    switch (m.kind) {
        case MoveKind::horizontal: return ExtendedRational(f.num + m.count * f.den, f.den);
        case MoveKind::vertical: return ExtendedRational(f.num, m.count * f.num + f.den);
        case MoveKind::reflect: return f.reciprocal();
    }
    throw std::logic_error("unreachable");
}

inline RationalTangle word_to_tangle(const TwistWord& w) {
    ExtendedRational f = ExtendedRational::infinity();
    for (auto it = w.moves.rbegin(); it != w.moves.rend(); ++it)
        f = apply_move(f, *it);
    return RationalTangle(f);
}

// Canonical word h^{a1} r h^{a2} r ... h^{an} r from the Euclidean expansion.
inline TwistWord tangle_to_word(const RationalTangle& t) {
    TwistWord w;
    for (Int a : cf_expand(t.fraction)) {
        w.moves.push_back({MoveKind::horizontal, a});
        w.moves.push_back({MoveKind::reflect, 0});
    }
    return w;
}

inline RationalTangle mirror(const RationalTangle& t) {
    return RationalTangle(-t.fraction);
}

// Tangle sum. An integral addend on either side adds to the fraction; two
// non-integral rational tangles form a Montesinos value; appending to a
// Montesinos value absorbs integral addends into the last summand.
inline Tangle add(const Tangle& t1, const RationalTangle& t2) {
    if (const auto* r1 = std::get_if<RationalTangle>(&t1)) {
        if (r1->is_infinite() && t2.is_infinite())
            throw std::domain_error("T(inf) + T(inf) is undefined");
        if (t2.is_integral()) return RationalTangle(r1->fraction + t2.fraction);
        if (r1->is_integral()) return RationalTangle(r1->fraction + t2.fraction);
        return MontesinosTangle({*r1, t2});
    }
    MontesinosTangle m = std::get<MontesinosTangle>(t1);
    if (t2.is_integral()) {
        RationalTangle& last = m.summands.back();
        last = RationalTangle(last.fraction + t2.fraction);
        return m;
    }
    if (m.summands.back().is_infinite() && t2.is_infinite())
        throw std::domain_error("T(inf) + T(inf) is undefined");
    m.summands.push_back(t2);
    return m;
}

inline RationalTangle add_rational(const RationalTangle& t1, const RationalTangle& t2) {
    Tangle r = add(Tangle(t1), t2);
    if (const auto* rt = std::get_if<RationalTangle>(&r)) return *rt;
    throw std::domain_error("sum is not a rational tangle");
}

// t + m copies of the integral tangle r: T(u/v) -> T((u + m*k*v)/v).
inline RationalTangle repeated_add(const RationalTangle& t, const RationalTangle& r, Int m) {
    if (!r.is_integral()) throw std::invalid_argument("repeated addend must be integral");
    if (m < 1) throw std::invalid_argument("repetition count must be positive");
    ExtendedRational f = t.fraction;
    if (f.is_infinite()) return RationalTangle::infinity();
    return RationalTangle(ExtendedRational(f.num + m * r.fraction.num * f.den, f.den));
}

// d(P,R) = |ps - rq| for P = T(p/q), R = T(r/s) in reduced form.
inline Int distance(const RationalTangle& P, const RationalTangle& R) {
    Int d = P.fraction.num * R.fraction.den - R.fraction.num * P.fraction.den;
    return d < 0 ? -d : d;
}

}  // namespace tanglecalc
