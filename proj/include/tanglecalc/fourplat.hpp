#pragma once

// 2-bridge (4-plat) links b(p,q): Schubert normalization and equivalence,
// numerator closures of rational and Montesinos tangles, connected sums,
// determinants and crossing numbers.

#include <algorithm>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

#include "tanglecalc/rational.hpp"
#include "tanglecalc/tangle.hpp"

namespace tanglecalc {

// b(p,q) = b(p,q') iff q' = q^{+-1} (mod p); the mirror image of b(p,q) is
// b(p,-q). Mirror-agnostic equivalence additionally merges the +-q classes.
enum class EquivalenceMode { chirality_sensitive, mirror_agnostic };

// A 2-bridge link stored in chirality-sensitive canonical form: p >= 0 and
// q = min{q, q^-1} mod p in (0,p), with b(1,1) the unknot and b(0,1) the
// two-component unlink (degenerate). p odd gives a knot, p even a link.
struct TwoBridgeLink {
    Int p = 1;
    Int q = 1;

    TwoBridgeLink() = default;

    TwoBridgeLink(Int p_in, Int q_in) {
        if (p_in < 0) { p_in = -p_in; q_in = -q_in; }
        if (std::gcd(p_in, q_in < 0 ? -q_in : q_in) != 1)
            throw std::invalid_argument("b(p,q) requires coprime p, q");
        if (p_in == 0) { p = 0; q = 1; return; }
        if (p_in == 1) { p = 1; q = 1; return; }
        Int q0 = mod_pos(q_in, p_in);
        p = p_in;
        q = std::min(q0, mod_inverse(q0, p_in));
    }

    bool is_unknot() const { return p == 1; }
    bool is_unlink() const { return p == 0; }
    bool is_knot() const { return p % 2 == 1 && p > 0; }

    friend bool operator==(const TwoBridgeLink&, const TwoBridgeLink&) = default;
    friend bool operator<(const TwoBridgeLink& a, const TwoBridgeLink& b) {
        return a.p != b.p ? a.p < b.p : a.q < b.q;
    }

    std::string str() const { return "b(" + std::to_string(p) + "," + std::to_string(q) + ")"; }
};

// The orbit of q under the equivalences of the mode, reduced into (0,p).
inline std::vector<Int> schubert_orbit(const TwoBridgeLink& k, EquivalenceMode mode) {
    if (k.p <= 1) return {k.q};
    std::vector<Int> orbit{k.q, mod_inverse(k.q, k.p)};
    if (mode == EquivalenceMode::mirror_agnostic) {
        orbit.push_back(k.p - orbit[0]);
        orbit.push_back(k.p - orbit[1]);
    }
    std::sort(orbit.begin(), orbit.end());
    orbit.erase(std::unique(orbit.begin(), orbit.end()), orbit.end());
    return orbit;
}

// Canonical representative under the mode: minimum of the orbit.
inline TwoBridgeLink schubert_normalize(Int p, Int q, EquivalenceMode mode) {
    TwoBridgeLink k(p, q);
    if (mode == EquivalenceMode::chirality_sensitive || k.p <= 1) return k;
    return TwoBridgeLink(k.p, schubert_orbit(k, mode).front());
}

inline TwoBridgeLink schubert_normalize(const TwoBridgeLink& k, EquivalenceMode mode) {
    return schubert_normalize(k.p, k.q, mode);
}

inline bool equivalent(const TwoBridgeLink& a, const TwoBridgeLink& b, EquivalenceMode mode) {
    return schubert_normalize(a, mode) == schubert_normalize(b, mode);
}

inline TwoBridgeLink mirror(const TwoBridgeLink& k) {
    if (k.p <= 1) return k;
    return TwoBridgeLink(k.p, k.p - k.q);
}

// Connected sum of nontrivial 2-bridge links, as a sorted multiset of
// factors (factorization into primes is unique).
struct CompositeKnot {
    std::vector<TwoBridgeLink> factors;

    explicit CompositeKnot(std::vector<TwoBridgeLink> f) : factors(std::move(f)) {
        if (factors.size() < 2)
            throw std::invalid_argument("a connected sum needs at least two factors");
        for (const auto& k : factors)
            if (k.p < 2)
                throw std::invalid_argument("connected sum factors must be nontrivial");
        std::sort(factors.begin(), factors.end());
    }

    friend bool operator==(const CompositeKnot&, const CompositeKnot&) = default;

    std::string str() const {
        std::string s;
        for (const auto& k : factors) {
            if (!s.empty()) s += "#";
            s += k.str();
        }
        return s;
    }
};

inline bool equivalent(const CompositeKnot& a, const CompositeKnot& b, EquivalenceMode mode) {
    if (a.factors.size() != b.factors.size()) return false;
    auto canon = [&](const CompositeKnot& c) {
        std::vector<TwoBridgeLink> v;
        v.reserve(c.factors.size());
        for (const auto& k : c.factors) v.push_back(schubert_normalize(k, mode));
        std::sort(v.begin(), v.end());
        return v;
    };
    return canon(a) == canon(b);
}

// N(T(p/q)) = b(p,q). T(0) closes to the degenerate unlink b(0,1) and
// T(inf) to the unknot.
inline TwoBridgeLink closure_rational(const RationalTangle& t) {
    return TwoBridgeLink(t.fraction.num, t.fraction.den);
}

inline TwoBridgeLink closure_rational(const RationalTangle& t, EquivalenceMode mode) {
    return schubert_normalize(closure_rational(t), mode);
}

// N(T(a/b) + T(c/d)) = b(ad+bc, ad'+bc') for any witnesses with c'd - cd' = 1.
// The first parameter is witness-independent; the second is well defined
// mod p, hence up to Schubert equivalence.
inline TwoBridgeLink closure_sum(const RationalTangle& t1, const RationalTangle& t2) {
    if (t1.is_infinite() && t2.is_infinite())
        throw std::domain_error("N(T(inf) + T(inf)) is undefined");
    Int a = t1.fraction.num, b = t1.fraction.den;
    Int c = t2.fraction.num, d = t2.fraction.den;
    auto [g, x, y] = ext_gcd(d, c);
    (void)g;  // = 1: the fraction c/d is reduced
    Int cw = x, dw = -y;
    return TwoBridgeLink(a * d + b * c, a * dw + b * cw);
}

inline TwoBridgeLink closure_sum(const RationalTangle& t1, const RationalTangle& t2,
                                 EquivalenceMode mode) {
    return schubert_normalize(closure_sum(t1, t2), mode);
}

// N(M(s/r, u/t) + T(inf)): the one tangle attachment whose numerator closure
// is a nontrivial connected sum. Each factor is the denominator closure of
// the corresponding summand, b(r,s) up to Schubert equivalence and mirror;
// the exact representative comes from the T(inf) case of the sum formula so
// that the diagram backend confirms it chirality-sensitively.
inline CompositeKnot infinity_closure_montesinos(const MontesinosTangle& m) {
    if (m.summands.size() != 2)
        throw std::invalid_argument("infinity closure needs exactly two summands");
    std::vector<TwoBridgeLink> factors;
    for (const auto& t : m.summands) {
        if (t.is_infinite())
            throw std::invalid_argument("infinity closure needs finite summands");
        factors.push_back(closure_sum(t, RationalTangle::infinity()));
    }
    return CompositeKnot(std::move(factors));
}

using KnotValue = std::variant<TwoBridgeLink, CompositeKnot>;

inline std::string knot_str(const KnotValue& k) {
    return std::visit([](const auto& v) { return v.str(); }, k);
}

inline bool equivalent(const KnotValue& a, const KnotValue& b, EquivalenceMode mode) {
    if (a.index() != b.index()) return false;
    if (const auto* ta = std::get_if<TwoBridgeLink>(&a))
        return equivalent(*ta, std::get<TwoBridgeLink>(b), mode);
    return equivalent(std::get<CompositeKnot>(a), std::get<CompositeKnot>(b), mode);
}

// Numerator closure of a tangle value. A two-summand Montesinos tangle
// closes through the sum formula; a trailing T(inf) summand turns the first
// two summands into a connected sum.
inline KnotValue close_numerator(const Tangle& t) {
    if (const auto* rt = std::get_if<RationalTangle>(&t)) return closure_rational(*rt);
    const auto& m = std::get<MontesinosTangle>(t);
    if (m.summands.size() == 2)
        return closure_sum(m.summands[0], m.summands[1]);
    if (m.summands.size() == 3 && m.summands[2].is_infinite())
        return infinity_closure_montesinos(
            MontesinosTangle({m.summands[0], m.summands[1]}));
    throw std::domain_error("closure of " + m.str() + " is not a 4-plat");
}

inline Int determinant(const TwoBridgeLink& k) { return k.p; }

inline Int determinant(const CompositeKnot& c) {
    Int d = 1;
    for (const auto& k : c.factors) d *= k.p;
    return d;
}

inline Int determinant(const KnotValue& k) {
    return std::visit([](const auto& v) { return determinant(v); }, k);
}

// All-positive continued fraction of p/q for 0 < q < p; coefficients sum to
// the crossing count of the corresponding alternating 4-plat diagram.
inline TwistCoefficients positive_cf(Int p, Int q) {
    TwistCoefficients out;
    while (q != 0) {
        out.push_back(p / q);
        Int r = p % q;
        p = q;
        q = r;
    }
    return out;
}

// Crossing number of the class: minimum coefficient sum over the
// mirror-agnostic orbit. The unknot and the unlink have none.
inline Int crossing_number(const TwoBridgeLink& k) {
    if (k.p <= 1) return 0;
    Int best = -1;
    for (Int q : schubert_orbit(k, EquivalenceMode::mirror_agnostic)) {
        Int sum = 0;
        for (Int a : positive_cf(k.p, q)) sum += a;
        if (best < 0 || sum < best) best = sum;
    }
    return best;
}

// Display names for the small classes that come up in recombination
// products, keyed by mirror-agnostic canonical form.
inline std::optional<std::string> display_name(const TwoBridgeLink& k) {
    static const std::map<std::pair<Int, Int>, std::string> names = {
        {{0, 1}, "two-component unlink"},
        {{1, 1}, "unknot"},
        {{2, 1}, "Hopf link"},
        {{3, 1}, "trefoil"},
        {{4, 1}, "(2,4) torus link"},
        {{5, 1}, "(2,5) torus knot (5_1)"},
        {{5, 2}, "figure-eight knot (4_1)"},
        {{7, 1}, "(2,7) torus knot (7_1)"},
        {{7, 2}, "5_2 knot"},
        {{11, 2}, "7-crossing 2-bridge knot (7_2)"},
        {{11, 3}, "Stevedore's knot"},
    };
    TwoBridgeLink c = schubert_normalize(k, EquivalenceMode::mirror_agnostic);
    auto it = names.find({c.p, c.q});
    if (it == names.end()) return std::nullopt;
    return it->second;
}

}  // namespace tanglecalc
