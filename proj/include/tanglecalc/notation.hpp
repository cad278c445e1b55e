#pragma once

// Text notation: tangle expressions T(p/q), M(...), sums and closures
// N(...), knot expressions b(p,q) and connected sums, twist words, and the
// one-equation-per-line document format consumed by the solvers.

#include <cctype>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

#include "tanglecalc/fourplat.hpp"
#include "tanglecalc/rational.hpp"
#include "tanglecalc/solver.hpp"
#include "tanglecalc/tangle.hpp"

namespace tanglecalc {

struct ParseError : std::runtime_error {
    std::size_t position;
    ParseError(const std::string& msg, std::size_t pos)
        : std::runtime_error(msg + " at column " + std::to_string(pos + 1)), position(pos) {}
};

namespace ast {

struct TangleLit {
    ExtendedRational fraction;
    friend bool operator==(const TangleLit&, const TangleLit&) = default;
};

struct MontesinosLit {
    std::vector<ExtendedRational> fractions;
    friend bool operator==(const MontesinosLit&, const MontesinosLit&) = default;
};

struct VarRef {
    std::string name;
    friend bool operator==(const VarRef&, const VarRef&) = default;
};

struct Repeated {  // e.g. 3R
    Int count;
    std::string var;
    friend bool operator==(const Repeated&, const Repeated&) = default;
};

using Term = std::variant<TangleLit, MontesinosLit, VarRef, Repeated>;

struct SumExpr {
    std::vector<Term> terms;
    bool closed = false;  // wrapped in N(...)
    friend bool operator==(const SumExpr&, const SumExpr&) = default;
};

struct SchubertLit {
    Int p, q;  // as written, not normalized
    friend bool operator==(const SchubertLit&, const SchubertLit&) = default;
};

struct ConnectedSumLit {
    std::vector<SchubertLit> factors;
    friend bool operator==(const ConnectedSumLit&, const ConnectedSumLit&) = default;
};

struct CrossingLit {
    Int crossings;
    friend bool operator==(const CrossingLit&, const CrossingLit&) = default;
};

using KnotExpr = std::variant<SchubertLit, ConnectedSumLit, CrossingLit>;

struct Equation {
    SumExpr lhs;
    KnotExpr rhs;
    friend bool operator==(const Equation&, const Equation&) = default;
};

struct Assignment {
    std::string var;
    SumExpr value;
    friend bool operator==(const Assignment&, const Assignment&) = default;
};

using Statement = std::variant<Equation, Assignment>;

struct Document {
    std::vector<Statement> statements;
    friend bool operator==(const Document&, const Document&) = default;
};

}  // namespace ast

namespace detail {

class Scanner {
public:
    explicit Scanner(std::string_view text) : text_(text) {}

    void skip_ws() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }

    bool done() {
        skip_ws();
        return pos_ >= text_.size();
    }

    std::size_t pos() const { return pos_; }

    char peek() {
        skip_ws();
        return pos_ < text_.size() ? text_[pos_] : '\0';
    }

    bool accept(char c) {
        skip_ws();
        if (pos_ < text_.size() && text_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    void expect(char c) {
        if (!accept(c)) throw ParseError(std::string("expected '") + c + "'", pos_);
    }

    Int integer() {
        skip_ws();
        std::size_t start = pos_;
        bool neg = false;
        if (pos_ < text_.size() && (text_[pos_] == '-' || text_[pos_] == '+')) {
            neg = text_[pos_] == '-';
            ++pos_;
        }
        if (pos_ >= text_.size() || !std::isdigit(static_cast<unsigned char>(text_[pos_])))
            throw ParseError("expected an integer", start);
        Int v = 0;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_])))
            v = v * 10 + (text_[pos_++] - '0');
        return neg ? -v : v;
    }

    std::optional<std::string> ident() {
        skip_ws();
        if (pos_ >= text_.size() || !(std::isalpha(static_cast<unsigned char>(text_[pos_])) ||
                                      text_[pos_] == '_'))
            return std::nullopt;
        std::size_t start = pos_;
        while (pos_ < text_.size() && (std::isalnum(static_cast<unsigned char>(text_[pos_])) ||
                                       text_[pos_] == '_'))
            ++pos_;
        return std::string(text_.substr(start, pos_ - start));
    }

    bool peek_digit_or_sign() {
        skip_ws();
        if (pos_ >= text_.size()) return false;
        char c = text_[pos_];
        return std::isdigit(static_cast<unsigned char>(c)) || c == '-' || c == '+';
    }

private:
    std::string_view text_;
    std::size_t pos_ = 0;
};

inline ExtendedRational parse_fraction(Scanner& s) {
    if (!s.peek_digit_or_sign()) {
        std::size_t at = s.pos();
        auto word = s.ident();
        if (word && *word == "inf") return ExtendedRational::infinity();
        throw ParseError("expected a fraction or 'inf'", at);
    }
    Int num = s.integer();
    if (s.accept('/')) {
        std::size_t at = s.pos();
        Int den = s.integer();
        if (num == 0 && den == 0) throw ParseError("0/0 is not a value", at);
        return ExtendedRational(num, den);
    }
    return ExtendedRational(num);
}

inline ast::Term parse_term(Scanner& s) {
    if (s.peek_digit_or_sign()) {
        Int count = s.integer();
        std::size_t at = s.pos();
        auto name = s.ident();
        if (!name) throw ParseError("expected a variable after the repetition count", at);
        return ast::Repeated{count, *name};
    }
    std::size_t at = s.pos();
    auto name = s.ident();
    if (!name) throw ParseError("expected a tangle term", at);
    if (*name == "T") {
        s.expect('(');
        ExtendedRational f = parse_fraction(s);
        s.expect(')');
        return ast::TangleLit{f};
    }
    if (*name == "M") {
        s.expect('(');
        ast::MontesinosLit m;
        m.fractions.push_back(parse_fraction(s));
        while (s.accept(',')) m.fractions.push_back(parse_fraction(s));
        s.expect(')');
        if (m.fractions.size() < 2)
            throw ParseError("M(...) needs at least two fractions", at);
        return m;
    }
    return ast::VarRef{*name};
}

}  // namespace detail

// --- public parsing API ---------------------------------------------------

inline ExtendedRational parse_fraction(const std::string& text) {
    detail::Scanner s(text);
    ExtendedRational f = detail::parse_fraction(s);
    if (!s.done()) throw ParseError("trailing input", s.pos());
    return f;
}

inline ast::SumExpr parse_tangle_sum(const std::string& text) {
    detail::Scanner s(text);
    ast::SumExpr sum;
    detail::Scanner probe = s;
    auto head = probe.ident();
    if (head && *head == "N" && probe.accept('(')) {
        sum.closed = true;
        s = probe;
    }
    sum.terms.push_back(detail::parse_term(s));
    while (s.accept('+')) sum.terms.push_back(detail::parse_term(s));
    if (sum.closed) s.expect(')');
    if (!s.done()) throw ParseError("trailing input", s.pos());
    return sum;
}

inline ast::SchubertLit parse_schubert(detail::Scanner& s) {
    std::size_t at = s.pos();
    auto name = s.ident();
    if (!name || *name != "b") throw ParseError("expected b(p,q)", at);
    s.expect('(');
    Int p = s.integer();
    s.expect(',');
    std::size_t qat = s.pos();
    Int q = s.integer();
    s.expect(')');
    if (std::gcd(p < 0 ? -p : p, q < 0 ? -q : q) != 1)
        throw ParseError("b(p,q) needs coprime p, q", qat);
    return ast::SchubertLit{p, q};
}

inline ast::KnotExpr parse_knot(const std::string& text) {
    detail::Scanner s(text);
    if (s.peek_digit_or_sign()) {
        Int n = s.integer();
        std::size_t at = s.pos();
        s.expect('-');
        auto word = s.ident();
        if (!word || *word != "crossing") throw ParseError("expected 'crossing'", at);
        if (!s.done()) throw ParseError("trailing input", s.pos());
        return ast::CrossingLit{n};
    }
    ast::SchubertLit first = parse_schubert(s);
    if (s.peek() != '#') {
        if (!s.done()) throw ParseError("trailing input", s.pos());
        return first;
    }
    ast::ConnectedSumLit sum;
    sum.factors.push_back(first);
    while (s.accept('#')) sum.factors.push_back(parse_schubert(s));
    if (!s.done()) throw ParseError("trailing input", s.pos());
    return sum;
}

inline TwistWord parse_twist_word(const std::string& text) {
    detail::Scanner s(text);
    TwistWord w;
    while (!s.done()) {
        std::size_t at = s.pos();
        auto name = s.ident();
        if (!name || (*name != "h" && *name != "v" && *name != "r"))
            throw ParseError("expected a move h, v or r", at);
        if (*name == "r") {
            w.moves.push_back({MoveKind::reflect, 0});
            continue;
        }
        Int count = 1;
        if (s.accept('^')) count = s.integer();
        w.moves.push_back({*name == "h" ? MoveKind::horizontal : MoveKind::vertical, count});
    }
    return w;
}

// --- printing ---------------------------------------------------------------

inline std::string print(const ast::Term& term) {
    if (const auto* t = std::get_if<ast::TangleLit>(&term)) return "T(" + t->fraction.str() + ")";
    if (const auto* m = std::get_if<ast::MontesinosLit>(&term)) {
        std::string s = "M(";
        for (std::size_t i = 0; i < m->fractions.size(); ++i) {
            if (i) s += ",";
            s += m->fractions[i].str();
        }
        return s + ")";
    }
    if (const auto* v = std::get_if<ast::VarRef>(&term)) return v->name;
    const auto& r = std::get<ast::Repeated>(term);
    return std::to_string(r.count) + r.var;
}

inline std::string print(const ast::SumExpr& sum) {
    std::string body;
    for (std::size_t i = 0; i < sum.terms.size(); ++i) {
        if (i) body += "+";
        body += print(sum.terms[i]);
    }
    return sum.closed ? "N(" + body + ")" : body;
}

inline std::string print(const ast::KnotExpr& k) {
    if (const auto* b = std::get_if<ast::SchubertLit>(&k))
        return "b(" + std::to_string(b->p) + "," + std::to_string(b->q) + ")";
    if (const auto* c = std::get_if<ast::ConnectedSumLit>(&k)) {
        std::string s;
        for (std::size_t i = 0; i < c->factors.size(); ++i) {
            if (i) s += "#";
            s += print(ast::KnotExpr{c->factors[i]});
        }
        return s;
    }
    return std::to_string(std::get<ast::CrossingLit>(k).crossings) + "-crossing";
}

inline std::string print(const ast::Statement& st) {
    if (const auto* eq = std::get_if<ast::Equation>(&st))
        return print(eq->lhs) + " = " + print(eq->rhs);
    const auto& as = std::get<ast::Assignment>(st);
    return as.var + " = " + print(as.value);
}

// --- documents --------------------------------------------------------------

inline ast::Statement parse_statement(const std::string& line) {
    std::size_t eq = std::string::npos;
    int depth = 0;
    for (std::size_t i = 0; i < line.size(); ++i) {
        if (line[i] == '(') ++depth;
        else if (line[i] == ')') --depth;
        else if (line[i] == '=' && depth == 0) { eq = i; break; }
    }
    if (eq == std::string::npos) throw ParseError("expected '='", line.size());
    std::string lhs = line.substr(0, eq);
    std::string rhs = line.substr(eq + 1);

    ast::SumExpr left = parse_tangle_sum(lhs);
    if (left.closed) return ast::Equation{left, parse_knot(rhs)};
    if (left.terms.size() == 1) {
        if (const auto* v = std::get_if<ast::VarRef>(&left.terms[0]))
            return ast::Assignment{v->name, parse_tangle_sum(rhs)};
    }
    throw ParseError("left side must be a closure N(...) or a variable", 0);
}

// One statement per line; '#' starts a comment unless it sits between two
// Schubert symbols (a connected sum), so comments are stripped only when
// preceded by start-of-line or whitespace.
inline ast::Document parse_document(const std::string& text) {
    ast::Document doc;
    std::size_t line_no = 0;
    std::size_t start = 0;
    while (start <= text.size()) {
        std::size_t end = text.find('\n', start);
        std::string line = text.substr(start, end == std::string::npos ? std::string::npos
                                                                       : end - start);
        ++line_no;
        for (std::size_t i = 0; i < line.size(); ++i) {
            if (line[i] == '#' && (i == 0 || std::isspace(static_cast<unsigned char>(line[i - 1])))) {
                line = line.substr(0, i);
                break;
            }
        }
        bool blank = true;
        for (char c : line)
            if (!std::isspace(static_cast<unsigned char>(c))) blank = false;
        if (!blank) {
            try {
                doc.statements.push_back(parse_statement(line));
            } catch (const ParseError& e) {
                throw ParseError("line " + std::to_string(line_no) + ": " + e.what(), e.position);
            }
        }
        if (end == std::string::npos) break;
        start = end + 1;
    }
    return doc;
}

// --- evaluation -------------------------------------------------------------

using Bindings = std::map<std::string, Tangle>;

inline Tangle add_general(const Tangle& acc, const Tangle& value) {
    if (const auto* r = std::get_if<RationalTangle>(&value)) return add(acc, *r);
    Tangle out = acc;
    for (const auto& summand : std::get<MontesinosTangle>(value).summands)
        out = add(out, summand);
    return out;
}

inline Tangle eval_term(const ast::Term& term, const Bindings& bindings) {
    if (const auto* t = std::get_if<ast::TangleLit>(&term)) return RationalTangle(t->fraction);
    if (const auto* m = std::get_if<ast::MontesinosLit>(&term)) {
        // Fold through the sum rule so integral entries are absorbed and the
        // value collapses to a rational tangle when it should.
        Tangle acc = RationalTangle(m->fractions[0]);
        for (std::size_t i = 1; i < m->fractions.size(); ++i)
            acc = add(acc, RationalTangle(m->fractions[i]));
        return acc;
    }
    if (const auto* v = std::get_if<ast::VarRef>(&term)) {
        auto it = bindings.find(v->name);
        if (it == bindings.end()) throw std::invalid_argument("unbound variable " + v->name);
        return it->second;
    }
    const auto& rep = std::get<ast::Repeated>(term);
    auto it = bindings.find(rep.var);
    if (it == bindings.end()) throw std::invalid_argument("unbound variable " + rep.var);
    if (rep.count < 1) throw std::invalid_argument("repetition count must be positive");
    Tangle acc = it->second;
    for (Int i = 1; i < rep.count; ++i) acc = add_general(acc, it->second);
    return acc;
}

inline Tangle eval_sum(const ast::SumExpr& sum, const Bindings& bindings = {}) {
    Tangle acc = eval_term(sum.terms[0], bindings);
    for (std::size_t i = 1; i < sum.terms.size(); ++i)
        acc = add_general(acc, eval_term(sum.terms[i], bindings));
    return acc;
}

// --- solver system extraction ------------------------------------------------

// Processive documents: equations N(O+P) = K0, N(O+R) = K1, N(O+2R) = K2, ...
// (N(O+R+R) is accepted for N(O+2R)); products are 4-plats or one trailing
// crossing-number constraint.
inline ProcessiveSystem processive_from_document(const ast::Document& doc,
                                                 EquivalenceMode mode,
                                                 SearchBounds bounds = {}) {
    std::map<Int, ProcessiveProduct> rounds;
    std::string outside_name, recombinant_name, parental_name;
    for (const auto& st : doc.statements) {
        const auto* eq = std::get_if<ast::Equation>(&st);
        if (!eq) continue;
        const auto& terms = eq->lhs.terms;
        if (terms.empty() || !std::holds_alternative<ast::VarRef>(terms[0]))
            throw std::invalid_argument("each closure must start with the outside tangle variable");
        std::string o = std::get<ast::VarRef>(terms[0]).name;
        if (outside_name.empty()) outside_name = o;
        if (o != outside_name)
            throw std::invalid_argument("inconsistent outside tangle variable " + o);

        Int round = 0;
        for (std::size_t i = 1; i < terms.size(); ++i) {
            if (const auto* v = std::get_if<ast::VarRef>(&terms[i])) {
                if (i == 1 && terms.size() == 2 && parental_name.empty() &&
                    recombinant_name != v->name && rounds.empty()) {
                    // First equation: N(O+P), the zeroth round.
                    parental_name = v->name;
                    round = 0;
                    break;
                }
                if (recombinant_name.empty() && v->name != parental_name)
                    recombinant_name = v->name;
                if (v->name == parental_name) { round = 0; continue; }
                if (v->name != recombinant_name)
                    throw std::invalid_argument("unexpected variable " + v->name);
                ++round;
            } else if (const auto* rep = std::get_if<ast::Repeated>(&terms[i])) {
                if (recombinant_name.empty()) recombinant_name = rep->var;
                if (rep->var != recombinant_name)
                    throw std::invalid_argument("unexpected variable " + rep->var);
                round += rep->count;
            } else {
                throw std::invalid_argument("processive closures contain only variables");
            }
        }

        ProcessiveProduct product;
        if (const auto* b = std::get_if<ast::SchubertLit>(&eq->rhs))
            product = TwoBridgeLink(b->p, b->q);
        else if (const auto* c = std::get_if<ast::CrossingLit>(&eq->rhs))
            product = CrossingConstraint{c->crossings};
        else
            throw std::invalid_argument("processive products are 4-plats");
        if (!rounds.emplace(round, product).second)
            throw std::invalid_argument("duplicate equation for round " + std::to_string(round));
    }
    ProcessiveSystem sys;
    sys.mode = mode;
    sys.bounds = bounds;
    for (Int i = 0; i < static_cast<Int>(rounds.size()); ++i) {
        auto it = rounds.find(i);
        if (it == rounds.end())
            throw std::invalid_argument("missing equation for round " + std::to_string(i));
        sys.products.push_back(it->second);
    }
    return sys;
}

// Distributive documents: assignments for P and R plus the two equations
// N(Q+P) = K1 and N(Q+R) = K2#K3.
inline DistributiveSystem distributive_from_document(const ast::Document& doc,
                                                     EquivalenceMode mode,
                                                     SearchBounds bounds = {}) {
    Bindings assigned;
    for (const auto& st : doc.statements)
        if (const auto* as = std::get_if<ast::Assignment>(&st))
            assigned[as->var] = eval_sum(as->value, assigned);

    std::optional<TwoBridgeLink> k1;
    std::optional<CompositeKnot> product;
    std::optional<std::string> q_name;
    std::string p_name, r_name;
    for (const auto& st : doc.statements) {
        const auto* eq = std::get_if<ast::Equation>(&st);
        if (!eq) continue;
        const auto& terms = eq->lhs.terms;
        if (terms.size() != 2 || !std::holds_alternative<ast::VarRef>(terms[0]) ||
            !std::holds_alternative<ast::VarRef>(terms[1]))
            throw std::invalid_argument("distributive closures have the form N(Q+P) or N(Q+R)");
        std::string q = std::get<ast::VarRef>(terms[0]).name;
        std::string attachment = std::get<ast::VarRef>(terms[1]).name;
        if (!q_name) q_name = q;
        if (q != *q_name) throw std::invalid_argument("inconsistent unknown variable " + q);
        if (const auto* b = std::get_if<ast::SchubertLit>(&eq->rhs)) {
            k1 = TwoBridgeLink(b->p, b->q);
            p_name = attachment;
        } else if (const auto* c = std::get_if<ast::ConnectedSumLit>(&eq->rhs)) {
            std::vector<TwoBridgeLink> factors;
            for (const auto& f : c->factors) factors.emplace_back(f.p, f.q);
            product = CompositeKnot(std::move(factors));
            r_name = attachment;
        } else {
            throw std::invalid_argument("distributive products are a 4-plat and a connected sum");
        }
    }
    if (!k1 || !product)
        throw std::invalid_argument("the distributive system needs both equations");
    auto lookup = [&](const std::string& name) -> RationalTangle {
        auto it = assigned.find(name);
        if (it == assigned.end())
            throw std::invalid_argument("missing assignment for " + name);
        if (const auto* r = std::get_if<RationalTangle>(&it->second)) return *r;
        throw std::invalid_argument(name + " must be a rational tangle");
    };
    DistributiveSystem sys{*k1, *product, lookup(p_name), lookup(r_name), mode, bounds};
    return sys;
}

inline std::vector<ProcessiveProduct> parse_product_list(const std::string& text) {
    std::vector<ProcessiveProduct> out;
    std::size_t start = 0;
    while (start <= text.size()) {
        std::size_t end = std::string::npos;
        int depth = 0;
        for (std::size_t i = start; i < text.size(); ++i) {
            if (text[i] == '(') ++depth;
            else if (text[i] == ')') --depth;
            else if (text[i] == ',' && depth == 0) { end = i; break; }
        }
        std::string item = text.substr(start, end == std::string::npos ? std::string::npos
                                                                       : end - start);
        ast::KnotExpr k = parse_knot(item);
        if (const auto* b = std::get_if<ast::SchubertLit>(&k))
            out.push_back(TwoBridgeLink(b->p, b->q));
        else if (const auto* c = std::get_if<ast::CrossingLit>(&k))
            out.push_back(CrossingConstraint{c->crossings});
        else
            throw std::invalid_argument("processive products are 4-plats");
        if (end == std::string::npos) break;
        start = end + 1;
    }
    return out;
}

}  // namespace tanglecalc
