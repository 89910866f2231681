#include "hyperforge/logic/formula.hpp"

#include <algorithm>
#include <cctype>

#include "hyperforge/errors.hpp"

namespace hyperforge::logic {

Formula Formula::big_and(std::vector<Formula> parts) {
    if (parts.empty()) return truth();
    Formula acc = std::move(parts[0]);
    for (std::size_t i = 1; i < parts.size(); ++i) acc = conj(std::move(acc), std::move(parts[i]));
    return acc;
}

Formula Formula::big_or(std::vector<Formula> parts) {
    if (parts.empty()) return falsity();
    Formula acc = std::move(parts[0]);
    for (std::size_t i = 1; i < parts.size(); ++i) acc = disj(std::move(acc), std::move(parts[i]));
    return acc;
}

// ---------------------------------------------------------------------------
// Printing

std::string to_string(const Term& t) {
    switch (t.kind) {
    case Term::Kind::Var: return t.name;
    case Term::Kind::Zero: return "0";
    case Term::Kind::One: return "1";
    case Term::Kind::Mul: return "mul(" + to_string(t.args[0]) + ", " + to_string(t.args[1]) + ")";
    case Term::Kind::Inv: return "inv(" + to_string(t.args[0]) + ")";
    case Term::Kind::Neg: return "neg(" + to_string(t.args[0]) + ")";
    }
    return "?";
}

namespace {

const char* op_text(Formula::Kind k) {
    switch (k) {
    case Formula::Kind::And: return " /\\ ";
    case Formula::Kind::Or: return " \\/ ";
    case Formula::Kind::Implies: return " -> ";
    case Formula::Kind::Iff: return " <-> ";
    default: return " ? ";
    }
}

} // namespace

std::string to_string(const Formula& f) {
    switch (f.kind) {
    case Formula::Kind::True: return "true";
    case Formula::Kind::False: return "false";
    case Formula::Kind::Add:
        return "add(" + to_string(f.terms[0]) + ", " + to_string(f.terms[1]) + ", " + to_string(f.terms[2]) + ")";
    case Formula::Kind::Eq: return to_string(f.terms[0]) + " = " + to_string(f.terms[1]);
    case Formula::Kind::Not: {
        const auto& s = f.subs[0];
        const bool wrap = s.is_quantifier() || s.kind == Formula::Kind::Eq;
        return "~" + (wrap ? "(" + to_string(s) + ")" : to_string(s));
    }
    case Formula::Kind::Forall: return "forall " + f.var + ". " + to_string(f.subs[0]);
    case Formula::Kind::Exists: return "exists " + f.var + ". " + to_string(f.subs[0]);
    default: {
        const auto& l = f.subs[0];
        std::string left = l.is_quantifier() ? "(" + to_string(l) + ")" : to_string(l);
        return "(" + left + op_text(f.kind) + to_string(f.subs[1]) + ")";
    }
    }
}

// ---------------------------------------------------------------------------
// Parsing

namespace {

enum class Tok { Ident, Zero, One, LParen, RParen, Comma, Dot, Eq, Not, And, Or, Implies, Iff, End };

struct Token {
    Tok kind;
    std::string text;
    int line;
    int column;
};

std::string describe(const Token& t) {
    return t.kind == Tok::End ? std::string("end of input") : "'" + t.text + "'";
}

std::vector<Token> tokenize(std::string_view s) {
    std::vector<Token> out;
    int line = 1, col = 1;
    std::size_t i = 0;
    auto advance = [&](std::size_t n) {
        for (std::size_t k = 0; k < n; ++k) {
            if (s[i] == '\n') {
                ++line;
                col = 1;
            } else {
                ++col;
            }
            ++i;
        }
    };
    while (i < s.size()) {
        const char c = s[i];
        if (std::isspace(static_cast<unsigned char>(c))) {
            advance(1);
            continue;
        }
        const int l = line, cl = col;
        auto emit = [&](Tok k, std::size_t n) {
            out.push_back({k, std::string(s.substr(i, n)), l, cl});
            advance(n);
        };
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            std::size_t j = i;
            while (j < s.size() && (std::isalnum(static_cast<unsigned char>(s[j])) || s[j] == '_')) ++j;
            emit(Tok::Ident, j - i);
        } else if (std::isdigit(static_cast<unsigned char>(c))) {
            std::size_t j = i;
            while (j < s.size() && std::isdigit(static_cast<unsigned char>(s[j]))) ++j;
            const auto lit = s.substr(i, j - i);
            if (lit != "0" && lit != "1") throw ParseError("only the constants 0 and 1 exist, got " + std::string(lit), l, cl);
            emit(lit == "0" ? Tok::Zero : Tok::One, 1);
        } else if (s.substr(i, 3) == "<->") {
            emit(Tok::Iff, 3);
        } else if (s.substr(i, 2) == "->") {
            emit(Tok::Implies, 2);
        } else if (s.substr(i, 2) == "/\\") {
            emit(Tok::And, 2);
        } else if (s.substr(i, 2) == "\\/") {
            emit(Tok::Or, 2);
        } else {
            switch (c) {
            case '(': emit(Tok::LParen, 1); break;
            case ')': emit(Tok::RParen, 1); break;
            case ',': emit(Tok::Comma, 1); break;
            case '.': emit(Tok::Dot, 1); break;
            case '=': emit(Tok::Eq, 1); break;
            case '~': emit(Tok::Not, 1); break;
            default: throw ParseError(std::string("unexpected character '") + c + "'", l, cl);
            }
        }
    }
    out.push_back({Tok::End, "", line, col});
    return out;
}

bool is_keyword(const std::string& s) {
    static const char* const words[] = {"forall", "exists", "add", "mul", "inv", "neg", "true", "false"};
    return std::find(std::begin(words), std::end(words), s) != std::end(words);
}

class Parser {
public:
    Parser(std::vector<Token> toks, bool allow_free) : toks_(std::move(toks)), allow_free_(allow_free) {}

    Formula sentence() {
        Formula f = formula();
        if (peek().kind != Tok::End) fail("expected end of input, got " + describe(peek()));
        return f;
    }

private:
    const Token& peek() const { return toks_[pos_]; }
    const Token& take() { return toks_[pos_++]; }
    [[noreturn]] void fail(const std::string& msg, const Token* at = nullptr) const {
        const Token& t = at ? *at : peek();
        throw ParseError(msg, t.line, t.column);
    }
    const Token& expect(Tok k, const char* what) {
        if (peek().kind != k) fail(std::string("expected ") + what + ", got " + describe(peek()));
        return take();
    }
    bool at_ident(const char* word) const { return peek().kind == Tok::Ident && peek().text == word; }

    Formula formula() {
        Formula f = implication();
        while (peek().kind == Tok::Iff) {
            take();
            f = Formula::iff(std::move(f), implication());
        }
        return f;
    }
    Formula implication() {
        Formula f = disjunction();
        if (peek().kind == Tok::Implies) {
            take();
            return Formula::implies(std::move(f), implication());
        }
        return f;
    }
    Formula disjunction() {
        Formula f = conjunction();
        while (peek().kind == Tok::Or) {
            take();
            f = Formula::disj(std::move(f), conjunction());
        }
        return f;
    }
    Formula conjunction() {
        Formula f = unary();
        while (peek().kind == Tok::And) {
            take();
            f = Formula::conj(std::move(f), unary());
        }
        return f;
    }
    Formula unary() {
        if (peek().kind == Tok::Not) {
            take();
            return Formula::negation(unary());
        }
        if (at_ident("forall") || at_ident("exists")) {
            const bool universal = take().text == "forall";
            const Token& v = expect(Tok::Ident, "a variable");
            if (is_keyword(v.text)) fail("'" + v.text + "' cannot be used as a variable", &v);
            if (peek().kind != Tok::Dot) {
                fail("expected '.' after the quantified variable (one variable per quantifier), got " + describe(peek()));
            }
            take();
            scope_.push_back(v.text);
            Formula body = formula();
            scope_.pop_back();
            return universal ? Formula::forall(v.text, std::move(body)) : Formula::exists(v.text, std::move(body));
        }
        return primary();
    }
    Formula primary() {
        if (peek().kind == Tok::LParen) {
            take();
            Formula f = formula();
            expect(Tok::RParen, "')'");
            return f;
        }
        if (at_ident("true")) {
            take();
            return Formula::truth();
        }
        if (at_ident("false")) {
            take();
            return Formula::falsity();
        }
        if (at_ident("add")) {
            const Token& at = take();
            auto args = arguments(at, 3);
            return Formula::add(std::move(args[0]), std::move(args[1]), std::move(args[2]));
        }
        Term lhs = term();
        expect(Tok::Eq, "'='");
        return Formula::eq(std::move(lhs), term());
    }
    std::vector<Term> arguments(const Token& fn, std::size_t arity) {
        expect(Tok::LParen, "'('");
        std::vector<Term> args;
        if (peek().kind != Tok::RParen) {
            args.push_back(term());
            while (peek().kind == Tok::Comma) {
                take();
                args.push_back(term());
            }
        }
        expect(Tok::RParen, "')'");
        if (args.size() != arity) {
            fail(fn.text + " takes " + std::to_string(arity) + " argument" + (arity == 1 ? "" : "s") + ", got " +
                     std::to_string(args.size()),
                 &fn);
        }
        return args;
    }
    Term term() {
        const Token& t = peek();
        if (t.kind == Tok::Zero) {
            take();
            return Term::zero();
        }
        if (t.kind == Tok::One) {
            take();
            return Term::one();
        }
        if (t.kind != Tok::Ident) fail("expected a term, got " + describe(t));
        const Token& id = take();
        if (id.text == "mul") {
            auto a = arguments(id, 2);
            return Term::mul(std::move(a[0]), std::move(a[1]));
        }
        if (id.text == "inv" || id.text == "neg") {
            auto a = arguments(id, 1);
            return id.text == "inv" ? Term::inv(std::move(a[0])) : Term::neg(std::move(a[0]));
        }
        if (is_keyword(id.text)) fail("'" + id.text + "' is not a term", &id);
        if (peek().kind == Tok::LParen) fail("unknown function '" + id.text + "'", &id);
        if (!allow_free_ && std::find(scope_.begin(), scope_.end(), id.text) == scope_.end()) {
            fail("unbound variable '" + id.text + "'", &id);
        }
        return Term::var(id.text);
    }

    std::vector<Token> toks_;
    std::size_t pos_ = 0;
    bool allow_free_;
    std::vector<std::string> scope_;
};

void collect_free(const Term& t, const std::vector<std::string>& bound, std::set<std::string>& out) {
    if (t.kind == Term::Kind::Var && std::find(bound.begin(), bound.end(), t.name) == bound.end()) out.insert(t.name);
    for (const auto& a : t.args) collect_free(a, bound, out);
}

void collect_free(const Formula& f, std::vector<std::string>& bound, std::set<std::string>& out) {
    for (const auto& t : f.terms) collect_free(t, bound, out);
    if (f.is_quantifier()) bound.push_back(f.var);
    for (const auto& s : f.subs) collect_free(s, bound, out);
    if (f.is_quantifier()) bound.pop_back();
}

} // namespace

Formula parse(std::string_view text, bool allow_free) { return Parser(tokenize(text), allow_free).sentence(); }

std::set<std::string> free_variables(const Formula& f) {
    std::set<std::string> out;
    std::vector<std::string> bound;
    collect_free(f, bound, out);
    return out;
}

int quantifier_depth(const Formula& f) {
    int d = 0;
    for (const auto& s : f.subs) d = std::max(d, quantifier_depth(s));
    return d + (f.is_quantifier() ? 1 : 0);
}

} // namespace hyperforge::logic
