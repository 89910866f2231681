#pragma once

#include <set>
#include <string>
#include <string_view>
#include <vector>

namespace hyperforge::logic {

/// Terms over {0, 1, mul, inv, neg} and variables.
struct Term {
    enum class Kind { Var, Zero, One, Mul, Inv, Neg };

    Kind kind = Kind::Zero;
    std::string name; // variables only
    std::vector<Term> args;

    static Term var(std::string name) { return {Kind::Var, std::move(name), {}}; }
    static Term zero() { return {Kind::Zero, {}, {}}; }
    static Term one() { return {Kind::One, {}, {}}; }
    static Term mul(Term a, Term b) { return {Kind::Mul, {}, {std::move(a), std::move(b)}}; }
    static Term inv(Term a) { return {Kind::Inv, {}, {std::move(a)}}; }
    static Term neg(Term a) { return {Kind::Neg, {}, {std::move(a)}}; }

    friend bool operator==(const Term&, const Term&) = default;
};

struct Formula {
    enum class Kind { True, False, Add, Eq, Not, And, Or, Implies, Iff, Forall, Exists };

    Kind kind = Kind::True;
    std::vector<Term> terms;   // Add: 3, Eq: 2
    std::vector<Formula> subs; // Not: 1, binary: 2, quantifiers: 1
    std::string var;           // quantifiers only

    static Formula truth() { return {Kind::True, {}, {}, {}}; }
    static Formula falsity() { return {Kind::False, {}, {}, {}}; }
    static Formula add(Term a, Term b, Term c) { return {Kind::Add, {std::move(a), std::move(b), std::move(c)}, {}, {}}; }
    static Formula eq(Term a, Term b) { return {Kind::Eq, {std::move(a), std::move(b)}, {}, {}}; }
    static Formula negation(Formula f) { return {Kind::Not, {}, {std::move(f)}, {}}; }
    static Formula binary(Kind k, Formula a, Formula b) { return {k, {}, {std::move(a), std::move(b)}, {}}; }
    static Formula conj(Formula a, Formula b) { return binary(Kind::And, std::move(a), std::move(b)); }
    static Formula disj(Formula a, Formula b) { return binary(Kind::Or, std::move(a), std::move(b)); }
    static Formula implies(Formula a, Formula b) { return binary(Kind::Implies, std::move(a), std::move(b)); }
    static Formula iff(Formula a, Formula b) { return binary(Kind::Iff, std::move(a), std::move(b)); }
    static Formula forall(std::string v, Formula body) { return {Kind::Forall, {}, {std::move(body)}, std::move(v)}; }
    static Formula exists(std::string v, Formula body) { return {Kind::Exists, {}, {std::move(body)}, std::move(v)}; }

    /// Left-nested conjunction; true for an empty list.
    static Formula big_and(std::vector<Formula> parts);
    /// Left-nested disjunction; false for an empty list.
    static Formula big_or(std::vector<Formula> parts);

    bool is_binary() const { return kind == Kind::And || kind == Kind::Or || kind == Kind::Implies || kind == Kind::Iff; }
    bool is_quantifier() const { return kind == Kind::Forall || kind == Kind::Exists; }

    friend bool operator==(const Formula&, const Formula&) = default;
};

std::string to_string(const Term& t);

/// Concrete syntax accepted by parse: binary connectives are always
/// parenthesized, quantifiers are parenthesized when they are a left
/// operand or negated, so parse(to_string(f)) == f.
std::string to_string(const Formula& f);

/// Parses the concrete syntax. Sentences only unless allow_free is set.
/// Throws ParseError with line and column for syntax, arity and unbound
/// variable errors.
///
///   formula := iff
///   iff     := implies { "<->" implies }
///   implies := or [ "->" implies ]
///   or      := and { "\/" and }
///   and     := unary { "/\" unary }
///   unary   := "~" unary | ("forall" | "exists") ident "." formula | primary
///   primary := "(" formula ")" | "true" | "false"
///            | "add" "(" term "," term "," term ")" | term "=" term
///   term    := ident | "0" | "1" | "mul" "(" term "," term ")"
///            | "inv" "(" term ")" | "neg" "(" term ")"
Formula parse(std::string_view text, bool allow_free = false);

std::set<std::string> free_variables(const Formula& f);

/// Nesting depth of quantifiers.
int quantifier_depth(const Formula& f);

} // namespace hyperforge::logic
