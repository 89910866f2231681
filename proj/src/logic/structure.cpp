#include "hyperforge/logic/structure.hpp"

#include <algorithm>

#include "hyperforge/errors.hpp"

namespace hyperforge::logic {

FiniteStructure FiniteStructure::of(const FiniteHyperfield& h) {
    FiniteStructure s;
    const int n = h.size();
    s.size = n;
    s.label = h.label();
    s.zero = 0;
    s.one = h.one();
    s.mul.resize(static_cast<std::size_t>(n) * static_cast<std::size_t>(n));
    s.add.resize(s.mul.size());
    s.inv.resize(static_cast<std::size_t>(n));
    s.neg.resize(static_cast<std::size_t>(n));
    for (int a = 0; a < n; ++a) {
        s.inv[static_cast<std::size_t>(a)] = a == 0 ? 0 : h.inv(a);
        s.neg[static_cast<std::size_t>(a)] = h.neg(a);
        for (int b = 0; b < n; ++b) {
            const auto k = static_cast<std::size_t>(a) * static_cast<std::size_t>(n) + static_cast<std::size_t>(b);
            s.mul[k] = h.mul(a, b);
            s.add[k] = h.add(a, b);
        }
    }
    return s;
}

FiniteStructure FiniteStructure::of(const FiniteAbelianGroup& g) {
    if (g.order() > static_cast<std::uint64_t>(kMaxEvalCarrier)) throw BoundError("group too large for a structure view");
    FiniteStructure s;
    const int n = static_cast<int>(g.order());
    s.size = n;
    s.label = g.name();
    s.one = 0;
    s.mul.resize(static_cast<std::size_t>(n) * static_cast<std::size_t>(n));
    s.inv.resize(static_cast<std::size_t>(n));
    for (int a = 0; a < n; ++a) {
        s.inv[static_cast<std::size_t>(a)] = g.inverse(a);
        for (int b = 0; b < n; ++b) s.mul[static_cast<std::size_t>(a) * static_cast<std::size_t>(n) + static_cast<std::size_t>(b)] = g.op(a, b);
    }
    return s;
}

bool FiniteStructure::same_signature(const FiniteStructure& o) const {
    return has_zero() == o.has_zero() && has_one() == o.has_one() && has_mul() == o.has_mul() &&
           has_inv() == o.has_inv() && has_neg() == o.has_neg() && has_add() == o.has_add();
}

namespace {

// Formulas are compiled to flat node arrays with variables resolved to
// slots in an environment vector, so the inner loops do no string work.
struct TermNode {
    Term::Kind kind;
    int slot = -1; // Var
    int a = -1, b = -1;
};

struct FormulaNode {
    Formula::Kind kind;
    int t[3] = {-1, -1, -1};
    int a = -1, b = -1;
    int slot = -1; // quantifiers
};

class Compiled {
public:
    Compiled(const FiniteStructure& s, const Formula& f, const std::vector<std::string>& free_vars) : s_(s) {
        scope_ = free_vars;
        root_ = compile(f);
        env_.assign(static_cast<std::size_t>(max_slots_ > static_cast<int>(free_vars.size()) ? max_slots_ : static_cast<int>(free_vars.size())), 0);
    }

    bool run(const std::vector<int>& free_values) {
        std::copy(free_values.begin(), free_values.end(), env_.begin());
        return eval(root_);
    }

private:
    [[noreturn]] static void missing(const char* symbol) {
        throw PreconditionError(std::string("the structure does not interpret ") + symbol);
    }

    int compile(const Term& t) {
        TermNode n{t.kind};
        switch (t.kind) {
        case Term::Kind::Var: {
            auto it = std::find(scope_.rbegin(), scope_.rend(), t.name);
            if (it == scope_.rend()) throw PreconditionError("free variable '" + t.name + "'");
            n.slot = static_cast<int>(scope_.rend() - it) - 1;
            break;
        }
        case Term::Kind::Zero:
            if (!s_.has_zero()) missing("0");
            break;
        case Term::Kind::One:
            if (!s_.has_one()) missing("1");
            break;
        case Term::Kind::Mul:
            if (!s_.has_mul()) missing("mul");
            n.a = compile(t.args[0]);
            n.b = compile(t.args[1]);
            break;
        case Term::Kind::Inv:
            if (!s_.has_inv()) missing("inv");
            n.a = compile(t.args[0]);
            break;
        case Term::Kind::Neg:
            if (!s_.has_neg()) missing("neg");
            n.a = compile(t.args[0]);
            break;
        }
        terms_.push_back(n);
        return static_cast<int>(terms_.size()) - 1;
    }

    int compile(const Formula& f) {
        FormulaNode n{f.kind};
        for (std::size_t i = 0; i < f.terms.size(); ++i) n.t[i] = compile(f.terms[i]);
        if (f.kind == Formula::Kind::Add && !s_.has_add()) missing("add");
        if (f.is_quantifier()) {
            n.slot = static_cast<int>(scope_.size());
            scope_.push_back(f.var);
            max_slots_ = std::max(max_slots_, static_cast<int>(scope_.size()));
            n.a = compile(f.subs[0]);
            scope_.pop_back();
        } else {
            if (!f.subs.empty()) n.a = compile(f.subs[0]);
            if (f.subs.size() > 1) n.b = compile(f.subs[1]);
        }
        nodes_.push_back(n);
        return static_cast<int>(nodes_.size()) - 1;
    }

    int value(int id) const {
        const TermNode& n = terms_[static_cast<std::size_t>(id)];
        switch (n.kind) {
        case Term::Kind::Var: return env_[static_cast<std::size_t>(n.slot)];
        case Term::Kind::Zero: return s_.zero;
        case Term::Kind::One: return s_.one;
        case Term::Kind::Mul: return s_.times(value(n.a), value(n.b));
        case Term::Kind::Inv: return s_.inv[static_cast<std::size_t>(value(n.a))];
        case Term::Kind::Neg: return s_.neg[static_cast<std::size_t>(value(n.a))];
        }
        return 0;
    }

    bool eval(int id) {
        const FormulaNode& n = nodes_[static_cast<std::size_t>(id)];
        switch (n.kind) {
        case Formula::Kind::True: return true;
        case Formula::Kind::False: return false;
        case Formula::Kind::Add: return s_.sum_contains(value(n.t[0]), value(n.t[1]), value(n.t[2]));
        case Formula::Kind::Eq: return value(n.t[0]) == value(n.t[1]);
        case Formula::Kind::Not: return !eval(n.a);
        case Formula::Kind::And: return eval(n.a) && eval(n.b);
        case Formula::Kind::Or: return eval(n.a) || eval(n.b);
        case Formula::Kind::Implies: return !eval(n.a) || eval(n.b);
        case Formula::Kind::Iff: return eval(n.a) == eval(n.b);
        case Formula::Kind::Forall:
        case Formula::Kind::Exists: {
            const bool universal = n.kind == Formula::Kind::Forall;
            auto& slot = env_[static_cast<std::size_t>(n.slot)];
            for (int x = 0; x < s_.size; ++x) {
                slot = x;
                if (eval(n.a) != universal) return !universal;
            }
            return universal;
        }
        }
        return false;
    }

    const FiniteStructure& s_;
    std::vector<TermNode> terms_;
    std::vector<FormulaNode> nodes_;
    std::vector<std::string> scope_;
    std::vector<int> env_;
    int max_slots_ = 0;
    int root_ = -1;
};

void check_carrier(const FiniteStructure& s) {
    if (s.size < 1) throw PreconditionError("empty carrier");
    if (s.size > kMaxEvalCarrier) throw BoundError("carrier exceeds the enumeration bound");
}

} // namespace

bool evaluate(const FiniteStructure& s, const Formula& sentence) {
    check_carrier(s);
    const auto free = free_variables(sentence);
    if (!free.empty()) throw PreconditionError("not a sentence: '" + *free.begin() + "' is free");
    Compiled c(s, sentence, {});
    return c.run({});
}

bool evaluate(const FiniteStructure& s, const Formula& f, const std::vector<std::pair<std::string, int>>& assignment) {
    check_carrier(s);
    std::vector<std::string> names;
    std::vector<int> values;
    for (const auto& [name, v] : assignment) {
        if (v < 0 || v >= s.size) throw PreconditionError("assigned value outside the carrier");
        names.push_back(name);
        values.push_back(v);
    }
    Compiled c(s, f, names);
    return c.run(values);
}

} // namespace hyperforge::logic
