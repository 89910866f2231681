#include "hyperforge/logic/ef.hpp"

#include <map>
#include <set>
#include <stdexcept>

#include "hyperforge/errors.hpp"

namespace hyperforge::logic {

namespace {

using Move = std::pair<int, int>;

std::string variable(std::size_t i) { return "x" + std::to_string(i + 1); }

class Game {
public:
    Game(const FiniteStructure& a, const FiniteStructure& b, int depth)
        : a_(a), b_(b), memo_(static_cast<std::size_t>(depth) + 1) {}

    bool duplicator_wins(std::vector<Move>& moves, int rounds) {
        const Closure c = close(moves, false);
        if (!c.ok) return false;
        if (rounds == 0) return true;
        auto& memo = memo_[static_cast<std::size_t>(rounds)];
        if (auto it = memo.find(c.fwd); it != memo.end()) return it->second;
        const bool result = !spoiler_move(moves, rounds, c).has_value();
        memo.emplace(c.fwd, result);
        return result;
    }

    // Requires !duplicator_wins(moves, rounds). The result holds in a under
    // x_i := moves[i].first and fails in b under x_i := moves[i].second.
    Formula spoiler_sentence(std::vector<Move>& moves, int rounds) {
        const Closure c = close(moves, true);
        if (!c.ok) return *c.conflict;
        const auto move = spoiler_move(moves, rounds, c);
        if (!move) throw std::logic_error("spoiler_sentence called on a Duplicator win");
        const auto [side, x] = *move;
        const std::string v = variable(moves.size());
        std::vector<Formula> parts;
        std::set<std::string> seen;
        const int other = side == 0 ? b_.size : a_.size;
        for (int y = 0; y < other; ++y) {
            moves.push_back(side == 0 ? Move{x, y} : Move{y, x});
            Formula f = spoiler_sentence(moves, rounds - 1);
            moves.pop_back();
            if (seen.insert(to_string(f)).second) parts.push_back(std::move(f));
        }
        // Spoiler in a: some x beats every reply. Spoiler in b: the chosen
        // element of b falsifies, for each candidate reply in a, the formula
        // that reply satisfies.
        if (side == 0) return Formula::exists(v, Formula::big_and(std::move(parts)));
        return Formula::forall(v, Formula::big_or(std::move(parts)));
    }

private:
    struct Closure {
        bool ok = true;
        std::vector<int> fwd; // a -> b, -1 outside the domain
        std::vector<int> bwd;
        std::vector<int> domain;
        std::vector<Term> terms; // indexed like domain, only when requested
        std::optional<Formula> conflict;
    };

    // Winning Spoiler move (0 = pick in a, 1 = pick in b) or none.
    std::optional<Move> spoiler_move(std::vector<Move>& moves, int rounds, const Closure& c) {
        for (int side = 0; side < 2; ++side) {
            const auto& mine = side == 0 ? c.fwd : c.bwd;
            const int other = side == 0 ? b_.size : a_.size;
            for (int x = 0; x < static_cast<int>(mine.size()); ++x) {
                // Picking inside the generated substructure only replays it.
                if (mine[static_cast<std::size_t>(x)] >= 0) continue;
                bool answered = false;
                for (int y = 0; y < other && !answered; ++y) {
                    moves.push_back(side == 0 ? Move{x, y} : Move{y, x});
                    answered = duplicator_wins(moves, rounds - 1);
                    moves.pop_back();
                }
                if (!answered) return Move{side, x};
            }
        }
        return std::nullopt;
    }

    Closure close(const std::vector<Move>& moves, bool with_terms) const {
        Closure c;
        c.fwd.assign(static_cast<std::size_t>(a_.size), -1);
        c.bwd.assign(static_cast<std::size_t>(b_.size), -1);
        std::vector<int> term_index(static_cast<std::size_t>(a_.size), -1);

        auto term_of = [&](int x) -> const Term& { return c.terms[static_cast<std::size_t>(term_index[static_cast<std::size_t>(x)])]; };
        auto link = [&](int x, int y, auto make_term) {
            if (!c.ok) return;
            const int fx = c.fwd[static_cast<std::size_t>(x)];
            if (fx == y) return;
            if (fx >= 0) {
                c.ok = false;
                if (with_terms) c.conflict = Formula::eq(term_of(x), make_term());
                return;
            }
            const int by = c.bwd[static_cast<std::size_t>(y)];
            if (by >= 0) {
                c.ok = false;
                if (with_terms) c.conflict = Formula::negation(Formula::eq(make_term(), term_of(by)));
                return;
            }
            c.fwd[static_cast<std::size_t>(x)] = y;
            c.bwd[static_cast<std::size_t>(y)] = x;
            c.domain.push_back(x);
            if (with_terms) {
                term_index[static_cast<std::size_t>(x)] = static_cast<int>(c.terms.size());
                c.terms.push_back(make_term());
            }
        };

        if (a_.has_zero()) link(a_.zero, b_.zero, [] { return Term::zero(); });
        if (a_.has_one()) link(a_.one, b_.one, [] { return Term::one(); });
        for (std::size_t i = 0; i < moves.size(); ++i) link(moves[i].first, moves[i].second, [&] { return Term::var(variable(i)); });

        for (std::size_t i = 0; i < c.domain.size() && c.ok; ++i) {
            const int x = c.domain[i];
            const int y = c.fwd[static_cast<std::size_t>(x)];
            if (a_.has_inv()) {
                link(a_.inv[static_cast<std::size_t>(x)], b_.inv[static_cast<std::size_t>(y)], [&] { return Term::inv(term_of(x)); });
            }
            if (a_.has_neg()) {
                link(a_.neg[static_cast<std::size_t>(x)], b_.neg[static_cast<std::size_t>(y)], [&] { return Term::neg(term_of(x)); });
            }
            if (a_.has_mul()) {
                for (std::size_t j = 0; j <= i && c.ok; ++j) {
                    const int u = c.domain[j];
                    const int fu = c.fwd[static_cast<std::size_t>(u)];
                    link(a_.times(u, x), b_.times(fu, y), [&] { return Term::mul(term_of(u), term_of(x)); });
                    if (j != i) link(a_.times(x, u), b_.times(y, fu), [&] { return Term::mul(term_of(x), term_of(u)); });
                }
            }
        }
        if (!c.ok || !a_.has_add()) return c;

        for (int x : c.domain) {
            const int fx = c.fwd[static_cast<std::size_t>(x)];
            for (int y : c.domain) {
                const int fy = c.fwd[static_cast<std::size_t>(y)];
                for (int z : c.domain) {
                    const bool in_a = a_.sum_contains(x, y, z);
                    if (in_a == b_.sum_contains(fx, fy, c.fwd[static_cast<std::size_t>(z)])) continue;
                    c.ok = false;
                    if (with_terms) {
                        Formula atom = Formula::add(term_of(x), term_of(y), term_of(z));
                        c.conflict = in_a ? atom : Formula::negation(std::move(atom));
                    }
                    return c;
                }
            }
        }
        return c;
    }

    const FiniteStructure& a_;
    const FiniteStructure& b_;
    std::vector<std::map<std::vector<int>, bool>> memo_;
};

void check_game(const FiniteStructure& a, const FiniteStructure& b, int depth) {
    if (depth < 0) throw PreconditionError("negative game depth");
    if (depth > kMaxEfDepth) throw BoundError("game depth above " + std::to_string(kMaxEfDepth));
    if (a.size > kMaxEfCarrier || b.size > kMaxEfCarrier) {
        throw BoundError("carriers above " + std::to_string(kMaxEfCarrier) + " elements");
    }
    if (a.size < 1 || b.size < 1) throw PreconditionError("empty carrier");
    if (!a.same_signature(b)) throw PreconditionError("structures interpret different symbols");
}

} // namespace

bool ef_equivalent(const FiniteStructure& a, const FiniteStructure& b, int depth) {
    check_game(a, b, depth);
    Game game(a, b, depth);
    std::vector<Move> moves;
    return game.duplicator_wins(moves, depth);
}

std::optional<Formula> distinguishing_sentence(const FiniteStructure& a, const FiniteStructure& b, int depth) {
    check_game(a, b, depth);
    Game game(a, b, depth);
    std::vector<Move> moves;
    for (int r = 0; r <= depth; ++r) {
        if (!game.duplicator_wins(moves, r)) return game.spoiler_sentence(moves, r);
    }
    return std::nullopt;
}

TransferReport group_to_hyperfield_transfer_check(const FiniteAbelianGroup& g, const FiniteAbelianGroup& h, int depth) {
    if (g.order() > kMaxTransferGroupOrder || h.order() > kMaxTransferGroupOrder) {
        throw BoundError("transfer check limited to groups of order " + std::to_string(kMaxTransferGroupOrder));
    }
    TransferReport r;
    r.depth = depth;
    r.groups_equivalent = ef_equivalent(FiniteStructure::of(g), FiniteStructure::of(h), depth);
    r.hyperfields_equivalent = ef_equivalent(FiniteStructure::of(from_group(g)), FiniteStructure::of(from_group(h)), depth);
    return r;
}

} // namespace hyperforge::logic
