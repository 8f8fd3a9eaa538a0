#ifndef CGT_EXPR_HPP
#define CGT_EXPR_HPP

#include <cstdint>
#include <memory>
#include <vector>

#include "cgt/game_core.hpp"
#include "cgt/natset.hpp"

namespace cgt {

class Expr;
using ExprPtr = std::shared_ptr<const Expr>;

enum class ExprKind : std::uint8_t {
    Nimber,
    Explicit,
    Sum,
    OrdinalSum,
    OrdinalSumSub,
};

/// Immutable expression tree over games: nimber and explicit-game leaves,
/// disjunctive sums, ordinal sums, and ordinal sums with substitution.
/// Subtrees may be shared.
class Expr {
public:
    static ExprPtr make_nimber(std::uint64_t n);
    static ExprPtr make_explicit(GameId g);
    static ExprPtr make_sum(ExprPtr left, ExprPtr right);
    static ExprPtr make_ordinal_sum(ExprPtr left, ExprPtr right);
    static ExprPtr make_ordinal_sum_sub(ExprPtr left, ExprPtr right,
                                        ExprPtr subst);

    ExprKind kind() const { return kind_; }
    std::uint64_t nimber_value() const { return nimber_; }
    GameId game() const { return game_; }
    const ExprPtr& left() const { return left_; }
    const ExprPtr& right() const { return right_; }
    const ExprPtr& subst() const { return subst_; }

    bool contains_explicit() const;

private:
    Expr() = default;

    ExprKind kind_ = ExprKind::Nimber;
    std::uint64_t nimber_ = 0;
    GameId game_{};
    ExprPtr left_, right_, subst_;
};

bool structurally_equal(const Expr& a, const Expr& b);

/// Variation set of the expression, computed by the set algebra alone:
///   Nimber(n)           -> {0, ..., n-1}
///   Explicit(g)         -> vset(g)
///   Sum(l, r)           -> (V(l) ^ mex V(r)) u (V(r) ^ mex V(l))
///   OrdinalSum(l, r)    -> V(l) : V(r)
///   OrdinalSumSub(l, r, s) -> (V(l) + mex V(s)) : V(r)
/// The arena is consulted only for Explicit leaves; passing nullptr is
/// allowed for Explicit-free expressions.  Shared subtrees are evaluated
/// once per call.
NatSet vset_of(const ExprPtr& e, GameArena* arena = nullptr);

std::uint64_t grundy_of(const ExprPtr& e, GameArena* arena = nullptr);

/// P iff 0 is not in vset_of(e).  OrdinalSumSub nodes take the shortcut
/// through the component outcomes; the two routes agree (tested).
Outcome outcome_of(const ExprPtr& e, GameArena* arena = nullptr);

/// A chain *a0 :_*ahat1 *a1 :_*ahat2 ... :_*ahatn *an of nimbers,
/// associated left to right.
struct ChainSpec {
    std::vector<std::uint64_t> a;     // a_0 ... a_n
    std::vector<std::uint64_t> ahat;  // ahat_1 ... ahat_n

    void validate() const;  // |a| = |ahat| + 1, |a| >= 1
};

/// Suffix sums sigma_p = sum_{i>=p} (a_i - ahat_i) for p = 0..n, with
/// ahat_0 taken as 0.  Used by the pivot computation and the CLI report.
std::vector<long long> chain_suffix_sums(const ChainSpec& c);

/// The pivot: the largest p' in 1..n with sigma_{p'} < 0, or 0 if none.
std::uint64_t chain_p(const ChainSpec& c);

/// Closed form for the Grundy number of the chain: sum_{i=p}^{n} a_i.
std::uint64_t chain_grundy(const ChainSpec& c);

/// The left-associated OrdinalSumSub tree of nimber leaves for c.
ExprPtr chain_expr(const ChainSpec& c);

}  // namespace cgt

#endif
