#include "cgt/expr.hpp"

#include <limits>
#include <stdexcept>
#include <unordered_map>

namespace cgt {

ExprPtr Expr::make_nimber(std::uint64_t n) {
    auto e = std::shared_ptr<Expr>(new Expr());
    e->kind_ = ExprKind::Nimber;
    e->nimber_ = n;
    return e;
}

ExprPtr Expr::make_explicit(GameId g) {
    auto e = std::shared_ptr<Expr>(new Expr());
    e->kind_ = ExprKind::Explicit;
    e->game_ = g;
    return e;
}

ExprPtr Expr::make_sum(ExprPtr left, ExprPtr right) {
    if (!left || !right) throw std::invalid_argument("make_sum: null operand");
    auto e = std::shared_ptr<Expr>(new Expr());
    e->kind_ = ExprKind::Sum;
    e->left_ = std::move(left);
    e->right_ = std::move(right);
    return e;
}

ExprPtr Expr::make_ordinal_sum(ExprPtr left, ExprPtr right) {
    if (!left || !right)
        throw std::invalid_argument("make_ordinal_sum: null operand");
    auto e = std::shared_ptr<Expr>(new Expr());
    e->kind_ = ExprKind::OrdinalSum;
    e->left_ = std::move(left);
    e->right_ = std::move(right);
    return e;
}

ExprPtr Expr::make_ordinal_sum_sub(ExprPtr left, ExprPtr right,
                                   ExprPtr subst) {
    if (!left || !right || !subst)
        throw std::invalid_argument("make_ordinal_sum_sub: null operand");
    auto e = std::shared_ptr<Expr>(new Expr());
    e->kind_ = ExprKind::OrdinalSumSub;
    e->left_ = std::move(left);
    e->right_ = std::move(right);
    e->subst_ = std::move(subst);
    return e;
}

bool Expr::contains_explicit() const {
    switch (kind_) {
        case ExprKind::Nimber: return false;
        case ExprKind::Explicit: return true;
        case ExprKind::Sum:
        case ExprKind::OrdinalSum:
            return left_->contains_explicit() || right_->contains_explicit();
        case ExprKind::OrdinalSumSub:
            return left_->contains_explicit() || right_->contains_explicit() ||
                   subst_->contains_explicit();
    }
    return false;
}

bool structurally_equal(const Expr& a, const Expr& b) {
    if (a.kind() != b.kind()) return false;
    switch (a.kind()) {
        case ExprKind::Nimber: return a.nimber_value() == b.nimber_value();
        case ExprKind::Explicit: return a.game() == b.game();
        case ExprKind::Sum:
        case ExprKind::OrdinalSum:
            return structurally_equal(*a.left(), *b.left()) &&
                   structurally_equal(*a.right(), *b.right());
        case ExprKind::OrdinalSumSub:
            return structurally_equal(*a.left(), *b.left()) &&
                   structurally_equal(*a.right(), *b.right()) &&
                   structurally_equal(*a.subst(), *b.subst());
    }
    return false;
}

namespace {

class VsetEval {
public:
    explicit VsetEval(GameArena* arena) : arena_(arena) {}

    const NatSet& vset(const ExprPtr& e) {
        auto it = memo_.find(e.get());
        if (it != memo_.end()) return it->second;
        NatSet v = compute(e);
        return memo_.emplace(e.get(), std::move(v)).first->second;
    }

private:
    NatSet compute(const ExprPtr& e) {
        switch (e->kind()) {
            case ExprKind::Nimber:
                return NatSet::range(e->nimber_value());
            case ExprKind::Explicit:
                if (!arena_)
                    throw std::invalid_argument(
                        "vset_of: explicit-game leaf without an arena");
                return arena_->vset(e->game());
            case ExprKind::Sum: {
                const NatSet& l = vset(e->left());
                const NatSet& r = vset(e->right());
                return set_union(xor_translate(l, mex(r)),
                                 xor_translate(r, mex(l)));
            }
            case ExprKind::OrdinalSum:
                return colon(vset(e->left()), vset(e->right()));
            case ExprKind::OrdinalSumSub: {
                const NatSet& l = vset(e->left());
                std::uint64_t shat = mex(vset(e->subst()));
                return colon(add_translate(l, shat), vset(e->right()));
            }
        }
        throw std::logic_error("vset_of: unknown expression kind");
    }

    GameArena* arena_;
    std::unordered_map<const Expr*, NatSet> memo_;
};

}  // namespace

NatSet vset_of(const ExprPtr& e, GameArena* arena) {
    if (!e) throw std::invalid_argument("vset_of: null expression");
    VsetEval eval(arena);
    return eval.vset(e);
}

std::uint64_t grundy_of(const ExprPtr& e, GameArena* arena) {
    return mex(vset_of(e, arena));
}

Outcome outcome_of(const ExprPtr& e, GameArena* arena) {
    if (!e) throw std::invalid_argument("outcome_of: null expression");
    if (e->kind() == ExprKind::OrdinalSumSub) {
        // o = P iff o(H) = P and (o(G) = P or o(Hhat) = N).
        Outcome oh = outcome_of(e->right(), arena);
        if (oh == Outcome::N) return Outcome::N;
        Outcome og = outcome_of(e->left(), arena);
        if (og == Outcome::P) return Outcome::P;
        Outcome ohat = outcome_of(e->subst(), arena);
        return ohat == Outcome::N ? Outcome::P : Outcome::N;
    }
    return vset_of(e, arena).contains(0) ? Outcome::N : Outcome::P;
}

void ChainSpec::validate() const {
    if (a.empty()) throw std::invalid_argument("ChainSpec: a must be non-empty");
    if (a.size() != ahat.size() + 1)
        throw std::invalid_argument(
            "ChainSpec: expected |a| = |ahat| + 1, got |a| = " +
            std::to_string(a.size()) + ", |ahat| = " +
            std::to_string(ahat.size()));
}

std::vector<long long> chain_suffix_sums(const ChainSpec& c) {
    c.validate();
    const std::size_t n = c.ahat.size();
    std::vector<long long> sigma(n + 1);
    __int128 acc = 0;
    for (std::size_t p = n + 1; p-- > 0;) {
        acc += static_cast<__int128>(c.a[p]);
        if (p > 0) acc -= static_cast<__int128>(c.ahat[p - 1]);
        if (acc > std::numeric_limits<long long>::max() ||
            acc < std::numeric_limits<long long>::min())
            throw std::overflow_error("chain_suffix_sums: 64-bit overflow");
        sigma[p] = static_cast<long long>(acc);
    }
    return sigma;
}

std::uint64_t chain_p(const ChainSpec& c) {
    std::vector<long long> sigma = chain_suffix_sums(c);
    for (std::size_t p = sigma.size(); p-- > 1;)
        if (sigma[p] < 0) return static_cast<std::uint64_t>(p);
    return 0;
}

std::uint64_t chain_grundy(const ChainSpec& c) {
    const std::uint64_t p = chain_p(c);
    std::uint64_t total = 0;
    for (std::size_t i = p; i < c.a.size(); ++i) {
        std::uint64_t next = total + c.a[i];
        if (next < total) throw std::overflow_error("chain_grundy: overflow");
        total = next;
    }
    return total;
}

ExprPtr chain_expr(const ChainSpec& c) {
    c.validate();
    ExprPtr acc = Expr::make_nimber(c.a[0]);
    for (std::size_t i = 0; i < c.ahat.size(); ++i)
        acc = Expr::make_ordinal_sum_sub(acc, Expr::make_nimber(c.a[i + 1]),
                                         Expr::make_nimber(c.ahat[i]));
    return acc;
}

}  // namespace cgt
