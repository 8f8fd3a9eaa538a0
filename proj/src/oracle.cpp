#include "cgt/oracle.hpp"

#include <algorithm>
#include <stdexcept>

namespace cgt {

std::uint64_t estimated_birthday(GameArena& arena, const ExprPtr& e) {
    if (!e) throw std::invalid_argument("estimated_birthday: null expression");
    switch (e->kind()) {
        case ExprKind::Nimber:
            return e->nimber_value();
        case ExprKind::Explicit:
            return arena.birthday(e->game());
        case ExprKind::Sum:
        case ExprKind::OrdinalSum:
            return estimated_birthday(arena, e->left()) +
                   estimated_birthday(arena, e->right());
        case ExprKind::OrdinalSumSub:
            return estimated_birthday(arena, e->left()) *
                       (estimated_birthday(arena, e->subst()) + 1) +
                   estimated_birthday(arena, e->right());
    }
    throw std::logic_error("estimated_birthday: unknown expression kind");
}

GameId expand(GameArena& arena, const ExprPtr& e,
              std::uint64_t max_estimated_birthday) {
    if (!e) throw std::invalid_argument("expand: null expression");
    const std::uint64_t est = estimated_birthday(arena, e);
    if (est > max_estimated_birthday)
        throw ResourceLimitError("expand: estimated birthday " +
                                 std::to_string(est) + " exceeds the limit of " +
                                 std::to_string(max_estimated_birthday));
    switch (e->kind()) {
        case ExprKind::Nimber:
            return arena.nimber(e->nimber_value());
        case ExprKind::Explicit:
            return e->game();
        case ExprKind::Sum:
            return disjunctive_sum(arena,
                                   expand(arena, e->left(), max_estimated_birthday),
                                   expand(arena, e->right(), max_estimated_birthday));
        case ExprKind::OrdinalSum:
            return ordinal_sum(arena,
                               expand(arena, e->left(), max_estimated_birthday),
                               expand(arena, e->right(), max_estimated_birthday));
        case ExprKind::OrdinalSumSub:
            return osws(arena,
                        expand(arena, e->left(), max_estimated_birthday),
                        expand(arena, e->right(), max_estimated_birthday),
                        expand(arena, e->subst(), max_estimated_birthday));
    }
    throw std::logic_error("expand: unknown expression kind");
}

namespace {

class GameGen {
public:
    GameGen(GameArena& arena, const GenConfig& cfg, std::mt19937_64& rng)
        : arena_(arena), cfg_(cfg), rng_(rng) {}

    GameId gen(std::uint64_t max_birthday) {
        if (max_birthday == 0) return GameArena::kEmpty;
        std::uniform_int_distribution<std::uint64_t> count_dist(
            0, cfg_.max_options);
        const std::uint64_t want = count_dist(rng_);
        std::vector<GameId> opts;
        for (std::uint64_t i = 0; i < want; ++i) {
            // Reuse an earlier subgame about half the time so sums and
            // ordinal sums hit shared structure.
            GameId o;
            std::vector<GameId> candidates;
            if (!pool_.empty() && (rng_() & 1)) {
                for (GameId p : pool_)
                    if (arena_.birthday(p) < max_birthday)
                        candidates.push_back(p);
            }
            if (!candidates.empty()) {
                std::uniform_int_distribution<std::size_t> pick(
                    0, candidates.size() - 1);
                o = candidates[pick(rng_)];
            } else {
                o = gen(max_birthday - 1);
            }
            opts.push_back(o);
        }
        GameId g = arena_.make_game(std::move(opts));
        pool_.push_back(g);
        return g;
    }

private:
    GameArena& arena_;
    const GenConfig& cfg_;
    std::mt19937_64& rng_;
    std::vector<GameId> pool_;
};

}  // namespace

GameId random_game(GameArena& arena, const GenConfig& cfg,
                   std::mt19937_64& rng) {
    return GameGen(arena, cfg, rng).gen(cfg.max_birthday);
}

ExprPtr random_expr(const GenConfig& cfg, std::mt19937_64& rng) {
    std::uniform_int_distribution<std::uint64_t> leaf_dist(0, cfg.max_nimber);
    if (cfg.max_expr_depth == 0) return Expr::make_nimber(leaf_dist(rng));
    // Leaves get likelier as the remaining depth shrinks, which keeps
    // the beta estimate of generated trees manageable.
    std::uniform_int_distribution<int> kind_dist(0, 5);
    switch (kind_dist(rng)) {
        case 0:
        case 1:
            return Expr::make_nimber(leaf_dist(rng));
        case 2:
        case 3: {
            GenConfig sub = cfg;
            sub.max_expr_depth -= 1;
            ExprPtr l = random_expr(sub, rng);
            ExprPtr r = random_expr(sub, rng);
            return (kind_dist(rng) & 1) ? Expr::make_sum(l, r)
                                        : Expr::make_ordinal_sum(l, r);
        }
        default: {
            GenConfig sub = cfg;
            sub.max_expr_depth -= 1;
            ExprPtr l = random_expr(sub, rng);
            ExprPtr r = random_expr(sub, rng);
            ExprPtr s = random_expr(sub, rng);
            return Expr::make_ordinal_sum_sub(l, r, s);
        }
    }
}

}  // namespace cgt
