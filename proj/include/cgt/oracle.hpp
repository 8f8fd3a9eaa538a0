#ifndef CGT_ORACLE_HPP
#define CGT_ORACLE_HPP

#include <cstdint>
#include <random>

#include "cgt/compound.hpp"
#include "cgt/expr.hpp"

namespace cgt {

/// Bounds and seed for the random generators.
struct GenConfig {
    std::uint64_t max_birthday = 4;
    std::uint64_t max_options = 3;
    std::uint64_t max_expr_depth = 4;
    std::uint64_t max_nimber = 4;
    std::uint64_t seed = 0;
};

/// Upper bound on the birthday of the expanded expression, from the
/// component birthday bounds (b(G)(b(Hhat)+1) + b(H) for substitution
/// nodes, additive for the other operators).
std::uint64_t estimated_birthday(GameArena& arena, const ExprPtr& e);

/// Expands an expression into an explicit game by the definitional
/// constructions.  Refuses (ResourceLimitError, reporting the estimate)
/// when estimated_birthday exceeds max_estimated_birthday.
GameId expand(GameArena& arena, const ExprPtr& e,
              std::uint64_t max_estimated_birthday = 1'000'000);

/// Random game of birthday <= cfg.max_birthday with at most
/// cfg.max_options options per node; deterministic given the rng state.
/// Biased toward reusing subgames built earlier in the same call.
GameId random_game(GameArena& arena, const GenConfig& cfg,
                   std::mt19937_64& rng);

/// Random Explicit-free expression of depth <= cfg.max_expr_depth over
/// nimber leaves 0..cfg.max_nimber; deterministic given the rng state.
ExprPtr random_expr(const GenConfig& cfg, std::mt19937_64& rng);

}  // namespace cgt

#endif
