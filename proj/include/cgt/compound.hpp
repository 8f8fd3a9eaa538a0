#ifndef CGT_COMPOUND_HPP
#define CGT_COMPOUND_HPP

#include <span>

#include "cgt/game_core.hpp"

namespace cgt {

/// G + H: play in exactly one component per turn.
GameId disjunctive_sum(GameArena& arena, GameId g, GameId h);

/// G : H: a move in G discards H.
GameId ordinal_sum(GameArena& arena, GameId g, GameId h);

/// G :_Hhat H: a move in G replaces the right component with Hhat.
/// Refuses up front (ResourceLimitError) when the birthday bound
/// b(G)(b(Hhat)+1) + b(H) already exceeds the arena's node cap.
GameId osws(GameArena& arena, GameId g, GameId h, GameId hhat);

/// Left-associated fold (((G0 :_S1 G1) :_S2 G2) ...) :_Sn Gn.
/// Requires |games| = |substs| + 1; |games| = 1 returns games[0].
GameId chain(GameArena& arena, std::span<const GameId> games,
             std::span<const GameId> substs);

}  // namespace cgt

#endif
