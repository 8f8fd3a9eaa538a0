#include "cgt/compound.hpp"

namespace cgt {

namespace {
inline std::uint64_t pair_key(GameId a, GameId b) {
    return (static_cast<std::uint64_t>(a.index) << 32) | b.index;
}
}  // namespace

GameId disjunctive_sum(GameArena& arena, GameId g, GameId h) {
    std::scoped_lock lock(arena.mu_);
    arena.check_handle(g);
    arena.check_handle(h);
    auto rec = [&arena](auto&& self, GameId x, GameId y) -> GameId {
        auto it = arena.sum_memo_.find(pair_key(x, y));
        if (it != arena.sum_memo_.end()) return it->second;
        std::vector<GameId> opts;
        // Copy the option lists: interning below may reallocate nodes_.
        const std::vector<GameId> xo = arena.nodes_[x.index];
        const std::vector<GameId> yo = arena.nodes_[y.index];
        opts.reserve(xo.size() + yo.size());
        for (GameId o : xo) opts.push_back(self(self, o, y));
        for (GameId o : yo) opts.push_back(self(self, x, o));
        GameId id = arena.intern(std::move(opts));
        arena.sum_memo_.emplace(pair_key(x, y), id);
        return id;
    };
    return rec(rec, g, h);
}

GameId ordinal_sum(GameArena& arena, GameId g, GameId h) {
    std::scoped_lock lock(arena.mu_);
    arena.check_handle(g);
    arena.check_handle(h);
    auto rec = [&arena](auto&& self, GameId x, GameId y) -> GameId {
        auto it = arena.osum_memo_.find(pair_key(x, y));
        if (it != arena.osum_memo_.end()) return it->second;
        std::vector<GameId> opts = arena.nodes_[x.index];
        const std::vector<GameId> yo = arena.nodes_[y.index];
        for (GameId o : yo) opts.push_back(self(self, x, o));
        GameId id = arena.intern(std::move(opts));
        arena.osum_memo_.emplace(pair_key(x, y), id);
        return id;
    };
    return rec(rec, g, h);
}

GameId osws(GameArena& arena, GameId g, GameId h, GameId hhat) {
    std::scoped_lock lock(arena.mu_);
    arena.check_handle(g);
    arena.check_handle(h);
    arena.check_handle(hhat);
    const std::uint64_t beta =
        arena.birthday_unlocked(g) * (arena.birthday_unlocked(hhat) + 1) +
        arena.birthday_unlocked(h);
    if (beta >= arena.node_cap_)
        throw ResourceLimitError(
            "osws: birthday bound " + std::to_string(beta) +
            " already exceeds the node cap of " +
            std::to_string(arena.node_cap_));
    auto rec = [&arena, hhat](auto&& self, GameId x, GameId y) -> GameId {
        GameArena::TripleKey key{x.index, y.index, hhat.index};
        auto it = arena.osws_memo_.find(key);
        if (it != arena.osws_memo_.end()) return it->second;
        std::vector<GameId> opts;
        const std::vector<GameId> xo = arena.nodes_[x.index];
        const std::vector<GameId> yo = arena.nodes_[y.index];
        opts.reserve(xo.size() + yo.size());
        for (GameId o : xo) opts.push_back(self(self, o, hhat));
        for (GameId o : yo) opts.push_back(self(self, x, o));
        GameId id = arena.intern(std::move(opts));
        arena.osws_memo_.emplace(key, id);
        return id;
    };
    return rec(rec, g, h);
}

GameId chain(GameArena& arena, std::span<const GameId> games,
             std::span<const GameId> substs) {
    if (games.size() != substs.size() + 1)
        throw std::invalid_argument(
            "chain: expected one more game than substitutions");
    GameId acc = games[0];
    for (std::size_t i = 0; i < substs.size(); ++i)
        acc = osws(arena, acc, games[i + 1], substs[i]);
    return acc;
}

}  // namespace cgt
