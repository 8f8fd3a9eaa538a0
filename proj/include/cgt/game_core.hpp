#ifndef CGT_GAME_CORE_HPP
#define CGT_GAME_CORE_HPP

#include <cstdint>
#include <mutex>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <vector>

#include "cgt/natset.hpp"

namespace cgt {

enum class Outcome : std::uint8_t { P, N };

inline const char* to_string(Outcome o) { return o == Outcome::P ? "P" : "N"; }

/// Handle into a GameArena.  Two handles from the same arena are equal
/// iff the games they denote are identical as sets of options.
struct GameId {
    std::uint32_t index = 0;
    friend bool operator==(GameId, GameId) = default;
    friend auto operator<=>(GameId, GameId) = default;
};

/// Thrown when a construction would exceed a configured resource cap.
struct ResourceLimitError : std::runtime_error {
    explicit ResourceLimitError(const std::string& what)
        : std::runtime_error(what) {}
};

/// Interned store of impartial games.  Every game is a canonical sorted
/// duplicate-free sequence of option handles; every option of a node was
/// interned strictly earlier, so the table is a topologically ordered DAG.
/// The empty game is pre-interned as handle 0 (kEmpty).
///
/// All public entry points are serialized by an internal mutex, so an
/// arena may be shared or handed off between threads.
class GameArena {
public:
    static constexpr GameId kEmpty{0};

    explicit GameArena(std::size_t node_cap = 10'000'000);

    GameArena(const GameArena&) = delete;
    GameArena& operator=(const GameArena&) = delete;

    /// Interns the game whose options are `options` (order and duplicates
    /// are irrelevant).  Idempotent: equal option sets yield equal handles.
    GameId make_game(std::vector<GameId> options);

    /// The nimber *n = {*0, ..., *(n-1)}.
    GameId nimber(std::uint64_t n);

    /// Canonical sorted option sequence of g.
    std::vector<GameId> options(GameId g) const;

    std::uint64_t birthday(GameId g);
    Outcome outcome(GameId g);
    std::uint64_t grundy(GameId g);

    /// The set of Grundy numbers of all options of g.
    NatSet vset(GameId g);

    std::size_t size() const;
    std::size_t node_cap() const { return node_cap_; }

private:
    friend GameId disjunctive_sum(GameArena&, GameId, GameId);
    friend GameId ordinal_sum(GameArena&, GameId, GameId);
    friend GameId osws(GameArena&, GameId, GameId, GameId);

    struct OptionsHash {
        std::size_t operator()(const std::vector<GameId>& v) const;
    };
    struct TripleKey {
        std::uint32_t a, b, c;
        friend bool operator==(TripleKey, TripleKey) = default;
    };
    struct TripleHash {
        std::size_t operator()(TripleKey k) const;
    };

    void check_handle(GameId g) const;
    GameId intern(std::vector<GameId> options);
    std::uint64_t birthday_unlocked(GameId g);
    std::uint64_t grundy_unlocked(GameId g);
    Outcome outcome_unlocked(GameId g);
    NatSet vset_unlocked(GameId g);

    std::size_t node_cap_;
    std::vector<std::vector<GameId>> nodes_;
    std::unordered_map<std::vector<GameId>, std::uint32_t, OptionsHash> intern_index_;

    // Memo tables, filled lazily per query.  -1 marks "not yet computed"
    // in the integer tables; outcome uses 0 = unset, 1 = P, 2 = N.
    std::vector<std::int64_t> birthday_memo_;
    std::vector<std::int64_t> grundy_memo_;
    std::vector<std::uint8_t> outcome_memo_;
    std::unordered_map<std::uint32_t, NatSet> vset_memo_;

    // Caches for the compound constructors (see compound.hpp).
    std::unordered_map<std::uint64_t, GameId> sum_memo_;
    std::unordered_map<std::uint64_t, GameId> osum_memo_;
    std::unordered_map<TripleKey, GameId, TripleHash> osws_memo_;

    mutable std::recursive_mutex mu_;
};

}  // namespace cgt

#endif
