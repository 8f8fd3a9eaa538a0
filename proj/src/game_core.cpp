#include "cgt/game_core.hpp"

#include <algorithm>

namespace cgt {

std::size_t GameArena::OptionsHash::operator()(
    const std::vector<GameId>& v) const {
    // FNV-1a over the option indices.
    std::uint64_t h = 14695981039346656037ull;
    for (GameId g : v) {
        h ^= g.index;
        h *= 1099511628211ull;
    }
    return static_cast<std::size_t>(h);
}

std::size_t GameArena::TripleHash::operator()(TripleKey k) const {
    std::uint64_t h = k.a;
    h = h * 1000003ull + k.b;
    h = h * 1000003ull + k.c;
    h ^= h >> 33;
    h *= 0xff51afd7ed558ccdull;
    h ^= h >> 33;
    return static_cast<std::size_t>(h);
}

GameArena::GameArena(std::size_t node_cap) : node_cap_(node_cap) {
    nodes_.emplace_back();  // the end position, handle 0
    intern_index_.emplace(std::vector<GameId>{}, 0);
    birthday_memo_.push_back(-1);
    grundy_memo_.push_back(-1);
    outcome_memo_.push_back(0);
}

void GameArena::check_handle(GameId g) const {
    if (g.index >= nodes_.size())
        throw std::invalid_argument("GameArena: invalid game handle");
}

GameId GameArena::intern(std::vector<GameId> options) {
    std::sort(options.begin(), options.end());
    options.erase(std::unique(options.begin(), options.end()), options.end());
    for (GameId o : options) check_handle(o);
    auto it = intern_index_.find(options);
    if (it != intern_index_.end()) return GameId{it->second};
    if (nodes_.size() >= node_cap_)
        throw ResourceLimitError("GameArena: node cap of " +
                                 std::to_string(node_cap_) + " exceeded");
    auto id = static_cast<std::uint32_t>(nodes_.size());
    intern_index_.emplace(options, id);
    nodes_.push_back(std::move(options));
    birthday_memo_.push_back(-1);
    grundy_memo_.push_back(-1);
    outcome_memo_.push_back(0);
    return GameId{id};
}

GameId GameArena::make_game(std::vector<GameId> options) {
    std::scoped_lock lock(mu_);
    return intern(std::move(options));
}

GameId GameArena::nimber(std::uint64_t n) {
    std::scoped_lock lock(mu_);
    if (n >= node_cap_)
        throw ResourceLimitError("nimber: *" + std::to_string(n) +
                                 " exceeds the node cap");
    std::vector<GameId> opts;
    GameId last = kEmpty;
    for (std::uint64_t k = 1; k <= n; ++k) {
        opts.push_back(last);
        last = intern(opts);  // *k = {*0, ..., *(k-1)}
    }
    return last;
}

std::vector<GameId> GameArena::options(GameId g) const {
    std::scoped_lock lock(mu_);
    check_handle(g);
    return nodes_[g.index];
}

std::uint64_t GameArena::birthday_unlocked(GameId g) {
    // Options always have strictly smaller indices, so an explicit stack
    // of pending nodes terminates without call-stack recursion.
    std::vector<std::uint32_t> stack{g.index};
    while (!stack.empty()) {
        std::uint32_t id = stack.back();
        if (birthday_memo_[id] >= 0) {
            stack.pop_back();
            continue;
        }
        bool ready = true;
        for (GameId o : nodes_[id]) {
            if (birthday_memo_[o.index] < 0) {
                if (ready) ready = false;
                stack.push_back(o.index);
            }
        }
        if (ready) {
            std::int64_t b = 0;
            for (GameId o : nodes_[id])
                b = std::max(b, birthday_memo_[o.index] + 1);
            birthday_memo_[id] = b;
            stack.pop_back();
        }
    }
    return static_cast<std::uint64_t>(birthday_memo_[g.index]);
}

std::uint64_t GameArena::grundy_unlocked(GameId g) {
    std::vector<std::uint32_t> stack{g.index};
    while (!stack.empty()) {
        std::uint32_t id = stack.back();
        if (grundy_memo_[id] >= 0) {
            stack.pop_back();
            continue;
        }
        bool ready = true;
        for (GameId o : nodes_[id]) {
            if (grundy_memo_[o.index] < 0) {
                if (ready) ready = false;
                stack.push_back(o.index);
            }
        }
        if (ready) {
            std::vector<std::uint64_t> gs;
            gs.reserve(nodes_[id].size());
            for (GameId o : nodes_[id])
                gs.push_back(static_cast<std::uint64_t>(grundy_memo_[o.index]));
            grundy_memo_[id] =
                static_cast<std::int64_t>(mex(NatSet::from_values(std::move(gs))));
            stack.pop_back();
        }
    }
    return static_cast<std::uint64_t>(grundy_memo_[g.index]);
}

Outcome GameArena::outcome_unlocked(GameId g) {
    // Computed by its own recursion (P iff every option is N), not via
    // the Grundy number; the equivalence is a tested theorem.
    std::vector<std::uint32_t> stack{g.index};
    while (!stack.empty()) {
        std::uint32_t id = stack.back();
        if (outcome_memo_[id] != 0) {
            stack.pop_back();
            continue;
        }
        bool ready = true;
        for (GameId o : nodes_[id]) {
            if (outcome_memo_[o.index] == 0) {
                if (ready) ready = false;
                stack.push_back(o.index);
            }
        }
        if (ready) {
            bool some_p = false;
            for (GameId o : nodes_[id])
                if (outcome_memo_[o.index] == 1) some_p = true;
            outcome_memo_[id] = some_p ? 2 : 1;
            stack.pop_back();
        }
    }
    return outcome_memo_[g.index] == 1 ? Outcome::P : Outcome::N;
}

NatSet GameArena::vset_unlocked(GameId g) {
    auto it = vset_memo_.find(g.index);
    if (it != vset_memo_.end()) return it->second;
    std::vector<std::uint64_t> gs;
    gs.reserve(nodes_[g.index].size());
    for (GameId o : nodes_[g.index]) gs.push_back(grundy_unlocked(o));
    NatSet v = NatSet::from_values(std::move(gs));
    vset_memo_.emplace(g.index, v);
    return v;
}

std::uint64_t GameArena::birthday(GameId g) {
    std::scoped_lock lock(mu_);
    check_handle(g);
    return birthday_unlocked(g);
}

std::uint64_t GameArena::grundy(GameId g) {
    std::scoped_lock lock(mu_);
    check_handle(g);
    return grundy_unlocked(g);
}

Outcome GameArena::outcome(GameId g) {
    std::scoped_lock lock(mu_);
    check_handle(g);
    return outcome_unlocked(g);
}

NatSet GameArena::vset(GameId g) {
    std::scoped_lock lock(mu_);
    check_handle(g);
    return vset_unlocked(g);
}

std::size_t GameArena::size() const {
    std::scoped_lock lock(mu_);
    return nodes_.size();
}

}  // namespace cgt
