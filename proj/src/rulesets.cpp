#include "cgt/rulesets.hpp"

#include <algorithm>
#include <istream>
#include <map>
#include <sstream>

#include "cgt/oracle.hpp"
#include "cgt/parse.hpp"

namespace cgt {

// --- Box row -------------------------------------------------------------

void BoxRowState::validate() const {
    if (stones.size() != labels.size() + 1)
        throw std::invalid_argument(
            "BoxRowState: expected |stones| = |labels| + 1");
}

std::vector<BoxRowState> boxrow_moves(const BoxRowState& s) {
    s.validate();
    std::vector<BoxRowState> out;
    for (std::size_t i = 0; i < s.stones.size(); ++i) {
        for (std::uint64_t k = 1; k <= s.stones[i]; ++k) {
            BoxRowState succ = s;
            succ.stones[i] -= k;
            for (std::size_t j = i + 1; j < s.stones.size(); ++j)
                succ.stones[j] = s.labels[j - 1];
            out.push_back(std::move(succ));
        }
    }
    return out;
}

std::uint64_t boxrow_grundy(const BoxRowState& s) {
    s.validate();
    return chain_grundy(ChainSpec{s.stones, s.labels});
}

namespace {

std::uint64_t boxrow_retro(const BoxRowState& s,
                           std::map<std::vector<std::uint64_t>,
                                    std::uint64_t>& memo) {
    auto it = memo.find(s.stones);
    if (it != memo.end()) return it->second;
    std::vector<std::uint64_t> child;
    for (const BoxRowState& succ : boxrow_moves(s))
        child.push_back(boxrow_retro(succ, memo));
    std::uint64_t g = mex(NatSet::from_values(std::move(child)));
    memo.emplace(s.stones, g);
    return g;
}

}  // namespace

std::uint64_t boxrow_grundy_retrograde(const BoxRowState& s) {
    s.validate();
    std::map<std::vector<std::uint64_t>, std::uint64_t> memo;
    return boxrow_retro(s, memo);
}

// --- Token row -----------------------------------------------------------

void TokenRowState::validate() const {
    std::vector<bool> seen(perm.size(), false);
    for (std::uint64_t v : perm) {
        if (v >= perm.size() || seen[v])
            throw std::invalid_argument(
                "TokenRowState: not a permutation of 0..n-1");
        seen[v] = true;
    }
}

bool token_is_record(const TokenRowState& s, std::size_t position) {
    if (position < 1 || position > s.perm.size())
        throw std::out_of_range("token_is_record: position out of range");
    std::uint64_t best = 0;
    for (std::size_t k = 0; k < position; ++k)
        best = std::max(best, s.perm[k]);
    return best == s.perm[position - 1];
}

std::vector<TokenRowState> token_moves(const TokenRowState& s) {
    std::vector<TokenRowState> out;
    for (std::size_t pos = 1; pos <= s.perm.size(); ++pos) {
        if (token_is_record(s, pos)) continue;
        TokenRowState succ;
        succ.perm.reserve(s.perm.size());
        succ.perm.push_back(s.perm[pos - 1]);
        for (std::size_t k = 0; k < s.perm.size(); ++k)
            if (k != pos - 1) succ.perm.push_back(s.perm[k]);
        out.push_back(std::move(succ));
    }
    return out;
}

std::vector<int> token_b_sequence(const TokenRowState& s) {
    std::vector<int> b(s.perm.size(), 0);
    for (std::size_t pos = 1; pos <= s.perm.size(); ++pos)
        if (!token_is_record(s, pos)) b[s.perm[pos - 1]] = 1;
    return b;
}

ChainSpec token_chain(const TokenRowState& s) {
    s.validate();
    const std::vector<int> b = token_b_sequence(s);
    ChainSpec c;
    for (std::size_t i = b.size(); i-- > 0;)
        c.a.push_back(static_cast<std::uint64_t>(b[i]));
    if (!b.empty()) c.ahat.assign(b.size() - 1, 1);
    return c;
}

std::uint64_t token_grundy(const TokenRowState& s) {
    s.validate();
    const std::vector<int> b = token_b_sequence(s);
    for (std::size_t i = 0; i < b.size(); ++i)
        if (b[i] == 0) return i;
    return b.size();
}

namespace {

std::uint64_t token_retro(const TokenRowState& s,
                          std::map<std::vector<std::uint64_t>,
                                   std::uint64_t>& memo) {
    auto it = memo.find(s.perm);
    if (it != memo.end()) return it->second;
    std::vector<std::uint64_t> child;
    for (const TokenRowState& succ : token_moves(s))
        child.push_back(token_retro(succ, memo));
    std::uint64_t g = mex(NatSet::from_values(std::move(child)));
    memo.emplace(s.perm, g);
    return g;
}

}  // namespace

std::uint64_t token_grundy_retrograde(const TokenRowState& s) {
    s.validate();
    std::map<std::vector<std::uint64_t>, std::uint64_t> memo;
    return token_retro(s, memo);
}

// --- Poset game ----------------------------------------------------------

PosetLoadError::PosetLoadError(std::size_t line_, const std::string& message)
    : std::runtime_error("line " + std::to_string(line_) + ": " + message),
      line(line_) {}

std::size_t PosetGame::add_element(const std::string& id) {
    if (by_name_.contains(id))
        throw std::invalid_argument("duplicate element '" + id + "'");
    std::size_t idx = names_.size();
    names_.push_back(id);
    by_name_.emplace(id, idx);
    for (auto& row : leq_) row.push_back(false);
    leq_.emplace_back(names_.size(), false);
    leq_[idx][idx] = true;
    current_.emplace_back();
    subst_.emplace_back();
    finalized_ = false;
    return idx;
}

std::size_t PosetGame::index_of(const std::string& id, std::size_t line) const {
    auto it = by_name_.find(id);
    if (it == by_name_.end()) {
        const std::string msg = "unknown element '" + id + "'";
        if (line) throw PosetLoadError(line, msg);
        throw std::invalid_argument(msg);
    }
    return it->second;
}

void PosetGame::add_relation(const std::string& a, const std::string& b) {
    leq_[index_of(a)][index_of(b)] = true;
    finalized_ = false;
}

void PosetGame::set_current(const std::string& id, ExprPtr game) {
    current_[index_of(id)] = std::move(game);
}

void PosetGame::set_subst(const std::string& id, ExprPtr game) {
    subst_[index_of(id)] = std::move(game);
}

void PosetGame::finalize() {
    const std::size_t n = names_.size();
    // Reflexive-transitive closure, then the antisymmetry check.
    for (std::size_t k = 0; k < n; ++k)
        for (std::size_t i = 0; i < n; ++i)
            if (leq_[i][k])
                for (std::size_t j = 0; j < n; ++j)
                    if (leq_[k][j]) leq_[i][j] = true;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            if (leq_[i][j] && leq_[j][i])
                throw std::invalid_argument(
                    "not a partial order: '" + names_[i] + "' and '" +
                    names_[j] + "' are below each other");
    for (std::size_t i = 0; i < n; ++i) {
        if (!current_[i])
            throw std::invalid_argument("element '" + names_[i] +
                                        "' has no game attached");
        if (!subst_[i])
            throw std::invalid_argument("element '" + names_[i] +
                                        "' has no substitution attached");
    }
    below_.assign(n, {});
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            if (j != i && leq_[j][i]) below_[i].push_back(j);
    finalized_ = true;
}

const std::vector<std::size_t>& PosetGame::strictly_below(std::size_t i) const {
    if (!finalized_) throw std::logic_error("PosetGame: finalize() first");
    return below_.at(i);
}

std::vector<PosetGame> PosetGame::moves(GameArena& arena) const {
    if (!finalized_) throw std::logic_error("PosetGame: finalize() first");
    std::vector<PosetGame> out;
    for (std::size_t x = 0; x < names_.size(); ++x) {
        GameId gx = expand(arena, current_[x]);
        for (GameId opt : arena.options(gx)) {
            PosetGame succ = *this;
            succ.current_[x] = Expr::make_explicit(opt);
            for (std::size_t y : below_[x]) succ.current_[y] = subst_[y];
            out.push_back(std::move(succ));
        }
    }
    return out;
}

namespace {

struct PosetSearch {
    GameArena& arena;
    const std::vector<std::vector<std::size_t>>& below;
    const std::vector<GameId>& subst_ids;
    std::size_t state_cap;
    std::map<std::vector<std::uint32_t>, std::uint64_t> memo;

    std::uint64_t grundy(const std::vector<GameId>& state) {
        std::vector<std::uint32_t> key(state.size());
        for (std::size_t i = 0; i < state.size(); ++i) key[i] = state[i].index;
        auto it = memo.find(key);
        if (it != memo.end()) return it->second;
        if (memo.size() >= state_cap)
            throw ResourceLimitError("poset search: state cap of " +
                                     std::to_string(state_cap) + " exceeded");
        std::vector<std::uint64_t> child;
        for (std::size_t x = 0; x < state.size(); ++x) {
            for (GameId opt : arena.options(state[x])) {
                std::vector<GameId> succ = state;
                succ[x] = opt;
                for (std::size_t y : below[x]) succ[y] = subst_ids[y];
                child.push_back(grundy(succ));
            }
        }
        std::uint64_t g = mex(NatSet::from_values(std::move(child)));
        memo.emplace(std::move(key), g);
        return g;
    }
};

}  // namespace

std::uint64_t PosetGame::grundy(GameArena& arena, std::size_t state_cap) const {
    if (!finalized_) throw std::logic_error("PosetGame: finalize() first");
    std::vector<GameId> state, subst_ids;
    for (std::size_t i = 0; i < names_.size(); ++i) {
        state.push_back(expand(arena, current_[i]));
        subst_ids.push_back(expand(arena, subst_[i]));
    }
    PosetSearch search{arena, below_, subst_ids, state_cap, {}};
    return search.grundy(state);
}

Outcome PosetGame::outcome(GameArena& arena, std::size_t state_cap) const {
    return grundy(arena, state_cap) == 0 ? Outcome::P : Outcome::N;
}

PosetGame PosetGame::load(std::istream& in) {
    PosetGame p;
    std::string line;
    std::size_t lineno = 0;
    std::size_t last_line = 0;
    while (std::getline(in, line)) {
        ++lineno;
        const std::size_t hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        std::istringstream ls(line);
        std::string directive;
        if (!(ls >> directive)) continue;
        last_line = lineno;
        try {
            if (directive == "elem") {
                std::string id;
                if (!(ls >> id)) throw PosetLoadError(lineno, "elem: missing id");
                std::string extra;
                if (ls >> extra)
                    throw PosetLoadError(lineno, "elem: trailing input");
                p.add_element(id);
            } else if (directive == "le") {
                std::string a, b;
                if (!(ls >> a >> b))
                    throw PosetLoadError(lineno, "le: expected two ids");
                p.index_of(a, lineno);
                p.index_of(b, lineno);
                p.add_relation(a, b);
            } else if (directive == "game" || directive == "subst") {
                std::string id;
                if (!(ls >> id))
                    throw PosetLoadError(lineno, directive + ": missing id");
                p.index_of(id, lineno);
                std::string expr_text;
                std::getline(ls, expr_text);
                ExprPtr e = parse(expr_text);
                if (directive == "game")
                    p.set_current(id, std::move(e));
                else
                    p.set_subst(id, std::move(e));
            } else {
                throw PosetLoadError(lineno,
                                     "unknown directive '" + directive + "'");
            }
        } catch (const PosetLoadError&) {
            throw;
        } catch (const std::exception& ex) {
            throw PosetLoadError(lineno, ex.what());
        }
    }
    try {
        p.finalize();
    } catch (const std::exception& ex) {
        throw PosetLoadError(last_line, ex.what());
    }
    return p;
}

}  // namespace cgt
