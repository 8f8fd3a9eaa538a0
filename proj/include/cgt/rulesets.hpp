#ifndef CGT_RULESETS_HPP
#define CGT_RULESETS_HPP

#include <cstdint>
#include <iosfwd>
#include <map>
#include <string>
#include <vector>

#include "cgt/expr.hpp"

namespace cgt {

// --- Box row -------------------------------------------------------------
//
// Boxes 0..n in a row; box i holds stones[i] stones and boxes 1..n carry a
// fixed label.  A move removes one or more stones from a non-empty box i
// and resets every later box j to its label.

struct BoxRowState {
    std::vector<std::uint64_t> stones;  // a_0 ... a_n
    std::vector<std::uint64_t> labels;  // ahat_1 ... ahat_n

    void validate() const;  // |stones| = |labels| + 1
};

std::vector<BoxRowState> boxrow_moves(const BoxRowState& s);

/// Closed form: the chain Grundy number of (stones, labels).
std::uint64_t boxrow_grundy(const BoxRowState& s);

/// Ground truth by retrograde search over the reachable state space.
std::uint64_t boxrow_grundy_retrograde(const BoxRowState& s);

// --- Token row -----------------------------------------------------------
//
// Tokens labelled 0..n-1 in a row; perm[k] is the label at position k+1.
// A token is a record if no larger label sits to its left; a move takes a
// non-record token to the left end, keeping the others in relative order.

struct TokenRowState {
    std::vector<std::uint64_t> perm;  // p_1 ... p_n, a permutation of 0..n-1

    void validate() const;
};

/// True iff the token at the given 1-based position is a record.
bool token_is_record(const TokenRowState& s, std::size_t position);

std::vector<TokenRowState> token_moves(const TokenRowState& s);

/// b_i = 1 iff Token i (the token labelled i) is a non-record.
std::vector<int> token_b_sequence(const TokenRowState& s);

/// The chain of nimbers *b_{n-1} :_*1 *b_{n-2} :_*1 ... :_*1 *b_0.
ChainSpec token_chain(const TokenRowState& s);

/// Closed form: the smallest i such that Token i is a record (n if the
/// row is empty).  Matches the chain reduction and the retrograde value.
std::uint64_t token_grundy(const TokenRowState& s);

std::uint64_t token_grundy_retrograde(const TokenRowState& s);

// --- Poset game ----------------------------------------------------------
//
// A finite poset with a current game and a substitution game per element.
// A move plays on the game at some element x; every element strictly
// below x then has its game replaced by its substitution game.

struct PosetLoadError : std::runtime_error {
    PosetLoadError(std::size_t line, const std::string& message);
    std::size_t line;
};

class PosetGame {
public:
    /// Declares an element; returns its index.  Re-declaring is an error.
    std::size_t add_element(const std::string& id);

    /// Declares a <= b.  Both must already be declared.
    void add_relation(const std::string& a, const std::string& b);

    void set_current(const std::string& id, ExprPtr game);
    void set_subst(const std::string& id, ExprPtr game);

    /// Takes the reflexive-transitive closure and checks antisymmetry
    /// and that every element has both games attached.
    void finalize();

    std::size_t element_count() const { return names_.size(); }
    const std::vector<std::string>& element_names() const { return names_; }
    const ExprPtr& current(std::size_t i) const { return current_[i]; }
    const ExprPtr& subst(std::size_t i) const { return subst_[i]; }

    /// Indices of elements strictly below element i.
    const std::vector<std::size_t>& strictly_below(std::size_t i) const;

    /// All positions reachable in one move.
    std::vector<PosetGame> moves(GameArena& arena) const;

    /// Retrograde mex labelling over the reachable state space.
    /// Raises ResourceLimitError beyond state_cap distinct states.
    std::uint64_t grundy(GameArena& arena,
                         std::size_t state_cap = 1'000'000) const;

    Outcome outcome(GameArena& arena,
                    std::size_t state_cap = 1'000'000) const;

    /// Loads the line-oriented text format: '#' comments and blank lines
    /// are skipped; directives are
    ///   elem <id>
    ///   le <a> <b>          (a is below-or-equal-to b)
    ///   game <id> <expression>
    ///   subst <id> <expression>
    /// Violations raise PosetLoadError with the offending line number.
    static PosetGame load(std::istream& in);

private:
    std::size_t index_of(const std::string& id, std::size_t line = 0) const;

    bool finalized_ = false;
    std::vector<std::string> names_;
    std::map<std::string, std::size_t> by_name_;
    std::vector<std::vector<bool>> leq_;  // leq_[a][b]: a is below-or-equal b
    std::vector<std::vector<std::size_t>> below_;
    std::vector<ExprPtr> current_;
    std::vector<ExprPtr> subst_;
};

}  // namespace cgt

#endif
