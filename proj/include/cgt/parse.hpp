#ifndef CGT_PARSE_HPP
#define CGT_PARSE_HPP

#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "cgt/expr.hpp"

namespace cgt {

struct ParseError : std::runtime_error {
    ParseError(std::size_t byte_offset, std::string message,
               std::vector<std::string> expected);

    std::size_t byte_offset;
    std::string message;
    std::vector<std::string> expected;
};

/// Parses the game-expression grammar:
///
///   expr  := sum
///   sum   := osum ( "+" osum )*                        left-associative
///   osum  := atom ( (":" | ":[" expr "]") atom )*      left-associative
///   atom  := "*" nat | "(" expr ")" | "0"
///
/// ":" is the ordinal sum, ":[S]" the ordinal sum with substitution S,
/// and "0" is an alias for "*0".  ":" and ":[...]" bind tighter than
/// "+"; whitespace is insignificant.  Trailing input is an error.
ExprPtr parse(std::string_view input);

/// Inverse of parse for Explicit-free expressions: emits the expression
/// with minimal parentheses under the grammar above, so that
/// parse(render(e)) is structurally equal to e.  Explicit leaves have no
/// textual form and raise std::invalid_argument.
std::string render(const ExprPtr& e);

}  // namespace cgt

#endif
