#include "cgt/parse.hpp"

#include <cctype>
#include <sstream>

namespace cgt {

namespace {

std::string format_message(std::size_t offset, const std::string& message) {
    std::ostringstream os;
    os << "parse error at byte " << offset << ": " << message;
    return os.str();
}

class Parser {
public:
    explicit Parser(std::string_view input) : in_(input) {}

    ExprPtr run() {
        ExprPtr e = parse_sum();
        skip_ws();
        if (pos_ != in_.size())
            fail("trailing input", {"'+'", "':'", "end of input"});
        return e;
    }

private:
    [[noreturn]] void fail(const std::string& message,
                           std::vector<std::string> expected) {
        throw ParseError(pos_, message, std::move(expected));
    }

    void skip_ws() {
        while (pos_ < in_.size() &&
               std::isspace(static_cast<unsigned char>(in_[pos_])))
            ++pos_;
    }

    bool eat(char c) {
        skip_ws();
        if (pos_ < in_.size() && in_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    void expect(char c, const char* what) {
        if (!eat(c)) fail(std::string("expected ") + what, {what});
    }

    std::uint64_t parse_nat() {
        skip_ws();
        if (pos_ >= in_.size() ||
            !std::isdigit(static_cast<unsigned char>(in_[pos_])))
            fail("expected a number", {"digit"});
        std::uint64_t value = 0;
        while (pos_ < in_.size() &&
               std::isdigit(static_cast<unsigned char>(in_[pos_]))) {
            std::uint64_t digit = static_cast<std::uint64_t>(in_[pos_] - '0');
            if (value > (std::uint64_t(-1) - digit) / 10)
                fail("number too large", {"number below 2^64"});
            value = value * 10 + digit;
            ++pos_;
        }
        return value;
    }

    ExprPtr parse_atom() {
        skip_ws();
        if (pos_ >= in_.size())
            fail("unexpected end of input", {"'*'", "'('", "'0'"});
        char c = in_[pos_];
        if (c == '*') {
            ++pos_;
            return Expr::make_nimber(parse_nat());
        }
        if (c == '(') {
            ++pos_;
            ExprPtr e = parse_sum();
            expect(')', "')'");
            return e;
        }
        if (c == '0') {
            ++pos_;
            return Expr::make_nimber(0);
        }
        fail("expected an atom", {"'*'", "'('", "'0'"});
    }

    ExprPtr parse_osum() {
        ExprPtr acc = parse_atom();
        while (eat(':')) {
            if (eat('[')) {
                ExprPtr subst = parse_sum();
                expect(']', "']'");
                acc = Expr::make_ordinal_sum_sub(acc, parse_atom(),
                                                 std::move(subst));
            } else {
                acc = Expr::make_ordinal_sum(acc, parse_atom());
            }
        }
        return acc;
    }

    ExprPtr parse_sum() {
        ExprPtr acc = parse_osum();
        while (eat('+')) acc = Expr::make_sum(acc, parse_osum());
        return acc;
    }

    std::string_view in_;
    std::size_t pos_ = 0;
};

// Precedence levels for rendering: a child printed at level `need` must
// bind at least that tightly or be parenthesized.
enum Level : int { kSum = 1, kOsum = 2, kAtom = 3 };

int level_of(const Expr& e) {
    switch (e.kind()) {
        case ExprKind::Nimber: return kAtom;
        case ExprKind::Sum: return kSum;
        default: return kOsum;
    }
}

void render_rec(const ExprPtr& e, int need, std::string& out) {
    const int lv = level_of(*e);
    const bool parens = lv < need;
    if (parens) out += '(';
    switch (e->kind()) {
        case ExprKind::Nimber:
            out += '*';
            out += std::to_string(e->nimber_value());
            break;
        case ExprKind::Explicit:
            throw std::invalid_argument(
                "render: explicit-game leaves have no textual form");
        case ExprKind::Sum:
            render_rec(e->left(), kSum, out);
            out += " + ";
            render_rec(e->right(), kOsum, out);
            break;
        case ExprKind::OrdinalSum:
            render_rec(e->left(), kOsum, out);
            out += " : ";
            render_rec(e->right(), kAtom, out);
            break;
        case ExprKind::OrdinalSumSub:
            render_rec(e->left(), kOsum, out);
            out += " :[";
            render_rec(e->subst(), kSum, out);
            out += "] ";
            render_rec(e->right(), kAtom, out);
            break;
    }
    if (parens) out += ')';
}

}  // namespace

ParseError::ParseError(std::size_t byte_offset_, std::string message_,
                       std::vector<std::string> expected_)
    : std::runtime_error(format_message(byte_offset_, message_)),
      byte_offset(byte_offset_),
      message(std::move(message_)),
      expected(std::move(expected_)) {}

ExprPtr parse(std::string_view input) { return Parser(input).run(); }

std::string render(const ExprPtr& e) {
    if (!e) throw std::invalid_argument("render: null expression");
    std::string out;
    render_rec(e, kSum, out);
    return out;
}

}  // namespace cgt
