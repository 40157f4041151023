#include "dedekind/expr.hpp"

#include <cctype>

#include "dedekind/error.hpp"

namespace dedekind {

namespace {

template <class Node> ExprPtr make(Node node) {
    return std::make_shared<const Expr>(Expr{std::move(node)});
}

class Parser {
  public:
    explicit Parser(std::string_view text) : text_(text) {}

    ExprPtr parse() {
        ExprPtr e = expr();
        skip_ws();
        if (pos_ != text_.size())
            fail("trailing input");
        return e;
    }

  private:
    [[noreturn]] void fail(const std::string& what) const {
        throw parse_error(what + " at position " + std::to_string(pos_), pos_);
    }

    void skip_ws() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_])))
            ++pos_;
    }

    char peek() const { return pos_ < text_.size() ? text_[pos_] : '\0'; }

    bool consume(char c) {
        if (peek() == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    void expect(char c) {
        if (!consume(c))
            fail(std::string("expected '") + c + "'");
    }

    bool lookahead_word(std::string_view word) const {
        return text_.substr(pos_, word.size()) == word;
    }

    ExprPtr expr() {
        ExprPtr lhs = term();
        for (;;) {
            skip_ws();
            if (consume('+')) {
                lhs = make(Expr::Add{lhs, term()});
            } else if (consume('-')) {
                lhs = make(Expr::Diff{lhs, term()});
            } else {
                return lhs;
            }
        }
    }

    // Right-folded so chains like 2 * 3 * x scale the scaled.
    ExprPtr term() {
        std::vector<ExprPtr> factors{factor()};
        for (;;) {
            skip_ws();
            if (!consume('*'))
                break;
            factors.push_back(factor());
        }
        ExprPtr acc = factors.back();
        for (std::size_t i = factors.size() - 1; i-- > 0;) {
            const auto* lit = std::get_if<Expr::Literal>(&factors[i]->node);
            if (!lit || !lit->value.finite())
                fail("scale coefficient must be a rational literal");
            if (lit->value.value().is_negative())
                fail("negative scale coefficient");
            acc = make(Expr::Scale{lit->value.value(), acc});
        }
        return acc;
    }

    ExprPtr factor() {
        skip_ws();
        const char c = peek();
        if (c == '(') {
            ++pos_;
            ExprPtr e = expr();
            skip_ws();
            expect(')');
            return e;
        }
        if (c == '+') {
            if (lookahead_word("+inf")) {
                pos_ += 4;
                return make(Expr::Literal{ExtReal::pos_inf()});
            }
            fail("expected '+inf'");
        }
        if (c == '-') {
            if (lookahead_word("-inf")) {
                pos_ += 4;
                return make(Expr::Literal{ExtReal::neg_inf()});
            }
            return rational_literal();
        }
        if (std::isdigit(static_cast<unsigned char>(c)))
            return rational_literal();
        if (std::isalpha(static_cast<unsigned char>(c)))
            return keyword();
        fail("expected a factor");
    }

    ExprPtr keyword() {
        const std::size_t start = pos_;
        while (pos_ < text_.size() && std::isalpha(static_cast<unsigned char>(text_[pos_])))
            ++pos_;
        const std::string_view word = text_.substr(start, pos_ - start);
        if (word == "neg")
            return make(Expr::Neg{factor()});
        if (word == "sup" || word == "inf") {
            skip_ws();
            expect('(');
            std::vector<ExprPtr> items{expr()};
            skip_ws();
            while (consume(',')) {
                items.push_back(expr());
                skip_ws();
            }
            expect(')');
            if (word == "sup")
                return make(Expr::Sup{std::move(items)});
            return make(Expr::Inf{std::move(items)});
        }
        pos_ = start;
        fail("unknown word '" + std::string(word) + "'");
    }

    ExprPtr rational_literal() {
        const std::size_t start = pos_;
        consume('-');
        if (!std::isdigit(static_cast<unsigned char>(peek())))
            fail("expected digits");
        while (std::isdigit(static_cast<unsigned char>(peek())))
            ++pos_;
        if (consume('/')) {
            if (!std::isdigit(static_cast<unsigned char>(peek())))
                fail("expected digits after '/'");
            while (std::isdigit(static_cast<unsigned char>(peek())))
                ++pos_;
        }
        try {
            return make(Expr::Literal{
                ExtReal(Rational::parse(text_.substr(start, pos_ - start)))});
        } catch (const invalid_rational& e) {
            throw parse_error(std::string(e.what()) + " at position " +
                                  std::to_string(start),
                              start);
        }
    }

    std::string_view text_;
    std::size_t pos_ = 0;
};

std::string print_operand(const Expr& e) {
    const std::string text = print_expr(e);
    if (std::holds_alternative<Expr::Literal>(e.node) ||
        std::holds_alternative<Expr::Sup>(e.node) ||
        std::holds_alternative<Expr::Inf>(e.node))
        return text;
    return "(" + text + ")";
}

std::string print_list(std::string_view head, const std::vector<ExprPtr>& items) {
    std::string out(head);
    out += '(';
    for (std::size_t i = 0; i < items.size(); ++i) {
        if (i)
            out += ", ";
        out += print_expr(*items[i]);
    }
    out += ')';
    return out;
}

} // namespace

ExprPtr parse_expr(std::string_view text) { return Parser(text).parse(); }

std::string print_expr(const Expr& e) {
    return std::visit(
        [&](const auto& node) -> std::string {
            using T = std::decay_t<decltype(node)>;
            if constexpr (std::is_same_v<T, Expr::Literal>)
                return to_string(node.value);
            else if constexpr (std::is_same_v<T, Expr::Add>)
                return print_operand(*node.lhs) + " + " + print_operand(*node.rhs);
            else if constexpr (std::is_same_v<T, Expr::Diff>)
                return print_operand(*node.lhs) + " - " + print_operand(*node.rhs);
            else if constexpr (std::is_same_v<T, Expr::Scale>)
                return node.coeff.str() + " * " + print_operand(*node.operand);
            else if constexpr (std::is_same_v<T, Expr::Neg>)
                return "neg " + print_operand(*node.operand);
            else if constexpr (std::is_same_v<T, Expr::Sup>)
                return print_list("sup", node.items);
            else
                return print_list("inf", node.items);
        },
        e.node);
}

ExtReal eval(const Expr& e, ArithMode mode) {
    return std::visit(
        [&](const auto& node) -> ExtReal {
            using T = std::decay_t<decltype(node)>;
            if constexpr (std::is_same_v<T, Expr::Literal>)
                return node.value;
            else if constexpr (std::is_same_v<T, Expr::Add>)
                return mode_add(mode, eval(*node.lhs, mode), eval(*node.rhs, mode));
            else if constexpr (std::is_same_v<T, Expr::Diff>)
                return mode_diff(mode, eval(*node.lhs, mode), eval(*node.rhs, mode));
            else if constexpr (std::is_same_v<T, Expr::Scale>)
                return scalar_mul(mode, node.coeff, eval(*node.operand, mode));
            else if constexpr (std::is_same_v<T, Expr::Neg>)
                return neg(eval(*node.operand, mode));
            else if constexpr (std::is_same_v<T, Expr::Sup>) {
                std::vector<ExtReal> xs;
                xs.reserve(node.items.size());
                for (const ExprPtr& item : node.items)
                    xs.push_back(eval(*item, mode));
                return fold_sup(xs);
            } else {
                std::vector<ExtReal> xs;
                xs.reserve(node.items.size());
                for (const ExprPtr& item : node.items)
                    xs.push_back(eval(*item, mode));
                return fold_inf(xs);
            }
        },
        e.node);
}

} // namespace dedekind
