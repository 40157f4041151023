#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <functional>

#include "dedekind/error.hpp"
#include "dedekind/expr.hpp"

#include "support/gen.hpp"

using namespace dedekind;
using testgen::Rng;

namespace {

ExprPtr gen_expr(Rng& rng, int depth) {
    const auto leaf = [&] {
        return std::make_shared<const Expr>(Expr{Expr::Literal{rng.ext_real()}});
    };
    if (depth == 0)
        return leaf();
    switch (rng.range(0, 6)) {
    case 0: return leaf();
    case 1:
        return std::make_shared<const Expr>(
            Expr{Expr::Add{gen_expr(rng, depth - 1), gen_expr(rng, depth - 1)}});
    case 2:
        return std::make_shared<const Expr>(
            Expr{Expr::Diff{gen_expr(rng, depth - 1), gen_expr(rng, depth - 1)}});
    case 3:
        return std::make_shared<const Expr>(
            Expr{Expr::Scale{abs(rng.rational()), gen_expr(rng, depth - 1)}});
    case 4:
        return std::make_shared<const Expr>(
            Expr{Expr::Neg{gen_expr(rng, depth - 1)}});
    default: {
        std::vector<ExprPtr> items;
        for (long i = rng.range(1, 3); i > 0; --i)
            items.push_back(gen_expr(rng, depth - 1));
        if (rng.flip())
            return std::make_shared<const Expr>(Expr{Expr::Sup{std::move(items)}});
        return std::make_shared<const Expr>(Expr{Expr::Inf{std::move(items)}});
    }
    }
}

bool same_tree(const Expr& a, const Expr& b);

bool same_items(const std::vector<ExprPtr>& a, const std::vector<ExprPtr>& b) {
    if (a.size() != b.size())
        return false;
    for (std::size_t i = 0; i < a.size(); ++i)
        if (!same_tree(*a[i], *b[i]))
            return false;
    return true;
}

bool same_tree(const Expr& a, const Expr& b) {
    if (a.node.index() != b.node.index())
        return false;
    return std::visit(
        [&](const auto& na) -> bool {
            using T = std::decay_t<decltype(na)>;
            const auto& nb = std::get<T>(b.node);
            if constexpr (std::is_same_v<T, Expr::Literal>)
                return na.value == nb.value;
            else if constexpr (std::is_same_v<T, Expr::Add> ||
                               std::is_same_v<T, Expr::Diff>)
                return same_tree(*na.lhs, *nb.lhs) && same_tree(*na.rhs, *nb.rhs);
            else if constexpr (std::is_same_v<T, Expr::Scale>)
                return na.coeff == nb.coeff && same_tree(*na.operand, *nb.operand);
            else if constexpr (std::is_same_v<T, Expr::Neg>)
                return same_tree(*na.operand, *nb.operand);
            else
                return same_items(na.items, nb.items);
        },
        a.node);
}

} // namespace

TEST_CASE("parsing shapes") {
    const ExprPtr sum = parse_expr("(+inf) + (-inf)");
    const auto& add = std::get<Expr::Add>(sum->node);
    CHECK(std::get<Expr::Literal>(add.lhs->node).value == ExtReal::pos_inf());
    CHECK(std::get<Expr::Literal>(add.rhs->node).value == ExtReal::neg_inf());

    const ExprPtr scaled = parse_expr("2 * (-inf) - 1/2");
    const auto& diff = std::get<Expr::Diff>(scaled->node);
    const auto& scale = std::get<Expr::Scale>(diff.lhs->node);
    CHECK(scale.coeff == Rational(2));
    CHECK(std::get<Expr::Literal>(scale.operand->node).value == ExtReal::neg_inf());
    CHECK(std::get<Expr::Literal>(diff.rhs->node).value ==
          ExtReal(Rational(1, 2)));

    const ExprPtr fold = parse_expr("sup(1, +inf, -3/4)");
    const auto& sup = std::get<Expr::Sup>(fold->node);
    REQUIRE(sup.items.size() == 3);
    CHECK(std::get<Expr::Literal>(sup.items[2]->node).value ==
          ExtReal(Rational(-3, 4)));

    // left-associative subtraction chain
    const ExprPtr chain = parse_expr("1 - 2 - 3");
    const auto& outer = std::get<Expr::Diff>(chain->node);
    CHECK(std::holds_alternative<Expr::Diff>(outer.lhs->node));

    // unary sign change is spelled out
    const ExprPtr negated = parse_expr("neg (1 + 2)");
    CHECK(std::holds_alternative<Expr::Neg>(negated->node));
}

TEST_CASE("parse errors carry positions") {
    const auto position_of = [](const char* text) -> std::size_t {
        try {
            parse_expr(text);
        } catch (const parse_error& e) {
            return e.position;
        }
        return static_cast<std::size_t>(-1);
    };
    CHECK(position_of("") == 0);
    CHECK(position_of("1 +") == 3);
    CHECK(position_of("(1 + 2") == 6);
    CHECK(position_of("1 ) 2") == 2);
    CHECK(position_of("bogus") == 0);
    CHECK(position_of("1/0") < 3);
    CHECK(position_of("sup()") == 4);
    CHECK(position_of("-2 * 3") != static_cast<std::size_t>(-1)); // negative scale
    CHECK_THROWS_AS(parse_expr("(1+2) * 3"), parse_error); // non-literal coefficient
    CHECK_THROWS_AS(parse_expr("+3"), parse_error);        // '+' only forms +inf
}

TEST_CASE("evaluation dispatches per mode") {
    const auto run = [](const char* text, ArithMode mode) {
        return to_string(eval(*parse_expr(text), mode));
    };
    CHECK(run("(+inf) + (-inf)", ArithMode::SupAdd) == "-inf");
    CHECK(run("(+inf) + (-inf)", ArithMode::InfAdd) == "+inf");
    CHECK(run("(+inf) - (+inf)", ArithMode::InfAdd) == "-inf");
    CHECK(run("(+inf) - (+inf)", ArithMode::SupAdd) == "+inf");
    CHECK(run("(-inf) - (-inf)", ArithMode::SupAdd) == "+inf");
    CHECK(run("(-inf) - (-inf)", ArithMode::InfAdd) == "-inf");
    CHECK(run("2 * (-inf) - 1/2", ArithMode::SupAdd) == "-inf");
    CHECK(run("0 * (+inf)", ArithMode::SupAdd) == "0");
    CHECK(run("0 * (-inf)", ArithMode::InfAdd) == "0");
    CHECK(run("sup(1, +inf, -3/4)", ArithMode::SupAdd) == "+inf");
    CHECK(run("inf(1, +inf, -3/4)", ArithMode::SupAdd) == "-3/4");
    CHECK(run("neg (2/3 - 1/6)", ArithMode::SupAdd) == "-1/2");
    CHECK(run("1/2 + 1/3", ArithMode::InfAdd) == "5/6");
}

TEST_CASE("print then parse is the identity") {
    Rng rng(71);
    for (int i = 0; i < 1500; ++i) {
        const ExprPtr e = gen_expr(rng, 4);
        const std::string text = print_expr(*e);
        CAPTURE(text);
        const ExprPtr back = parse_expr(text);
        CHECK(same_tree(*e, *back));
    }
}

TEST_CASE("every parsed expression evaluates in both modes") {
    Rng rng(72);
    for (int i = 0; i < 1500; ++i) {
        const ExprPtr e = gen_expr(rng, 4);
        const ExprPtr parsed = parse_expr(print_expr(*e));
        (void)eval(*parsed, ArithMode::SupAdd);
        (void)eval(*parsed, ArithMode::InfAdd);
    }
}
